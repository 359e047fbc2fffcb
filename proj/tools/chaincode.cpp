#include <iostream>

#include "chaincode/cli.hpp"

int main(int argc, char** argv) { return chaincode::cli::run(argc, argv, std::cout, std::cerr); }
