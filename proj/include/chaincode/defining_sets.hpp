#pragma once

// The three defining sets inside the units of F_{p^m}[u]/(u^k).
//
// Canonical element order (part of the dump format): the constant term x_0
// runs over its family in increasing exponent of alpha, and for each x_0 the
// tail (x_1, ..., x_{k-1}) runs lexicographically with x_1 slowest, each
// coefficient in packed order.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chaincode/chain_ring.hpp"

namespace chaincode {

enum class SetKind { d1, d2, d3 };

std::string to_string(SetKind k);
SetKind parse_set_kind(const std::string& s);

struct D3Params {
  std::uint64_t nprime = 0;  // N'
  std::uint64_t lcm = 0;     // N'_1 = lcm(N', (q-1)/(p-1))
  std::uint64_t gcd = 0;     // N'_2 = gcd(N', (q-1)/(p-1))
  std::uint64_t n1 = 0;      // N'_1 / N'
};

// Throws std::invalid_argument unless N' | q - 1.
D3Params d3_params(std::uint32_t p, std::uint32_t m, std::uint64_t nprime);

struct DefiningSet {
  SetKind kind = SetKind::d2;
  std::vector<RingElement> elements;
  std::optional<D3Params> params;
  std::size_t size() const { return elements.size(); }
};

// Requires odd p.
DefiningSet build_d1(const ChainRing& ext);
DefiningSet build_d2(const ChainRing& ext);
DefiningSet build_d3(const ChainRing& ext, std::uint64_t nprime);

DefiningSet build_set(const ChainRing& ext, SetKind kind, std::uint64_t nprime = 0);

// Closed-form |D| for the given family.
std::uint64_t expected_size(SetKind kind, std::uint32_t p, std::uint32_t m, std::uint32_t k,
                            std::uint64_t nprime = 0);

// The constant terms d_j = alpha^{N'(j-1)}, j = 1..n_1.
std::vector<FieldElement> coset_representatives(const Field& f, std::uint64_t nprime);

}  // namespace chaincode
