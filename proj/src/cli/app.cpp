#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "chaincode/cli.hpp"
#include "chaincode/errors.hpp"
#include "chaincode/trace_codes.hpp"

namespace chaincode::cli {

namespace {

void table_rows(std::ostringstream& os, const Json& rows, const char* title) {
  os << title << ":\n";
  if (rows.empty()) os << "  (none)\n";
  for (const auto& r : rows) os << "  " << std::setw(10) << r["weight"].get<std::uint64_t>() << "  x "
                                << r["frequency"].get<std::uint64_t>() << '\n';
}

void scalar_lines(std::ostringstream& os, const Json& j, const std::string& indent) {
  for (const auto& [key, v] : j.items()) {
    if (key == "schema_version" || key == "command") continue;
    if (v.is_object()) {
      os << indent << key << ":\n";
      scalar_lines(os, v, indent + "  ");
    } else {
      os << indent << key << ": " << v.dump() << '\n';
    }
  }
}

std::string params_line(const Json& p) {
  std::ostringstream os;
  os << (p["set"].is_null() ? std::string("-") : p["set"].get<std::string>()) << " p=" << p["p"] << " m=" << p["m"]
     << " k=" << p["k"];
  if (p["nprime"].get<std::uint64_t>() != 0) os << " N'=" << p["nprime"];
  return os.str();
}

}  // namespace

std::string render_table(const Json& body) {
  std::ostringstream os;
  const std::string cmd = body.value("command", "");
  if (cmd == "weights") {
    const auto& code = body["code"];
    os << "code " << params_line(body["parameters"]) << ": [" << code["gray_length"] << ", " << code["dimension"]
       << ", " << code["min_distance"] << "] over F_" << body["parameters"]["p"] << '\n';
    table_rows(os, body["enumerated"], "enumerated");
    const auto& pr = body["prediction"];
    if (pr["applicable"].get<bool>()) {
      os << "prediction (" << pr["family"].get<std::string>() << ", " << pr["kind"].get<std::string>() << ")\n";
      if (!pr["weights"].empty()) table_rows(os, pr["weights"], "predicted");
      if (!pr["bounds"].is_null())
        os << "bounds: " << pr["bounds"]["lower"] << " <= d <= " << pr["bounds"]["upper"].dump() << ", at most "
           << pr["bounds"]["max_weight_count"] << " weights\n";
    } else {
      os << "no closed form applies: " << pr["reason"].get<std::string>() << '\n';
    }
    for (const auto& d : body["diffs"])
      os << "diff at weight " << d["weight"] << ": enumerated " << d["enumerated"] << ", predicted " << d["predicted"]
         << '\n';
    os << "status: " << body["status"].get<std::string>() << '\n';
    return os.str();
  }
  if (cmd == "matrix") {
    for (const auto& cell : body["cells"]) {
      os << std::left << std::setw(22) << params_line(cell["parameters"]);
      for (const char* part : {"weights", "optimal", "dual", "minimal"}) {
        const auto& pj = cell[part];
        std::string s = std::to_string(pj["exit_status"].get<int>());
        if (pj.contains("status")) s = pj["status"].get<std::string>();
        else if (pj.contains("skipped")) s = "budget";
        else if (pj.contains("ok")) s = pj["ok"].get<bool>() ? "ok" : "FAIL";
        os << ' ' << part << '=' << s;
      }
      os << '\n';
    }
    os << "summary:\n";
    scalar_lines(os, body["summary"], "  ");
    return os.str();
  }
  os << cmd;
  if (body.contains("parameters")) os << ' ' << params_line(body["parameters"]);
  os << '\n';
  Json rest = body;
  rest.erase("parameters");
  scalar_lines(os, rest, "  ");
  return os.str();
}

std::string render_csv(const Json& body) {
  if (body.value("command", "") != "weights") throw UsageError("csv output applies to the weights command");
  std::ostringstream os;
  os << "weight,frequency,source\n";
  for (const auto& r : body["enumerated"]) os << r["weight"] << ',' << r["frequency"] << ",enumerated\n";
  for (const auto& r : body["prediction"]["weights"]) os << r["weight"] << ',' << r["frequency"] << ",predicted\n";
  return os.str();
}

namespace {

std::string render(const Json& body, Format f) {
  switch (f) {
    case Format::json: return body.dump(2) + "\n";
    case Format::csv: return render_csv(body);
    case Format::table: return render_table(body);
  }
  return {};
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw std::runtime_error("write to " + path + " failed");
}

void write_dump(const TraceCode& code, const std::string& path, bool gray, int threads, std::ostream& out) {
  if (path.empty() || path == "-") {
    gray ? write_gray_dump(code, out, threads) : write_ring_dump(code, out, threads);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  gray ? write_gray_dump(code, f, threads) : write_ring_dump(code, f, threads);
  if (!f) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trace codes over F_p[u]/(u^k): weight enumeration and verification."};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string set_name;
  std::string format_name = "table";
  std::uint64_t trials = 20, seed = 1;
  std::string dump_form = "both";
  double cell_timeout = 120.0;
  bool threads_given = false;

  const std::map<std::string, Format> formats{{"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}};

  auto common = [&](CLI::App* sub, bool code_flags) {
    if (code_flags) {
      sub->add_option("--set", set_name, "defining set")->check(CLI::IsMember({"d1", "d2", "d3"}))->required();
      sub->add_option("--k", cfg.k, "nilpotency index of u")->default_val(2);
      sub->add_option("--nprime", cfg.nprime, "N' for d3");
    } else {
      sub->add_option("--nprime", cfg.nprime, "also compare zero counts for this N'");
    }
    sub->add_option("--p", cfg.p, "characteristic")->required();
    sub->add_option("--m", cfg.m, "extension degree")->required();
    sub->add_option("--threads", cfg.threads, "worker threads (default CHAINCODE_THREADS)")
        ->each([&](const std::string&) { threads_given = true; });
    sub->add_option("--format", format_name, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--output", cfg.output, "output file");
    sub->add_flag("--timing", cfg.timing, "include wall-clock timings");
  };

  auto* weights = app.add_subcommand("weights", "enumerate and compare with the closed form");
  common(weights, true);

  auto* check = app.add_subcommand("check", "verification checks");
  check->require_subcommand(1);
  auto* optimal = check->add_subcommand("optimal", "Griesmer optimality");
  common(optimal, true);
  auto* dual = check->add_subcommand("dual", "dual homogeneous distance");
  common(dual, true);
  auto* minimal = check->add_subcommand("minimal", "minimal codewords");
  common(minimal, true);
  auto* gauss = check->add_subcommand("gauss", "Gauss-sum identities");
  common(gauss, false);
  auto* action = check->add_subcommand("action", "coordinate action of D on the code");
  common(action, true);
  action->add_option("--trials", trials, "random (u', v') pairs")->default_val(20);
  action->add_option("--seed", seed, "random seed")->default_val(1);

  auto* dump = app.add_subcommand("dump", "write codeword dumps");
  common(dump, true);
  dump->add_option("--form", dump_form, "ring, gray or both")->check(CLI::IsMember({"ring", "gray", "both"}));

  auto* matrix = app.add_subcommand("matrix", "run the desk-scale matrix");
  matrix->add_option("--threads", cfg.threads, "worker threads (default CHAINCODE_THREADS)")
      ->each([&](const std::string&) { threads_given = true; });
  matrix->add_option("--format", format_name, "table or json")->check(CLI::IsMember({"table", "json"}));
  matrix->add_option("--output", cfg.output, "output file");
  matrix->add_flag("--timing", cfg.timing, "include wall-clock timings");
  matrix->add_option("--cell-timeout", cell_timeout, "seconds after which a cell is flagged")->default_val(120.0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!threads_given) cfg.threads = default_threads();
    cfg.format = formats.at(format_name);
    if (!set_name.empty()) cfg.set = parse_set_kind(set_name);

    Report r;
    if (weights->parsed()) r = weights_report(cfg);
    else if (optimal->parsed()) r = optimal_report(cfg);
    else if (dual->parsed()) r = dual_report(cfg);
    else if (minimal->parsed()) r = minimal_report(cfg);
    else if (gauss->parsed()) r = gauss_report(cfg);
    else if (action->parsed()) r = action_report(cfg, trials, seed);
    else if (matrix->parsed()) r = matrix_report(cfg.threads, cfg.timing, cell_timeout);
    else if (dump->parsed()) {
      validate(cfg, true);
      ChainRing ext(Field(cfg.p, cfg.m), cfg.k);
      auto set = build_set(ext, *cfg.set, cfg.nprime);
      const TraceCode code(std::move(ext), std::move(set));
      if (dump_form == "both") {
        if (cfg.output.empty() || cfg.output == "-") throw UsageError("--form both needs --output PREFIX");
        write_dump(code, cfg.output + ".ring", false, cfg.threads, out);
        write_dump(code, cfg.output + ".gray", true, cfg.threads, out);
      } else {
        write_dump(code, cfg.output, dump_form == "gray", cfg.threads, out);
      }
      return kExitOk;
    }
    emit(render(r.body, cfg.format), cfg.output, out);
    if (r.status == kExitNoTheorem) err << "no theorem applies: " << r.body["prediction"]["reason"].get<std::string>() << '\n';
    return r.status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace chaincode::cli
