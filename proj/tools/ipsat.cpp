// ipsat: construct, verify, and certify induced K_{s,t}-saturated families,
// plus an exact small-n oracle and DOT export.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "ipsat/certificate.hpp"
#include "ipsat/construction.hpp"
#include "ipsat/io.hpp"
#include "ipsat/oracle.hpp"
#include "ipsat/verify.hpp"

namespace {

constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

void print_report(const ipsat::Construction& con) {
  const auto& p = con.parts;
  std::printf("n=%d s=%d t=%d%s\n", con.n, con.s, con.t,
              con.complemented ? " (via complementation symmetry)" : "");
  std::printf("  |F1| = %zu\n", p.f1.size());
  std::printf("  |F2| = %zu  (%zu upper lanterns)\n", p.f2.size(),
              p.upper_lanterns.size());
  std::printf("  |F3| = %zu  (%zu lower lanterns)\n", p.f3.size(),
              p.lower_lanterns.size());
  std::printf("  |F4| = %zu\n", p.f4.size());
  std::printf("  |F5| = %zu  (|G1| = %zu, |G2| = %zu)\n", con.f5.size(),
              con.g1_size, con.g2_size);
  std::printf("  |F|  = %zu\n", con.family.size());
  std::printf("  coefficient = %lld, bound = %lld*n + c\n", con.coefficient,
              con.coefficient);
  std::printf("  observed constant = %lld\n", con.constant_observed);
}

int run_construct(int n, int s, int t, const std::string& json_path,
                  bool report, std::optional<unsigned> seed) {
  ipsat::Construction con = ipsat::build_saturated_family(n, s, t, seed);
  const nlohmann::json j = ipsat::family_to_json(con.family);
  if (!json_path.empty())
    ipsat::save_json(j, json_path);
  else if (!report)
    std::cout << j.dump(2) << "\n";
  if (report) print_report(con);
  return 0;
}

int run_verify(const std::string& family_path, int s, int t,
               const std::string& witness_path) {
  const ipsat::Family fam = ipsat::load_family(family_path);
  if (fam.ground().n > 20)
    throw ipsat::usage_error("verify enumerates 2^n sets; capped at n <= 20");
  const ipsat::SaturationReport report =
      ipsat::check_saturated(fam, s, t, !witness_path.empty());

  if (!report.free) {
    std::cout << "NOT FREE: family contains an induced K_{" << s << "," << t
              << "}\n";
    return kExitVerificationFailed;
  }
  if (!report.saturated) {
    std::cout << "NOT SATURATED: " << report.unwitnessed.size()
              << " missing sets create no copy, first: "
              << report.unwitnessed.front().to_string() << "\n";
    return kExitVerificationFailed;
  }
  if (!witness_path.empty()) {
    nlohmann::json out{{"v", 1}, {"witnesses", nlohmann::json::array()}};
    for (const auto& [missing, copy] : report.witnesses) {
      nlohmann::json uppers = nlohmann::json::array();
      nlohmann::json lowers = nlohmann::json::array();
      for (auto w : copy.uppers) uppers.push_back(w.elements());
      for (auto w : copy.lowers) lowers.push_back(w.elements());
      out["witnesses"].push_back({{"missing", missing.elements()},
                                  {"uppers", std::move(uppers)},
                                  {"lowers", std::move(lowers)}});
    }
    ipsat::save_json(out, witness_path);
  }
  std::cout << "SATURATED: |F| = " << fam.size() << " over n = "
            << fam.ground().n << "\n";
  return 0;
}

int run_certify(const std::string& family_path, const std::string& poset_path,
                bool exclude_top) {
  const ipsat::Family fam = ipsat::load_family(family_path);
  const ipsat::Poset p = ipsat::load_poset(poset_path);
  const ipsat::LegsCertificate cert =
      ipsat::legs_certificate(fam, p, exclude_top);
  if (!cert.valid) {
    std::cout << "CERTIFICATE INVALID: " << cert.failure << "\n";
    return kExitVerificationFailed;
  }
  std::cout << "CERTIFICATE VALID: |F| = " << fam.size() << " >= n+1 = "
            << fam.ground().n + 1 << "\n";
  return 0;
}

int run_exact(int n, const std::string& poset_path, bool enumerate,
              std::size_t cap, std::uint64_t budget) {
  const ipsat::Poset p = ipsat::load_poset(poset_path);
  if (enumerate) {
    const auto families = ipsat::enumerate_saturated(n, p, cap);
    for (const auto& fam : families)
      std::cout << ipsat::family_to_json(fam).dump() << "\n";
    std::cout << "count = " << families.size() << "\n";
    return 0;
  }
  const ipsat::ExactResult result = ipsat::exact_sat_star(n, p, budget);
  if (!result.exact) {
    std::cout << "budget exhausted after " << result.nodes_used
              << " nodes; best known = " << result.value << "\n";
    return kExitVerificationFailed;
  }
  std::cout << result.value << "\n";
  return 0;
}

int run_export(const std::string& family_path, const std::string& poset_path,
               const std::string& out_path) {
  std::string dot;
  if (!family_path.empty())
    dot = ipsat::family_to_dot(ipsat::load_family(family_path));
  else
    dot = ipsat::to_dot(ipsat::load_poset(poset_path));
  if (out_path.empty()) {
    std::cout << dot;
  } else {
    std::ofstream out(out_path);
    if (!out) throw ipsat::usage_error("cannot write " + out_path);
    out << dot;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"induced poset saturation toolkit"};
  app.require_subcommand(1);

  int n = 0, s = 2, t = 2;
  std::string family_path, poset_path, json_path, witness_path, out_path;
  bool report = false, exclude_top = false, enumerate = false;
  std::size_t cap = 1000;
  std::uint64_t budget = 50'000'000;
  unsigned seed = 0;

  auto* construct = app.add_subcommand(
      "construct", "build the induced K_{s,t}-saturated family");
  construct->add_option("--n", n, "ground set size")->required();
  construct->add_option("--s", s, "upper layer size")->required();
  construct->add_option("--t", t, "lower layer size")->required();
  construct->add_option("--json", json_path, "write Family JSON here");
  construct->add_flag("--report", report, "print the size-accounting table");
  auto* seed_opt = construct->add_option(
      "--randomize-f5-seed", seed,
      "shuffle the fifth-part greedy order (exploration only)");

  auto* verify =
      app.add_subcommand("verify", "exhaustively check induced saturation");
  verify->add_option("--family", family_path, "Family JSON")->required();
  verify->add_option("--s", s, "upper layer size")->required();
  verify->add_option("--t", t, "lower layer size")->required();
  verify->add_option("--witnesses", witness_path,
                     "write per-missing-set copies here");

  auto* certify =
      app.add_subcommand("certify", "check the legs-injection certificate");
  certify->add_option("--family", family_path, "Family JSON")->required();
  certify->add_option("--poset", poset_path, "Poset JSON")->required();
  certify->add_flag("--exclude-top", exclude_top,
                    "restrict the injection codomain away from [n]");

  auto* exact = app.add_subcommand(
      "exact", "exact sat* by exhaustive search (n <= 5, enumerate n <= 4)");
  exact->add_option("--n", n, "ground set size")->required();
  exact->add_option("--poset", poset_path, "Poset JSON")->required();
  exact->add_flag("--enumerate", enumerate,
                  "list every saturated family up to --cap");
  exact->add_option("--cap", cap, "size cap for --enumerate");
  exact->add_option("--budget", budget, "search node budget");

  auto* exp = app.add_subcommand("export", "Hasse diagram as DOT");
  auto* exp_fam = exp->add_option("--family", family_path, "Family JSON");
  auto* exp_pos = exp->add_option("--poset", poset_path, "Poset JSON");
  exp->add_option("--out", out_path, "output path (default stdout)");
  exp_fam->excludes(exp_pos);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (construct->parsed())
      return run_construct(n, s, t, json_path, report,
                           seed_opt->count() ? std::optional<unsigned>(seed)
                                             : std::nullopt);
    if (verify->parsed()) return run_verify(family_path, s, t, witness_path);
    if (certify->parsed())
      return run_certify(family_path, poset_path, exclude_top);
    if (exact->parsed())
      return run_exact(n, poset_path, enumerate, cap, budget);
    if (exp->parsed()) {
      if (family_path.empty() == poset_path.empty())
        throw ipsat::usage_error("export needs exactly one of --family/--poset");
      return run_export(family_path, poset_path, out_path);
    }
  } catch (const ipsat::usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ipsat::infeasible_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
