#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "fibra/bounds.hpp"
#include "fibra/pipeline.hpp"

using namespace fibra;

namespace {

int cmd_verify(const std::string& path, const std::string& emit_json) {
  ConstructionReport rep = verify_file(path);
  std::cout << rep.text_summary();
  if (!emit_json.empty()) {
    std::ofstream out(emit_json);
    out << rep.to_json().dump(2) << "\n";
  }
  return rep.pass ? 0 : 1;
}

int cmd_corpus(bool parallel, const std::string& emit_json) {
  std::string dir = corpus_dir();
  CorpusSummary sum = corpus_run(dir, parallel);
  std::cout << std::left << std::setw(12) << "id" << std::setw(12) << "kind"
            << std::setw(10) << "fiber" << "status\n";
  for (auto& row : sum.rows) {
    std::cout << std::left << std::setw(12) << row.id << std::setw(12) << row.kind
              << std::setw(10) << row.headline
              << (row.pass ? "PASS" : "FAIL at " + row.first_failure) << "\n";
  }
  for (auto& m : sum.missing) std::cout << m << ": missing from " << dir << "\n";
  std::cout << sum.passed << "/" << sum.total << " constructions pass\n";
  if (!emit_json.empty()) {
    nlohmann::ordered_json j;
    j["corpus_dir"] = dir;
    j["passed"] = sum.passed;
    j["total"] = sum.total;
    auto rows = nlohmann::ordered_json::array();
    for (auto& r : sum.rows)
      rows.push_back({{"id", r.id},
                      {"kind", r.kind},
                      {"fiber_invariant", r.headline},
                      {"pass", r.pass},
                      {"first_failure", r.first_failure}});
    j["rows"] = rows;
    std::ofstream out(emit_json);
    out << j.dump(2) << "\n";
  }
  return (sum.passed == sum.total && sum.missing.empty()) ? 0 : 1;
}

struct BoundsArgs {
  std::string theorem;
  long pg = -1;
  int b = -1;
  std::string qF;
  long g = -1;
  long p = 1;
  std::string beta = "1";
  std::string xi;
  std::string K3;
  long K2 = -1;
  std::string chi;
  bool emit_json = false;
};

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(mpz_class(s));
  Rat r(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
  r.canonicalize();
  return r;
}

void need(bool have, const std::string& what) {
  if (!have) fail(ErrCode::MissingInput, "missing input: " + what);
}

int cmd_bounds(const BoundsArgs& a) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["rule"] = a.theorem;
  std::ostringstream text;
  if (a.theorem == "2.1") {
    need(!a.xi.empty(), "--xi");
    Rat rhs = bounds::volume_bound_rhs(a.p, parse_rat(a.beta), parse_rat(a.xi));
    j["rhs"] = rat_str(rhs);
    text << "K^3 >= p*beta*xi = " << rat_str(rhs) << "\n";
    if (!a.K3.empty()) {
      bool ok = parse_rat(a.K3) >= rhs;
      j["holds"] = ok;
      text << "K^3 = " << a.K3 << (ok ? " satisfies" : " violates") << " the bound\n";
    }
  } else if (a.theorem == "2.2") {
    need(a.g >= 2, "--g");
    Rat v = bounds::xi_lower_bound(a.g, a.p, parse_rat(a.beta));
    j["xi_lower_bound"] = rat_str(v);
    text << "xi >= (2g-2)/(1 + 1/p + 1/beta) = " << rat_str(v) << "\n";
  } else if (a.theorem == "3.1") {
    need(a.g >= 2, "--g");
    need(a.pg >= 3, "--pg");
    auto b = bounds::curve_volume_bound(a.g, a.pg);
    j["ceiling_form"] = b.ceiling_form;
    j["bound"] = b.bound;
    text << "K^3 >= " << b.ceiling_form << " (ceiling form)\n";
    if (b.refined_applies) {
      j["refined_form"] = b.refined_form;
      text << "K^3 >= " << b.refined_form << " (refined, pg >= 84)\n";
    }
  } else if (a.theorem == "3.2") {
    need(a.pg >= 0, "--pg");
    long g = bounds::max_curve_genus(a.pg);
    j["max_genus"] = g;
    text << "g(C) <= " << g << " for pg(X) = " << a.pg << "\n";
  } else if (a.theorem == "4.1") {
    need(a.K2 >= 1, "--K2");
    need(a.pg >= 0, "--pg");
    need(a.b == 0 || a.b == 1, "--b");
    Rat v = bounds::surface_volume_lower_bound(a.K2, a.pg, a.b);
    j["K3_lower_bound"] = rat_str(v);
    text << "K^3 >= " << rat_str(v) << "\n";
  } else if (a.theorem == "4.2") {
    need(a.b == 0 || a.b == 1, "--b");
    if (a.b == 0) need(a.pg >= 0, "--pg");
    need(a.b == 1 || a.qF == "zero" || a.qF == "positive", "--qF zero|positive");
    auto r = bounds::max_fiber_K2(a.b == 1 ? std::max(a.pg, 2L) : a.pg, a.b,
                                  a.qF == "positive" ? bounds::QF::Positive
                                                     : bounds::QF::Zero);
    j["max_K2"] = r.max_K2;
    j["max_pg_F"] = r.max_pg_F;
    text << "K_{F0}^2 <= " << r.max_K2 << ", pg(F) <= " << r.max_pg_F << "\n";
    if (a.b == 0) {
      j["exact_threshold_K2_below_72"] = r.threshold_K2_below_72;
      text << "exact bisection: K^2 = 72 becomes infeasible from pg(X) = "
           << r.threshold_K2_below_72 << "\n";
    }
  } else if (a.theorem == "MY") {
    need(!a.K3.empty(), "--K3");
    need(!a.chi.empty(), "--chi");
    bool ok = bounds::miyaoka_yau_check(parse_rat(a.K3), parse_rat(a.chi));
    j["holds"] = ok;
    text << "K^3 <= 72 chi(omega): " << (ok ? "holds" : "fails") << "\n";
  } else if (a.theorem == "parity") {
    auto t = bounds::parity_threshold_pg();
    j["last_pg"] = t.last_pg;
    j["holds_from"] = t.holds_from;
    text << "largest pg with 2(pg-1)^2 <= 108 pg: " << t.last_pg << "; " << t.statement
         << "\n";
  } else {
    fail(ErrCode::UnknownTheorem, "unknown rule id " + a.theorem);
  }
  if (a.emit_json) std::cout << j.dump(2) << "\n";
  else std::cout << text.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fibra: exact verification of double-cover surface constructions and "
               "canonical-fibration bounds"};
  app.require_subcommand(1);

  std::string verify_path, verify_json;
  auto* verify = app.add_subcommand("verify", "verify one construction file");
  verify->add_option("file", verify_path, "construction JSON file")->required();
  verify->add_option("--emit-json", verify_json, "write the report as JSON");

  bool parallel = false;
  std::string corpus_json;
  auto* corpus = app.add_subcommand("corpus", "verify the bundled corpus");
  corpus->add_flag("--parallel", parallel, "verify files in parallel");
  corpus->add_option("--emit-json", corpus_json, "write the summary as JSON");

  BoundsArgs ba;
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate a bound or threshold rule");
  bounds_cmd
      ->add_option("--theorem", ba.theorem,
                   "rule id: 2.1, 2.2, 3.1, 3.2, 4.1, 4.2, MY, parity")
      ->required();
  bounds_cmd->add_option("--pg", ba.pg, "pg of the threefold");
  bounds_cmd->add_option("--b", ba.b, "base-curve genus (0 or 1)");
  bounds_cmd->add_option("--qF", ba.qF, "fiber irregularity: zero | positive");
  bounds_cmd->add_option("--g", ba.g, "fiber-curve genus");
  bounds_cmd->add_option("--p", ba.p, "the pencil multiplicity p");
  bounds_cmd->add_option("--beta", ba.beta, "rational beta (p/q)");
  bounds_cmd->add_option("--xi", ba.xi, "rational xi (p/q)");
  bounds_cmd->add_option("--K3", ba.K3, "rational K^3 (p/q)");
  bounds_cmd->add_option("--K2", ba.K2, "fiber K^2");
  bounds_cmd->add_option("--chi", ba.chi, "rational chi(omega) (p/q)");
  bounds_cmd->add_flag("--emit-json", ba.emit_json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(verify_path, verify_json);
    if (*corpus) return cmd_corpus(parallel, corpus_json);
    if (*bounds_cmd) return cmd_bounds(ba);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
