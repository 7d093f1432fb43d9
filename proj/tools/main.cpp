#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qbundle/bundle.hpp"
#include "qbundle/galois.hpp"
#include "qbundle/hopf.hpp"
#include "qbundle/oper.hpp"
#include "qbundle/presentation.hpp"
#include "qbundle/rewrite.hpp"
#include "qbundle/text.hpp"

using namespace qbundle;
using nlohmann::json;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string algebra = "s3";
  std::string presentation_file;
  std::string p = "1/2";
  std::string q = "1/4";
  std::optional<int> degree;
  int max_winding = 3;
  std::optional<int> N;
  std::optional<int> M;
  std::string out;
  bool json = false;

  std::string expr;
  std::string suite;
  std::string family;
  int winding = 1;
  bool check = false;
  bool base = false;

  AlgebraParams params() const {
    AlgebraParams ps{parse_scalar(p), parse_scalar(q)};
    ps.validate();
    return ps;
  }
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void add_params(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--p", cfg.p, "deformation parameter p, rational in (0,1)")->capture_default_str();
  sub->add_option("--q", cfg.q, "deformation parameter q, rational in (0,1)")->capture_default_str();
  sub->add_flag("--json", cfg.json, "print JSON instead of text");
  sub->add_option("--out", cfg.out, "write output to this file");
}

void add_algebra(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--algebra", cfg.algebra, "builtin algebra: disc, disc-p, circle, sphere, s3, hopf-u1")
      ->capture_default_str();
  sub->add_option("--presentation", cfg.presentation_file, "load a presentation document instead of --algebra");
}

void check_window(int N, int M) {
  if (M < 2 || N <= M) throw UsageError("need N > M >= 2, got N = " + std::to_string(N) + ", M = " + std::to_string(M));
}

PresentationPtr load_algebra(const RunConfig& cfg, int cap) {
  if (!cfg.presentation_file.empty()) return load_presentation_file(cfg.presentation_file, cfg.params(), cap);
  return builtin_presentation(cfg.algebra, cfg.params(), cap);
}

struct Output {
  std::string text;
  int exit_code = 0;
};

Output emit(const RunConfig& cfg, const json& j, const std::string& text) {
  return {cfg.json ? j.dump(2) + "\n" : text, 0};
}

Output cmd_nf(const RunConfig& cfg) {
  const auto alg = load_algebra(cfg, cfg.degree.value_or(kDefaultDegreeCap));
  const NCPoly f = alg->parse(cfg.expr);
  const std::string nf = to_text(alg->nf(f));
  return emit(cfg, {{"input", cfg.expr}, {"normal_form", nf}, {"algebra", alg->name()}}, nf + "\n");
}

Output cmd_basis(const RunConfig& cfg) {
  const int d = cfg.degree.value_or(1);
  const auto alg = load_algebra(cfg, std::max(kDefaultDegreeCap, d));
  json words = json::array();
  std::string text;
  for (const auto& w : basis_words(alg->system(), d)) {
    words.push_back(to_text(w, *alg->alphabet()));
    text += words.back().get<std::string>() + "\n";
  }
  return emit(cfg, words, text);
}

Output cmd_confluence(const RunConfig& cfg) {
  const auto alg = load_algebra(cfg, cfg.degree.value_or(kDefaultDegreeCap));
  const auto& sys = alg->system();
  json rules = json::array();
  std::ostringstream text;
  text << alg->name() << ": " << sys.rules().size() << " rules at D = " << sys.degree_cap() << "\n";
  for (const auto& r : sys.rules()) {
    rules.push_back({{"lhs", to_text(r.lhs, *alg->alphabet())}, {"rhs", to_text(r.rhs)}});
    text << "  " << to_text(r.lhs, *alg->alphabet()) << " -> " << to_text(r.rhs) << "\n";
  }
  const auto pairs = sys.critical_pairs();
  json unresolved = json::array();
  for (const auto& cp : pairs) {
    const NCPoly rest = sys.normal_form(cp.difference);
    if (!rest.is_zero()) unresolved.push_back({{"overlap", to_text(cp.overlap, *alg->alphabet())}, {"residue", to_text(rest)}});
  }
  const bool ok = unresolved.empty();
  text << pairs.size() << " critical pairs, " << unresolved.size() << " unresolved: " << (ok ? "confluent" : "NOT confluent")
       << "\n";
  json j{{"algebra", alg->name()},
         {"degree_cap", sys.degree_cap()},
         {"rules", rules},
         {"critical_pairs", pairs.size()},
         {"unresolved", unresolved},
         {"confluent", ok}};
  Output o = emit(cfg, j, text.str());
  o.exit_code = ok ? 0 : kExitFailed;
  return o;
}

Output cmd_verify(const RunConfig& cfg) {
  const AlgebraParams params = cfg.params();
  std::vector<CheckReport> reports;
  const bool all = cfg.suite == "all";
  if (all || cfg.suite == "bundle") {
    const auto r = verify_bundle(cfg.degree.value_or(4), params);
    reports.insert(reports.end(), r.begin(), r.end());
  }
  if (all || cfg.suite == "galois") {
    const auto r = verify_galois(cfg.max_winding, std::max(5, cfg.max_winding), params);
    reports.insert(reports.end(), r.begin(), r.end());
  }
  if (all || cfg.suite == "reps") {
    const int N = cfg.N.value_or(64);
    if (cfg.M) check_window(N, *cfg.M);
    const auto r = verify_reps(N, cfg.M, params);
    reports.insert(reports.end(), r.begin(), r.end());
  }
  std::string text;
  for (const auto& r : reports) text += r.summary() + "\n";
  const bool ok = all_passed(reports);
  text += std::to_string(reports.size()) + " checks, " + (ok ? "all passed" : "FAILED") + "\n";
  Output o = emit(cfg, to_json(reports), text);
  if (!ok) {
    std::cerr << "first failure: " << first_failure(reports)->summary() << "\n";
    o.exit_code = kExitFailed;
  }
  return o;
}

Output cmd_projector(const RunConfig& cfg) {
  const AlgebraParams params = cfg.params();
  StrongConnection l(params);
  const ProjectorMatrix e = projector(cfg.winding, l);
  json j = to_json(e);
  if (cfg.base) {
    json base = json::array();
    for (const auto& row : e.entries) {
      json out = json::array();
      for (const auto& f : row) out.push_back(to_text(express_in_base(f, 6, params)));
      base.push_back(out);
    }
    j["base_entries"] = base;
  }
  std::string text = j.at(cfg.base ? "base_entries" : "entries").dump() + "\n";
  return emit(cfg, j, text);
}

Output cmd_pairing(const RunConfig& cfg) {
  const int N = cfg.N.value_or(128);
  const int M = cfg.M.value_or(64);
  check_window(N, M);
  StrongConnection l(cfg.params());
  const PairingReport r = chern_pairing(projector(cfg.winding, l), l, N, M);
  std::ostringstream text;
  text.precision(17);
  text << "pairing(E(" << r.winding << ")) = " << r.value.real() << " + " << r.value.imag() << " i, tail bound "
       << r.tail_bound << ", nearest integer " << r.nearest << (r.converged ? " (converged)" : " (NOT converged)") << "\n";
  Output o = emit(cfg, r.to_json(), text.str());
  o.exit_code = r.converged ? 0 : kExitFailed;
  return o;
}

Output cmd_reps(const RunConfig& cfg) {
  const int N = cfg.N.value_or(64);
  RepPhases phases;
  const TruncatedRep rho = build_rep(cfg.family, N, phases, cfg.params());
  const int M = cfg.M.value_or(std::min(N - 6, max_window(rho)));
  check_window(N, M);
  json j{{"family", rho.family}, {"algebra", rho.algebra->name()}, {"N", N}, {"max_window", max_window(rho)}};
  std::ostringstream text;
  text << rho.family << " on " << rho.algebra->name() << ", N = " << N << ", admissible window M <= " << max_window(rho)
       << "\n";
  bool ok = true;
  if (cfg.check) {
    const ResidualReport res = relation_residual(rho, M);
    const double norm = generator_norm(rho);
    json rel = json::object();
    for (const auto& r : res.relations) {
      rel[r.relation] = r.value;
      text << "  residual " << r.relation << ": " << r.value << "\n";
    }
    ok = res.max_residual <= kResidualTolerance && norm <= 1 + kNormTolerance;
    text << "  max residual " << res.max_residual << " (tolerance " << kResidualTolerance << "), generator norm " << norm
         << "\n"
         << (ok ? "PASS" : "FAIL") << "\n";
    j["M"] = M;
    j["relations"] = rel;
    j["max_residual"] = res.max_residual;
    j["residual_tolerance"] = kResidualTolerance;
    j["generator_norm"] = norm;
    j["passed"] = ok;
  }
  Output o = emit(cfg, j, text.str());
  o.exit_code = ok ? 0 : kExitFailed;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qbundle: rewriting, gluing and pairing checks for the quantum U(1)-bundle over a glued sphere"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* nf = app.add_subcommand("nf", "normal form of a polynomial");
  nf->add_option("expr", cfg.expr, "polynomial text")->required();
  add_algebra(nf, cfg);
  nf->add_option("--degree", cfg.degree, "completion degree cap D (default 8)");
  add_params(nf, cfg);

  auto* basis = app.add_subcommand("basis", "normal words of one degree");
  add_algebra(basis, cfg);
  basis->add_option("--degree", cfg.degree, "word degree (default 1)");
  add_params(basis, cfg);

  auto* conf = app.add_subcommand("confluence", "rules and critical pairs of the completed system");
  add_algebra(conf, cfg);
  conf->add_option("--degree", cfg.degree, "completion degree cap D (default 8)");
  add_params(conf, cfg);

  auto* verify = app.add_subcommand("verify", "run a check suite; exit 0 iff every check passes");
  verify->add_option("suite", cfg.suite, "bundle | galois | reps | all")
      ->required()
      ->check(CLI::IsMember({"bundle", "galois", "reps", "all"}));
  verify->add_option("--degree", cfg.degree, "bundle check degree (default 4)");
  verify->add_option("--max-winding", cfg.max_winding, "largest |n| for the Galois suite")->capture_default_str();
  verify->add_option("--N", cfg.N, "truncation size for the reps suite (default 64)");
  verify->add_option("--M", cfg.M, "window for the reps suite (default min(N - 6, admissible))");
  add_params(verify, cfg);

  auto* proj = app.add_subcommand("projector", "projector matrix E(n) from the strong connection");
  proj->add_option("--winding", cfg.winding, "winding number n")->capture_default_str();
  proj->add_flag("--base", cfg.base, "also write entries through f_0, f_1, f_1*");
  add_params(proj, cfg);

  auto* pairing = app.add_subcommand("pairing", "trace pairing with E(n)");
  pairing->add_option("--winding", cfg.winding, "winding number n")->capture_default_str();
  pairing->add_option("--N", cfg.N, "truncation size (default 128)");
  pairing->add_option("--M", cfg.M, "trace window (default 64)");
  add_params(pairing, cfg);

  auto* reps = app.add_subcommand("reps", "truncated representation families");
  reps->add_option("--family", cfg.family, "family name")->required();
  reps->add_flag("--check", cfg.check, "report relation residuals and generator norm");
  reps->add_option("--N", cfg.N, "truncation size (default 64)");
  reps->add_option("--M", cfg.M, "window (default min(N - 6, admissible))");
  add_params(reps, cfg);

  CLI11_PARSE(app, argc, argv);

  Output out;
  try {
    if (*nf) out = cmd_nf(cfg);
    else if (*basis) out = cmd_basis(cfg);
    else if (*conf) out = cmd_confluence(cfg);
    else if (*verify) out = cmd_verify(cfg);
    else if (*proj) out = cmd_projector(cfg);
    else if (*pairing) out = cmd_pairing(cfg);
    else out = cmd_reps(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
    if (!cfg.expr.empty()) std::cerr << "  " << cfg.expr << "\n  " << std::string(e.position(), ' ') << "^\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (cfg.out.empty()) {
    std::cout << out.text;
  } else {
    std::ofstream file(cfg.out);
    if (!file) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return kExitUsage;
    }
    file << out.text;
  }
  return out.exit_code;
}
