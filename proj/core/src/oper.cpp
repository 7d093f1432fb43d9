#include "qbundle/oper.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "qbundle/maps.hpp"
#include "qbundle/text.hpp"

namespace qbundle {

namespace {

OpMatrix scalar_op(int N, Complex c) {
  OpMatrix m(N, N);
  m.setIdentity();
  return m * c;
}

Complex phase(double angle) { return std::polar(1.0, angle); }

double max_abs_in_window(const OpMatrix& m, int M) {
  double out = 0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (OpMatrix::InnerIterator it(m, k); it; ++it)
      if (it.row() < M && it.col() < M) out = std::max(out, std::abs(it.value()));
  return out;
}

}  // namespace

OpMatrix weighted_shift(int N, double r, int offset) {
  std::vector<Eigen::Triplet<Complex>> entries;
  for (int k = 0; k + 1 < N; ++k) entries.emplace_back(k + 1, k, std::sqrt(1.0 - std::pow(r, k + offset)));
  OpMatrix s(N, N);
  s.setFromTriplets(entries.begin(), entries.end());
  return s;
}

TruncatedRep TruncatedRep::from_generators(std::string family, PresentationPtr algebra, int N, double decay,
                                           const std::map<std::string, OpMatrix>& generators, int letter_depth) {
  TruncatedRep rho{std::move(family), std::move(algebra), N, decay, letter_depth, {}};
  const auto& A = *rho.algebra->alphabet();
  std::vector<std::optional<OpMatrix>> table(A.size());
  for (const auto& [name, m] : generators) table.at(A.id(name)) = m;
  for (std::size_t l = 0; l < A.size(); ++l) {
    const auto s = A.star(static_cast<LetterId>(l));
    if (!table[l] && s != l && table[s]) table[l] = OpMatrix(table[s]->adjoint());
    if (!table[l]) throw std::invalid_argument("representation lacks a matrix for '" + A.name(static_cast<LetterId>(l)) + "'");
    rho.letters.push_back(*table[l]);
  }
  return rho;
}

std::vector<std::string> rep_families() {
  return {"s3-onedim", "s3-shift-b", "s3-shift-a", "disc-shift", "disc-point", "sphere-rep-1", "sphere-rep-2"};
}

TruncatedRep build_rep(const std::string& family, int N, const RepPhases& phases, const AlgebraParams& params) {
  if (N < 2) throw std::invalid_argument("representation dimension must be at least 2");
  const double p = to_double(params.p);
  const double q = to_double(params.q);
  const auto s3 = builtin_presentation("s3", params);
  if (family == "s3-onedim")
    return TruncatedRep::from_generators(family, s3, N, 0,
                                         {{"a", scalar_op(N, phase(phases.alpha))}, {"b", scalar_op(N, phase(phases.beta))}});
  if (family == "s3-shift-b")
    return TruncatedRep::from_generators(family, s3, N, p, {{"a", scalar_op(N, phase(phases.lambda))}, {"b", weighted_shift(N, p)}});
  if (family == "s3-shift-a")
    return TruncatedRep::from_generators(family, s3, N, q, {{"a", weighted_shift(N, q)}, {"b", scalar_op(N, phase(phases.mu))}});
  if (family == "disc-shift")
    return TruncatedRep::from_generators(family, builtin_presentation("disc", params), N, q, {{"x", weighted_shift(N, q)}});
  if (family == "disc-point")
    return TruncatedRep::from_generators(family, builtin_presentation("disc", params), N, 0,
                                         {{"x", scalar_op(N, phase(phases.theta))}});
  if (family == "sphere-rep-1" || family == "sphere-rep-2") {
    const TruncatedRep total = build_rep(family == "sphere-rep-1" ? "s3-shift-b" : "s3-shift-a", N, phases, params);
    const auto sphere = builtin_presentation("sphere", params);
    const auto maps = StandardMaps::get(params);
    return TruncatedRep::from_generators(family, sphere, N, total.decay,
                                         {{"f_0", evaluate(maps->iota.apply(sphere->letter("f_0")), total)},
                                          {"f_1", evaluate(maps->iota.apply(sphere->letter("f_1")), total)}},
                                         2);
  }
  throw UnknownFamily("unknown representation family '" + family + "'");
}

OpMatrix evaluate(const NCPoly& f, const TruncatedRep& rho) {
  if (!f.alphabet()->same_as(*rho.algebra->alphabet()))
    throw AlphabetMismatch("evaluate: polynomial and representation use different alphabets");
  OpMatrix out(rho.N, rho.N);
  for (const auto& [w, c] : f.terms()) {
    OpMatrix acc = scalar_op(rho.N, Complex(to_double(c), 0));
    for (std::size_t i = 0; i < w.size(); ++i) acc = (acc * rho.letters.at(w[i])).pruned();
    out += acc;
  }
  return out;
}

int max_window(const TruncatedRep& rho) {
  int deg = 1;
  for (const auto& r : rho.algebra->relations()) deg = std::max(deg, r.poly.degree());
  return rho.N - deg * rho.letter_depth;
}

ResidualReport relation_residual(const TruncatedRep& rho, int M) {
  if (M > max_window(rho))
    throw WindowTooLarge("window " + std::to_string(M) + " exceeds N - deg = " + std::to_string(max_window(rho)));
  ResidualReport out{rho.N, M, 0, {}};
  for (const auto& r : rho.algebra->relations()) {
    const double v = max_abs_in_window(evaluate(r.poly, rho), M);
    out.relations.push_back({r.name, v});
  }
  const auto& A = *rho.algebra->alphabet();
  for (std::size_t l = 0; l < A.size(); ++l) {
    const auto s = A.star(static_cast<LetterId>(l));
    const OpMatrix diff = rho.letters[s] - OpMatrix(rho.letters[l].adjoint());
    out.relations.push_back({A.name(static_cast<LetterId>(s)) + " = (" + A.name(static_cast<LetterId>(l)) + ")*",
                             max_abs_in_window(diff, M)});
  }
  for (const auto& r : out.relations) out.max_residual = std::max(out.max_residual, r.value);
  return out;
}

double generator_norm(const TruncatedRep& rho) {
  double out = 0;
  for (const auto& m : rho.letters) {
    const Eigen::MatrixXcd dense(m);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(dense);
    out = std::max(out, svd.singularValues()(0));
  }
  return out;
}

TraceValue trace_functional(const NCPoly& f, int N, int M, const AlgebraParams& params, Orientation orientation,
                            double lambda, double mu) {
  const auto& A = *f.alphabet();
  for (const auto& [w, c] : f.terms())
    if (winding_degree(w, A) != 0) throw NotCoinvariant("trace functional needs a coinvariant input, got " + to_text(f));
  const int d = std::max(f.degree(), 0);
  if (M > N - d)
    throw WindowTooLarge("window " + std::to_string(M) + " exceeds N - deg = " + std::to_string(N - d));
  RepPhases ph;
  ph.lambda = lambda;
  ph.mu = mu;
  const TruncatedRep rho_a = build_rep("s3-shift-a", N, ph, params);
  const TruncatedRep rho_b = build_rep("s3-shift-b", N, ph, params);
  const NCPoly g = f.rebased(rho_a.algebra->alphabet());
  const OpMatrix diff = evaluate(g, rho_a) - evaluate(g, rho_b);
  Complex sum = 0;
  for (int k = 0; k < M; ++k) sum += diff.coeff(k, k);
  if (orientation == Orientation::ShiftBMinusShiftA) sum = -sum;

  const double r = std::max(to_double(params.p), to_double(params.q));
  double C = 0;
  for (const auto& [w, c] : f.terms()) C += std::abs(to_double(c)) * static_cast<double>(w.size());
  const double tail = C * std::pow(r, M - d + 1) / (1 - r);
  return {sum, tail};
}

nlohmann::json PairingReport::to_json() const {
  return {{"winding", winding},   {"N", N},
          {"M", M},               {"value_re", value.real()},
          {"value_im", value.imag()}, {"tail_bound", tail_bound},
          {"nearest_int", nearest}, {"distance", distance},
          {"converged", converged}, {"orientation", "Tr(rho_shift_b - rho_shift_a)"}};
}

PairingReport chern_pairing(const ProjectorMatrix& e, const StrongConnection& l, int N, int M, double lambda,
                            double mu) {
  const NCPoly tr = matrix_trace(e, l);
  const TraceValue t = trace_functional(tr, N, M, l.params(), Orientation::ShiftBMinusShiftA, lambda, mu);
  PairingReport out;
  out.winding = e.n;
  out.N = N;
  out.M = M;
  out.value = t.value;
  out.tail_bound = t.tail_bound;
  out.nearest = std::lround(t.value.real());
  out.distance = std::abs(t.value - Complex(static_cast<double>(out.nearest), 0));
  out.converged = out.distance <= t.tail_bound + kPairingTolerance;
  return out;
}

std::vector<CheckReport> verify_reps(int N, std::optional<int> M, const AlgebraParams& params) {
  std::vector<CheckReport> out;
  const std::vector<RepPhases> samples = {RepPhases{}, RepPhases{0.7, -1.3, 2.1, 0.4, 2.9}};
  for (const auto& family : rep_families()) {
    for (std::size_t s = 0; s < samples.size(); ++s) {
      const TruncatedRep rho = build_rep(family, N, samples[s], params);
      const int window = M.value_or(std::min(N - 6, max_window(rho)));
      const std::string instance = family + "#" + std::to_string(s);
      const ResidualReport res = relation_residual(rho, window);
      nlohmann::json per = nlohmann::json::object();
      std::optional<std::string> worst;
      for (const auto& r : res.relations) {
        per[r.relation] = r.value;
        if (r.value > kResidualTolerance && !worst) worst = "relation '" + r.relation + "' residual " + std::to_string(r.value);
      }
      out.push_back(make_report("relation_residual", instance, window, !worst, worst,
                                {{"N", N}, {"M", window}, {"max_residual", res.max_residual}, {"relations", per}}));
      const double norm = generator_norm(rho);
      const bool ok = norm <= 1 + kNormTolerance;
      out.push_back(make_report("generator_norm", instance, N, ok,
                                ok ? std::nullopt : std::optional<std::string>("norm " + std::to_string(norm)),
                                {{"norm", norm}}));
    }
  }
  return out;
}

}  // namespace qbundle
