#pragma once

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Sparse>
#include <nlohmann/json.hpp>

#include "qbundle/galois.hpp"
#include "qbundle/presentation.hpp"
#include "qbundle/report.hpp"

namespace qbundle {

using Complex = std::complex<double>;
using OpMatrix = Eigen::SparseMatrix<Complex>;

inline constexpr double kResidualTolerance = 1e-12;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kPairingTolerance = 1e-10;

/// S_r e_k = sqrt(1 - r^(k + offset)) e_{k+1} on span{e_0..e_{N-1}}; the
/// last basis vector is sent to 0. offset = 1 solves the disc relation.
OpMatrix weighted_shift(int N, double r, int offset = 1);

/// Phase angles (radians) of the representation families.
struct RepPhases {
  double alpha = 0;   // s3-onedim: a = e^{i alpha}
  double beta = 0;    // s3-onedim: b = e^{i beta}
  double lambda = 0;  // s3-shift-b: a = e^{i lambda} I
  double mu = 0;      // s3-shift-a: b = e^{i mu} I
  double theta = 0;   // disc-point: x = e^{i theta}
};

/// Generators of a presented algebra as N x N complex matrices.
struct TruncatedRep {
  std::string family;
  PresentationPtr algebra;
  int N = 0;
  /// Decay ratio of the shift weights, for tail bounds.
  double decay = 0;
  /// Shift steps taken by one generator (2 when realised through iota).
  int letter_depth = 1;
  std::vector<OpMatrix> letters;

  /// Starred letters get the adjoint matrix; self-adjoint letters must be given.
  static TruncatedRep from_generators(std::string family, PresentationPtr algebra, int N, double decay,
                                      const std::map<std::string, OpMatrix>& generators, int letter_depth = 1);
};

class UnknownFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class WindowTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotCoinvariant : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// s3-onedim, s3-shift-b, s3-shift-a, disc-shift, disc-point, sphere-rep-1,
/// sphere-rep-2.
std::vector<std::string> rep_families();

/// Throws UnknownFamily, or std::invalid_argument when N < 2.
TruncatedRep build_rep(const std::string& family, int N, const RepPhases& phases = {},
                       const AlgebraParams& params = AlgebraParams::defaults());

/// Substitutes the generator matrices; linear in f.
OpMatrix evaluate(const NCPoly& f, const TruncatedRep& rho);

struct RelationResidual {
  std::string relation;
  double value = 0;
};

struct ResidualReport {
  int N = 0;
  int M = 0;
  double max_residual = 0;
  /// Defining relations followed by the adjoint conditions rho(l*) = rho(l)^dagger.
  std::vector<RelationResidual> relations;
};

/// Largest window M allowed for the algebra's relations.
int max_window(const TruncatedRep& rho);
/// max_{j,k<M} |<e_j, rho(r) e_k>| over the relations. Throws WindowTooLarge
/// when M exceeds max_window.
ResidualReport relation_residual(const TruncatedRep& rho, int M);

/// Largest operator norm among the generator matrices.
double generator_norm(const TruncatedRep& rho);

/// Sign convention of the trace: Tr(rho_shift_a - rho_shift_b) or its negative.
enum class Orientation { ShiftAMinusShiftB, ShiftBMinusShiftA };

struct TraceValue {
  Complex value;
  double tail_bound = 0;
};

/// Operator trace of the difference of the two infinite-dimensional
/// representations (a = S_q, b = e^{i mu} / a = e^{i lambda}, b = S_p) over
/// the window k < M, with the geometric tail bound
/// C r^(M-d+1) / (1-r), C = sum |c_w| deg w, d = deg f, r = max(p, q).
TraceValue trace_functional(const NCPoly& f, int N, int M, const AlgebraParams& params = AlgebraParams::defaults(),
                            Orientation orientation = Orientation::ShiftAMinusShiftB, double lambda = 0,
                            double mu = 0);

struct PairingReport {
  int winding = 0;
  int N = 0;
  int M = 0;
  Complex value;
  double tail_bound = 0;
  long nearest = 0;
  double distance = 0;
  bool converged = false;

  nlohmann::json to_json() const;
};

/// Trace of the projector under Orientation::ShiftBMinusShiftA, for which
/// the projector of winding n pairs to n.
PairingReport chern_pairing(const ProjectorMatrix& e, const StrongConnection& l, int N, int M, double lambda = 0,
                            double mu = 0);

/// Residual and norm checks of every family at (N, M), sampling phases.
std::vector<CheckReport> verify_reps(int N, std::optional<int> M = std::nullopt,
                                     const AlgebraParams& params = AlgebraParams::defaults());

}  // namespace qbundle
