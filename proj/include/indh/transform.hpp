#pragma once

// Atomic vector measures valued in k×k complex matrices (operator norm) and
// their Fourier-Stieltjes transforms over induced representations:
//   m̂(σ)_ij = Σ_t conj(u_ij(t)) m({t}),
// where conj is the entrywise conjugate of U_t in the θ basis. Densities f
// transform through the measure with atoms f(t) λ({t}).

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "indh/induced.hpp"

namespace indh {

/// Finitely supported measure t ↦ m({t}) ∈ M_k(C).
struct VectorMeasure {
  GroupPtr group;
  std::size_t algebra_dim = 1;
  std::map<Element, CMatrix> atoms;

  /// Σ_t ‖m({t})‖, the total variation.
  double norm() const;
  /// Throws DimensionMismatch or InvalidInput on malformed atoms.
  void check() const;
};

/// a·m + n atomwise. Throws GroupMismatch or DimensionMismatch.
VectorMeasure combine(Complex a, const VectorMeasure& m, const VectorMeasure& n);

/// f ∈ L₁(G, λ, M_k(C)) with finite support; `lambda` is the point mass of λ.
struct DensityFunction {
  GroupPtr group;
  double lambda = 1.0;
  std::size_t algebra_dim = 1;
  std::map<Element, CMatrix> values;

  VectorMeasure to_measure() const;
};

/// Coefficient matrix over the algebra: entry (i, j) = Φ(σ)(θ_j, θ_i).
struct CoefficientMatrix {
  std::size_t dim = 0;
  std::size_t algebra_dim = 1;
  std::vector<CMatrix> entries;  // row-major, dim × dim

  static CoefficientMatrix zero(std::size_t dim, std::size_t algebra_dim);
  CMatrix& at(std::size_t i, std::size_t j) { return entries[i * dim + j]; }
  const CMatrix& at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
  /// The (dim·k) × (dim·k) block matrix [a_ij].
  CMatrix block() const;
  /// [‖a_ij‖]
  Eigen::MatrixXd entry_norms() const;
};

/// Φ(σ)(u, v) = Σ_ij β_j conj(γ_i) a_ij for u = Σ β_j θ_j, v = Σ γ_i θ_i.
CMatrix sesquilinear(const CoefficientMatrix& a, const CVector& u, const CVector& v);

struct FamilyEntry {
  std::string label;
  std::size_t sigma_dim = 1;
  CoefficientMatrix matrix;
  bool included = true;
};

/// (Φ(σ))_σ over a finite Σ; the S_0, S_00 and S_∞ classes coincide here.
struct FourierFamily {
  std::vector<FamilyEntry> entries;
};

/// m̂(σ) on a finite G. Throws GroupMismatch.
CoefficientMatrix fourier_stieltjes(const VectorMeasure& m, const InducedRep& rep);
/// m̂(σ) restricted to the listed basis vectors (any G, including Z × F).
CoefficientMatrix fourier_stieltjes(const VectorMeasure& m, const InducedRep& rep,
                                    const std::vector<BasisIndex>& basis);

/// f̂(σ) = fourier_stieltjes(f.to_measure(), rep).
CoefficientMatrix fourier_function(const DensityFunction& f, const InducedRep& rep);

FourierFamily fourier_family(const VectorMeasure& m, const std::vector<InducedRep>& reps);

struct NormInterval {
  double lower = 0.0;
  double upper = 0.0;
  bool exact = false;
};

inline constexpr std::size_t kNormSamples = 256;

/// Interval for ‖Φ(σ)‖: exact when k = 1; otherwise a certified upper bound
/// min(σ_max([a_ij]), σ_max([‖a_ij‖])) and a sampled lower bound.
NormInterval sesquilinear_norm(const CoefficientMatrix& a, std::uint64_t seed,
                               std::size_t samples = kNormSamples);

/// sup over included σ. Throws EmptyFamily.
NormInterval family_norm(const FourierFamily& phi, std::uint64_t seed = 0,
                         std::size_t samples = kNormSamples);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// N_p(f) = (Σ_t λ ‖f(t)‖^p)^{1/p}; p = ∞ gives max ‖f(t)‖. Throws InvalidP.
double lp_norm(const DensityFunction& f, double p);

/// Rows conj(u^σ_ij(t)) stacked over σ and (i, j); columns indexed by t.
CMatrix transform_matrix(const CosetSpace& cosets, const DualObject& dual);

/// Rank of m ↦ (m̂(σ))_σ on scalar measures, at threshold 1e-9·σ_max.
std::size_t transform_rank(const CosetSpace& cosets, const DualObject& dual);

inline constexpr double kRankTol = 1e-9;

}  // namespace indh
