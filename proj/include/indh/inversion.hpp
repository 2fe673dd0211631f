#pragma once

// Reconstruction of densities from their coefficient families.
//   direct: f_rec(t) = Σ_σ d_σ Σ_ij a^σ_ij u^σ_ij(t),  a^σ_ij = f̂(σ)_ij
//   gram:   least squares against {u^σ_ij} in L₂(G, λ) (normal equations,
//           Hermitian eigen-solve, eigenvalues below 1e-10·max dropped)
// Both are finite-G only.

#include <string>
#include <vector>

#include "indh/transform.hpp"

namespace indh {

struct SigmaCoefficients {
  std::string label;
  std::size_t sigma_dim = 1;
  CoefficientMatrix a;
};

/// a^σ_ij = Φ(σ)(θ_j, θ_i) for every included σ.
std::vector<SigmaCoefficients> decompose(const FourierFamily& phi);

/// Σ_ij d_σ a_ij û_ij(σ): the sesquilinear map rebuilt from a.
CoefficientMatrix dec_series(const InducedRep& rep, const CoefficientMatrix& a);

/// Pointwise direct series. `reps[k]` must be the induced rep of
/// phi.entries[k]; excluded entries are skipped.
DensityFunction direct_series(const FourierFamily& phi, const std::vector<InducedRep>& reps);

enum class Method { Direct, Gram };

inline constexpr double kGramTol = 1e-10;
inline constexpr double kGramCertificate = 1e-8;

struct ReconstructionReport {
  Method method = Method::Direct;
  std::vector<std::string> sigma_used;
  DensityFunction reconstruction;
  double residual = 0.0;   // N₂(f − f_rec)
  double f_norm = 0.0;     // N₂(f)
  std::vector<SigmaCoefficients> coefficients;
  std::size_t gram_rank = 0;
  std::size_t gram_size = 0;
  /// residual ≤ 1e-8·N₂(f); a false value is the RankDeficient outcome.
  bool certified = false;
};

/// Direct series over the listed reps with its residual.
ReconstructionReport direct_reconstruction(const DensityFunction& f,
                                           const std::vector<InducedRep>& reps);

ReconstructionReport gram_corrected_series(const DensityFunction& f,
                                           const std::vector<InducedRep>& reps);

/// Throws RankDeficient with the achieved residual unless report.certified.
void require_certified(const ReconstructionReport& report);

double reconstruction_residual(const DensityFunction& f, Method method,
                               const std::vector<InducedRep>& reps);

/// f − g pointwise over the union of supports.
DensityFunction difference(const DensityFunction& f, const DensityFunction& g);

/// Induced reps of every σ in the dual (finite G).
std::vector<InducedRep> induce_all(const CosetSpace& cosets, const DualObject& dual);

std::string to_string(Method m);

}  // namespace indh
