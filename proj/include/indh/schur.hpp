#pragma once

// G-level orthogonality of induced matrix coefficients and the constants
//   c_ijlm = d_σ Σ_t Σ_{g,h} Σ_{r,s,p,q} S(σ^{x_g}, σ^{x_h})_{rs,pq}
//            α_js(x_g) conj(α_ir(g)) conj(α_mq(x_h)) α_lp(h),
// with t, g, h over coset representatives, x_g = t⁻¹ g, σ^x(k) = σ(x⁻¹ k x)
// and S the K-level Schur integral. Then ∫ u_ij conj(u_lm) dλ = c_ijlm / d_σ.
// The untwisted sum replaces S(σ^{x_g}, σ^{x_h}) by S(σ, σ); the two agree
// whenever σ is stable under conjugation by G.

#include <array>
#include <string>
#include <vector>

#include "indh/induced.hpp"

namespace indh {

using Tuple = std::array<std::size_t, 4>;

/// Σ_t λ(t) u^σ_ij(t) conj(u^τ_lm(t)). Both reps must share (G, K); throws
/// GroupMismatch otherwise and IndexOutOfRange for bad indices.
Complex schur_G_integral(const InducedRep& sigma, const InducedRep& tau, const BasisIndex& i,
                         const BasisIndex& j, const BasisIndex& l, const BasisIndex& m);
/// Flat-index form for finite G.
Complex schur_G_integral(const InducedRep& sigma, const InducedRep& tau, std::size_t i,
                         std::size_t j, std::size_t l, std::size_t m);

enum class CProvenance { TripleSum, BackFilled };

inline constexpr std::size_t kTripleSumMaxDim = 12;

/// c_ijlm by the twisted triple sum. Finite G only.
Complex c_constant(const InducedRep& rep, std::size_t i, std::size_t j, std::size_t l,
                   std::size_t m);
/// The sum with S(σ, σ) in place of the twisted K-integral.
Complex c_constant_untwisted(const InducedRep& rep, std::size_t i, std::size_t j,
                             std::size_t l, std::size_t m);

struct SchurReport {
  std::string sigma;
  std::string tau;
  std::size_t dim = 0;
  std::size_t sigma_dim = 0;
  /// Indexed by ((i·dim + j)·dim + l)·dim + m.
  std::vector<Complex> integrals;
  std::vector<Complex> c;
  CProvenance provenance = CProvenance::TripleSum;
  double max_deviation = 0.0;          // max |c − δ_il δ_jm|
  Tuple witness{};                     // tuple attaining max_deviation
  double theorem_deviation = 0.0;      // max |integral − c / d_σ|
  Tuple theorem_witness{};
  double conjugate_symmetry_defect = 0.0;
  bool passed = false;                 // max_deviation ≤ tol
};

/// Full tuple table for one induced rep. Finite G only.
SchurReport check_normalized_basis(const InducedRep& rep, double tol = 1e-9);

struct CrossReport {
  std::string sigma;
  std::string tau;
  double max_abs = 0.0;
  Tuple witness{};
  bool g_conjugate = false;  // τ ≅ σ^g for some g
};

/// max |Σ_t λ u^σ_ij conj(u^τ_lm)| over all tuples. Finite G only.
CrossReport cross_integrals(const InducedRep& sigma, const InducedRep& tau);

std::string to_string(CProvenance p);

}  // namespace indh
