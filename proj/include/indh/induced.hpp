#pragma once

// Representations of G induced from an irreducible σ of the compact normal
// subgroup K. Vectors are functions u: G → H_σ with u(g k) = σ(k⁻¹) u(g),
// and G acts by (U_t u)(g) = u(t⁻¹ g).
//
// Basis: θ_(c,s)(rep(c') k) = δ_cc' σ(k⁻¹) ξ_s, orthonormal for
// ⟨u, v⟩ = Σ_c ⟨u(rep c), v(rep c)⟩. For finite G the flat index of (c, s)
// is c · d_σ + s. For Z × F the basis is indexed lazily by (shift, c_F, s).

#include <map>
#include <string>
#include <vector>

#include "indh/group.hpp"
#include "indh/rep.hpp"

namespace indh {

struct BasisIndex {
  CosetId coset;
  std::size_t component = 0;
  auto operator<=>(const BasisIndex&) const = default;
};

class InducedRep {
 public:
  /// Throws DomainMismatch if σ is not a rep of K, NotIrreducible if σ is
  /// reducible. Prefills U_t for every t when G is finite.
  static InducedRep induce(const CosetSpace& cosets, UnitaryRep sigma);

  const CosetSpace& cosets() const noexcept { return cosets_; }
  const CompactSubgroup& subgroup() const noexcept { return cosets_.subgroup(); }
  const LCGroup& group() const noexcept { return cosets_.group(); }
  const UnitaryRep& sigma() const noexcept { return sigma_; }
  std::size_t sigma_dim() const noexcept { return sigma_.dim(); }

  /// |G/K| d_σ. Throws Unsupported for Z × F.
  std::size_t dim() const;
  std::size_t flat(const BasisIndex& b) const;
  BasisIndex basis(std::size_t flat) const;
  /// Throws IndexOutOfRange.
  void check_index(const BasisIndex& b) const;

  /// θ_b(g) in the ξ basis.
  CVector basis_value(const BasisIndex& b, Element g) const;

  /// ⟨U_t θ_j, θ_i⟩
  Complex coefficient(const BasisIndex& i, const BasisIndex& j, Element t) const;

  /// Matrix of U_t in the θ basis (finite G, cached).
  const CMatrix& op(Element t) const;
  const std::vector<CMatrix>& operators() const noexcept { return cache_; }

 private:
  InducedRep(CosetSpace cosets, UnitaryRep sigma);

  CosetSpace cosets_;
  UnitaryRep sigma_;
  std::vector<CMatrix> cache_;
};

/// Finitely supported coefficient vector over the θ basis.
struct InducedVector {
  std::map<BasisIndex, Complex> coefficients;

  /// u(g) = Σ_b coefficients[b] θ_b(g)
  CVector evaluate(const InducedRep& rep, Element g) const;
};

/// Matrix of U_t; identical to rep.op(t) for finite G.
CMatrix induced_operator(const InducedRep& rep, Element t);

/// u_ij(t). Throws IndexOutOfRange.
Complex matrix_coefficient(const InducedRep& rep, const BasisIndex& i, const BasisIndex& j,
                           Element t);

/// Finitely supported η: G → H_σ.
using HFunction = std::map<Element, CVector>;

/// u_η(g) = Σ_k ν(k) σ(k) η(g k), expressed in the θ basis.
InducedVector average_map(const InducedRep& rep, const HFunction& eta);

struct AlphaEntry {
  CosetId coset;
  std::size_t component;
  Complex value;
};

/// α_is(rep c) for every coset of a finite G (for Z × F, the cosets where
/// θ_i is nonzero).
std::vector<AlphaEntry> alpha_coefficients(const InducedRep& rep, const BasisIndex& i);

/// {t : u_ij(t) ≠ 0}, sorted. Always inside rep(c_i) K rep(c_j)⁻¹.
std::vector<Element> coefficient_support(const InducedRep& rep, const BasisIndex& i,
                                         const BasisIndex& j);

/// Mackey criterion: σ^g ≁ σ for every g ∉ K. Finite G only.
bool mackey_irreducible(const InducedRep& rep, double tol = kDecisionTol);

/// (1/|G|) Σ_t |tr U_t|²
double induced_character_norm(const InducedRep& rep);

/// The induced rep as a UnitaryRep of the finite group G.
UnitaryRep as_unitary_rep(const InducedRep& rep);

/// τ ≅ σ^g for some g ∈ G.
bool g_conjugate(const UnitaryRep& sigma, const UnitaryRep& tau, const CosetSpace& cosets,
                 double tol = kDecisionTol);

}  // namespace indh
