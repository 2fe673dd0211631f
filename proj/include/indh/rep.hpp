#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "indh/group.hpp"
#include "indh/linalg.hpp"

namespace indh {

inline constexpr double kStructuralTol = 1e-10;
inline constexpr double kDecisionTol = 1e-8;

/// Unitary representation of a subgroup (or the whole) of a finite group.
/// The coordinate basis of C^d plays the role of the orthonormal basis ξ.
class UnitaryRep {
 public:
  UnitaryRep() = default;
  /// `matrices[i]` is the image of `domain[i]`. `domain` must be sorted.
  UnitaryRep(FiniteGroupPtr group, std::vector<std::size_t> domain,
             std::vector<CMatrix> matrices, std::string label = "");

  /// Throws MissingElement naming the first domain element without a matrix.
  static UnitaryRep from_map(FiniteGroupPtr group, std::vector<std::size_t> domain,
                             const std::map<std::size_t, CMatrix>& matrices,
                             std::string label = "");

  const FiniteGroupPtr& group() const noexcept { return group_; }
  const std::vector<std::size_t>& domain() const noexcept { return domain_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  bool contains(std::size_t g) const { return g < slot_.size() && slot_[g] >= 0; }
  /// Matrix of element g (a group index). Throws MissingElement off the domain.
  const CMatrix& operator()(std::size_t g) const;
  const std::vector<CMatrix>& matrices() const noexcept { return matrices_; }

 private:
  FiniteGroupPtr group_;
  std::vector<std::size_t> domain_;
  std::vector<std::ptrdiff_t> slot_;
  std::vector<CMatrix> matrices_;
  std::size_t dim_ = 0;
  std::string label_;
};

struct ValidationReport {
  double homomorphism_defect = 0.0;  // max |M(ab) - M(a)M(b)|
  double unitarity_defect = 0.0;     // max |M(g)^* M(g) - I|, includes M(e) = I
  std::vector<std::int64_t> witness; // worst pair (a, b) or element
  bool passed = false;
};

ValidationReport validate_rep(const UnitaryRep& rep, double tol = kStructuralTol);

/// χ(g) = tr M(g), aligned with rep.domain().
std::vector<Complex> character(const UnitaryRep& rep);

/// (1/|K|) Σ_g |χ(g)|²
double character_norm(const UnitaryRep& rep);

bool irreducible(const UnitaryRep& rep, double tol = kDecisionTol);

/// Character equality on a common domain. Different dimensions compare
/// unequal; different domains throw DomainMismatch.
bool equivalent(const UnitaryRep& a, const UnitaryRep& b, double tol = kDecisionTol);

/// k ↦ M(g⁻¹ k g). Throws NotNormal if the domain is not stable under g.
UnitaryRep conjugate_rep(const UnitaryRep& rep, std::size_t g);

/// Σ of a compact subgroup: pairwise inequivalent irreducible representations.
struct DualObject {
  CompactSubgroup subgroup;
  std::vector<UnitaryRep> irreps;

  /// Label lookup; also accepts a decimal position. Throws UnknownName.
  const UnitaryRep& find(const std::string& label) const;
  std::size_t position(const std::string& label) const;
};

/// Validates a candidate list: structural checks, irreducibility, pairwise
/// inequivalence, completeness Σ d² = |K|. Throws NotIrreducible,
/// DuplicateIrrep or IncompleteDual.
DualObject make_dual(CompactSubgroup subgroup, std::vector<UnitaryRep> irreps);

/// Σ_k ν(k) σ_ij(k) conj(τ_lm(k)). Indices are 0-based.
Complex schur_K_integral(const UnitaryRep& sigma, const UnitaryRep& tau, std::size_t i,
                         std::size_t j, std::size_t l, std::size_t m);

}  // namespace indh
