#pragma once

// Exact group models: finite groups given by a Cayley table and the
// non-compact model Z × F. A compact normal subgroup K always lives inside
// the finite part F, so every integral against Haar measure is a finite sum.
//
// Measure normalization used throughout:
//   ν(K) = 1            (ν point mass 1/|K|)
//   μ(coset) = 1        (G-invariant measure on G/K)
//   λ = μ ⊗ ν           (λ point mass 1/|K|)

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "indh/linalg.hpp"

namespace indh {

inline constexpr const char* kMeasureConvention =
    "nu(K)=1 (point mass 1/|K|); mu=1 per coset of G/K; "
    "lambda=mu (x) nu (point mass 1/|K|)";

using CayleyTable = std::vector<std::vector<std::size_t>>;

/// A validated finite group. Element 0 is the identity.
class FiniteGroup {
 public:
  /// Validates the table exhaustively. Throws NoIdentity, NoInverse or
  /// NonAssociative naming the first violating element or triple.
  static FiniteGroup from_table(CayleyTable table, std::string name = "cayley");

  std::size_t order() const noexcept { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  static constexpr std::size_t identity() noexcept { return 0; }

  /// g⁻¹ k g
  std::size_t conjugate(std::size_t k, std::size_t g) const {
    return mul(mul(inv(g), k), g);
  }

  std::size_t element_order(std::size_t a) const;
  bool is_abelian() const;
  const CayleyTable& table() const noexcept { return table_; }
  const std::string& name() const noexcept { return name_; }

  /// Orders of the direct factors when built as a product (index a + |A| b).
  const std::vector<std::size_t>& factor_orders() const noexcept { return factors_; }
  void set_factor_orders(std::vector<std::size_t> factors) { factors_ = std::move(factors); }

 private:
  CayleyTable table_;
  std::vector<std::size_t> inverse_;
  std::string name_;
  std::vector<std::size_t> factors_;
};

using FiniteGroupPtr = std::shared_ptr<const FiniteGroup>;

/// Element of an LCGroup. For Finite groups `shift` is always 0; for Z × F
/// it is the Z coordinate. `index` is the F coordinate.
struct Element {
  std::int64_t shift = 0;
  std::size_t index = 0;
  auto operator<=>(const Element&) const = default;
};

class LCGroup {
 public:
  enum class Kind { Finite, ZCrossF };

  static LCGroup finite(FiniteGroup g);
  static LCGroup z_cross(FiniteGroup f);

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }

  /// The group itself (Finite) or the factor F (ZCrossF).
  const FiniteGroup& finite_part() const noexcept { return *finite_; }
  const FiniteGroupPtr& finite_ptr() const noexcept { return finite_; }

  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element identity() const noexcept { return {}; }

  /// |G|. Throws Unsupported for ZCrossF.
  std::size_t order() const;
  /// All elements in index order (Finite only).
  std::vector<Element> elements() const;
  bool contains(Element g) const;
  std::string name() const;

  bool same_as(const LCGroup& other) const;

 private:
  Kind kind_ = Kind::Finite;
  FiniteGroupPtr finite_;
};

using GroupPtr = std::shared_ptr<const LCGroup>;

GroupPtr make_group(LCGroup g);

/// A compact (finite) normal subgroup K ⊂ F, embedded as {0} × K for Z × F.
class CompactSubgroup {
 public:
  /// Checks closure and normality. Throws NotSubgroup or NotNormal; the
  /// NotNormal witness is (g, k) with g k g⁻¹ ∉ K.
  static CompactSubgroup check_normal(GroupPtr group,
                                      std::vector<std::size_t> members,
                                      std::string name = "");

  const GroupPtr& group() const noexcept { return group_; }
  const FiniteGroup& finite_part() const noexcept { return group_->finite_part(); }
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(std::size_t f) const { return slot_[f] >= 0; }
  bool contains(Element g) const { return g.shift == 0 && contains(g.index); }
  /// Position of f inside members(); -1 if f ∉ K.
  std::ptrdiff_t slot(std::size_t f) const { return slot_[f]; }
  /// ν point mass.
  double haar_mass() const noexcept { return 1.0 / static_cast<double>(members_.size()); }
  const std::string& name() const noexcept { return name_; }

 private:
  GroupPtr group_;
  std::vector<std::size_t> members_;
  std::vector<std::ptrdiff_t> slot_;
  std::string name_;
};

/// Coset of K in G. For Z × F, `shift` is the Z coordinate and `index` the
/// coset of K inside F.
struct CosetId {
  std::int64_t shift = 0;
  std::size_t index = 0;
  auto operator<=>(const CosetId&) const = default;
};

/// Left cosets gK with smallest-index representatives.
class CosetSpace {
 public:
  struct Factor {
    CosetId coset;
    std::size_t k;  // element of K with g = rep(coset) · k
  };

  explicit CosetSpace(CompactSubgroup subgroup);

  const CompactSubgroup& subgroup() const noexcept { return subgroup_; }
  const LCGroup& group() const noexcept { return *subgroup_.group(); }

  /// |F / K|; equals |G/K| for Finite groups.
  std::size_t finite_count() const noexcept { return reps_.size(); }
  std::size_t coset_of_index(std::size_t f) const { return coset_of_[f]; }
  CosetId coset_of(Element g) const { return {g.shift, coset_of_[g.index]}; }
  Element representative(CosetId c) const { return {c.shift, reps_[c.index]}; }
  const std::vector<std::size_t>& representatives() const noexcept { return reps_; }
  Factor factor(Element g) const;
  Element assemble(CosetId c, std::size_t k) const;

  /// Coset ids of a Finite group, in order.
  std::vector<CosetId> cosets() const;
  /// Permutation of finite coset ids induced by left multiplication by g.
  /// For Z × F the shift is added to every coset and omitted here.
  std::vector<std::size_t> action(Element g) const;
  double mu_mass() const noexcept { return 1.0; }

 private:
  CompactSubgroup subgroup_;
  std::vector<std::size_t> reps_;
  std::vector<std::size_t> coset_of_;
};

/// Point masses of ν, μ, λ. `total_lambda` is empty for Z × F.
struct HaarData {
  double nu_point = 1.0;
  double mu_coset = 1.0;
  double lambda_point = 1.0;
  std::optional<double> total_lambda;
};

HaarData haar_data(const CosetSpace& cosets);

/// Finitely supported complex function on G, plus an optional constant
/// `background` taken off the listed points. A nonzero background on Z × F
/// has unbounded support.
struct GroupFunction {
  std::map<Element, Complex> values;
  Complex background{0.0, 0.0};

  Complex operator()(Element g) const;
};

struct WeilResult {
  Complex direct;    // Σ_g λ(g) f(g)
  Complex iterated;  // Σ_c μ(c) Σ_k ν(k) f(rep(c) k)
};

/// Both sides of the Weil disintegration. Throws InfiniteSupport for a
/// nonzero background on Z × F.
WeilResult weil_integrate(const GroupFunction& f, const CosetSpace& cosets);

}  // namespace indh
