#include "indh/induced.hpp"

#include <algorithm>
#include <set>

#include "indh/error.hpp"

namespace indh {

namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

InducedRep::InducedRep(CosetSpace cosets, UnitaryRep sigma)
    : cosets_(std::move(cosets)), sigma_(std::move(sigma)) {}

InducedRep InducedRep::induce(const CosetSpace& cosets, UnitaryRep sigma) {
  const CompactSubgroup& k = cosets.subgroup();
  if (sigma.domain() != k.members() ||
      sigma.group()->table() != k.finite_part().table())
    throw Error(ErrorKind::DomainMismatch, "sigma is not a representation of K");
  if (!irreducible(sigma))
    throw Error(ErrorKind::NotIrreducible,
                "cannot induce from a reducible representation (character norm " +
                    std::to_string(character_norm(sigma)) + ")");
  InducedRep rep(cosets, std::move(sigma));
  if (rep.group().is_finite()) {
    const std::size_t n = rep.group().order();
    const std::size_t d = rep.sigma_dim();
    const std::size_t dim = rep.dim();
    rep.cache_.assign(n, CMatrix::Zero(ix(dim), ix(dim)));
    const FiniteGroup& g = rep.group().finite_part();
    for (std::size_t t = 0; t < n; ++t) {
      CMatrix& u = rep.cache_[t];
      const std::size_t tinv = g.inv(t);
      for (std::size_t ci = 0; ci < cosets.finite_count(); ++ci) {
        const auto f = cosets.factor({0, g.mul(tinv, cosets.representatives()[ci])});
        const CMatrix& block = rep.sigma_(g.inv(f.k));
        u.block(ix(ci * d), ix(f.coset.index * d), ix(d), ix(d)) = block;
      }
    }
  }
  return rep;
}

std::size_t InducedRep::dim() const {
  if (!group().is_finite())
    throw Error(ErrorKind::Unsupported, "induced space over Z x F is infinite-dimensional");
  return cosets_.finite_count() * sigma_dim();
}

void InducedRep::check_index(const BasisIndex& b) const {
  const bool ok = b.component < sigma_dim() && b.coset.index < cosets_.finite_count() &&
                  (!group().is_finite() || b.coset.shift == 0);
  if (!ok)
    throw Error(ErrorKind::IndexOutOfRange, "basis index outside the induced space",
                {b.coset.shift, static_cast<std::int64_t>(b.coset.index),
                 static_cast<std::int64_t>(b.component)});
}

std::size_t InducedRep::flat(const BasisIndex& b) const {
  check_index(b);
  if (!group().is_finite())
    throw Error(ErrorKind::Unsupported, "flat indices exist only for finite G");
  return b.coset.index * sigma_dim() + b.component;
}

BasisIndex InducedRep::basis(std::size_t flat) const {
  if (flat >= dim())
    throw Error(ErrorKind::IndexOutOfRange, "basis index " + std::to_string(flat) +
                                                " >= " + std::to_string(dim()),
                {static_cast<std::int64_t>(flat)});
  return {{0, flat / sigma_dim()}, flat % sigma_dim()};
}

CVector InducedRep::basis_value(const BasisIndex& b, Element g) const {
  check_index(b);
  const auto f = cosets_.factor(g);
  if (f.coset != b.coset) return CVector::Zero(ix(sigma_dim()));
  const FiniteGroup& fg = group().finite_part();
  return sigma_(fg.inv(f.k)).col(ix(b.component));
}

Complex InducedRep::coefficient(const BasisIndex& i, const BasisIndex& j, Element t) const {
  check_index(i);
  check_index(j);
  if (!group().contains(t))
    throw Error(ErrorKind::InvalidInput, "element outside the group",
                {t.shift, static_cast<std::int64_t>(t.index)});
  const Element x = group().mul(group().inv(t), cosets_.representative(i.coset));
  const auto f = cosets_.factor(x);
  if (f.coset != j.coset) return {};
  const FiniteGroup& fg = group().finite_part();
  return sigma_(fg.inv(f.k))(ix(i.component), ix(j.component));
}

const CMatrix& InducedRep::op(Element t) const {
  if (!group().is_finite())
    throw Error(ErrorKind::Unsupported, "operator matrices exist only for finite G");
  if (!group().contains(t))
    throw Error(ErrorKind::InvalidInput, "element outside the group",
                {t.shift, static_cast<std::int64_t>(t.index)});
  return cache_[t.index];
}

CVector InducedVector::evaluate(const InducedRep& rep, Element g) const {
  CVector out = CVector::Zero(ix(rep.sigma_dim()));
  for (const auto& [b, c] : coefficients) out += c * rep.basis_value(b, g);
  return out;
}

CMatrix induced_operator(const InducedRep& rep, Element t) { return rep.op(t); }

Complex matrix_coefficient(const InducedRep& rep, const BasisIndex& i, const BasisIndex& j,
                           Element t) {
  return rep.coefficient(i, j, t);
}

InducedVector average_map(const InducedRep& rep, const HFunction& eta) {
  const CosetSpace& cosets = rep.cosets();
  const CompactSubgroup& k = rep.subgroup();
  const LCGroup& g = rep.group();
  std::set<CosetId> touched;
  for (const auto& [x, v] : eta) {
    if (!g.contains(x) || static_cast<std::size_t>(v.size()) != rep.sigma_dim())
      throw Error(ErrorKind::InvalidInput, "eta value off the group or of wrong size",
                  {x.shift, static_cast<std::int64_t>(x.index)});
    touched.insert(cosets.coset_of(x));
  }
  InducedVector out;
  for (const CosetId& c : touched) {
    const Element r = cosets.representative(c);
    CVector u = CVector::Zero(ix(rep.sigma_dim()));
    for (std::size_t kk : k.members()) {
      auto it = eta.find(g.mul(r, {0, kk}));
      if (it != eta.end()) u += rep.sigma()(kk) * it->second;
    }
    u *= k.haar_mass();
    for (std::size_t s = 0; s < rep.sigma_dim(); ++s)
      if (u(ix(s)) != Complex{}) out.coefficients[{c, s}] = u(ix(s));
  }
  return out;
}

std::vector<AlphaEntry> alpha_coefficients(const InducedRep& rep, const BasisIndex& i) {
  rep.check_index(i);
  std::vector<CosetId> cosets = rep.group().is_finite() ? rep.cosets().cosets()
                                                        : std::vector<CosetId>{i.coset};
  std::vector<AlphaEntry> out;
  for (const CosetId& c : cosets) {
    const CVector v = rep.basis_value(i, rep.cosets().representative(c));
    for (std::size_t s = 0; s < rep.sigma_dim(); ++s) out.push_back({c, s, v(ix(s))});
  }
  return out;
}

std::vector<Element> coefficient_support(const InducedRep& rep, const BasisIndex& i,
                                         const BasisIndex& j) {
  rep.check_index(i);
  rep.check_index(j);
  const LCGroup& g = rep.group();
  const Element ri = rep.cosets().representative(i.coset);
  const Element rj_inv = g.inv(rep.cosets().representative(j.coset));
  std::vector<Element> out;
  for (std::size_t k : rep.subgroup().members()) {
    const Element t = g.mul(g.mul(ri, {0, g.finite_part().inv(k)}), rj_inv);
    if (rep.coefficient(i, j, t) != Complex{}) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool mackey_irreducible(const InducedRep& rep, double tol) {
  if (!rep.group().is_finite())
    throw Error(ErrorKind::Unsupported, "Mackey test is implemented for finite G");
  const auto& reps = rep.cosets().representatives();
  for (std::size_t c = 0; c < reps.size(); ++c) {
    if (rep.subgroup().contains(reps[c])) continue;
    if (equivalent(conjugate_rep(rep.sigma(), reps[c]), rep.sigma(), tol)) return false;
  }
  return true;
}

double induced_character_norm(const InducedRep& rep) {
  double total = 0.0;
  for (const CMatrix& u : rep.operators()) total += std::norm(u.trace());
  return total / static_cast<double>(rep.group().order());
}

UnitaryRep as_unitary_rep(const InducedRep& rep) {
  const std::size_t n = rep.group().order();
  std::vector<std::size_t> domain(n);
  for (std::size_t i = 0; i < n; ++i) domain[i] = i;
  return UnitaryRep(rep.group().finite_ptr(), std::move(domain), rep.operators(),
                    "Ind(" + rep.sigma().label() + ")");
}

bool g_conjugate(const UnitaryRep& sigma, const UnitaryRep& tau, const CosetSpace& cosets,
                 double tol) {
  if (sigma.dim() != tau.dim()) return false;
  for (std::size_t r : cosets.representatives())
    if (equivalent(conjugate_rep(sigma, r), tau, tol)) return true;
  return false;
}

}  // namespace indh
