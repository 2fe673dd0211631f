#include "indh/rep.hpp"

#include <algorithm>
#include <cmath>

#include "indh/error.hpp"

namespace indh {

UnitaryRep::UnitaryRep(FiniteGroupPtr group, std::vector<std::size_t> domain,
                       std::vector<CMatrix> matrices, std::string label)
    : group_(std::move(group)),
      domain_(std::move(domain)),
      matrices_(std::move(matrices)),
      label_(std::move(label)) {
  if (domain_.size() != matrices_.size())
    throw Error(ErrorKind::MissingElement, "matrix count does not match the domain");
  if (!std::is_sorted(domain_.begin(), domain_.end()))
    throw Error(ErrorKind::InvalidInput, "representation domain must be sorted");
  slot_.assign(group_->order(), -1);
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (domain_[i] >= group_->order())
      throw Error(ErrorKind::InvalidInput, "domain element outside the group",
                  {static_cast<std::int64_t>(domain_[i])});
    slot_[domain_[i]] = static_cast<std::ptrdiff_t>(i);
  }
  dim_ = matrices_.empty() ? 0 : static_cast<std::size_t>(matrices_.front().rows());
  for (std::size_t i = 0; i < matrices_.size(); ++i)
    if (static_cast<std::size_t>(matrices_[i].rows()) != dim_ ||
        static_cast<std::size_t>(matrices_[i].cols()) != dim_)
      throw Error(ErrorKind::DimensionMismatch,
                  "matrix of element " + std::to_string(domain_[i]) + " is not " +
                      std::to_string(dim_) + "x" + std::to_string(dim_),
                  {static_cast<std::int64_t>(domain_[i])});
}

UnitaryRep UnitaryRep::from_map(FiniteGroupPtr group, std::vector<std::size_t> domain,
                                const std::map<std::size_t, CMatrix>& matrices,
                                std::string label) {
  std::sort(domain.begin(), domain.end());
  std::vector<CMatrix> mats;
  mats.reserve(domain.size());
  for (std::size_t g : domain) {
    auto it = matrices.find(g);
    if (it == matrices.end())
      throw Error(ErrorKind::MissingElement, "no matrix for element " + std::to_string(g),
                  {static_cast<std::int64_t>(g)});
    mats.push_back(it->second);
  }
  for (const auto& [g, m] : matrices)
    if (!std::binary_search(domain.begin(), domain.end(), g))
      throw Error(ErrorKind::InvalidInput,
                  "matrix given for element " + std::to_string(g) + " outside the domain",
                  {static_cast<std::int64_t>(g)});
  return UnitaryRep(std::move(group), std::move(domain), std::move(mats), std::move(label));
}

const CMatrix& UnitaryRep::operator()(std::size_t g) const {
  if (!contains(g))
    throw Error(ErrorKind::MissingElement,
                "element " + std::to_string(g) + " outside the representation domain",
                {static_cast<std::int64_t>(g)});
  return matrices_[static_cast<std::size_t>(slot_[g])];
}

ValidationReport validate_rep(const UnitaryRep& rep, double tol) {
  ValidationReport report;
  const FiniteGroup& g = *rep.group();
  for (std::size_t a : rep.domain()) {
    for (std::size_t b : rep.domain()) {
      const std::size_t ab = g.mul(a, b);
      if (!rep.contains(ab))
        throw Error(ErrorKind::NotSubgroup, "domain is not closed under products",
                    {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
      const double d = max_abs_diff(rep(ab), rep(a) * rep(b));
      if (d > report.homomorphism_defect) {
        report.homomorphism_defect = d;
        report.witness = {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)};
      }
    }
  }
  const CMatrix eye = CMatrix::Identity(rep.dim(), rep.dim());
  report.unitarity_defect = max_abs_diff(rep(FiniteGroup::identity()), eye);
  for (std::size_t a : rep.domain())
    report.unitarity_defect = std::max(report.unitarity_defect, unitarity_defect(rep(a)));
  report.passed = report.homomorphism_defect <= tol && report.unitarity_defect <= tol;
  return report;
}

std::vector<Complex> character(const UnitaryRep& rep) {
  std::vector<Complex> chi;
  chi.reserve(rep.domain().size());
  for (const CMatrix& m : rep.matrices()) chi.push_back(m.trace());
  return chi;
}

double character_norm(const UnitaryRep& rep) {
  double total = 0.0;
  for (const Complex& c : character(rep)) total += std::norm(c);
  return total / static_cast<double>(rep.domain().size());
}

bool irreducible(const UnitaryRep& rep, double tol) {
  return std::abs(character_norm(rep) - 1.0) <= tol;
}

bool equivalent(const UnitaryRep& a, const UnitaryRep& b, double tol) {
  if (a.domain() != b.domain())
    throw Error(ErrorKind::DomainMismatch, "representations live on different domains");
  if (a.dim() != b.dim()) return false;
  const auto ca = character(a), cb = character(b);
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (std::abs(ca[i] - cb[i]) > tol) return false;
  return true;
}

UnitaryRep conjugate_rep(const UnitaryRep& rep, std::size_t g) {
  const FiniteGroup& group = *rep.group();
  std::vector<CMatrix> mats;
  mats.reserve(rep.domain().size());
  for (std::size_t k : rep.domain()) {
    const std::size_t c = group.conjugate(k, g);
    if (!rep.contains(c))
      throw Error(ErrorKind::NotNormal,
                  "conjugation by " + std::to_string(g) + " leaves the domain at " +
                      std::to_string(k),
                  {static_cast<std::int64_t>(g), static_cast<std::int64_t>(k)});
    mats.push_back(rep(c));
  }
  std::string label = rep.label().empty() ? "" : rep.label() + "^" + std::to_string(g);
  return UnitaryRep(rep.group(), rep.domain(), std::move(mats), std::move(label));
}

std::size_t DualObject::position(const std::string& label) const {
  for (std::size_t i = 0; i < irreps.size(); ++i)
    if (irreps[i].label() == label) return i;
  if (!label.empty() && std::all_of(label.begin(), label.end(), ::isdigit)) {
    const std::size_t i = std::stoul(label);
    if (i < irreps.size()) return i;
  }
  throw Error(ErrorKind::UnknownName, "no irreducible representation named '" + label + "'");
}

const UnitaryRep& DualObject::find(const std::string& label) const {
  return irreps[position(label)];
}

DualObject make_dual(CompactSubgroup subgroup, std::vector<UnitaryRep> irreps) {
  std::size_t dim_sq = 0;
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    const UnitaryRep& r = irreps[i];
    if (r.domain() != subgroup.members())
      throw Error(ErrorKind::DomainMismatch,
                  "irrep " + std::to_string(i) + " is not defined on the subgroup",
                  {static_cast<std::int64_t>(i)});
    const ValidationReport v = validate_rep(r);
    if (!v.passed)
      throw Error(ErrorKind::InvalidInput,
                  "irrep " + std::to_string(i) + " is not a unitary representation",
                  {static_cast<std::int64_t>(i)});
    if (!irreducible(r))
      throw Error(ErrorKind::NotIrreducible,
                  "irrep " + std::to_string(i) + " has character norm " +
                      std::to_string(character_norm(r)),
                  {static_cast<std::int64_t>(i)});
    for (std::size_t j = 0; j < i; ++j)
      if (equivalent(irreps[j], r))
        throw Error(ErrorKind::DuplicateIrrep,
                    "irreps " + std::to_string(j) + " and " + std::to_string(i) +
                        " are equivalent",
                    {static_cast<std::int64_t>(j), static_cast<std::int64_t>(i)});
    dim_sq += r.dim() * r.dim();
  }
  if (dim_sq != subgroup.size())
    throw Error(ErrorKind::IncompleteDual,
                "sum of squared dimensions is " + std::to_string(dim_sq) + ", expected " +
                    std::to_string(subgroup.size()),
                {static_cast<std::int64_t>(dim_sq), static_cast<std::int64_t>(subgroup.size())});
  return DualObject{std::move(subgroup), std::move(irreps)};
}

Complex schur_K_integral(const UnitaryRep& sigma, const UnitaryRep& tau, std::size_t i,
                         std::size_t j, std::size_t l, std::size_t m) {
  if (i >= sigma.dim() || j >= sigma.dim() || l >= tau.dim() || m >= tau.dim())
    throw Error(ErrorKind::IndexOutOfRange, "Schur index outside the dimensions",
                {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j),
                 static_cast<std::int64_t>(l), static_cast<std::int64_t>(m)});
  if (sigma.domain() != tau.domain())
    throw Error(ErrorKind::DomainMismatch, "representations live on different domains");
  const double nu = 1.0 / static_cast<double>(sigma.domain().size());
  Complex total{};
  for (std::size_t k : sigma.domain())
    total += sigma(k)(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) *
             std::conj(tau(k)(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(m)));
  return nu * total;
}

}  // namespace indh
