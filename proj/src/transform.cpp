#include "indh/transform.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "indh/error.hpp"

namespace indh {

namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

void check_atom(const CMatrix& a, std::size_t k, Element t) {
  if (static_cast<std::size_t>(a.rows()) != k || static_cast<std::size_t>(a.cols()) != k)
    throw Error(ErrorKind::DimensionMismatch,
                "atom is not " + std::to_string(k) + "x" + std::to_string(k),
                {t.shift, static_cast<std::int64_t>(t.index)});
}

CVector random_unit(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> normal;
  CVector v(ix(n));
  for (std::size_t i = 0; i < n; ++i) v(ix(i)) = Complex(normal(rng), normal(rng));
  return v / v.norm();
}

}  // namespace

double VectorMeasure::norm() const {
  double total = 0.0;
  for (const auto& [t, a] : atoms) total += operator_norm(a);
  return total;
}

void VectorMeasure::check() const {
  for (const auto& [t, a] : atoms) {
    if (!group->contains(t))
      throw Error(ErrorKind::InvalidInput, "atom off the group",
                  {t.shift, static_cast<std::int64_t>(t.index)});
    check_atom(a, algebra_dim, t);
  }
}

VectorMeasure combine(Complex a, const VectorMeasure& m, const VectorMeasure& n) {
  if (!m.group->same_as(*n.group))
    throw Error(ErrorKind::GroupMismatch, "measures live on different groups");
  if (m.algebra_dim != n.algebra_dim)
    throw Error(ErrorKind::DimensionMismatch, "measures take values in different algebras");
  VectorMeasure out{m.group, m.algebra_dim, {}};
  for (const auto& [t, v] : m.atoms) out.atoms[t] = a * v;
  for (const auto& [t, v] : n.atoms) {
    auto it = out.atoms.find(t);
    if (it == out.atoms.end())
      out.atoms.emplace(t, v);
    else
      it->second += v;
  }
  return out;
}

VectorMeasure DensityFunction::to_measure() const {
  VectorMeasure m{group, algebra_dim, {}};
  for (const auto& [t, v] : values) m.atoms.emplace(t, lambda * v);
  return m;
}

CoefficientMatrix CoefficientMatrix::zero(std::size_t dim, std::size_t algebra_dim) {
  CoefficientMatrix c;
  c.dim = dim;
  c.algebra_dim = algebra_dim;
  c.entries.assign(dim * dim, CMatrix::Zero(ix(algebra_dim), ix(algebra_dim)));
  return c;
}

CMatrix CoefficientMatrix::block() const {
  const std::size_t k = algebra_dim;
  CMatrix b(ix(dim * k), ix(dim * k));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) b.block(ix(i * k), ix(j * k), ix(k), ix(k)) = at(i, j);
  return b;
}

Eigen::MatrixXd CoefficientMatrix::entry_norms() const {
  Eigen::MatrixXd n(ix(dim), ix(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) n(ix(i), ix(j)) = operator_norm(at(i, j));
  return n;
}

CMatrix sesquilinear(const CoefficientMatrix& a, const CVector& u, const CVector& v) {
  if (static_cast<std::size_t>(u.size()) != a.dim || static_cast<std::size_t>(v.size()) != a.dim)
    throw Error(ErrorKind::DimensionMismatch, "vector length differs from the induced dimension");
  CMatrix out = CMatrix::Zero(ix(a.algebra_dim), ix(a.algebra_dim));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      const Complex w = u(ix(j)) * std::conj(v(ix(i)));
      if (w != Complex{}) out += w * a.at(i, j);
    }
  return out;
}

CoefficientMatrix fourier_stieltjes(const VectorMeasure& m, const InducedRep& rep) {
  if (!m.group->same_as(rep.group()))
    throw Error(ErrorKind::GroupMismatch, "measure and representation live on different groups");
  if (!rep.group().is_finite())
    throw Error(ErrorKind::Unsupported,
                "Z x F transforms need an explicit finite set of basis vectors");
  m.check();
  CoefficientMatrix out = CoefficientMatrix::zero(rep.dim(), m.algebra_dim);
  for (const auto& [t, a] : m.atoms) {
    const CMatrix& u = rep.op(t);
    for (std::size_t i = 0; i < out.dim; ++i)
      for (std::size_t j = 0; j < out.dim; ++j) {
        const Complex c = std::conj(u(ix(i), ix(j)));
        if (c != Complex{}) out.at(i, j) += c * a;
      }
  }
  return out;
}

CoefficientMatrix fourier_stieltjes(const VectorMeasure& m, const InducedRep& rep,
                                    const std::vector<BasisIndex>& basis) {
  if (!m.group->same_as(rep.group()))
    throw Error(ErrorKind::GroupMismatch, "measure and representation live on different groups");
  m.check();
  CoefficientMatrix out = CoefficientMatrix::zero(basis.size(), m.algebra_dim);
  for (const auto& [t, a] : m.atoms)
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const Complex c = std::conj(rep.coefficient(basis[i], basis[j], t));
        if (c != Complex{}) out.at(i, j) += c * a;
      }
  return out;
}

CoefficientMatrix fourier_function(const DensityFunction& f, const InducedRep& rep) {
  return fourier_stieltjes(f.to_measure(), rep);
}

FourierFamily fourier_family(const VectorMeasure& m, const std::vector<InducedRep>& reps) {
  FourierFamily phi;
  for (const InducedRep& r : reps)
    phi.entries.push_back({r.sigma().label(), r.sigma_dim(), fourier_stieltjes(m, r), true});
  return phi;
}

NormInterval sesquilinear_norm(const CoefficientMatrix& a, std::uint64_t seed,
                               std::size_t samples) {
  NormInterval out;
  if (a.dim == 0) {
    out.exact = true;
    return out;
  }
  if (a.algebra_dim == 1) {
    out.lower = out.upper = operator_norm(a.block());
    out.exact = true;
    return out;
  }
  out.upper = std::min(operator_norm(a.block()), operator_norm(a.entry_norms().cast<Complex>()));

  std::mt19937_64 rng(seed);
  double best = 0.0;
  CVector best_u, best_v;
  for (std::size_t n = 0; n < std::max<std::size_t>(samples, 1); ++n) {
    const CVector u = random_unit(rng, a.dim);
    const CVector v = random_unit(rng, a.dim);
    const double value = operator_norm(sesquilinear(a, u, v));
    if (value > best || best_u.size() == 0) {
      best = value;
      best_u = u;
      best_v = v;
    }
  }
  // Alternating ascent: fix the top singular pair (x, y) of Φ(u, v), then
  // maximize |y* Φ(u', v') x| over unit u', v' via the SVD of b_ij = y* a_ij x.
  for (int round = 0; round < 32; ++round) {
    Eigen::JacobiSVD<CMatrix> svd(sesquilinear(a, best_u, best_v),
                                  Eigen::ComputeFullU | Eigen::ComputeFullV);
    const CVector y = svd.matrixU().col(0), x = svd.matrixV().col(0);
    CMatrix b(ix(a.dim), ix(a.dim));
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j) b(ix(i), ix(j)) = y.dot(a.at(i, j) * x);
    Eigen::JacobiSVD<CMatrix> bsvd(b, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const CVector u = bsvd.matrixV().col(0);
    const CVector v = bsvd.matrixU().col(0);
    const double value = operator_norm(sesquilinear(a, u, v));
    if (value <= best * (1.0 + 1e-15)) break;
    best = value;
    best_u = u;
    best_v = v;
  }
  out.lower = best;
  return out;
}

NormInterval family_norm(const FourierFamily& phi, std::uint64_t seed, std::size_t samples) {
  NormInterval out;
  out.exact = true;
  bool any = false;
  std::size_t slot = 0;
  for (const FamilyEntry& e : phi.entries) {
    ++slot;
    if (!e.included) continue;
    any = true;
    const NormInterval n = sesquilinear_norm(e.matrix, seed + 0x9E3779B97F4A7C15ULL * slot, samples);
    out.lower = std::max(out.lower, n.lower);
    out.upper = std::max(out.upper, n.upper);
    out.exact = out.exact && n.exact;
  }
  if (!any) throw Error(ErrorKind::EmptyFamily, "family has no included sigma");
  return out;
}

double lp_norm(const DensityFunction& f, double p) {
  if (!(p >= 1.0)) throw Error(ErrorKind::InvalidP, "p must satisfy 1 <= p <= inf");
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& [t, v] : f.values) m = std::max(m, operator_norm(v));
    return m;
  }
  double total = 0.0;
  for (const auto& [t, v] : f.values) total += f.lambda * std::pow(operator_norm(v), p);
  return std::pow(total, 1.0 / p);
}

CMatrix transform_matrix(const CosetSpace& cosets, const DualObject& dual) {
  if (!cosets.group().is_finite())
    throw Error(ErrorKind::Unsupported, "transform_rank requires a finite group");
  const std::size_t n = cosets.group().order();
  std::vector<InducedRep> reps;
  std::size_t rows = 0;
  for (const UnitaryRep& s : dual.irreps) {
    reps.push_back(InducedRep::induce(cosets, s));
    rows += reps.back().dim() * reps.back().dim();
  }
  CMatrix out(ix(rows), ix(n));
  std::size_t row = 0;
  for (const InducedRep& r : reps) {
    const std::size_t d = r.dim();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j, ++row)
        for (std::size_t t = 0; t < n; ++t) out(ix(row), ix(t)) = std::conj(r.operators()[t](ix(i), ix(j)));
  }
  return out;
}

std::size_t transform_rank(const CosetSpace& cosets, const DualObject& dual) {
  return numerical_rank(transform_matrix(cosets, dual), kRankTol);
}

}  // namespace indh
