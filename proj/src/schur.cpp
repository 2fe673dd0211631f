#include "indh/schur.hpp"

#include <map>
#include <optional>

#include "indh/error.hpp"

namespace indh {

namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

void require_same_base(const InducedRep& a, const InducedRep& b) {
  if (!a.group().same_as(b.group()) || a.subgroup().members() != b.subgroup().members())
    throw Error(ErrorKind::GroupMismatch, "induced reps over different (G, K)");
}

void require_finite(const InducedRep& rep, const char* what) {
  if (!rep.group().is_finite())
    throw Error(ErrorKind::Unsupported, std::string(what) + " requires a finite group");
}

void check_flat(const InducedRep& rep, std::size_t i, std::size_t j, std::size_t l,
                std::size_t m) {
  const std::size_t n = rep.dim();
  if (i >= n || j >= n || l >= n || m >= n)
    throw Error(ErrorKind::IndexOutOfRange, "tuple index outside the induced dimension",
                {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j),
                 static_cast<std::int64_t>(l), static_cast<std::int64_t>(m)});
}

/// Twisted reps σ^x for every x ∈ G and their pairwise K-level Schur tables.
class TwistCache {
 public:
  explicit TwistCache(const InducedRep& rep) : rep_(rep) {
    const std::size_t n = rep.group().order();
    twisted_.reserve(n);
    for (std::size_t x = 0; x < n; ++x) twisted_.push_back(conjugate_rep(rep.sigma(), x));
  }

  /// S(σ^x, σ^y)_{rs,pq}, flattened as ((r·d + s)·d + p)·d + q.
  const std::vector<Complex>& table(std::size_t x, std::size_t y) {
    auto it = tables_.find({x, y});
    if (it != tables_.end()) return it->second;
    const std::size_t d = rep_.sigma_dim();
    std::vector<Complex> t(d * d * d * d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s)
        for (std::size_t p = 0; p < d; ++p)
          for (std::size_t q = 0; q < d; ++q)
            t[((r * d + s) * d + p) * d + q] =
                schur_K_integral(twisted_[x], twisted_[y], r, s, p, q);
    return tables_.emplace(std::make_pair(x, y), std::move(t)).first->second;
  }

 private:
  const InducedRep& rep_;
  std::vector<UnitaryRep> twisted_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Complex>> tables_;
};

Complex c_sum(const InducedRep& rep, std::size_t i, std::size_t j, std::size_t l,
              std::size_t m, TwistCache* twist) {
  const CosetSpace& cosets = rep.cosets();
  const FiniteGroup& g = rep.group().finite_part();
  const std::size_t d = rep.sigma_dim();
  const BasisIndex bi = rep.basis(i), bj = rep.basis(j), bl = rep.basis(l), bm = rep.basis(m);
  const auto& reps = cosets.representatives();
  Complex total{};
  for (std::size_t t : reps) {
    const std::size_t tinv = g.inv(t);
    for (std::size_t gr : reps) {
      const std::size_t xg = g.mul(tinv, gr);
      const CVector aj = rep.basis_value(bj, {0, xg});
      const CVector ai = rep.basis_value(bi, {0, gr});
      for (std::size_t hr : reps) {
        const std::size_t xh = g.mul(tinv, hr);
        const CVector am = rep.basis_value(bm, {0, xh});
        const CVector al = rep.basis_value(bl, {0, hr});
        if (twist == nullptr) {
          for (std::size_t r = 0; r < d; ++r)
            for (std::size_t s = 0; s < d; ++s)
              total += aj(ix(s)) * std::conj(ai(ix(r))) * std::conj(am(ix(s))) * al(ix(r));
          continue;
        }
        const std::vector<Complex>& sk = twist->table(xg, xh);
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t s = 0; s < d; ++s) {
            const Complex left = aj(ix(s)) * std::conj(ai(ix(r)));
            if (left == Complex{}) continue;
            for (std::size_t p = 0; p < d; ++p)
              for (std::size_t q = 0; q < d; ++q)
                total += sk[((r * d + s) * d + p) * d + q] * left * std::conj(am(ix(q))) *
                         al(ix(p));
          }
      }
    }
  }
  return twist == nullptr ? total : static_cast<double>(d) * total;
}

}  // namespace

Complex schur_G_integral(const InducedRep& sigma, const InducedRep& tau, const BasisIndex& i,
                         const BasisIndex& j, const BasisIndex& l, const BasisIndex& m) {
  require_same_base(sigma, tau);
  sigma.check_index(i);
  sigma.check_index(j);
  tau.check_index(l);
  tau.check_index(m);
  const double lambda = sigma.subgroup().haar_mass();
  Complex total{};
  if (sigma.group().is_finite()) {
    for (const Element& t : sigma.group().elements())
      total += sigma.coefficient(i, j, t) * std::conj(tau.coefficient(l, m, t));
  } else {
    for (const Element& t : coefficient_support(sigma, i, j))
      total += sigma.coefficient(i, j, t) * std::conj(tau.coefficient(l, m, t));
  }
  return lambda * total;
}

Complex schur_G_integral(const InducedRep& sigma, const InducedRep& tau, std::size_t i,
                         std::size_t j, std::size_t l, std::size_t m) {
  return schur_G_integral(sigma, tau, sigma.basis(i), sigma.basis(j), tau.basis(l),
                          tau.basis(m));
}

Complex c_constant(const InducedRep& rep, std::size_t i, std::size_t j, std::size_t l,
                   std::size_t m) {
  require_finite(rep, "c_constant");
  check_flat(rep, i, j, l, m);
  TwistCache twist(rep);
  return c_sum(rep, i, j, l, m, &twist);
}

Complex c_constant_untwisted(const InducedRep& rep, std::size_t i, std::size_t j,
                             std::size_t l, std::size_t m) {
  require_finite(rep, "c_constant_untwisted");
  check_flat(rep, i, j, l, m);
  return c_sum(rep, i, j, l, m, nullptr);
}

SchurReport check_normalized_basis(const InducedRep& rep, double tol) {
  require_finite(rep, "check_normalized_basis");
  SchurReport out;
  out.sigma = out.tau = rep.sigma().label();
  const std::size_t n = rep.dim();
  const std::size_t d = rep.sigma_dim();
  out.dim = n;
  out.sigma_dim = d;
  out.provenance = n <= kTripleSumMaxDim ? CProvenance::TripleSum : CProvenance::BackFilled;

  // Integral table straight from the operator matrices: Σ_t λ U_t ⊗ conj(U_t).
  const double lambda = rep.subgroup().haar_mass();
  out.integrals.assign(n * n * n * n, Complex{});
  for (const CMatrix& u : rep.operators())
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Complex uij = u(ix(i), ix(j));
        if (uij == Complex{}) continue;
        for (std::size_t l = 0; l < n; ++l)
          for (std::size_t m = 0; m < n; ++m)
            out.integrals[((i * n + j) * n + l) * n + m] +=
                lambda * uij * std::conj(u(ix(l), ix(m)));
      }

  out.c.assign(out.integrals.size(), Complex{});
  std::optional<TwistCache> twist;
  if (out.provenance == CProvenance::TripleSum) twist.emplace(rep);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t m = 0; m < n; ++m) {
          const std::size_t at = ((i * n + j) * n + l) * n + m;
          const Complex integral = out.integrals[at];
          const Complex c = twist ? c_sum(rep, i, j, l, m, &*twist)
                                  : static_cast<double>(d) * integral;
          out.c[at] = c;
          const double target = (i == l && j == m) ? 1.0 : 0.0;
          const double dev = std::abs(c - target);
          if (dev > out.max_deviation) {
            out.max_deviation = dev;
            out.witness = {i, j, l, m};
          }
          const double th = std::abs(integral - c / static_cast<double>(d));
          if (th > out.theorem_deviation) {
            out.theorem_deviation = th;
            out.theorem_witness = {i, j, l, m};
          }
          const Complex mirror = out.integrals[((l * n + m) * n + i) * n + j];
          out.conjugate_symmetry_defect =
              std::max(out.conjugate_symmetry_defect, std::abs(integral - std::conj(mirror)));
        }
  out.passed = out.max_deviation <= tol;
  return out;
}

CrossReport cross_integrals(const InducedRep& sigma, const InducedRep& tau) {
  require_same_base(sigma, tau);
  require_finite(sigma, "cross_integrals");
  CrossReport out;
  out.sigma = sigma.sigma().label();
  out.tau = tau.sigma().label();
  out.g_conjugate = g_conjugate(sigma.sigma(), tau.sigma(), sigma.cosets());
  const std::size_t a = sigma.dim(), b = tau.dim();
  const double lambda = sigma.subgroup().haar_mass();
  std::vector<Complex> table(a * a * b * b, Complex{});
  for (std::size_t t = 0; t < sigma.operators().size(); ++t) {
    const CMatrix& u = sigma.operators()[t];
    const CMatrix& v = tau.operators()[t];
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < a; ++j) {
        const Complex uij = u(ix(i), ix(j));
        if (uij == Complex{}) continue;
        for (std::size_t l = 0; l < b; ++l)
          for (std::size_t m = 0; m < b; ++m)
            table[((i * a + j) * b + l) * b + m] += lambda * uij * std::conj(v(ix(l), ix(m)));
      }
  }
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j)
      for (std::size_t l = 0; l < b; ++l)
        for (std::size_t m = 0; m < b; ++m) {
          const double v = std::abs(table[((i * a + j) * b + l) * b + m]);
          if (v > out.max_abs) {
            out.max_abs = v;
            out.witness = {i, j, l, m};
          }
        }
  return out;
}

std::string to_string(CProvenance p) {
  return p == CProvenance::TripleSum ? "triple-sum" : "back-filled";
}

}  // namespace indh
