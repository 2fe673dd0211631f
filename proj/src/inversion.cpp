#include "indh/inversion.hpp"

#include <sstream>

#include "indh/error.hpp"

namespace indh {

namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

void require_reps(const std::vector<InducedRep>& reps) {
  if (reps.empty()) throw Error(ErrorKind::EmptyFamily, "no representations supplied");
  for (const InducedRep& r : reps) {
    if (!r.group().is_finite())
      throw Error(ErrorKind::Unsupported, "reconstruction requires a finite group");
    if (!r.group().same_as(reps.front().group()) ||
        r.subgroup().members() != reps.front().subgroup().members())
      throw Error(ErrorKind::GroupMismatch, "representations over different (G, K)");
  }
}

void require_density(const DensityFunction& f, const InducedRep& rep) {
  if (!f.group->same_as(rep.group()))
    throw Error(ErrorKind::GroupMismatch, "density and representations live on different groups");
}

DensityFunction empty_like(const InducedRep& rep, std::size_t k) {
  DensityFunction out;
  out.group = rep.subgroup().group();
  out.lambda = rep.subgroup().haar_mass();
  out.algebra_dim = k;
  for (const Element& t : rep.group().elements())
    out.values.emplace(t, CMatrix::Zero(ix(k), ix(k)));
  return out;
}

}  // namespace

std::vector<SigmaCoefficients> decompose(const FourierFamily& phi) {
  std::vector<SigmaCoefficients> out;
  for (const FamilyEntry& e : phi.entries)
    if (e.included) out.push_back({e.label, e.sigma_dim, e.matrix});
  return out;
}

CoefficientMatrix dec_series(const InducedRep& rep, const CoefficientMatrix& a) {
  const std::size_t n = rep.dim();
  if (a.dim != n)
    throw Error(ErrorKind::DimensionMismatch, "coefficient matrix does not match the induced rep");
  const double d = static_cast<double>(rep.sigma_dim());
  const double lambda = rep.subgroup().haar_mass();
  CoefficientMatrix out = CoefficientMatrix::zero(n, a.algebra_dim);
  // û_ij(σ)_pq = Σ_t λ conj(u_pq(t)) u_ij(t)
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Complex hat{};
          for (const CMatrix& u : rep.operators())
            hat += lambda * std::conj(u(ix(p), ix(q))) * u(ix(i), ix(j));
          if (hat != Complex{}) out.at(p, q) += d * hat * a.at(i, j);
        }
  return out;
}

DensityFunction direct_series(const FourierFamily& phi, const std::vector<InducedRep>& reps) {
  require_reps(reps);
  if (phi.entries.size() != reps.size())
    throw Error(ErrorKind::DimensionMismatch, "family and representation lists differ in length");
  const std::size_t k = phi.entries.empty() ? 1 : phi.entries.front().matrix.algebra_dim;
  DensityFunction out = empty_like(reps.front(), k);
  for (std::size_t e = 0; e < reps.size(); ++e) {
    const FamilyEntry& entry = phi.entries[e];
    if (!entry.included) continue;
    const InducedRep& rep = reps[e];
    if (entry.matrix.dim != rep.dim() || entry.matrix.algebra_dim != k)
      throw Error(ErrorKind::DimensionMismatch, "family entry does not match its representation",
                  {static_cast<std::int64_t>(e)});
    const double d = static_cast<double>(rep.sigma_dim());
    for (auto& [t, value] : out.values) {
      const CMatrix& u = rep.op(t);
      for (std::size_t i = 0; i < rep.dim(); ++i)
        for (std::size_t j = 0; j < rep.dim(); ++j) {
          const Complex c = u(ix(i), ix(j));
          if (c != Complex{}) value += d * c * entry.matrix.at(i, j);
        }
    }
  }
  return out;
}

DensityFunction difference(const DensityFunction& f, const DensityFunction& g) {
  DensityFunction out = f;
  for (const auto& [t, v] : g.values) {
    auto it = out.values.find(t);
    if (it == out.values.end())
      out.values.emplace(t, -v);
    else
      it->second -= v;
  }
  return out;
}

ReconstructionReport direct_reconstruction(const DensityFunction& f,
                                           const std::vector<InducedRep>& reps) {
  require_reps(reps);
  require_density(f, reps.front());
  FourierFamily phi;
  ReconstructionReport out;
  out.method = Method::Direct;
  for (const InducedRep& r : reps) {
    phi.entries.push_back({r.sigma().label(), r.sigma_dim(), fourier_function(f, r), true});
    out.sigma_used.push_back(r.sigma().label());
  }
  out.reconstruction = direct_series(phi, reps);
  out.coefficients = decompose(phi);
  out.residual = lp_norm(difference(f, out.reconstruction), 2.0);
  out.f_norm = lp_norm(f, 2.0);
  out.certified = out.residual <= kGramCertificate * out.f_norm;
  return out;
}

ReconstructionReport gram_corrected_series(const DensityFunction& f,
                                           const std::vector<InducedRep>& reps) {
  require_reps(reps);
  require_density(f, reps.front());
  const std::vector<Element> elements = reps.front().group().elements();
  const std::size_t n = elements.size();
  const std::size_t k = f.algebra_dim;
  const double lambda = reps.front().subgroup().haar_mass();

  std::size_t columns = 0;
  for (const InducedRep& r : reps) columns += r.dim() * r.dim();
  // phi(t, c) = u_ij^σ(t) for column c = (σ, i, j).
  CMatrix phi(ix(n), ix(columns));
  std::size_t c = 0;
  for (const InducedRep& r : reps)
    for (std::size_t i = 0; i < r.dim(); ++i)
      for (std::size_t j = 0; j < r.dim(); ++j, ++c)
        for (std::size_t t = 0; t < n; ++t) phi(ix(t), ix(c)) = r.operators()[t](ix(i), ix(j));

  // One scalar column per algebra entry (p, q).
  CMatrix values(ix(n), ix(k * k));
  for (std::size_t t = 0; t < n; ++t) {
    auto it = f.values.find(elements[t]);
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = 0; q < k; ++q)
        values(ix(t), ix(p * k + q)) = it == f.values.end() ? Complex{} : it->second(ix(p), ix(q));
  }
  for (const auto& [t, v] : f.values)
    if (!reps.front().group().contains(t))
      throw Error(ErrorKind::InvalidInput, "density defined off the group",
                  {t.shift, static_cast<std::int64_t>(t.index)});

  const CMatrix gram = lambda * (phi.adjoint() * phi);
  const CMatrix rhs = lambda * (phi.adjoint() * values);
  ReconstructionReport out;
  out.method = Method::Gram;
  out.gram_size = columns;
  const CMatrix x = hermitian_pseudo_solve(gram, rhs, kGramTol, &out.gram_rank);
  const CMatrix rec = phi * x;

  out.reconstruction = empty_like(reps.front(), k);
  for (std::size_t t = 0; t < n; ++t) {
    CMatrix& v = out.reconstruction.values.at(elements[t]);
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = 0; q < k; ++q) v(ix(p), ix(q)) = rec(ix(t), ix(p * k + q));
  }
  c = 0;
  for (const InducedRep& r : reps) {
    out.sigma_used.push_back(r.sigma().label());
    SigmaCoefficients sc{r.sigma().label(), r.sigma_dim(), CoefficientMatrix::zero(r.dim(), k)};
    const double d = static_cast<double>(r.sigma_dim());
    for (std::size_t i = 0; i < r.dim(); ++i)
      for (std::size_t j = 0; j < r.dim(); ++j, ++c)
        for (std::size_t p = 0; p < k; ++p)
          for (std::size_t q = 0; q < k; ++q)
            sc.a.at(i, j)(ix(p), ix(q)) = x(ix(c), ix(p * k + q)) / d;
    out.coefficients.push_back(std::move(sc));
  }
  out.residual = lp_norm(difference(f, out.reconstruction), 2.0);
  out.f_norm = lp_norm(f, 2.0);
  out.certified = out.residual <= kGramCertificate * out.f_norm;
  return out;
}

void require_certified(const ReconstructionReport& report) {
  if (report.certified) return;
  std::ostringstream msg;
  msg.precision(17);
  msg << "residual " << report.residual << " exceeds " << kGramCertificate << " * "
      << report.f_norm << " (Gram rank " << report.gram_rank << " of " << report.gram_size
      << ")";
  throw Error(ErrorKind::RankDeficient, msg.str(),
              {static_cast<std::int64_t>(report.gram_rank),
               static_cast<std::int64_t>(report.gram_size)});
}

double reconstruction_residual(const DensityFunction& f, Method method,
                               const std::vector<InducedRep>& reps) {
  return method == Method::Direct ? direct_reconstruction(f, reps).residual
                                  : gram_corrected_series(f, reps).residual;
}

std::vector<InducedRep> induce_all(const CosetSpace& cosets, const DualObject& dual) {
  std::vector<InducedRep> out;
  out.reserve(dual.irreps.size());
  for (const UnitaryRep& s : dual.irreps) out.push_back(InducedRep::induce(cosets, s));
  return out;
}

std::string to_string(Method m) { return m == Method::Direct ? "direct" : "gram"; }

}  // namespace indh
