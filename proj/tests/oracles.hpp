#pragma once

// Independent reference computations. Nothing here calls into the library
// beyond its plain data types.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Table = std::vector<std::vector<std::size_t>>;

/// S_n by composing permutations, (p∘q)(x) = p(q(x)), lexicographic order.
inline Table permutation_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  Table t(perms.size(), std::vector<std::size_t>(perms.size()));
  std::vector<std::size_t> c(n);
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = index.at(c);
    }
  return t;
}

inline Table cyclic_table(std::size_t n) {
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

/// dim {X : X M_g = M_g X for all g}, via the null space of the stacked
/// operators X ↦ X M_g − M_g X acting on vec(X).
inline std::size_t commutant_dimension(const std::vector<Eigen::MatrixXcd>& mats) {
  const Eigen::Index d = mats.front().rows();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd normal = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (const auto& m : mats) {
    // vec(X M) = (Mᵀ ⊗ I) vec X, vec(M X) = (I ⊗ M) vec X
    Eigen::MatrixXcd a(d * d, d * d);
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index c = 0; c < d; ++c)
        a.block(r * d, c * d, d, d) = m(c, r) * id - (r == c ? m : Eigen::MatrixXcd::Zero(d, d));
    normal += a.adjoint() * a;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(normal);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  std::size_t zeros = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()(i)) < 1e-9 * scale) ++zeros;
  return zeros;
}

/// X̂(k) = (1/n) Σ_j x_j e^{−2πi jk/n}
inline std::vector<Complex> dft(const std::vector<Complex>& x) {
  const std::size_t n = x.size();
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex s{};
    for (std::size_t j = 0; j < n; ++j)
      s += x[j] * std::polar(1.0, -2.0 * M_PI * static_cast<double>(j * k % n) / static_cast<double>(n));
    out[k] = s / static_cast<double>(n);
  }
  return out;
}

/// Frobenius formula χ_Ind(g) = (1/|K|) Σ_{x ∈ G, x⁻¹gx ∈ K} χ_σ(x⁻¹ g x).
inline std::vector<Complex> induced_character(const Table& t, const std::vector<std::size_t>& k,
                                              const std::map<std::size_t, Complex>& chi) {
  const std::size_t n = t.size();
  std::vector<std::size_t> inv(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (t[a][b] == 0) inv[a] = b;
  std::vector<Complex> out(n);
  for (std::size_t g = 0; g < n; ++g) {
    Complex s{};
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t c = t[t[inv[x]][g]][x];
      auto it = chi.find(c);
      if (it != chi.end()) s += it->second;
    }
    out[g] = s / static_cast<double>(k.size());
  }
  return out;
}

inline Complex random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  return {re, n(rng)};
}

inline Eigen::MatrixXcd random_matrix(std::mt19937_64& rng, Eigen::Index k) {
  Eigen::MatrixXcd m(k, k);
  for (Eigen::Index r = 0; r < k; ++r)
    for (Eigen::Index c = 0; c < k; ++c) m(r, c) = random_complex(rng);
  return m;
}

}  // namespace oracle
