#include "indh/builtins.hpp"

#include <algorithm>
#include <numeric>

#include "indh/error.hpp"

namespace indh {

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "cyclic group of order 0");
  CayleyTable t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup::from_table(std::move(t), "Z" + std::to_string(n));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "dihedral group needs n >= 1");
  const std::size_t order = 2 * n;
  CayleyTable t(order, std::vector<std::size_t>(order));
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x % n, b = x / n;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t c = y % n, d = y / n;
      const std::size_t rot = b == 0 ? (a + c) % n : (a + n - c) % n;
      t[x][y] = rot + n * ((b + d) % 2);
    }
  }
  return FiniteGroup::from_table(std::move(t), "D" + std::to_string(n));
}

std::vector<std::vector<std::size_t>> permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n < 1 || n > 5) throw Error(ErrorKind::InvalidInput, "symmetric group needs 1 <= n <= 5");
  const auto perms = permutations(n);
  const std::size_t order = perms.size();
  auto index_of = [&](const std::vector<std::size_t>& p) {
    return static_cast<std::size_t>(
        std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  CayleyTable t(order, std::vector<std::size_t>(order));
  std::vector<std::size_t> comp(n);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];
      t[a][b] = index_of(comp);
    }
  return FiniteGroup::from_table(std::move(t), "S" + std::to_string(n));
}

CMatrix quaternion_matrix(std::size_t index) {
  // a + b i + c j + d k ↦ [[a + b i, c + d i], [-c + d i, a - b i]]
  static const double coeffs[8][4] = {{1, 0, 0, 0},  {-1, 0, 0, 0}, {0, 1, 0, 0},
                                      {0, -1, 0, 0}, {0, 0, 1, 0},  {0, 0, -1, 0},
                                      {0, 0, 0, 1},  {0, 0, 0, -1}};
  const double* q = coeffs[index];
  CMatrix m(2, 2);
  m << Complex(q[0], q[1]), Complex(q[2], q[3]), Complex(-q[2], q[3]), Complex(q[0], -q[1]);
  return m;
}

FiniteGroup quaternion_group() {
  std::vector<CMatrix> units;
  for (std::size_t i = 0; i < 8; ++i) units.push_back(quaternion_matrix(i));
  CayleyTable t(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      const CMatrix prod = units[a] * units[b];
      for (std::size_t c = 0; c < 8; ++c)
        if (max_abs_diff(prod, units[c]) < 1e-12) t[a][b] = c;
    }
  return FiniteGroup::from_table(std::move(t), "Q8");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order();
  CayleyTable t(na * nb, std::vector<std::size_t>(na * nb));
  for (std::size_t x = 0; x < na * nb; ++x)
    for (std::size_t y = 0; y < na * nb; ++y)
      t[x][y] = a.mul(x % na, y % na) + na * b.mul(x / na, y / na);
  FiniteGroup g = FiniteGroup::from_table(std::move(t), a.name() + "x" + b.name());
  std::vector<std::size_t> factors;
  auto append = [&](const FiniteGroup& h) {
    if (h.factor_orders().empty())
      factors.push_back(h.order());
    else
      factors.insert(factors.end(), h.factor_orders().begin(), h.factor_orders().end());
  };
  append(a);
  append(b);
  g.set_factor_orders(std::move(factors));
  return g;
}

namespace {

FiniteGroup single_builtin(const std::string& token) {
  if (token == "Q8") return quaternion_group();
  if (token.size() >= 2) {
    const char head = token[0];
    const std::string tail = token.substr(1);
    if (std::all_of(tail.begin(), tail.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        tail.size() <= 4) {
      const std::size_t n = std::stoul(tail);
      switch (head) {
        case 'Z':
        case 'C':
          if (n >= 1) return cyclic_group(n);
          break;
        case 'D':
          if (n >= 1) return dihedral_group(n);
          break;
        case 'S':
          if (n >= 1 && n <= 5) return symmetric_group(n);
          break;
        default:
          break;
      }
    }
  }
  throw Error(ErrorKind::UnknownName, "unknown builtin group '" + token + "'");
}

std::vector<std::string> split_factors(const std::string& name) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= name.size()) {
    const std::size_t pos = name.find('x', start);
    out.push_back(name.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

FiniteGroup builtin_finite_group(const std::string& name) {
  const auto tokens = split_factors(name);
  if (tokens.empty() || tokens.front().empty())
    throw Error(ErrorKind::UnknownName, "empty group name");
  FiniteGroup g = single_builtin(tokens.front());
  for (std::size_t i = 1; i < tokens.size(); ++i) g = direct_product(g, single_builtin(tokens[i]));
  return g;
}

LCGroup builtin_group(const std::string& name) {
  if (name.rfind("Zx", 0) == 0) return LCGroup::z_cross(builtin_finite_group(name.substr(2)));
  return LCGroup::finite(builtin_finite_group(name));
}

}  // namespace indh
