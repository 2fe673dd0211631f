#include "indh/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "indh/error.hpp"

namespace indh {

namespace {

struct NamedIrrep {
  std::string label;
  std::vector<CMatrix> matrices;  // indexed by element of the factor group
};

CMatrix scalar(Complex c) {
  CMatrix m(1, 1);
  m(0, 0) = c;
  return m;
}

std::vector<NamedIrrep> cyclic_irreps(std::size_t n) {
  std::vector<NamedIrrep> out;
  for (std::size_t k = 0; k < n; ++k) {
    NamedIrrep r;
    if (k == 0)
      r.label = "trivial";
    else if (n == 2)
      r.label = "sign";
    else if (n == 3)
      r.label = k == 1 ? "omega" : "omegabar";
    else
      r.label = "chi" + std::to_string(k);
    for (std::size_t a = 0; a < n; ++a)
      r.matrices.push_back(scalar(root_of_unity(static_cast<long long>(k * a),
                                                static_cast<long long>(n))));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<NamedIrrep> dihedral_irreps(std::size_t n) {
  const std::size_t order = 2 * n;
  std::vector<NamedIrrep> out;
  auto one_dim = [&](const std::string& label, double r_value, double s_value) {
    NamedIrrep r{label, {}};
    for (std::size_t x = 0; x < order; ++x) {
      const std::size_t a = x % n, b = x / n;
      const double v = std::pow(r_value, static_cast<double>(a)) *
                       std::pow(s_value, static_cast<double>(b));
      r.matrices.push_back(scalar(v));
    }
    out.push_back(std::move(r));
  };
  one_dim("trivial", 1.0, 1.0);
  one_dim("sign", 1.0, -1.0);
  if (n % 2 == 0) {
    one_dim("rsign", -1.0, 1.0);
    one_dim("rsign_sign", -1.0, -1.0);
  }
  CMatrix swap(2, 2);
  swap << 0.0, 1.0, 1.0, 0.0;
  for (std::size_t k = 1; 2 * k < n; ++k) {
    NamedIrrep r{"rho" + std::to_string(k), {}};
    for (std::size_t x = 0; x < order; ++x) {
      const std::size_t a = x % n, b = x / n;
      CMatrix rot = CMatrix::Zero(2, 2);
      rot(0, 0) = root_of_unity(static_cast<long long>(k * a), static_cast<long long>(n));
      rot(1, 1) = std::conj(rot(0, 0));
      r.matrices.push_back(b == 0 ? rot : CMatrix(rot * swap));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<NamedIrrep> quaternion_irreps() {
  // One-dimensional characters factor through Q8/{±1}; they are fixed by the
  // values on i and j. Indices: 1, -1, i, -i, j, -j, k, -k.
  std::vector<NamedIrrep> out;
  auto one_dim = [&](const std::string& label, double on_i, double on_j) {
    const double values[8] = {1, 1, on_i, on_i, on_j, on_j, on_i * on_j, on_i * on_j};
    NamedIrrep r{label, {}};
    for (double v : values) r.matrices.push_back(scalar(v));
    out.push_back(std::move(r));
  };
  one_dim("trivial", 1, 1);
  one_dim("chi_i", 1, -1);
  one_dim("chi_j", -1, 1);
  one_dim("chi_k", -1, -1);
  NamedIrrep spin{"spin", {}};
  for (std::size_t x = 0; x < 8; ++x) spin.matrices.push_back(quaternion_matrix(x));
  out.push_back(std::move(spin));
  return out;
}

CMatrix permutation_matrix(const std::vector<std::size_t>& p) {
  const std::size_t n = p.size();
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t x = 0; x < n; ++x) m(static_cast<Eigen::Index>(p[x]), static_cast<Eigen::Index>(x)) = 1.0;
  return m;
}

CMatrix standard_matrix(const std::vector<std::size_t>& p) {
  const Eigen::MatrixXd b = helmert_basis(p.size());
  const CMatrix bc = b.cast<Complex>();
  return bc * permutation_matrix(p) * bc.transpose();
}

int permutation_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

std::vector<NamedIrrep> symmetric_irreps(std::size_t n) {
  const auto perms = permutations(n);
  std::vector<NamedIrrep> out;
  NamedIrrep triv{"trivial", {}}, sign{"sign", {}};
  for (const auto& p : perms) {
    triv.matrices.push_back(scalar(1.0));
    sign.matrices.push_back(scalar(permutation_sign(p)));
  }
  out.push_back(std::move(triv));
  if (n == 1) return out;
  out.push_back(std::move(sign));
  if (n == 2) return out;
  NamedIrrep standard{"standard", {}};
  for (const auto& p : perms) standard.matrices.push_back(standard_matrix(p));
  if (n == 3) {
    out.push_back(std::move(standard));
    return out;
  }
  if (n != 4)
    throw Error(ErrorKind::UnknownName, "no catalog dual object for S" + std::to_string(n));
  NamedIrrep standard_sign{"standard_sign", {}};
  for (std::size_t i = 0; i < perms.size(); ++i)
    standard_sign.matrices.push_back(standard.matrices[i] *
                                     static_cast<double>(permutation_sign(perms[i])));
  // S4 acts on the three pairings {01|23}, {02|13}, {03|12}; composing with
  // the standard representation of S3 gives the 2-dimensional irrep.
  const std::size_t pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  auto pairing_of = [&](std::size_t a, std::size_t b) -> std::size_t {
    for (std::size_t q = 0; q < 3; ++q) {
      const auto& pr = pairings[q];
      if ((pr[0] == a && pr[1] == b) || (pr[0] == b && pr[1] == a) ||
          (pr[2] == a && pr[3] == b) || (pr[2] == b && pr[3] == a))
        return q;
    }
    return 3;
  };
  NamedIrrep two{"two", {}};
  for (const auto& p : perms) {
    std::vector<std::size_t> induced(3);
    for (std::size_t q = 0; q < 3; ++q) induced[q] = pairing_of(p[pairings[q][0]], p[pairings[q][1]]);
    two.matrices.push_back(standard_matrix(induced));
  }
  out.push_back(std::move(standard));
  out.push_back(std::move(standard_sign));
  out.push_back(std::move(two));
  return out;
}

std::vector<NamedIrrep> token_irreps(const std::string& token) {
  if (token == "Q8") return quaternion_irreps();
  if (token.size() >= 2) {
    const std::size_t n = std::stoul(token.substr(1));
    switch (token[0]) {
      case 'Z':
      case 'C':
        return cyclic_irreps(n);
      case 'D':
        return dihedral_irreps(n);
      case 'S':
        return symmetric_irreps(n);
      default:
        break;
    }
  }
  throw Error(ErrorKind::UnknownName, "no catalog dual object for '" + token + "'");
}

std::vector<std::string> split_x(const std::string& name) {
  std::vector<std::string> out;
  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, 'x')) out.push_back(part);
  return out;
}

std::vector<std::size_t> closure(const FiniteGroup& g, const std::vector<std::size_t>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<std::size_t> members{FiniteGroup::identity()};
  in[FiniteGroup::identity()] = 1;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t s : gens) {
      const std::size_t x = g.mul(members[i], s);
      if (!in[x]) {
        in[x] = 1;
        members.push_back(x);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_normal_subset(const FiniteGroup& g, const std::vector<std::size_t>& members) {
  std::vector<char> in(g.order(), 0);
  for (std::size_t m : members) in[m] = 1;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t k : members)
      if (!in[g.mul(g.mul(x, k), g.inv(x))]) return false;
  return true;
}

/// Divisibility chains n1 | n2 | ... with product n, all ni > 1.
void abelian_types(std::size_t n, std::size_t min_factor, std::vector<std::size_t>& prefix,
                   std::vector<std::vector<std::size_t>>& out) {
  if (n == 1) {
    if (!prefix.empty()) out.push_back(prefix);
    return;
  }
  for (std::size_t f = std::max<std::size_t>(2, min_factor); f <= n; ++f) {
    if (n % f != 0) continue;
    if (!prefix.empty() && f % prefix.back() != 0) continue;
    prefix.push_back(f);
    abelian_types(n / f, f, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::string> catalog_names_of_order(std::size_t n) {
  std::vector<std::string> names;
  if (n == 1) return {"Z1"};
  std::vector<std::vector<std::size_t>> types;
  std::vector<std::size_t> prefix;
  abelian_types(n, 2, prefix, types);
  std::sort(types.begin(), types.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (const auto& t : types) {
    std::string name;
    for (std::size_t i = 0; i < t.size(); ++i) name += (i ? "xZ" : "Z") + std::to_string(t[i]);
    names.push_back(name);
  }
  if (n == 6) names.push_back("S3");
  if (n % 2 == 0 && n / 2 >= 3) names.push_back("D" + std::to_string(n / 2));
  if (n == 8) names.push_back("Q8");
  if (n == 24) names.push_back("S4");
  return names;
}

std::vector<std::size_t> greedy_generators(const FiniteGroup& h) {
  std::vector<std::size_t> elements(h.order());
  for (std::size_t i = 0; i < h.order(); ++i) elements[i] = i;
  std::stable_sort(elements.begin(), elements.end(), [&](std::size_t a, std::size_t b) {
    return h.element_order(a) > h.element_order(b);
  });
  std::vector<std::size_t> gens;
  std::vector<std::size_t> generated{FiniteGroup::identity()};
  for (std::size_t x : elements) {
    if (generated.size() == h.order()) break;
    if (std::binary_search(generated.begin(), generated.end(), x)) continue;
    gens.push_back(x);
    generated = closure(h, gens);
  }
  return gens;
}

}  // namespace

std::vector<UnitaryRep> builtin_irreps(const FiniteGroupPtr& group) {
  const auto tokens = split_x(group->name());
  if (tokens.empty()) throw Error(ErrorKind::UnknownName, "unnamed group");
  std::vector<std::vector<NamedIrrep>> factors;
  std::vector<std::size_t> orders;
  for (const auto& t : tokens) {
    factors.push_back(token_irreps(t));
    orders.push_back(factors.back().front().matrices.size());
  }
  std::size_t total = 1;
  for (std::size_t o : orders) total *= o;
  if (total != group->order())
    throw Error(ErrorKind::UnknownName, "group '" + group->name() + "' is not a catalog group");

  std::vector<std::size_t> domain(total);
  for (std::size_t x = 0; x < total; ++x) domain[x] = x;

  std::vector<UnitaryRep> out;
  std::vector<std::size_t> choice(factors.size(), 0);
  while (true) {
    std::string label;
    bool all_trivial = true;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const std::string& l = factors[f][choice[f]].label;
      label += (f ? "," : "") + l;
      all_trivial = all_trivial && l == "trivial";
    }
    if (factors.size() > 1) label = all_trivial ? "trivial" : "(" + label + ")";
    std::vector<CMatrix> mats;
    mats.reserve(total);
    for (std::size_t x = 0; x < total; ++x) {
      std::size_t rest = x;
      CMatrix m = CMatrix::Identity(1, 1);
      for (std::size_t f = 0; f < factors.size(); ++f) {
        const std::size_t coord = rest % orders[f];
        rest /= orders[f];
        m = kron(m, factors[f][choice[f]].matrices[coord]);
      }
      mats.push_back(std::move(m));
    }
    out.emplace_back(group, domain, std::move(mats), std::move(label));

    std::size_t f = factors.size();
    while (f > 0) {
      --f;
      if (++choice[f] < factors[f].size()) break;
      choice[f] = 0;
      if (f == 0) return out;
    }
  }
}

std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteGroup& h,
                                                         const CompactSubgroup& k) {
  if (h.order() != k.size()) return std::nullopt;
  const FiniteGroup& parent = k.finite_part();
  const std::vector<std::size_t> gens = greedy_generators(h);
  std::vector<std::vector<std::size_t>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::size_t ord = h.element_order(gens[i]);
    for (std::size_t x : k.members())
      if (parent.element_order(x) == ord) candidates[i].push_back(x);
    if (candidates[i].empty()) return std::nullopt;
  }

  const std::size_t none = parent.order();
  std::vector<std::size_t> images(gens.size());
  auto try_extend = [&]() -> std::optional<std::vector<std::size_t>> {
    std::vector<std::size_t> phi(h.order(), none);
    std::vector<char> used(parent.order(), 0);
    phi[FiniteGroup::identity()] = FiniteGroup::identity();
    used[FiniteGroup::identity()] = 1;
    std::vector<std::size_t> queue{FiniteGroup::identity()};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::size_t x = queue[q];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::size_t hx = h.mul(x, gens[i]);
        const std::size_t kx = parent.mul(phi[x], images[i]);
        if (phi[hx] == none) {
          if (used[kx]) return std::nullopt;
          phi[hx] = kx;
          used[kx] = 1;
          queue.push_back(hx);
        } else if (phi[hx] != kx) {
          return std::nullopt;
        }
      }
    }
    if (queue.size() != h.order()) return std::nullopt;
    return phi;
  };

  std::function<std::optional<std::vector<std::size_t>>(std::size_t)> search =
      [&](std::size_t depth) -> std::optional<std::vector<std::size_t>> {
    if (depth == gens.size()) return try_extend();
    for (std::size_t x : candidates[depth]) {
      images[depth] = x;
      if (auto found = search(depth + 1)) return found;
    }
    return std::nullopt;
  };
  return search(0);
}

namespace {

DualObject pull_back(const CompactSubgroup& k, const FiniteGroupPtr& h,
                     const std::vector<std::size_t>& phi) {
  std::vector<UnitaryRep> irreps;
  const FiniteGroupPtr& parent = k.group()->finite_ptr();
  for (const UnitaryRep& r : builtin_irreps(h)) {
    std::map<std::size_t, CMatrix> mats;
    for (std::size_t x = 0; x < h->order(); ++x) mats.emplace(phi[x], r(x));
    irreps.push_back(UnitaryRep::from_map(parent, k.members(), mats, r.label()));
  }
  return make_dual(k, std::move(irreps));
}

}  // namespace

DualObject dual_object(const CompactSubgroup& k) {
  const FiniteGroupPtr& parent = k.group()->finite_ptr();
  if (k.size() == parent->order()) {
    try {
      std::vector<std::size_t> phi(parent->order());
      for (std::size_t x = 0; x < phi.size(); ++x) phi[x] = x;
      return pull_back(k, parent, phi);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnknownName) throw;
    }
  }
  for (const std::string& name : catalog_names_of_order(k.size())) {
    auto h = std::make_shared<const FiniteGroup>(builtin_finite_group(name));
    if (auto phi = find_isomorphism(*h, k)) return pull_back(k, h, *phi);
  }
  throw Error(ErrorKind::UnknownName,
              "subgroup of order " + std::to_string(k.size()) +
                  " matches no catalog group; supply irreps explicitly");
}

DualObject dual_object(const CompactSubgroup& k, std::vector<UnitaryRep> candidates) {
  return make_dual(k, std::move(candidates));
}

std::vector<std::size_t> center(const FiniteGroup& g) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (std::size_t b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<std::vector<std::size_t>> small_subgroups(const FiniteGroup& g,
                                                      std::size_t max_generators) {
  std::set<std::vector<std::size_t>> found;
  found.insert({FiniteGroup::identity()});
  std::vector<std::vector<std::size_t>> frontier{{}};
  for (std::size_t depth = 1; depth <= max_generators; ++depth) {
    std::set<std::vector<std::size_t>> next;
    for (const auto& gens : frontier) {
      const std::size_t start = gens.empty() ? 1 : gens.back() + 1;
      for (std::size_t x = start; x < g.order(); ++x) {
        auto extended = gens;
        extended.push_back(x);
        auto members = closure(g, extended);
        if (found.insert(members).second || depth < max_generators) next.insert(extended);
      }
    }
    frontier.assign(next.begin(), next.end());
    if (frontier.size() > 200000) break;
  }
  return {found.begin(), found.end()};
}

CompactSubgroup named_subgroup(const GroupPtr& group, const std::string& name) {
  const FiniteGroup& f = group->finite_part();
  if (name == "trivial") return CompactSubgroup::check_normal(group, {0}, name);
  if (name == "whole" || name == "G" || name == "F") {
    std::vector<std::size_t> all(f.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return CompactSubgroup::check_normal(group, all, name);
  }
  if (name == "center") return CompactSubgroup::check_normal(group, center(f), name);
  if (name.rfind("factor", 0) == 0) {
    const std::size_t which = std::stoul(name.substr(6));
    const auto& orders = f.factor_orders();
    if (which >= orders.size())
      throw Error(ErrorKind::UnknownName, "group has no factor " + std::to_string(which));
    std::size_t stride = 1;
    for (std::size_t i = 0; i < which; ++i) stride *= orders[i];
    std::vector<std::size_t> members;
    for (std::size_t a = 0; a < orders[which]; ++a) members.push_back(a * stride);
    return CompactSubgroup::check_normal(group, members, name);
  }
  if (!name.empty() && (std::isdigit(static_cast<unsigned char>(name[0])) || name[0] == '[')) {
    std::vector<std::size_t> members;
    std::string cleaned;
    for (char c : name) cleaned += (c == '[' || c == ']') ? ' ' : (c == ',' ? ' ' : c);
    std::stringstream ss(cleaned);
    std::size_t v;
    while (ss >> v) members.push_back(v);
    if (!ss.eof())
      throw Error(ErrorKind::InvalidInput, "cannot parse subgroup list '" + name + "'");
    return CompactSubgroup::check_normal(group, members, name);
  }

  std::string type = name;
  if (name == "A3") type = "Z3";
  if (name == "V4") type = "Z2xZ2";
  FiniteGroup h = [&] {
    try {
      return builtin_finite_group(type);
    } catch (const Error&) {
      throw Error(ErrorKind::UnknownName, "unknown subgroup name '" + name + "'");
    }
  }();
  if (f.order() % h.order() != 0)
    throw Error(ErrorKind::UnknownName,
                "no subgroup '" + name + "' in " + group->name());
  for (std::size_t gens = 1; gens <= 3; ++gens) {
    for (const auto& members : small_subgroups(f, gens)) {
      if (members.size() != h.order() || !is_normal_subset(f, members)) continue;
      CompactSubgroup k = CompactSubgroup::check_normal(group, members, name);
      if (find_isomorphism(h, k)) return k;
    }
  }
  throw Error(ErrorKind::UnknownName,
              "no normal subgroup isomorphic to " + type + " in " + group->name());
}

std::vector<BuiltinPair> builtin_pairs() {
  return {
      {"S3", "A3"},      {"Z4", "Z2"},     {"D4", "center"},   {"S4", "V4"},
      {"S3xZ2", "S3"},   {"Q8", "center"}, {"D4", "Z4"},       {"Z6", "Z3"},
      {"Z6", "Z2"},      {"D3", "Z3"},     {"S3", "trivial"},  {"Z8", "Z4"},
      {"Z3", "whole"},   {"Z4", "whole"},  {"Z5", "whole"},    {"S3", "whole"},
      {"D4", "whole"},   {"Q8", "whole"},  {"S4", "whole"},
  };
}

std::vector<std::string> builtin_dual_groups() {
  return {"Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "D3", "D4", "Q8", "S3", "S4"};
}

std::vector<BuiltinPair> builtin_zcross_pairs() {
  return {{"ZxZ2", "whole"}, {"ZxS3", "A3"}, {"ZxZ4", "Z2"}, {"ZxD4", "center"}};
}

}  // namespace indh
