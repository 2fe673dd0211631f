#include "indh/group.hpp"

#include <algorithm>
#include <set>

#include "indh/error.hpp"

namespace indh {

FiniteGroup FiniteGroup::from_table(CayleyTable table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "empty Cayley table");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw Error(ErrorKind::InvalidInput,
                  "row " + std::to_string(a) + " has " +
                      std::to_string(table[a].size()) + " entries, expected " +
                      std::to_string(n),
                  {static_cast<std::int64_t>(a)});
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] >= n)
        throw Error(ErrorKind::InvalidInput,
                    "entry (" + std::to_string(a) + "," + std::to_string(b) +
                        ") out of range",
                    {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
  }

  for (std::size_t a = 0; a < n; ++a) {
    if (table[0][a] != a || table[a][0] != a)
      throw Error(ErrorKind::NoIdentity,
                  "element 0 is not a two-sided identity at " + std::to_string(a),
                  {static_cast<std::int64_t>(a)});
  }

  std::vector<std::size_t> inverse(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] == 0 && table[b][a] == 0) {
        inverse[a] = b;
        break;
      }
    }
    if (inverse[a] == n)
      throw Error(ErrorKind::NoInverse,
                  "element " + std::to_string(a) + " has no two-sided inverse",
                  {static_cast<std::int64_t>(a)});
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorKind::NonAssociative,
                      "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                          std::to_string(c) + " != " + std::to_string(a) + "*(" +
                          std::to_string(b) + "*" + std::to_string(c) + ")",
                      {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
                       static_cast<std::int64_t>(c)});

  FiniteGroup g;
  g.table_ = std::move(table);
  g.inverse_ = std::move(inverse);
  g.name_ = std::move(name);
  return g;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t power = a;
  std::size_t k = 1;
  while (power != identity()) {
    power = mul(power, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

LCGroup LCGroup::finite(FiniteGroup g) {
  LCGroup out;
  out.kind_ = Kind::Finite;
  out.finite_ = std::make_shared<const FiniteGroup>(std::move(g));
  return out;
}

LCGroup LCGroup::z_cross(FiniteGroup f) {
  LCGroup out;
  out.kind_ = Kind::ZCrossF;
  out.finite_ = std::make_shared<const FiniteGroup>(std::move(f));
  return out;
}

Element LCGroup::mul(Element a, Element b) const {
  return {a.shift + b.shift, finite_->mul(a.index, b.index)};
}

Element LCGroup::inv(Element a) const { return {-a.shift, finite_->inv(a.index)}; }

std::size_t LCGroup::order() const {
  if (!is_finite()) throw Error(ErrorKind::Unsupported, "Z x F has infinite order");
  return finite_->order();
}

std::vector<Element> LCGroup::elements() const {
  const std::size_t n = order();
  std::vector<Element> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = {0, i};
  return out;
}

bool LCGroup::contains(Element g) const {
  if (g.index >= finite_->order()) return false;
  return is_finite() ? g.shift == 0 : true;
}

std::string LCGroup::name() const {
  return is_finite() ? finite_->name() : "Zx" + finite_->name();
}

bool LCGroup::same_as(const LCGroup& other) const {
  if (this == &other) return true;
  return kind_ == other.kind_ &&
         (finite_ == other.finite_ || finite_->table() == other.finite_->table());
}

GroupPtr make_group(LCGroup g) { return std::make_shared<const LCGroup>(std::move(g)); }

CompactSubgroup CompactSubgroup::check_normal(GroupPtr group,
                                              std::vector<std::size_t> members,
                                              std::string name) {
  const FiniteGroup& f = group->finite_part();
  const std::size_t n = f.order();
  if (members.empty()) throw Error(ErrorKind::NotSubgroup, "empty subset");
  std::vector<std::ptrdiff_t> slot(n, -1);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= n)
      throw Error(ErrorKind::NotSubgroup,
                  "element " + std::to_string(members[i]) + " is not in the group",
                  {static_cast<std::int64_t>(members[i])});
    slot[members[i]] = static_cast<std::ptrdiff_t>(i);
  }
  if (slot[FiniteGroup::identity()] < 0)
    throw Error(ErrorKind::NotSubgroup, "identity missing", {0});
  for (std::size_t a : members) {
    if (slot[f.inv(a)] < 0)
      throw Error(ErrorKind::NotSubgroup,
                  "inverse of " + std::to_string(a) + " missing",
                  {static_cast<std::int64_t>(a)});
    for (std::size_t b : members)
      if (slot[f.mul(a, b)] < 0)
        throw Error(ErrorKind::NotSubgroup,
                    "product " + std::to_string(a) + "*" + std::to_string(b) +
                        " leaves the subset",
                    {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
  }
  // Z is central in Z × F, so normality reduces to normality in F.
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t k : members)
      if (slot[f.mul(f.mul(g, k), f.inv(g))] < 0)
        throw Error(ErrorKind::NotNormal,
                    "g k g^-1 not in K for g=" + std::to_string(g) +
                        ", k=" + std::to_string(k),
                    {static_cast<std::int64_t>(g), static_cast<std::int64_t>(k)});

  CompactSubgroup out;
  out.group_ = std::move(group);
  out.members_ = std::move(members);
  out.slot_ = std::move(slot);
  out.name_ = std::move(name);
  return out;
}

CosetSpace::CosetSpace(CompactSubgroup subgroup) : subgroup_(std::move(subgroup)) {
  const FiniteGroup& f = subgroup_.finite_part();
  const std::size_t n = f.order();
  coset_of_.assign(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    if (coset_of_[g] != n) continue;
    const std::size_t id = reps_.size();
    reps_.push_back(g);
    for (std::size_t k : subgroup_.members()) coset_of_[f.mul(g, k)] = id;
  }
}

CosetSpace::Factor CosetSpace::factor(Element g) const {
  const FiniteGroup& f = subgroup_.finite_part();
  const std::size_t c = coset_of_[g.index];
  return {{g.shift, c}, f.mul(f.inv(reps_[c]), g.index)};
}

Element CosetSpace::assemble(CosetId c, std::size_t k) const {
  return {c.shift, subgroup_.finite_part().mul(reps_[c.index], k)};
}

std::vector<CosetId> CosetSpace::cosets() const {
  std::vector<CosetId> out(reps_.size());
  for (std::size_t c = 0; c < reps_.size(); ++c) out[c] = {0, c};
  return out;
}

std::vector<std::size_t> CosetSpace::action(Element g) const {
  const FiniteGroup& f = subgroup_.finite_part();
  std::vector<std::size_t> out(reps_.size());
  for (std::size_t c = 0; c < reps_.size(); ++c)
    out[c] = coset_of_[f.mul(g.index, reps_[c])];
  return out;
}

HaarData haar_data(const CosetSpace& cosets) {
  HaarData h;
  h.nu_point = cosets.subgroup().haar_mass();
  h.mu_coset = cosets.mu_mass();
  h.lambda_point = h.mu_coset * h.nu_point;
  if (cosets.group().is_finite())
    h.total_lambda = h.mu_coset * static_cast<double>(cosets.finite_count());
  return h;
}

Complex GroupFunction::operator()(Element g) const {
  auto it = values.find(g);
  return it == values.end() ? background : it->second;
}

WeilResult weil_integrate(const GroupFunction& f, const CosetSpace& cosets) {
  const LCGroup& group = cosets.group();
  const CompactSubgroup& k = cosets.subgroup();
  const HaarData haar = haar_data(cosets);
  for (const auto& [g, value] : f.values)
    if (!group.contains(g))
      throw Error(ErrorKind::InvalidInput, "function defined off the group",
                  {g.shift, static_cast<std::int64_t>(g.index)});

  WeilResult out{};
  if (group.is_finite()) {
    for (const Element& g : group.elements()) out.direct += haar.lambda_point * f(g);
    for (const CosetId& c : cosets.cosets()) {
      Complex inner{};
      for (std::size_t kk : k.members()) inner += haar.nu_point * f(cosets.assemble(c, kk));
      out.iterated += haar.mu_coset * inner;
    }
    return out;
  }

  if (f.background != Complex{})
    throw Error(ErrorKind::InfiniteSupport,
                "nonzero background value on a Z x F group");
  std::set<CosetId> touched;
  for (const auto& [g, value] : f.values) {
    out.direct += haar.lambda_point * value;
    touched.insert(cosets.coset_of(g));
  }
  for (const CosetId& c : touched) {
    Complex inner{};
    for (std::size_t kk : k.members()) inner += haar.nu_point * f(cosets.assemble(c, kk));
    out.iterated += haar.mu_coset * inner;
  }
  return out;
}

}  // namespace indh
