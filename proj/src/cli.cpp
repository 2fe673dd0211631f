#include "indh/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "indh/builtins.hpp"
#include "indh/catalog.hpp"
#include "indh/error.hpp"
#include "indh/induced.hpp"
#include "indh/inversion.hpp"
#include "indh/schur.hpp"
#include "indh/transform.hpp"

namespace indh::cli {

using io::Json;

namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

// ---------------------------------------------------------------- plumbing

struct Failure {
  std::string invariant;
  Json witness;
  std::string reproduce;
};

struct Report {
  Json body = Json::object();
  std::vector<Failure> failures;

  void fail(std::string invariant, Json witness, std::string reproduce) {
    failures.push_back({std::move(invariant), std::move(witness), std::move(reproduce)});
  }
};

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

std::string base_command(const RunConfig& c, const std::string& command) {
  std::string out = "indh " + command + " --group " + quote(c.group);
  if (!c.subgroup.empty()) out += " --subgroup " + quote(c.subgroup);
  if (!c.irreps.empty()) out += " --irreps " + quote(c.irreps);
  return out;
}

std::string seeded(const RunConfig& c, std::string cmd) {
  if (c.random > 0)
    cmd += " --random " + std::to_string(c.random) + " --seed " + std::to_string(c.seed) +
           " --algebra-dim " + std::to_string(c.algebra_dim);
  return cmd;
}

template <class F>
auto parallel_map(std::size_t n, F fn) -> std::vector<decltype(fn(std::size_t{0}))> {
  using T = decltype(fn(std::size_t{0}));
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(n, 1));
  auto work = [&](std::size_t w) {
    for (std::size_t i = w; i < n; i += workers) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

Json tuple_json(const Tuple& t) { return Json::array({t[0], t[1], t[2], t[3]}); }

Json witness_json(const std::vector<std::int64_t>& w) {
  Json out = Json::array();
  for (auto v : w) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------- context

struct Context {
  GroupPtr group;
  std::optional<CompactSubgroup> k;
  std::optional<CosetSpace> cosets;
  std::optional<DualObject> dual;
  std::vector<std::size_t> selected;  // positions into dual->irreps
};

Context load_context(const RunConfig& c, bool need_k, bool need_dual) {
  if (c.group.empty()) throw Error(ErrorKind::InvalidInput, "--group is required");
  Context ctx;
  io::GroupSpec spec = io::load_group(c.group);
  ctx.group = spec.group;
  if (!need_k && !need_dual) return ctx;
  if (!c.subgroup.empty())
    ctx.k = named_subgroup(ctx.group, c.subgroup);
  else if (spec.subgroup)
    ctx.k = CompactSubgroup::check_normal(ctx.group, *spec.subgroup, "given");
  else
    ctx.k = named_subgroup(ctx.group, "whole");
  ctx.cosets.emplace(*ctx.k);
  if (!need_dual) return ctx;
  if (!c.irreps.empty())
    ctx.dual = make_dual(*ctx.k, io::parse_dual(io::read_json_file(c.irreps),
                                                ctx.group->finite_ptr(), ctx.k->members()));
  else
    ctx.dual = dual_object(*ctx.k);
  if (c.sigma.empty()) {
    for (std::size_t i = 0; i < ctx.dual->irreps.size(); ++i) ctx.selected.push_back(i);
  } else {
    for (const std::string& s : c.sigma) ctx.selected.push_back(ctx.dual->position(s));
  }
  return ctx;
}

Json group_json(const LCGroup& g) {
  return Json{{"name", g.name()},
              {"kind", g.is_finite() ? "finite" : "z_cross"},
              {"order", g.is_finite() ? Json(g.order()) : Json(nullptr)},
              {"finitePartOrder", g.finite_part().order()},
              {"abelian", g.finite_part().is_abelian()}};
}

Json subgroup_json(const CompactSubgroup& k) {
  return Json{{"name", k.name()}, {"members", k.members()}, {"order", k.size()}};
}

Json haar_json(const CosetSpace& cosets) {
  const HaarData h = haar_data(cosets);
  return Json{{"nu", h.nu_point},
              {"mu", h.mu_coset},
              {"lambda", h.lambda_point},
              {"totalLambda", h.total_lambda ? Json(*h.total_lambda) : Json(nullptr)}};
}

// ---------------------------------------------------------------- random inputs

Complex random_complex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = u(rng);
  return {re, u(rng)};
}

CMatrix random_matrix(std::mt19937_64& rng, std::size_t k) {
  CMatrix m(ix(k), ix(k));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) m(ix(r), ix(c)) = random_complex(rng);
  return m;
}

std::vector<Element> random_support(std::mt19937_64& rng, const LCGroup& g) {
  if (g.is_finite()) return g.elements();
  std::uniform_int_distribution<std::int64_t> shift(-3, 3);
  std::uniform_int_distribution<std::size_t> index(0, g.finite_part().order() - 1);
  std::set<Element> pts;
  for (std::size_t n = 0; n < 2 * g.finite_part().order(); ++n) pts.insert({shift(rng), index(rng)});
  return {pts.begin(), pts.end()};
}

VectorMeasure random_measure(std::mt19937_64& rng, const GroupPtr& g, std::size_t k) {
  VectorMeasure m{g, k, {}};
  for (const Element& e : random_support(rng, *g)) m.atoms.emplace(e, random_matrix(rng, k));
  return m;
}

DensityFunction random_density(std::mt19937_64& rng, const GroupPtr& g, double lambda,
                               std::size_t k) {
  DensityFunction f{g, lambda, k, {}};
  for (const Element& e : random_support(rng, *g)) f.values.emplace(e, random_matrix(rng, k));
  return f;
}

GroupFunction random_function(std::mt19937_64& rng, const LCGroup& g) {
  GroupFunction f;
  for (const Element& e : random_support(rng, g)) f.values[e] = random_complex(rng);
  return f;
}

Json density_json(const DensityFunction& f) {
  Json values = Json::object();
  for (const auto& [t, v] : f.values)
    values[io::element_key(t, *f.group)] = f.algebra_dim == 1 ? io::to_json(v(0, 0)) : io::to_json(v);
  return values;
}

// ---------------------------------------------------------------- commands

Report validate_group(const RunConfig& c, std::ostream& log) {
  Context ctx = load_context(c, true, false);
  Report r;
  const LCGroup& g = *ctx.group;
  const FiniteGroup& f = g.finite_part();
  r.body["group"] = group_json(g);
  r.body["subgroup"] = subgroup_json(*ctx.k);
  if (c.verbosity > 0) log << "validate-group: " << g.name() << "\n";

  for (std::size_t a = 0; a < f.order(); ++a)
    for (std::size_t b = 0; b < f.order(); ++b)
      if (f.inv(f.mul(a, b)) != f.mul(f.inv(b), f.inv(a))) {
        r.fail("inverse_antihomomorphism", Json::array({a, b}),
               "indh validate-group --group " + quote(c.group));
        goto done_inverse;
      }
done_inverse:

  const CosetSpace& cosets = *ctx.cosets;
  Json reps = Json::array();
  for (std::size_t rep : cosets.representatives()) reps.push_back(io::element_key({0, rep}, g));
  r.body["cosets"] = Json{{"count", g.is_finite() ? Json(cosets.finite_count()) : Json(nullptr)},
                          {"finiteCount", cosets.finite_count()},
                          {"representatives", reps}};
  r.body["haar"] = haar_json(cosets);

  std::vector<int> hits(f.order(), 0);
  bool bijective = true;
  for (std::size_t ci = 0; ci < cosets.finite_count(); ++ci)
    for (std::size_t kk : ctx.k->members()) {
      const std::vector<std::int64_t> shifts =
          g.is_finite() ? std::vector<std::int64_t>{0} : std::vector<std::int64_t>{0, 5};
      for (std::int64_t shift : shifts) {
        const Element e = cosets.assemble({shift, ci}, kk);
        const auto back = cosets.factor(e);
        if (back.coset != CosetId{shift, ci} || back.k != kk) {
          bijective = false;
          r.fail("factorization_bijection", Json::array({shift, ci, kk}),
                 base_command(c, "validate-group"));
        }
        if (shift == 0) ++hits[e.index];
      }
    }
  for (std::size_t e = 0; e < f.order(); ++e)
    if (hits[e] != 1) {
      bijective = false;
      r.fail("factorization_bijection", Json::array({e, hits[e]}), base_command(c, "validate-group"));
    }
  bool invariant = true;
  for (std::size_t a = 0; a < f.order(); ++a) {
    auto perm = cosets.action({0, a});
    std::sort(perm.begin(), perm.end());
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != i) {
        invariant = false;
        r.fail("mu_invariance", Json::array({a}), base_command(c, "validate-group"));
        break;
      }
  }
  r.body["checks"] = Json{{"inverseAntihomomorphism", r.failures.empty()},
                          {"factorizationBijection", bijective},
                          {"muInvariance", invariant}};
  return r;
}

Report dual_command(const RunConfig& c, std::ostream& log) {
  Context ctx = load_context(c, true, true);
  Report r;
  const DualObject& dual = *ctx.dual;
  r.body["subgroup"] = subgroup_json(*ctx.k);
  if (c.verbosity > 0) log << "dual: " << dual.irreps.size() << " irreps\n";
  Json list = Json::array();
  std::size_t squares = 0;
  for (std::size_t i = 0; i < dual.irreps.size(); ++i) {
    const UnitaryRep& s = dual.irreps[i];
    const ValidationReport v = validate_rep(s, c.tol_structural);
    Json chi = Json::array();
    for (const Complex& x : character(s)) chi.push_back(io::to_json(x));
    list.push_back(Json{{"position", i},
                        {"label", s.label()},
                        {"dim", s.dim()},
                        {"character", chi},
                        {"characterNorm", character_norm(s)},
                        {"homomorphismDefect", v.homomorphism_defect},
                        {"unitarityDefect", v.unitarity_defect},
                        {"irreducible", irreducible(s, c.tol_decision)}});
    if (!v.passed)
      r.fail("unitary_representation", Json::array({i, witness_json(v.witness)}),
             base_command(c, "dual"));
    squares += s.dim() * s.dim();
  }
  r.body["irreps"] = list;
  r.body["sumSquaredDims"] = squares;
  r.body["complete"] = squares == ctx.k->size();

  double worst = 0.0;
  Json worst_at = Json::array();
  for (std::size_t a = 0; a < dual.irreps.size(); ++a)
    for (std::size_t b = 0; b < dual.irreps.size(); ++b) {
      const UnitaryRep& s = dual.irreps[a];
      const UnitaryRep& t = dual.irreps[b];
      for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
          for (std::size_t l = 0; l < t.dim(); ++l)
            for (std::size_t m = 0; m < t.dim(); ++m) {
              const double target =
                  (a == b && i == l && j == m) ? 1.0 / static_cast<double>(s.dim()) : 0.0;
              const double dev = std::abs(schur_K_integral(s, t, i, j, l, m) - target);
              if (dev > worst) {
                worst = dev;
                worst_at = Json::array({a, b, i, j, l, m});
              }
            }
    }
  r.body["schurK"] = Json{{"maxDeviation", worst}, {"witness", worst_at}};
  if (worst > c.tol_structural) r.fail("schur_K_orthogonality", worst_at, base_command(c, "dual"));
  return r;
}

Json induce_finite(const RunConfig& c, const InducedRep& rep, bool with_operators, Report& r) {
  const LCGroup& g = rep.group();
  const std::size_t n = g.order();
  double unitarity = 0.0, homomorphism = 0.0;
  Json hom_witness = Json::array();
  const std::size_t dim = rep.dim();
  unitarity = max_abs_diff(rep.op({0, 0}), CMatrix::Identity(ix(dim), ix(dim)));
  for (std::size_t t = 0; t < n; ++t) unitarity = std::max(unitarity, unitarity_defect(rep.op({0, t})));
  auto check_pair = [&](std::size_t s, std::size_t t) {
    const double d = max_abs_diff(rep.op({0, s}) * rep.op({0, t}),
                                  rep.op({0, g.finite_part().mul(s, t)}));
    if (d > homomorphism) {
      homomorphism = d;
      hom_witness = Json::array({s, t});
    }
  };
  bool exhaustive = n <= 64;
  if (exhaustive) {
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) check_pair(s, t);
  } else {
    std::mt19937_64 rng(c.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const auto samples = static_cast<std::size_t>(std::ceil(n * std::log(static_cast<double>(n))));
    for (std::size_t i = 0; i < samples; ++i) check_pair(pick(rng), pick(rng));
  }
  const std::string label = rep.sigma().label();
  const std::string again = base_command(c, "induce") + " --sigma " + quote(label);
  if (unitarity > c.tol_structural) r.fail("induced_unitarity", Json::array({label}), again);
  if (homomorphism > c.tol_structural) r.fail("induced_homomorphism", hom_witness, again);

  Json out{{"sigma", label},
           {"sigmaDim", rep.sigma_dim()},
           {"dim", dim},
           {"cosets", rep.cosets().finite_count()},
           {"irreducible", mackey_irreducible(rep, c.tol_decision)},
           {"characterNorm", induced_character_norm(rep)},
           {"unitarityDefect", unitarity},
           {"homomorphismDefect", homomorphism},
           {"homomorphismExhaustive", exhaustive}};
  if (with_operators) {
    Json ops = Json::object();
    for (std::size_t t = 0; t < n; ++t) ops[io::element_key({0, t}, g)] = io::to_json(rep.op({0, t}));
    out["operators"] = ops;
  }
  return out;
}

Json induce_zcross(const RunConfig& c, const InducedRep& rep, Report& r) {
  // Basis vectors at shifts 0..2; supports checked against a shift window.
  std::vector<BasisIndex> basis;
  for (std::int64_t shift = 0; shift <= 2; ++shift)
    for (std::size_t ci = 0; ci < rep.cosets().finite_count(); ++ci)
      for (std::size_t s = 0; s < rep.sigma_dim(); ++s) basis.push_back({{shift, ci}, s});
  const std::size_t order = rep.group().finite_part().order();
  std::size_t max_support = 0;
  Json supports = Json::array();
  for (const BasisIndex& i : basis)
    for (const BasisIndex& j : basis) {
      const auto support = coefficient_support(rep, i, j);
      max_support = std::max(max_support, support.size());
      std::set<Element> in(support.begin(), support.end());
      for (std::int64_t shift = -4; shift <= 4; ++shift)
        for (std::size_t f = 0; f < order; ++f) {
          const Element t{shift, f};
          if (!in.count(t) && rep.coefficient(i, j, t) != Complex{})
            r.fail("coefficient_support", Json::array({i.coset.shift, i.coset.index, i.component,
                                                       j.coset.shift, j.coset.index, j.component,
                                                       shift, f}),
                   base_command(c, "induce") + " --sigma " + quote(rep.sigma().label()));
        }
      if (support.size() > rep.subgroup().size())
        r.fail("support_size", Json::array({support.size(), rep.subgroup().size()}),
               base_command(c, "induce"));
      Json pts = Json::array();
      for (const Element& t : support) pts.push_back(io::element_key(t, rep.group()));
      supports.push_back(Json{{"i", Json::array({i.coset.shift, i.coset.index, i.component})},
                              {"j", Json::array({j.coset.shift, j.coset.index, j.component})},
                              {"support", pts}});
    }
  return Json{{"sigma", rep.sigma().label()},
              {"sigmaDim", rep.sigma_dim()},
              {"dim", nullptr},
              {"infiniteDimensional", true},
              {"finiteCosets", rep.cosets().finite_count()},
              {"irreducible", nullptr},
              {"maxSupportSize", max_support},
              {"supports", supports}};
}

Report induce_command(const RunConfig& c, std::ostream& log) {
  Context ctx = load_context(c, true, true);
  Report r;
  r.body["group"] = group_json(*ctx.group);
  r.body["subgroup"] = subgroup_json(*ctx.k);
  const bool single = ctx.selected.size() == 1;
  std::vector<Report> partial(ctx.selected.size());
  auto blocks = parallel_map(ctx.selected.size(), [&](std::size_t n) {
    const InducedRep rep = InducedRep::induce(*ctx.cosets, ctx.dual->irreps[ctx.selected[n]]);
    return ctx.group->is_finite() ? induce_finite(c, rep, single, partial[n])
                                  : induce_zcross(c, rep, partial[n]);
  });
  for (auto& p : partial)
    for (auto& f : p.failures) r.failures.push_back(std::move(f));
  if (c.verbosity > 0) log << "induce: " << blocks.size() << " inductions\n";
  if (single)
    for (auto it = blocks.front().begin(); it != blocks.front().end(); ++it) r.body[it.key()] = it.value();
  r.body["inductions"] = blocks;
  return r;
}

Json schur_table_json(const SchurReport& s) {
  Json table = Json::object();
  const std::size_t n = s.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t m = 0; m < n; ++m) {
          const std::size_t at = ((i * n + j) * n + l) * n + m;
          table[std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l) + "," +
                std::to_string(m)] =
              Json{{"integral", io::to_json(s.integrals[at])}, {"c", io::to_json(s.c[at])}};
        }
  return table;
}

Report schur_audit(const RunConfig& c, std::ostream& log) {
  Context ctx = load_context(c, true, true);
  if (!ctx.group->is_finite())
    throw Error(ErrorKind::Unsupported, "schur-audit requires a finite group");
  Report r;
  r.body["group"] = group_json(*ctx.group);
  r.body["subgroup"] = subgroup_json(*ctx.k);
  std::vector<InducedRep> reps;
  for (std::size_t p : ctx.selected) reps.push_back(InducedRep::induce(*ctx.cosets, ctx.dual->irreps[p]));
  const bool focused = !c.sigma.empty();

  if (c.tau.empty()) {
    struct Block {
      SchurReport report;
      bool mackey;
    };
    auto blocks = parallel_map(reps.size(), [&](std::size_t n) {
      return Block{check_normalized_basis(reps[n], c.tol_decision),
                   mackey_irreducible(reps[n], c.tol_decision)};
    });
    Json sigmas = Json::array();
    double max_dev = 0.0;
    Json reducible = Json::array();
    for (std::size_t n = 0; n < blocks.size(); ++n) {
      const SchurReport& s = blocks[n].report;
      const std::string again = base_command(c, "schur-audit") + " --sigma " + quote(s.sigma);
      Json entry{{"sigma", s.sigma},
                 {"tau", s.tau},
                 {"dim", s.dim},
                 {"sigmaDim", s.sigma_dim},
                 {"mackeyIrreducible", blocks[n].mackey},
                 {"maxDeviation", s.max_deviation},
                 {"witness", tuple_json(s.witness)},
                 {"theoremDeviation", s.theorem_deviation},
                 {"theoremWitness", tuple_json(s.theorem_witness)},
                 {"conjugateSymmetryDefect", s.conjugate_symmetry_defect},
                 {"cProvenance", to_string(s.provenance)},
                 {"passed", s.passed},
                 {"expected", blocks[n].mackey ? "pass" : "fail"}};
      if (focused) entry["table"] = schur_table_json(s);
      sigmas.push_back(entry);
      if (blocks[n].mackey) {
        max_dev = std::max(max_dev, s.max_deviation);
        if (!s.passed)
          r.fail("normalized_basis", Json{{"sigma", s.sigma}, {"tuple", tuple_json(s.witness)}}, again);
      } else {
        reducible.push_back(s.sigma);
      }
      if (s.theorem_deviation > c.tol_decision)
        r.fail("schur_theorem_identity",
               Json{{"sigma", s.sigma}, {"tuple", tuple_json(s.theorem_witness)}}, again);
      if (s.conjugate_symmetry_defect > c.tol_structural)
        r.fail("conjugate_symmetry", Json{{"sigma", s.sigma}}, again);
    }
    r.body["sigmas"] = sigmas;
    r.body["maxDeviation"] = max_dev;
    r.body["reducibleInductions"] = reducible;
    if (blocks.size() == 1) {
      r.body["sigma"] = blocks[0].report.sigma;
      r.body["tau"] = blocks[0].report.tau;
      r.body["witness"] = tuple_json(blocks[0].report.witness);
      if (focused) r.body["table"] = schur_table_json(blocks[0].report);
      r.body["maxDeviation"] = blocks[0].report.max_deviation;
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (!c.tau.empty()) {
    const std::size_t tau = ctx.dual->position(c.tau);
    reps.push_back(InducedRep::induce(*ctx.cosets, ctx.dual->irreps[tau]));
    for (std::size_t a = 0; a + 1 < reps.size(); ++a) pairs.emplace_back(a, reps.size() - 1);
  } else {
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = a + 1; b < reps.size(); ++b) pairs.emplace_back(a, b);
  }
  auto cross = parallel_map(pairs.size(), [&](std::size_t n) {
    return cross_integrals(reps[pairs[n].first], reps[pairs[n].second]);
  });
  Json cross_json = Json::array();
  for (const CrossReport& x : cross) {
    const bool expected_zero = !x.g_conjugate;
    const bool ok = !expected_zero || x.max_abs <= c.tol_structural;
    cross_json.push_back(Json{{"sigma", x.sigma},
                              {"tau", x.tau},
                              {"maxAbs", x.max_abs},
                              {"witness", tuple_json(x.witness)},
                              {"gConjugate", x.g_conjugate},
                              {"expectedZero", expected_zero},
                              {"passed", ok}});
    if (!ok)
      r.fail("cross_orthogonality",
             Json{{"sigma", x.sigma}, {"tau", x.tau}, {"tuple", tuple_json(x.witness)}},
             base_command(c, "schur-audit") + " --sigma " + quote(x.sigma) + " --tau " +
                 quote(x.tau));
  }
  r.body["cross"] = cross_json;
  if (c.verbosity > 0) log << "schur-audit: " << reps.size() << " reps, " << pairs.size() << " pairs\n";
  return r;
}

std::vector<BasisIndex> zcross_window(const InducedRep& rep, const std::map<Element, CMatrix>& atoms) {
  std::int64_t width = 0;
  for (const auto& [t, a] : atoms) width = std::max(width, t.shift < 0 ? -t.shift : t.shift);
  std::vector<BasisIndex> basis;
  for (std::int64_t shift = 0; shift <= width; ++shift)
    for (std::size_t ci = 0; ci < rep.cosets().finite_count(); ++ci)
      for (std::size_t s = 0; s < rep.sigma_dim(); ++s) basis.push_back({{shift, ci}, s});
  return basis;
}

Json basis_json(const std::vector<BasisIndex>& basis) {
  Json out = Json::array();
  for (const BasisIndex& b : basis) out.push_back(Json::array({b.coset.shift, b.coset.index, b.component}));
  return out;
}

struct Inputs {
  std::optional<VectorMeasure> measure;
  std::optional<DensityFunction> density;
};

Inputs load_inputs(const RunConfig& c, const Context& ctx, bool want_measure, bool want_density) {
  Inputs in;
  std::mt19937_64 rng(c.seed);
  const double lambda = ctx.k->haar_mass();
  if (want_measure) {
    if (!c.measure.empty())
      in.measure = io::parse_measure(io::read_json_file(c.measure), ctx.group);
    else if (c.random > 0 && c.function.empty())
      in.measure = random_measure(rng, ctx.group, c.algebra_dim);
  }
  if (want_density) {
    if (!c.function.empty())
      in.density = io::parse_density(io::read_json_file(c.function), ctx.group, lambda);
    else if (c.random > 0 && (c.measure.empty() || !want_measure))
      in.density = random_density(rng, ctx.group, lambda, c.algebra_dim);
  }
  return in;
}

Json coefficient_blocks(const InducedRep& rep, const VectorMeasure& m, std::vector<BasisIndex>* window,
                        CoefficientMatrix* out) {
  if (rep.group().is_finite()) {
    *out = fourier_stieltjes(m, rep);
    return Json{{"sigma", rep.sigma().label()}, {"matrix", io::to_json(*out)}};
  }
  *window = zcross_window(rep, m.atoms);
  *out = fourier_stieltjes(m, rep, *window);
  return Json{{"sigma", rep.sigma().label()},
              {"matrix", io::to_json(*out)},
              {"basis", basis_json(*window)}};
}

/// Transforms of m over the selected σ; records the ‖m̂‖_∞ ≤ bound check.
Json transform_family(const RunConfig& c, const Context& ctx, const VectorMeasure& m, double bound,
                      const std::string& invariant, Report& r) {
  std::vector<InducedRep> reps;
  for (std::size_t p : ctx.selected) reps.push_back(InducedRep::induce(*ctx.cosets, ctx.dual->irreps[p]));
  FourierFamily family;
  auto blocks = parallel_map(reps.size(), [&](std::size_t n) {
    std::vector<BasisIndex> window;
    CoefficientMatrix a;
    Json j = coefficient_blocks(reps[n], m, &window, &a);
    return std::make_pair(std::move(j), std::move(a));
  });
  Json sigmas = Json::array();
  for (std::size_t n = 0; n < blocks.size(); ++n) {
    const NormInterval ni = sesquilinear_norm(blocks[n].second, c.seed + n);
    blocks[n].first["norm"] = Json{{"lower", ni.lower}, {"upper", ni.upper}, {"exact", ni.exact}};
    sigmas.push_back(blocks[n].first);
    family.entries.push_back({reps[n].sigma().label(), reps[n].sigma_dim(), blocks[n].second, true});
  }
  const NormInterval fam = family_norm(family, c.seed);
  if (fam.upper > bound + 1e-12)
    r.fail(invariant, Json{{"upper", fam.upper}, {"bound", bound}}, seeded(c, base_command(c, c.command)));
  if (fam.lower > fam.upper + 1e-12)
    r.fail("norm_interval_order", Json{{"lower", fam.lower}, {"upper", fam.upper}},
           seeded(c, base_command(c, c.command)));
  return Json{{"sigmas", sigmas},
              {"familyNorm", Json{{"lower", fam.lower}, {"upper", fam.upper}, {"exact", fam.exact}}},
              {"bound", bound}};
}

Report transform_command(const RunConfig& c, std::ostream& log) {
  Context ctx = load_context(c, true, true);
  Inputs in = load_inputs(c, ctx, true, true);
  if (!in.measure && !in.density)
    throw Error(ErrorKind::InvalidInput, "transform needs --measure, --function or --random");
  Report r;
  r.body["group"] = group_json(*ctx.group);
  r.body["subgroup"] = subgroup_json(*ctx.k);
  if (in.measure) {
    const double norm = in.measure->norm();
    r.body["measureNorm"] = norm;
    r.body["measure"] = transform_family(c, ctx, *in.measure, norm, "transform_norm_bound", r);
  }
  if (in.density) {
    const double n1 = lp_norm(*in.density, 1.0);
    r.body["densityN1"] = n1;
    r.body["density"] =
        transform_family(c, ctx, in.density->to_measure(), n1, "fourier_norm_bound", r);
  }
  if (c.verbosity > 0) log << "transform: done\n";
  return r;
}

Report norms_command(const RunConfig& c, std::ostream& log) {
  Context ctx = load_context(c, true, true);
  Inputs in = load_inputs(c, ctx, true, true);
  if (!in.measure && !in.density)
    throw Error(ErrorKind::InvalidInput, "norms needs --measure, --function or --random");
  Report r;
  if (in.density) {
    Json lp = Json::object();
    for (double p : c.p) {
      const double pp = p < 0 ? kInfinity : p;
      lp[p < 0 ? std::string("inf") : io::dump(Json(p)).substr(0, io::dump(Json(p)).size() - 1)] =
          lp_norm(*in.density, pp);
    }
    r.body["lp"] = lp;
    const double n1 = lp_norm(*in.density, 1.0);
    Json fam = transform_family(c, ctx, in.density->to_measure(), n1, "fourier_norm_bound", r);
    r.body["fourierNorm"] = fam["familyNorm"];
    r.body["densityN1"] = n1;
  }
  if (in.measure) {
    const double norm = in.measure->norm();
    Json fam = transform_family(c, ctx, *in.measure, norm, "transform_norm_bound", r);
    r.body["measureNorm"] = norm;
    r.body["transformNorm"] = fam["familyNorm"];
  }
  if (c.verbosity > 0) log << "norms: done\n";
  return r;
}

Report rank_command(const RunConfig& c, std::ostream& log) {
  Context ctx = load_context(c, true, true);
  if (!ctx.group->is_finite()) throw Error(ErrorKind::Unsupported, "rank requires a finite group");
  Report r;
  const CMatrix m = transform_matrix(*ctx.cosets, *ctx.dual);
  const RVector sv = singular_values(m);
  const std::size_t rank = numerical_rank(m, kRankTol);
  const std::size_t order = ctx.group->order();
  r.body["group"] = group_json(*ctx.group);
  r.body["subgroup"] = subgroup_json(*ctx.k);
  r.body["rank"] = rank;
  r.body["order"] = order;
  r.body["rows"] = m.rows();
  r.body["injective"] = rank == order;
  Json s = Json::array();
  for (Eigen::Index i = 0; i < sv.size(); ++i) s.push_back(sv(i));
  r.body["singularValues"] = s;
  r.body["threshold"] = kRankTol * (sv.size() ? sv(0) : 0.0);
  if (rank != order)
    r.fail("transform_injectivity", Json::array({rank, order}), base_command(c, "rank"));
  if (c.verbosity > 0) log << "rank: " << rank << " of " << order << "\n";
  return r;
}

Json reconstruction_json(const ReconstructionReport& rep) {
  Json coeffs = Json::array();
  for (const SigmaCoefficients& s : rep.coefficients)
    coeffs.push_back(Json{{"sigma", s.label}, {"sigmaDim", s.sigma_dim}, {"a", io::to_json(s.a)}});
  Json out{{"method", to_string(rep.method)},
           {"residual", rep.residual},
           {"fNorm", rep.f_norm},
           {"certified", rep.certified},
           {"sigmaUsed", rep.sigma_used},
           {"coefficients", coeffs},
           {"reconstruction", density_json(rep.reconstruction)}};
  if (rep.method == Method::Gram) {
    out["gramRank"] = rep.gram_rank;
    out["gramSize"] = rep.gram_size;
  }
  return out;
}

Report invert_command(const RunConfig& c, std::ostream& log) {
  Context ctx = load_context(c, true, true);
  if (!ctx.group->is_finite()) throw Error(ErrorKind::Unsupported, "invert requires a finite group");
  if (c.method != "direct" && c.method != "gram" && c.method != "both")
    throw Error(ErrorKind::InvalidInput, "--method must be direct, gram or both");
  Inputs in = load_inputs(c, ctx, false, true);
  if (!in.density) throw Error(ErrorKind::InvalidInput, "invert needs --function or --random");
  std::vector<InducedRep> reps;
  for (std::size_t p : ctx.selected) reps.push_back(InducedRep::induce(*ctx.cosets, ctx.dual->irreps[p]));
  Report r;
  r.body["group"] = group_json(*ctx.group);
  r.body["subgroup"] = subgroup_json(*ctx.k);
  r.body["input"] = density_json(*in.density);
  const bool full = ctx.selected.size() == ctx.dual->irreps.size();
  if (c.method != "gram") r.body["direct"] = reconstruction_json(direct_reconstruction(*in.density, reps));
  if (c.method != "direct") {
    const ReconstructionReport g = gram_corrected_series(*in.density, reps);
    r.body["gram"] = reconstruction_json(g);
    if (full && !g.certified)
      r.fail("gram_reconstruction",
             Json{{"residual", g.residual}, {"fNorm", g.f_norm}, {"gramRank", g.gram_rank},
                  {"gramSize", g.gram_size}},
             seeded(c, base_command(c, "invert") + " --method gram"));
  }
  r.body["fullDual"] = full;
  if (c.verbosity > 0) log << "invert: done\n";
  return r;
}

Report weil_check(const RunConfig& c, std::ostream& log) {
  Context ctx = load_context(c, true, false);
  Report r;
  r.body["group"] = group_json(*ctx.group);
  r.body["subgroup"] = subgroup_json(*ctx.k);
  r.body["haar"] = haar_json(*ctx.cosets);
  std::vector<GroupFunction> fs;
  if (!c.function.empty()) {
    fs.push_back(io::parse_function(io::read_json_file(c.function), ctx.group));
  } else {
    std::mt19937_64 rng(c.seed);
    for (std::size_t n = 0; n < std::max<std::size_t>(c.random, 1); ++n)
      fs.push_back(random_function(rng, *ctx.group));
  }
  Json results = Json::array();
  double worst = 0.0;
  for (std::size_t n = 0; n < fs.size(); ++n) {
    const WeilResult w = weil_integrate(fs[n], *ctx.cosets);
    const double diff = std::abs(w.direct - w.iterated);
    const double scale = std::max(1.0, std::abs(w.direct));
    worst = std::max(worst, diff);
    results.push_back(Json{{"direct", io::to_json(w.direct)},
                           {"iterated", io::to_json(w.iterated)},
                           {"difference", diff}});
    if (diff > 1e-12 * scale)
      r.fail("weil_formula", Json{{"sample", n}, {"difference", diff}},
             c.function.empty() ? base_command(c, "weil-check") + " --random " +
                                      std::to_string(c.random) + " --seed " + std::to_string(c.seed)
                                : base_command(c, "weil-check") + " --function " + quote(c.function));
  }
  r.body["results"] = results;
  r.body["maxDifference"] = worst;
  if (c.verbosity > 0) log << "weil-check: " << fs.size() << " functions\n";
  return r;
}

int classify(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotIrreducible:
    case ErrorKind::IncompleteDual:
    case ErrorKind::DuplicateIrrep:
    case ErrorKind::RankDeficient:
      return 2;
    default:
      return 1;
  }
}

double json_double(const Json& v, const std::string& key) {
  if (!v.is_number()) throw Error(ErrorKind::ParseError, "config field \"" + key + "\" must be a number");
  return v.get<double>();
}

std::string json_string(const Json& v, const std::string& key) {
  if (!v.is_string()) throw Error(ErrorKind::ParseError, "config field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

std::size_t json_count(const Json& v, const std::string& key) {
  if (!v.is_number_unsigned())
    throw Error(ErrorKind::ParseError, "config field \"" + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

std::size_t worker_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("INDH_THREADS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) n = std::min<std::size_t>(n, cap);
  }
  return n;
}

RunConfig config_from_json(const io::Document& doc) {
  const Json& j = doc.json;
  if (!j.is_object()) throw Error(ErrorKind::ParseError, doc.source + ":1: config must be an object");
  RunConfig c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    const Json& v = it.value();
    if (k == "command") c.command = json_string(v, k);
    else if (k == "group") c.group = json_string(v, k);
    else if (k == "subgroup") c.subgroup = json_string(v, k);
    else if (k == "sigma") {
      if (v.is_string()) c.sigma = {v.get<std::string>()};
      else if (v.is_array()) for (const Json& s : v) c.sigma.push_back(json_string(s, k));
      else throw Error(ErrorKind::ParseError, "config field \"sigma\" must be a string or list");
    }
    else if (k == "tau") c.tau = json_string(v, k);
    else if (k == "irreps") c.irreps = json_string(v, k);
    else if (k == "measure") c.measure = json_string(v, k);
    else if (k == "function") c.function = json_string(v, k);
    else if (k == "method") c.method = json_string(v, k);
    else if (k == "p") {
      c.p.clear();
      if (!v.is_array()) throw Error(ErrorKind::ParseError, "config field \"p\" must be a list");
      for (const Json& x : v) c.p.push_back(x.is_string() && x == "inf" ? -1.0 : json_double(x, k));
    }
    else if (k == "random") c.random = json_count(v, k);
    else if (k == "algebra_dim") c.algebra_dim = json_count(v, k);
    else if (k == "tol_structural") c.tol_structural = json_double(v, k);
    else if (k == "tol_decision") c.tol_decision = json_double(v, k);
    else if (k == "seed") c.seed = json_count(v, k);
    else if (k == "output") c.output = json_string(v, k);
    else if (k == "verbosity") c.verbosity = static_cast<int>(json_count(v, k));
    else {
      const std::size_t at = doc.text.find("\"" + k + "\"");
      std::size_t line = 1;
      if (at != std::string::npos) line += static_cast<std::size_t>(std::count(doc.text.begin(), doc.text.begin() + static_cast<std::ptrdiff_t>(at), '\n'));
      throw Error(ErrorKind::ParseError,
                  doc.source + ":" + std::to_string(line) + ": unknown config field \"" + k + "\"",
                  {static_cast<std::int64_t>(line)});
    }
  }
  return c;
}

RunResult execute(const RunConfig& c, std::ostream& log) {
  RunResult result;
  Json& rep = result.report;
  rep["command"] = c.command;
  rep["convention"] = kMeasureConvention;
  rep["seed"] = c.seed;
  rep["tolerances"] = Json{{"structural", c.tol_structural}, {"decision", c.tol_decision}};
  try {
    Report r;
    if (c.command == "validate-group") r = validate_group(c, log);
    else if (c.command == "dual") r = dual_command(c, log);
    else if (c.command == "induce") r = induce_command(c, log);
    else if (c.command == "schur-audit") r = schur_audit(c, log);
    else if (c.command == "transform") r = transform_command(c, log);
    else if (c.command == "norms") r = norms_command(c, log);
    else if (c.command == "rank") r = rank_command(c, log);
    else if (c.command == "invert") r = invert_command(c, log);
    else if (c.command == "weil-check") r = weil_check(c, log);
    else throw Error(ErrorKind::InvalidInput, "unknown command '" + c.command + "'");
    for (auto it = r.body.begin(); it != r.body.end(); ++it) rep[it.key()] = it.value();
    if (r.failures.empty()) {
      rep["status"] = "pass";
      result.exit_code = 0;
    } else {
      Json failures = Json::array();
      for (const Failure& f : r.failures)
        failures.push_back(Json{{"invariant", f.invariant}, {"witness", f.witness}, {"reproduce", f.reproduce}});
      rep["status"] = "fail";
      rep["failures"] = failures;
      result.exit_code = 2;
      log << "indh: " << c.command << ": invariant " << r.failures.front().invariant
          << " failed; witness " << r.failures.front().witness.dump() << "\n";
    }
  } catch (const Error& e) {
    result.exit_code = classify(e.kind());
    rep["status"] = result.exit_code == 2 ? "fail" : "error";
    rep["error"] = Json{{"kind", std::string(to_string(e.kind()))},
                        {"message", e.what()},
                        {"witness", witness_json(e.witness())}};
    log << "indh: " << c.command << ": " << e.what() << "\n";
  }
  return result;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& log) {
  RunResult result = execute(c, log);
  const std::string text = io::dump(result.report);
  if (c.output.empty()) {
    out << text;
  } else {
    try {
      io::atomic_write(c.output, text);
    } catch (const Error& e) {
      log << "indh: " << e.what() << "\n";
      return 1;
    }
  }
  return result.exit_code;
}

}  // namespace indh::cli
