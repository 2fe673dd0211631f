#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "indh/builtins.hpp"
#include "indh/catalog.hpp"
#include "indh/error.hpp"
#include "indh/induced.hpp"
#include "oracles.hpp"

using namespace indh;

namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

struct Case {
  GroupPtr group;
  CosetSpace cosets;
  DualObject dual;
};

Case setup(const std::string& g, const std::string& k) {
  GroupPtr group = make_group(builtin_group(g));
  CompactSubgroup sub = named_subgroup(group, k);
  return {group, CosetSpace(sub), dual_object(sub)};
}

InducedRep induce(const Case& s, const std::string& label) {
  return InducedRep::induce(s.cosets, s.dual.find(label));
}

std::vector<InducedRep> all_inductions(const Case& s) {
  std::vector<InducedRep> out;
  for (const UnitaryRep& r : s.dual.irreps) out.push_back(InducedRep::induce(s.cosets, r));
  return out;
}

}  // namespace

TEST(Induce, WholeGroupIsSigma) {
  const Case s = setup("S3", "whole");
  for (const UnitaryRep& sigma : s.dual.irreps) {
    const InducedRep rep = InducedRep::induce(s.cosets, sigma);
    EXPECT_EQ(rep.dim(), sigma.dim());
    for (std::size_t t = 0; t < 6; ++t) EXPECT_LE(max_abs_diff(rep.op({0, t}), sigma(t)), 1e-15);
  }
}

TEST(Induce, S3FromA3) {
  const Case s = setup("S3", "A3");
  const InducedRep rep = induce(s, "omega");
  EXPECT_EQ(rep.dim(), 2u);
  // r = index 3 preserves both cosets; every entry has modulus 0 or 1.
  const CMatrix& u = rep.op({0, 3});
  EXPECT_NEAR(std::abs(u(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(0, 0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(u(1, 1)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(u(0, 0) - std::polar(1.0, 2.0 * kPi / 3.0)), 0.0, 1e-12);
}

TEST(Induce, Z4FromZ2Sign) {
  const Case s = setup("Z4", "Z2");
  const InducedRep rep = induce(s, "sign");
  EXPECT_EQ(rep.dim(), 2u);
  CMatrix expected(2, 2);
  expected << 0, -1, 1, 0;
  EXPECT_LE(max_abs_diff(rep.op({0, 1}), expected), 1e-15);
}

TEST(Induce, RejectsReducibleAndForeignSigma) {
  const Case s = setup("S3", "A3");
  CMatrix id = CMatrix::Identity(2, 2);
  const UnitaryRep reducible(s.group->finite_ptr(), {0, 3, 4}, {id, id, id});
  try {
    InducedRep::induce(s.cosets, reducible);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotIrreducible);
  }
  const DualObject whole = dual_object(named_subgroup(s.group, "whole"));
  try {
    InducedRep::induce(s.cosets, whole.find("sign"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainMismatch);
  }
}

TEST(Induce, UnitaryHomomorphismExhaustive) {
  for (const BuiltinPair& p : builtin_pairs()) {
    const Case s = setup(p.group, p.subgroup);
    for (const InducedRep& rep : all_inductions(s)) {
      const std::size_t n = s.group->order();
      const CMatrix id = CMatrix::Identity(ix(rep.dim()), ix(rep.dim()));
      EXPECT_LE(max_abs_diff(rep.op({0, 0}), id), 1e-10);
      for (std::size_t a = 0; a < n; ++a) {
        ASSERT_LE(unitarity_defect(rep.op({0, a})), 1e-10);
        for (std::size_t b = 0; b < n; ++b)
          ASSERT_LE(max_abs_diff(rep.op({0, a}) * rep.op({0, b}),
                                 rep.op({0, s.group->finite_part().mul(a, b)})),
                    1e-10)
              << p.group << "/" << p.subgroup << " " << rep.sigma().label();
      }
    }
  }
}

TEST(Induce, TraceMatchesFrobeniusOracle) {
  for (const BuiltinPair& p : builtin_pairs()) {
    const Case s = setup(p.group, p.subgroup);
    for (const InducedRep& rep : all_inductions(s)) {
      std::map<std::size_t, Complex> chi;
      const std::vector<Complex> c = character(rep.sigma());
      for (std::size_t i = 0; i < c.size(); ++i) chi[rep.sigma().domain()[i]] = c[i];
      const auto expected =
          oracle::induced_character(s.group->finite_part().table(), s.cosets.subgroup().members(), chi);
      for (std::size_t t = 0; t < expected.size(); ++t)
        ASSERT_NEAR(std::abs(rep.op({0, t}).trace() - expected[t]), 0.0, 1e-10);
    }
  }
}

TEST(Operator, MatchesCache) {
  const Case s = setup("D4", "center");
  const InducedRep rep = induce(s, "sign");
  for (std::size_t t = 0; t < 8; ++t) EXPECT_EQ(induced_operator(rep, {0, t}), rep.op({0, t}));
}

TEST(AverageMap, Examples) {
  const Case s = setup("Z3", "whole");
  const InducedRep rep = induce(s, "omega");
  const InducedVector zero = average_map(rep, {});
  for (std::size_t g = 0; g < 3; ++g) EXPECT_EQ(zero.evaluate(rep, {0, g})(0), Complex{});
  HFunction eta;
  eta[{0, 0}] = CVector::Ones(1);
  const InducedVector u = average_map(rep, eta);
  EXPECT_NEAR(std::abs(u.evaluate(rep, {0, 0})(0) - 1.0 / 3.0), 0.0, 1e-15);
  // u(k) = (1/3) ω(k⁻¹)
  for (std::size_t k = 0; k < 3; ++k)
    EXPECT_NEAR(std::abs(u.evaluate(rep, {0, k})(0) - std::polar(1.0, -2.0 * kPi * k / 3.0) / 3.0), 0.0,
                1e-15);
}

TEST(AverageMap, ProducesCovariantVectors) {
  std::mt19937_64 rng(5);
  const Case s = setup("S4", "V4");
  for (const InducedRep& rep : all_inductions(s)) {
    HFunction eta;
    for (int n = 0; n < 5; ++n) {
      CVector v(ix(rep.sigma_dim()));
      for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = oracle::random_complex(rng);
      eta[{0, rng() % 24}] = v;
    }
    const InducedVector u = average_map(rep, eta);
    for (std::size_t g = 0; g < 24; ++g)
      for (std::size_t k : s.cosets.subgroup().members()) {
        const CVector lhs = u.evaluate(rep, {0, s.group->finite_part().mul(g, k)});
        const CVector rhs = rep.sigma()(s.group->finite_part().inv(k)) * u.evaluate(rep, {0, g});
        ASSERT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
      }
  }
}

TEST(Covariance, RightAndTwistedLeft) {
  std::mt19937_64 rng(9);
  bool literal_left_fails = false;
  for (const BuiltinPair& p : builtin_pairs()) {
    const Case s = setup(p.group, p.subgroup);
    const FiniteGroup& f = s.group->finite_part();
    for (const InducedRep& rep : all_inductions(s)) {
      InducedVector u;
      for (std::size_t b = 0; b < rep.dim(); ++b) u.coefficients[rep.basis(b)] = oracle::random_complex(rng);
      for (std::size_t t = 0; t < f.order(); ++t)
        for (std::size_t k : s.cosets.subgroup().members()) {
          const CVector ut = u.evaluate(rep, {0, t});
          const CVector tk = u.evaluate(rep, {0, f.mul(t, k)});
          ASSERT_LE((tk - rep.sigma()(f.inv(k)) * ut).cwiseAbs().maxCoeff(), 1e-12);
          const CVector kt = u.evaluate(rep, {0, f.mul(k, t)});
          const std::size_t twisted = f.inv(f.conjugate(k, t));
          ASSERT_LE((kt - rep.sigma()(twisted) * ut).cwiseAbs().maxCoeff(), 1e-12);
          if ((kt - rep.sigma()(k) * ut).cwiseAbs().maxCoeff() > 1e-3) literal_left_fails = true;
        }
    }
  }
  // u(kt) = σ(k) u(t) is not an identity of the left-coset model.
  EXPECT_TRUE(literal_left_fails);
}

TEST(Mackey, Examples) {
  const Case whole = setup("S3", "whole");
  for (const UnitaryRep& r : whole.dual.irreps)
    EXPECT_TRUE(mackey_irreducible(InducedRep::induce(whole.cosets, r)));
  const Case s3 = setup("S3", "A3");
  EXPECT_TRUE(mackey_irreducible(induce(s3, "omega")));
  EXPECT_NEAR(induced_character_norm(induce(s3, "omega")), 1.0, 1e-12);
  const Case z4 = setup("Z4", "Z2");
  EXPECT_FALSE(mackey_irreducible(induce(z4, "sign")));
  EXPECT_NEAR(induced_character_norm(induce(z4, "sign")), 2.0, 1e-12);
}

TEST(Mackey, AgreesWithCharacterNormAndCommutant) {
  for (const BuiltinPair& p : builtin_pairs()) {
    const Case s = setup(p.group, p.subgroup);
    for (const InducedRep& rep : all_inductions(s)) {
      const bool mackey = mackey_irreducible(rep);
      EXPECT_EQ(mackey, std::abs(induced_character_norm(rep) - 1.0) < 1e-9);
      EXPECT_EQ(mackey, oracle::commutant_dimension(rep.operators()) == 1);
      EXPECT_EQ(mackey, irreducible(as_unitary_rep(rep)));
      if (mackey) {
        EXPECT_TRUE(irreducible(rep.sigma()));
      }
    }
  }
}

TEST(Coefficient, IdentityIsDelta) {
  const Case s = setup("S4", "V4");
  for (const InducedRep& rep : all_inductions(s))
    for (std::size_t i = 0; i < rep.dim(); ++i)
      for (std::size_t j = 0; j < rep.dim(); ++j)
        EXPECT_EQ(matrix_coefficient(rep, rep.basis(i), rep.basis(j), {0, 0}), i == j ? 1.0 : 0.0);
  const InducedRep rep = InducedRep::induce(s.cosets, s.dual.irreps[0]);
  try {
    matrix_coefficient(rep, rep.basis(0), {{0, 99}, 0}, {0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
  }
}

TEST(Alpha, CosetBasis) {
  const Case s = setup("S3", "A3");
  const InducedRep rep = induce(s, "omega");
  for (std::size_t b = 0; b < rep.dim(); ++b) {
    const BasisIndex i = rep.basis(b);
    for (const AlphaEntry& a : alpha_coefficients(rep, i)) {
      const bool own = a.coset == i.coset && a.component == i.component;
      EXPECT_EQ(a.value, own ? 1.0 : 0.0);
    }
  }
  // Σ_c Σ_s |α_is(c)|² over the two cosets.
  double sum = 0.0;
  for (const AlphaEntry& a : alpha_coefficients(rep, rep.basis(0))) sum += std::norm(a.value);
  EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(Support, FiniteIsExact) {
  for (const BuiltinPair& p : builtin_pairs()) {
    const Case s = setup(p.group, p.subgroup);
    for (const InducedRep& rep : all_inductions(s))
      for (std::size_t i = 0; i < rep.dim(); ++i)
        for (std::size_t j = 0; j < rep.dim(); ++j) {
          std::vector<Element> brute;
          for (std::size_t t = 0; t < s.group->order(); ++t)
            if (rep.op({0, t})(ix(i), ix(j)) != Complex{}) brute.push_back({0, t});
          ASSERT_EQ(coefficient_support(rep, rep.basis(i), rep.basis(j)), brute);
          ASSERT_LE(brute.size(), s.cosets.subgroup().size());
        }
  }
}

TEST(Support, ZCrossShifts) {
  const Case s = setup("ZxZ2", "whole");
  const InducedRep rep = InducedRep::induce(s.cosets, s.dual.find("sign"));
  const BasisIndex at0{{0, 0}, 0}, at3{{3, 0}, 0};
  const auto forward = coefficient_support(rep, at3, at0);
  const auto backward = coefficient_support(rep, at0, at3);
  EXPECT_LE(forward.size(), 2u);
  EXPECT_LE(backward.size(), 2u);
  EXPECT_FALSE(forward.empty());
  for (const Element& t : forward) EXPECT_EQ(t.shift, 3);
  for (const Element& t : backward) EXPECT_EQ(t.shift, -3);
  for (std::int64_t m = -6; m <= 6; ++m)
    for (std::size_t f = 0; f < 2; ++f) {
      const Element t{m, f};
      const bool inside = std::find(forward.begin(), forward.end(), t) != forward.end();
      if (!inside) EXPECT_EQ(rep.coefficient(at3, at0, t), Complex{});
      else EXPECT_NE(rep.coefficient(at3, at0, t), Complex{});
    }
  EXPECT_THROW((void)rep.dim(), Error);
}

TEST(Support, ZCrossVanishesOutside) {
  for (const BuiltinPair& p : builtin_zcross_pairs()) {
    const Case s = setup(p.group, p.subgroup);
    const std::size_t nf = s.group->finite_part().order();
    for (const UnitaryRep& sigma : s.dual.irreps) {
      const InducedRep rep = InducedRep::induce(s.cosets, sigma);
      std::vector<BasisIndex> basis;
      for (std::int64_t m : {0, 2})
        for (std::size_t c = 0; c < s.cosets.finite_count(); ++c)
          for (std::size_t d = 0; d < sigma.dim(); ++d) basis.push_back({{m, c}, d});
      for (const BasisIndex& i : basis)
        for (const BasisIndex& j : basis) {
          const auto support = coefficient_support(rep, i, j);
          ASSERT_LE(support.size(), s.cosets.subgroup().size());
          const std::set<Element> in(support.begin(), support.end());
          for (std::int64_t m = -3; m <= 3; ++m)
            for (std::size_t f = 0; f < nf; ++f)
              if (!in.count({m, f})) {
                ASSERT_EQ(rep.coefficient(i, j, {m, f}), Complex{});
              }
        }
    }
  }
}

TEST(GConjugate, Classification) {
  const Case s3 = setup("S3", "A3");
  EXPECT_TRUE(g_conjugate(s3.dual.find("omega"), s3.dual.find("omegabar"), s3.cosets));
  EXPECT_FALSE(g_conjugate(s3.dual.find("omega"), s3.dual.find("trivial"), s3.cosets));
  const Case z4 = setup("Z4", "Z2");
  EXPECT_FALSE(g_conjugate(z4.dual.find("sign"), z4.dual.find("trivial"), z4.cosets));
}
