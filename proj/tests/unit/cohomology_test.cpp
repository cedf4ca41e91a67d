#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "setlab/cohomology/classes.hpp"
#include "setlab/cohomology/h2.hpp"
#include "setlab/cohomology/io.hpp"
#include "setlab/cohomology/smith.hpp"
#include "oracles/h2_enumeration.hpp"

using namespace setlab::cohomology;
using setlab::testing::brute_h2_order;

namespace {

std::complex<double> as_complex(Phase p) {
  return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(p.num()) / static_cast<double>(p.den()));
}

Cochain1 random_lambda(std::mt19937_64& rng, std::size_t labels, std::size_t order, std::int64_t den) {
  Cochain1 l = Cochain1::constant(labels, order);
  for (auto& row : l.values) {
    for (auto& p : row) p = Phase(static_cast<std::int64_t>(rng() % den), den);
  }
  return l;
}

} // namespace

TEST(Phase, ArithmeticMatchesComplexNumbers) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 500; ++t) {
    const Phase a(static_cast<std::int64_t>(rng() % 97) - 40, 1 + static_cast<std::int64_t>(rng() % 12));
    const Phase b(static_cast<std::int64_t>(rng() % 97) - 40, 1 + static_cast<std::int64_t>(rng() % 12));
    EXPECT_LT(std::abs(as_complex(a + b) - as_complex(a) * as_complex(b)), 1e-12);
    EXPECT_LT(std::abs(as_complex(a - b) - as_complex(a) / as_complex(b)), 1e-12);
    EXPECT_LT(std::abs(as_complex(a.conj()) - std::conj(as_complex(a))), 1e-12);
    EXPECT_GE(a.num(), 0);
    EXPECT_LT(a.num(), a.den());
  }
  EXPECT_EQ(Phase::parse("3/6"), Phase(1, 2));
  EXPECT_EQ(Phase::from_sign(-1), Phase::minus_one());
  EXPECT_EQ(Phase::minus_one().sign(), -1);
  EXPECT_THROW((void)Phase::parse("1/0"), std::invalid_argument);
}

TEST(FiniteGroup, BuiltinsSatisfyAxioms) {
  for (const auto& g : {FiniteGroup::cyclic(1), FiniteGroup::cyclic(5), FiniteGroup::klein(),
                        FiniteGroup::by_name("z2xz3"), FiniteGroup::by_name("z4")}) {
    const auto e = g.identity();
    for (std::size_t a = 0; a < g.order(); ++a) {
      EXPECT_EQ(g.mul(a, e), a);
      EXPECT_EQ(g.mul(a, g.inv(a)), e);
      for (std::size_t b = 0; b < g.order(); ++b) {
        for (std::size_t c = 0; c < g.order(); ++c) EXPECT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
      }
    }
  }
  EXPECT_EQ(FiniteGroup::klein().exponent(), 2u);
  EXPECT_EQ(FiniteGroup::by_name("z2xz3").exponent(), 6u);
  EXPECT_THROW(FiniteGroup({{0, 1}, {0, 1}}), InvalidGroup);
  EXPECT_THROW((void)FiniteGroup::by_name("s3"), InvalidGroup);
}

TEST(GModule, RejectsNonActions) {
  const auto z2 = FiniteGroup::cyclic(2);
  EXPECT_NO_THROW(GModule(z2, {"a", "b"}, {{0, 1}, {1, 0}}));
  EXPECT_THROW(GModule(z2, {"a", "b"}, {{1, 1}, {0, 0}}), InvalidModule);
  EXPECT_THROW(GModule(z2, {"a", "b"}, {{1, 0}, {0, 1}}), InvalidModule);  // identity must act trivially
}

TEST(Cochain, CoboundariesAreCocycles) {
  std::mt19937_64 rng(2);
  const auto z3 = FiniteGroup::cyclic(3);
  const GModule swapping(FiniteGroup::cyclic(2), {"a", "b"}, {{0, 1}, {1, 0}});
  for (const GModule& m : {GModule::trivial(FiniteGroup::klein(), {"1", "x", "y"}), GModule::trivial(z3, {"p"}),
                           swapping}) {
    for (int t = 0; t < 50; ++t) {
      const auto l = random_lambda(rng, m.num_labels(), m.group().order(), 6);
      const auto c = cocycle2_check(coboundary(l, m), m);
      EXPECT_TRUE(c.pass);
      EXPECT_EQ(c.instances, m.num_labels() * m.group().order() * m.group().order() * m.group().order());
    }
  }
}

TEST(Cochain, RephasingMatchesCoboundaryThroughEta) {
  std::mt19937_64 rng(3);
  const GModule m(FiniteGroup::cyclic(2), {"a", "b"}, {{0, 1}, {1, 0}});
  for (int t = 0; t < 50; ++t) {
    const auto l = random_lambda(rng, 2, 2, 4);
    const auto omega = Cochain2::constant(2, 2);
    const auto eta0 = eta_from_omega(omega, m);
    const auto eta1 = eta_from_omega(omega + omega_rephasing(l, m), m);
    EXPECT_EQ(eta1 - eta0, coboundary(l, m));
  }
}

TEST(Cochain, DetectsBrokenCocycle) {
  const auto m = GModule::trivial(FiniteGroup::cyclic(2), {"a"});
  auto c = Cochain2::constant(1, 2);
  c.at(0, 0, 1) = Phase(1, 2);
  const auto r = cocycle2_check(c, m);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_NE(r.witness->lhs, r.witness->rhs);
}

TEST(Smith, DecompositionHolds) {
  std::mt19937_64 rng(4);
  for (std::int64_t n : {2, 3, 4, 6, 12}) {
    for (int t = 0; t < 30; ++t) {
      const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
      IntMatrix m(rows, std::vector<std::int64_t>(cols));
      for (auto& r : m) {
        for (auto& x : r) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
      }
      const auto s = smith_normal_form(m, n);
      EXPECT_EQ(mat_mul_mod(mat_mul_mod(s.u, m, n), s.v, n), s.d);
      EXPECT_EQ(mat_mul_mod(s.v, s.v_inv, n), identity_matrix(cols));
      for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
        const auto a = s.diagonal[i] == 0 ? n : s.diagonal[i];
        const auto b = s.diagonal[i + 1] == 0 ? n : s.diagonal[i + 1];
        EXPECT_EQ(b % a, 0) << "divisibility chain";
      }
    }
  }
}

TEST(Smith, SolveMod) {
  const IntMatrix a{{2, 0}, {0, 3}};
  const auto x = solve_mod(a, {4, 3}, 6, 2);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(mat_vec_mod(a, *x, 6), (std::vector<std::int64_t>{4, 3}));
  EXPECT_FALSE(solve_mod(a, {1, 0}, 6, 2).has_value());
}

struct H2Case {
  const char* group;
  std::int64_t n;
  std::uint64_t order;
};

class H2 : public ::testing::TestWithParam<H2Case> {};

TEST_P(H2, MatchesIndependentEnumeration) {
  const auto c = GetParam();
  const auto g = FiniteGroup::by_name(c.group);
  const auto r = h2_trivial_action(g, c.n);
  EXPECT_EQ(r.order, c.order);
  EXPECT_TRUE(r.agrees);
  EXPECT_EQ(r.order, brute_h2_order(g, c.n));
  std::uint64_t prod = 1;
  for (auto f : r.invariant_factors) prod *= static_cast<std::uint64_t>(f);
  EXPECT_EQ(prod, r.order);
}

INSTANTIATE_TEST_SUITE_P(Cohomology, H2,
                         ::testing::Values(H2Case{"z2", 2, 2}, H2Case{"z2z2", 2, 8}, H2Case{"z3", 3, 3},
                                           H2Case{"z4", 2, 2}, H2Case{"z2z2", 3, 1}, H2Case{"z3", 2, 1}),
                         [](const auto& info) { return std::string(info.param.group) + "_Z" + std::to_string(info.param.n); });

TEST(H2, RejectsOversizedInput) {
  EXPECT_THROW((void)h2_trivial_action(FiniteGroup::cyclic(40), 2), SizeBoundExceeded);
}

TEST(Classes, WitnessReconstructsSecondCochain) {
  std::mt19937_64 rng(6);
  const auto m = GModule::trivial(FiniteGroup::klein(), {"1", "x"});
  auto eta = Cochain2::constant(2, 4);
  eta.at(1, 1, 2) = Phase(1, 2);  // nontrivial: omega(A,B) != omega(B,A)
  for (int t = 0; t < 10; ++t) {
    const auto l = random_lambda(rng, 2, 4, 2);
    const auto eta2 = eta + coboundary(l, m);
    const auto r = cohomologous(eta, eta2, m);
    ASSERT_EQ(r.answer, Answer::Yes);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(eta + coboundary(*r.witness, m), eta2);
  }
  const auto trivial = cohomologous(Cochain2::constant(2, 4), eta, m);
  EXPECT_EQ(trivial.answer, Answer::No);
}

TEST(Classes, U1CoboundaryFoundByLinearSolve) {
  // omega(1,1) = -1 on Z2 is d of lambda(1) = i, which has no Z2 witness.
  const auto m = GModule::trivial(FiniteGroup::cyclic(2), {"a"});
  auto eta = Cochain2::constant(1, 2);
  eta.at(0, 1, 1) = Phase(1, 2);
  ClassOptions only_search;
  only_search.modulus = 2;
  only_search.linear_solve = false;
  EXPECT_EQ(cohomologous(Cochain2::constant(1, 2), eta, m, only_search).answer, Answer::Unknown);
  const auto r = cohomologous(Cochain2::constant(1, 2), eta, m);
  ASSERT_EQ(r.answer, Answer::Yes);
  EXPECT_EQ(coboundary(*r.witness, m), eta);
}

TEST(CochainIo, RoundTripAndSchemaErrors) {
  const auto m = GModule::trivial(FiniteGroup::klein(), {"1", "x"});
  auto eta = Cochain2::constant(2, 4);
  eta.at(1, 1, 2) = Phase(1, 2);
  const auto j = cochain_file_json(eta, m);
  const auto back = cochain_file_from_json(j);
  ASSERT_TRUE(back.cochain2.has_value());
  EXPECT_EQ(*back.cochain2, eta);
  EXPECT_EQ(back.module.labels(), m.labels());

  auto bad = j;
  bad["values"]["nope"] = bad["values"]["x"];
  EXPECT_THROW((void)cochain_file_from_json(bad), SchemaError);
  bad = j;
  bad.erase("group");
  EXPECT_THROW((void)cochain_file_from_json(bad), SchemaError);
  bad = j;
  bad["values"]["x"][0][0] = "one";
  EXPECT_THROW((void)cochain_file_from_json(bad), SchemaError);
}
