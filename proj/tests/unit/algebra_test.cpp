#include <gtest/gtest.h>

#include "setlab/algebra/xd_operator.hpp"
#include "support.hpp"

using namespace setlab;
using namespace setlab::testing;

TEST(PhasePoly, EvenMultiplicityCancels) {
  const PhasePoly p({Monomial{0, 1}, Monomial{2}, Monomial{0, 1}});
  EXPECT_EQ(p, PhasePoly({Monomial{2}}));
  EXPECT_TRUE((p + p).is_zero());
}

TEST(PhasePoly, EvaluateMatchesDefinition) {
  const PhasePoly p({Monomial{}, Monomial{0, 2}, Monomial{1}});
  for (int i = 0; i < 8; ++i) {
    const std::vector<std::uint8_t> z{std::uint8_t(i & 1), std::uint8_t((i >> 1) & 1), std::uint8_t((i >> 2) & 1)};
    const bool expected = (1 + (z[0] & z[2]) + z[1]) % 2;
    EXPECT_EQ(p.evaluate(z), expected) << i;
  }
}

TEST(PhasePoly, SubstitutionComposes) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    const PhasePoly p = random_op(rng, 6).poly();
    const auto x = random_op(rng, 6).xsupport();
    const auto y = random_op(rng, 6).xsupport();
    EXPECT_EQ(poly_substitute(poly_substitute(p, x), y), poly_substitute(p, symmetric_difference(x, y)));
  }
}

TEST(XdOperator, GateMatricesMatchDefinitions) {
  constexpr std::size_t n = 3;
  EXPECT_EQ(mat_of(XdOperator::pauli_x(1), n), mat_x(n, 1));
  EXPECT_EQ(mat_of(XdOperator::pauli_z(2), n), mat_controlled_sign(n, {2}));
  EXPECT_EQ(mat_of(XdOperator::cz(0, 2), n), mat_controlled_sign(n, {0, 2}));
  EXPECT_EQ(mat_of(XdOperator::ccz(0, 1, 2), n), mat_controlled_sign(n, {0, 1, 2}));
  Matrix minus = mat_identity(n);
  for (auto& r : minus) {
    for (auto& x : r) x = -x;
  }
  EXPECT_EQ(mat_of(XdOperator::minus_identity(), n), minus);
}

TEST(XdOperator, RandomGateWordsAgreeWithMatrixProducts) {
  constexpr std::size_t n = 4;
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    XdOperator sym;
    Matrix dense = mat_identity(n);
    for (int k = 0; k < 6; ++k) {
      const SiteId a = rng() % n, b = (a + 1 + rng() % (n - 1)) % n;
      SiteId c = rng() % n;
      while (c == a || c == b) c = rng() % n;
      switch (rng() % 4) {
        case 0: sym *= XdOperator::pauli_x(a); dense = mat_mul(dense, mat_x(n, a)); break;
        case 1: sym *= XdOperator::pauli_z(a); dense = mat_mul(dense, mat_controlled_sign(n, {a})); break;
        case 2: sym *= XdOperator::cz(a, b); dense = mat_mul(dense, mat_controlled_sign(n, {a, b})); break;
        default: sym *= XdOperator::ccz(a, b, c); dense = mat_mul(dense, mat_controlled_sign(n, {a, b, c})); break;
      }
    }
    ASSERT_EQ(mat_of(sym, n), dense) << sym.to_string();
  }
}

TEST(XdOperator, GroupLawFuzz) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 1000; ++t) {
    const auto a = random_op(rng, 8), b = random_op(rng, 8), c = random_op(rng, 8);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_TRUE((a * a.inverse()).is_identity());
    ASSERT_EQ(a * XdOperator::identity(), a);
  }
}

TEST(XdOperator, ProductActsAsComposition) {
  constexpr std::size_t n = 5;
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_op(rng, n), b = random_op(rng, n);
    ASSERT_EQ(mat_of(a * b, n), mat_mul(mat_of(a, n), mat_of(b, n)));
    // inverse of a signed permutation matrix is its transpose
    const Matrix m = mat_of(a, n);
    Matrix tr = m;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) tr[i][j] = m[j][i];
    }
    ASSERT_EQ(mat_of(a.inverse(), n), tr);
  }
}

TEST(XdOperator, ConjugationIdentities) {
  for (SiteId a = 0; a < 5; ++a) {
    for (SiteId e = 0; e < 5; ++e) {
      for (SiteId b = 0; b < 5; ++b) {
        if (a == e || a == b || e == b) continue;
        const auto x = XdOperator::pauli_x(a);
        EXPECT_EQ(x * XdOperator::ccz(a, e, b) * x, XdOperator::ccz(a, e, b) * XdOperator::cz(e, b));
        EXPECT_EQ(x * XdOperator::cz(b, a) * x, XdOperator::cz(b, a) * XdOperator::pauli_z(b));
      }
    }
  }
}

TEST(XdOperator, ParseRoundTrip) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_op(rng, 9);
    EXPECT_EQ(XdOperator::parse(a.to_string()), a);
  }
  EXPECT_THROW(XdOperator::parse("X{1"), std::invalid_argument);
}

TEST(XdOperator, ScalarsAndCommutators) {
  EXPECT_EQ(XdOperator::identity().scalar_sign(), 1);
  EXPECT_EQ(XdOperator::minus_identity().scalar_sign(), -1);
  EXPECT_EQ(XdOperator::pauli_z(0).scalar_sign(), 0);
  EXPECT_EQ(commutator_phase(XdOperator::pauli_x(3), XdOperator::pauli_z(3)), -1);
  EXPECT_EQ(commutator_phase(XdOperator::pauli_x(3), XdOperator::pauli_z(4)), 1);
  EXPECT_THROW((void)commutator_phase(XdOperator::pauli_x(0), XdOperator::cz(0, 1)), NonScalarCommutator);
}

TEST(XdOperator, EmptyUniverse) {
  const auto [z, s] = apply_to_basis(XdOperator::identity(), std::vector<std::uint8_t>{});
  EXPECT_TRUE(z.empty());
  EXPECT_EQ(s, 1);
  EXPECT_EQ(XdOperator::identity().min_universe(), 0u);
}
