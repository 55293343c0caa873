#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "satkit/abelian.hpp"

using namespace satkit;

namespace {

IntMatrix mat(std::vector<std::vector<long>> rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

Vec vec(std::vector<long> xs) {
  Vec v(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) v[i] = xs[i];
  return v;
}

void check_snf(const IntMatrix& m) {
  SmithDecomposition s = smith_normal_form(m);
  // U M V = D
  REQUIRE(s.u * m * s.v == s.d);
  Int du = s.u.det();
  Int dv = s.v.det();
  REQUIRE((du == 1 || du == -1));
  REQUIRE((dv == 1 || dv == -1));
  // diagonal, nonnegative, divisibility chain
  std::size_t k = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j) REQUIRE(s.d.at(i, j) == 0);
  for (std::size_t i = 0; i < k; ++i) REQUIRE(s.d.at(i, i) >= 0);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (s.d.at(i + 1, i + 1) != 0) {
      REQUIRE(s.d.at(i, i) != 0);
      REQUIRE(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
    }
  }
}

}  // namespace

TEST_CASE("smith normal form of fixed examples") {
  SECTION("identity") {
    auto s = smith_normal_form(IntMatrix::identity(3));
    REQUIRE(s.d == IntMatrix::identity(3));
  }
  SECTION("2x3 with a 2-torsion factor") {
    IntMatrix m = mat({{1, 0, 1}, {0, 2, 0}});
    auto s = smith_normal_form(m);
    REQUIRE(s.d.at(0, 0) == 1);
    REQUIRE(s.d.at(1, 1) == 2);
    check_snf(m);
  }
  SECTION("zero matrix") {
    IntMatrix m(2, 2);
    auto s = smith_normal_form(m);
    REQUIRE(s.d == IntMatrix(2, 2));
    check_snf(m);
  }
  SECTION("rectangular rank deficient") {
    IntMatrix m = mat({{2, 4}, {4, 8}, {6, 12}});
    auto s = smith_normal_form(m);
    REQUIRE(s.d.at(0, 0) == 2);
    REQUIRE(s.d.at(1, 1) == 0);
    check_snf(m);
  }
}

TEST_CASE("smith normal form round trip on random matrices") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    check_snf(m);
  }
}

TEST_CASE("quotient normal forms") {
  SECTION("Z^3 mod single relation (1,0,1)") {
    FgAbelianGroup g(3, IntMatrix::from_columns({vec({1, 0, 1})}));
    REQUIRE(g.free_rank() == 2);
    REQUIRE(g.torsion().empty());
    REQUIRE(is_zero(g.normal_form(vec({1, 0, 1}))));
    REQUIRE(is_zero(g.normal_form(vec({-3, 0, -3}))));
    REQUIRE(!is_zero(g.normal_form(vec({1, 0, 0}))));
  }
  SECTION("torsion reduction") {
    FgAbelianGroup g(2, IntMatrix::from_columns({vec({2, 0})}));
    REQUIRE(g.free_rank() == 1);
    REQUIRE(g.torsion().size() == 1);
    REQUIRE(g.torsion()[0] == 2);
    Vec two_e1 = g.normal_form(vec({2, 0}));
    REQUIRE(is_zero(two_e1));
    Vec e1 = g.normal_form(vec({1, 0}));
    REQUIRE(!is_zero(e1));
    REQUIRE(is_zero(g.nf_add(e1, e1)));
  }
  SECTION("lift is a section") {
    FgAbelianGroup g(3, mat({{2, 1}, {0, 3}, {4, 0}}));
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-20, 20);
    for (int t = 0; t < 200; ++t) {
      Vec x = vec({entry(rng), entry(rng), entry(rng)});
      Vec nf = g.normal_form(x);
      REQUIRE(g.normal_form(g.lift(nf)) == nf);
    }
  }
}

TEST_CASE("coinvariants and invariants") {
  SECTION("identity gives the full lattice") {
    auto g = coinvariants(3, IntMatrix::identity(3));
    REQUIRE(g.free_rank() == 3);
    REQUIRE(g.torsion().empty());
    REQUIRE(invariants(3, IntMatrix::identity(3)).size() == 3);
  }
  SECTION("rank 3 reversal with signs") {
    // e_i -> -e_{4-i}
    IntMatrix gamma = mat({{0, 0, -1}, {0, -1, 0}, {-1, 0, 0}});
    auto g = coinvariants(3, gamma);
    REQUIRE(g.free_rank() == 1);
    REQUIRE(g.torsion() == std::vector<Int>{Int(2)});
    // e_1 + e_3 = (1 - gamma)e_1 dies, e_2 is the 2-torsion class
    REQUIRE(is_zero(g.normal_form(vec({1, 0, 1}))));
    Vec e2 = g.normal_form(vec({0, 1, 0}));
    REQUIRE(!is_zero(e2));
    REQUIRE(is_zero(g.nf_scale(2, e2)));
    REQUIRE(g.free_part(e2) == Vec{Int(0)});
    // e_1 has infinite order with a generating free coordinate
    Vec e1 = g.normal_form(vec({1, 0, 0}));
    REQUIRE(abs(g.free_part(e1)[0]) == 1);
    // invariants: fixed sublattice spanned by e_1 - e_3
    auto inv = invariants(3, gamma);
    REQUIRE(inv.size() == 1);
    REQUIRE(gamma.apply(inv[0]) == inv[0]);
  }
  SECTION("rank 4 reversal is torsion free") {
    IntMatrix gamma(4, 4);
    for (int i = 0; i < 4; ++i) gamma.at(i, 3 - i) = -1;
    auto g = coinvariants(4, gamma);
    REQUIRE(g.free_rank() == 2);
    REQUIRE(g.torsion().empty());
    REQUIRE(is_zero(g.normal_form(vec({1, 0, 0, 1}))));
    REQUIRE(is_zero(g.normal_form(vec({0, 1, 1, 0}))));
    REQUIRE(!is_zero(g.normal_form(vec({0, 1, 0, 0}))));
  }
  SECTION("infinite order is rejected") {
    IntMatrix shear = mat({{1, 1}, {0, 1}});
    REQUIRE_THROWS_AS(coinvariants(2, shear), not_finite_order);
    REQUIRE_THROWS_AS(invariants(2, shear), not_finite_order);
  }
}

TEST_CASE("invariants and coinvariants have equal rank over Q") {
  // Random finite-order gamma: conjugate a signed permutation by a random
  // unimodular matrix.
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> dim(1, 5), coin(0, 1), small(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    int n = dim(rng);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    IntMatrix p(n, n);
    for (int i = 0; i < n; ++i) p.at(perm[i], i) = coin(rng) ? 1 : -1;
    IntMatrix s = IntMatrix::identity(n);
    for (int step = 0; step < 4; ++step) {
      int a = rng() % n, b = rng() % n;
      if (a == b) continue;
      Int c = small(rng);
      for (int j = 0; j < n; ++j) s.at(a, j) += c * s.at(b, j);
    }
    IntMatrix gamma = s * p * s.inverse_unimodular();
    auto g = coinvariants(n, gamma);
    auto inv = invariants(n, gamma);
    REQUIRE(g.free_rank() == inv.size());
    // the fixed basis is saturated: its span over Q meets Z^n in itself
    IntMatrix b = IntMatrix::from_columns(inv);
    if (!inv.empty()) {
      auto snf = smith_normal_form(b);
      for (std::size_t i = 0; i < inv.size(); ++i)
        REQUIRE(snf.d.at(i, i) == 1);
    }
  }
}

TEST_CASE("projection matrix computes normal forms") {
  FgAbelianGroup g(3, mat({{2, 0}, {0, 3}, {0, 0}}));
  IntMatrix p = g.projection();
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-10, 10);
  for (int t = 0; t < 100; ++t) {
    Vec x = vec({entry(rng), entry(rng), entry(rng)});
    Vec via_p = p.apply(x);
    Vec nf = g.normal_form(x);
    // agree up to torsion reduction
    REQUIRE(g.reduce(via_p) == nf);
  }
}
