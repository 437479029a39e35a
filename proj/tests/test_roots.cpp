#include <gtest/gtest.h>

#include "coxrep/roots.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace coxrep;

namespace {

IntVector v(std::initializer_list<long long> xs) { return to_int_vector(xs); }

/// Every vector in [lo, hi]^n, excluding 0.
template <typename F>
void for_each_box_vector(std::size_t n, int lo, int hi, F&& f) {
  IntVector x(n, lo);
  while (true) {
    if (!is_zero(x)) f(x);
    std::size_t k = 0;
    while (k < n && x[k] == hi) x[k++] = lo;
    if (k == n) return;
    ++x[k];
  }
}

}  // namespace

TEST(PositiveRoots, TypeAIntervals) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& q : gen::type_a(n)) {
      auto rs = positive_real_roots(q, Integer(100));
      EXPECT_TRUE(rs.complete);
      ASSERT_EQ(rs.size(), n * (n + 1) / 2);
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
          IntVector r(n);
          for (std::size_t k = i; k <= j; ++k) r[k - 1] = 1;
          EXPECT_TRUE(rs.contains(r));
        }
      }
    }
  }
  EXPECT_EQ(positive_real_roots(Quiver(1, {}), Integer(1)).roots, std::vector<IntVector>{v({1})});
}

TEST(PositiveRoots, D4AgainstOracle) {
  for (const auto& q : gen::type_d4()) {
    auto rs = dynkin_positive_roots(q);
    EXPECT_EQ(rs.size(), 12u);
    std::vector<IntVector> expected;
    for (const auto& r : oracle::positive_roots(oracle::Graph(q))) expected.emplace_back(r.begin(), r.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(rs.roots, expected);
  }
}

TEST(PositiveRoots, ExceptionalCounts) {
  auto e6 = Quiver::from_pairs(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 3}});
  auto e7 = Quiver::from_pairs(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {7, 4}});
  auto e8 = Quiver::from_pairs(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {8, 3}});
  EXPECT_EQ(dynkin_positive_roots(e6).size(), 36u);
  EXPECT_EQ(dynkin_positive_roots(e7).size(), 63u);
  EXPECT_EQ(dynkin_positive_roots(e8).size(), 120u);
}

TEST(PositiveRoots, BoundsAndScope) {
  auto k = gen::kronecker();
  auto rs = positive_real_roots(k, Integer(7));
  EXPECT_FALSE(rs.complete);
  // Real roots of the Kronecker quiver: (m, m+1) and (m+1, m).
  EXPECT_EQ(rs.roots, (std::vector<IntVector>{v({0, 1}), v({1, 0}), v({1, 2}), v({2, 1}), v({2, 3}), v({3, 2}), v({3, 4}), v({4, 3})}));
  EXPECT_THROW(dynkin_positive_roots(k), ScopeError);
  EXPECT_THROW(positive_real_roots(k, Integer(0)), RangeError);
}

TEST(PositiveRoots, RealRootsHaveNormTwoAndIgnoreOrientation) {
  for (auto qs : {gen::type_a(4), gen::type_d4()}) {
    auto base = dynkin_positive_roots(qs[0]).roots;
    for (const auto& q : qs) {
      auto rs = dynkin_positive_roots(q).roots;
      EXPECT_EQ(rs, base);
      for (const auto& r : rs) EXPECT_EQ(sym_form(q, r, r), 2);
    }
  }
  for (const auto& r : positive_real_roots(gen::kronecker(), Integer(30)).roots)
    EXPECT_EQ(sym_form(gen::kronecker(), r, r), 2);
}

TEST(FundamentalCone, Examples) {
  EXPECT_TRUE(in_fundamental_cone(gen::kronecker(), v({1, 1})));
  EXPECT_FALSE(in_fundamental_cone(Quiver::from_pairs(2, {{1, 2}}), v({1, 1})));
  EXPECT_FALSE(in_fundamental_cone(gen::type_a(3)[0], v({1, 0, 1})));
  EXPECT_THROW(in_fundamental_cone(gen::kronecker(), v({0, 0})), DimensionError);
  EXPECT_THROW(in_fundamental_cone(gen::kronecker(), v({1, -1})), DimensionError);
}

TEST(Classify, Examples) {
  auto a2 = Quiver::from_pairs(2, {{2, 1}});
  EXPECT_EQ(classify_vector(a2, v({1, 1}), Integer(100)), RootClass::RealPositive);
  EXPECT_EQ(classify_vector(a2, v({-1, -1}), Integer(100)), RootClass::RealNegative);
  EXPECT_EQ(classify_vector(a2, v({2, 0}), Integer(100)), RootClass::NotARoot);
  EXPECT_EQ(classify_vector(a2, v({1, -1}), Integer(100)), RootClass::NotARoot);
  EXPECT_EQ(classify_vector(a2, v({0, 0}), Integer(100)), RootClass::NotARoot);
  auto k = gen::kronecker();
  EXPECT_EQ(classify_vector(k, v({1, 1}), Integer(100)), RootClass::Imaginary);
  EXPECT_EQ(classify_vector(k, v({3, 3}), Integer(100)), RootClass::Imaginary);
  EXPECT_EQ(classify_vector(k, v({5, 6}), Integer(100)), RootClass::RealPositive);
  EXPECT_EQ(classify_vector(k, v({-5, -6}), Integer(100)), RootClass::RealNegative);
  EXPECT_EQ(classify_vector(k, v({-1, -1}), Integer(100)), RootClass::NotARoot);
  EXPECT_EQ(classify_vector(k, v({1, 3}), Integer(100)), RootClass::NotARoot);
  EXPECT_THROW(classify_vector(k, v({50, 51}), Integer(3)), InconclusiveError);
  EXPECT_THROW(classify_vector(k, v({1, 1, 1}), Integer(3)), DimensionError);
}

TEST(Classify, AgreesWithRootSetsInDynkinType) {
  // No Dynkin vector of height <= 10 is imaginary; real ones are exactly
  // the orbit roots.
  for (auto qs : {gen::type_a(1), gen::type_a(2), gen::type_a(3), gen::type_a(4), gen::type_d4()}) {
    const auto& q = qs[0];
    auto rs = dynkin_positive_roots(q);
    std::size_t n = q.num_vertices();
    for_each_box_vector(n, 0, 10, [&](const IntVector& x) {
      if (height(x) > 10) return;
      auto c = classify_vector(q, x, Integer(1000));
      EXPECT_NE(c, RootClass::Imaginary);
      EXPECT_EQ(c == RootClass::RealPositive, rs.contains(x)) << to_string(x);
    });
  }
}

TEST(Classify, KroneckerImaginaryRootsAreWStable) {
  auto k = gen::kronecker();
  for_each_box_vector(2, -6, 6, [&](const IntVector& x) {
    auto c = classify_vector(k, x, Integer(1000));
    EXPECT_EQ(c == RootClass::Imaginary, x[0] == x[1] && x[0] > 0) << to_string(x);
    if (c != RootClass::Imaginary) return;
    for (Vertex i = 1; i <= 2; ++i)
      EXPECT_EQ(classify_vector(k, simple_reflection(k, i, x), Integer(1000)), RootClass::Imaginary);
  });
  // A wild quiver: three arrows 1 -> 2. (1,1) lies in the cone and so does
  // everything in its orbit.
  auto wild = Quiver::from_pairs(2, {{1, 2}, {1, 2}, {1, 2}});
  IntVector x = v({1, 1});
  for (int t = 0; t < 6; ++t) {
    EXPECT_EQ(classify_vector(wild, x, Integer(1000)), RootClass::Imaginary) << to_string(x);
    x = simple_reflection(wild, t % 2 + 1, x);
  }
}
