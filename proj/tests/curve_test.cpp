#include <orbitope/curve.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

using namespace orbitope;

namespace {

void expect_vec_near(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], tol) << "coordinate " << i;
}

std::vector<Rational> rv(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// every nonempty subset of {1..jmax} with gcd 1 and maximum jmax' <= jmax
std::vector<Representation> reduced_sets(unsigned jmax) {
  std::vector<Representation> out;
  for (unsigned mask = 1; mask < (1u << jmax); ++mask) {
    std::vector<unsigned> idx;
    unsigned g = 0;
    for (unsigned j = 1; j <= jmax; ++j)
      if (mask & (1u << (j - 1))) {
        idx.push_back(j);
        g = std::gcd(g, j);
      }
    if (g == 1) out.emplace_back(idx);
  }
  return out;
}

}  // namespace

TEST(Representation, ParseAndValidate) {
  EXPECT_EQ(Representation::parse("1,3").indices(), (std::vector<unsigned>{1, 3}));
  EXPECT_EQ(Representation::parse(" 3, -1 ").indices(), (std::vector<unsigned>{1, 3}));
  EXPECT_EQ(Representation::parse("2,6").to_string(), "2,6");
  EXPECT_THROW(Representation::parse("1,,3"), std::invalid_argument);
  EXPECT_THROW(Representation::parse("0,1"), std::invalid_argument);
  EXPECT_THROW(Representation::parse("1,1"), std::invalid_argument);
  EXPECT_THROW(Representation::parse("x"), std::invalid_argument);
  EXPECT_THROW(Representation(std::vector<unsigned>{}), std::invalid_argument);
}

TEST(Reduce, Examples) {
  EXPECT_EQ(reduce(Representation({1, 3})), Representation({1, 3}));
  EXPECT_EQ(reduce(Representation({2, 6})), Representation({1, 3}));
  EXPECT_EQ(reduce(Representation({3, 5})), Representation({3, 5}));
  EXPECT_FALSE(Representation({2, 6}).is_reduced());
}

TEST(Reduce, IdempotentAndPreservesOrbit) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> ang(0.0, 2 * std::numbers::pi);
  for (auto idx : {std::vector<unsigned>{2, 6}, {3, 9, 12}, {4}, {5, 10, 15}}) {
    Representation rep(idx);
    auto red = reduce(rep);
    EXPECT_EQ(reduce(red), red);
    const double d = rep.gcd();
    for (int i = 0; i < 100; ++i) {
      const double t = ang(rng);
      // rep at t equals red at d t, and red at t equals rep at t / d
      expect_vec_near(orbit_point(rep, t), orbit_point(red, d * t), 1e-12);
      expect_vec_near(orbit_point(red, t), orbit_point(rep, t / d), 1e-12);
    }
  }
}

TEST(OrbitPoint, Examples) {
  Representation rep({1, 3});
  expect_vec_near(orbit_point(rep, 0), {1, 0, 1, 0}, 1e-15);
  expect_vec_near(orbit_point(rep, std::numbers::pi), {-1, 0, -1, 0}, 1e-15);
  expect_vec_near(orbit_point(rep, std::numbers::pi / 2), {0, 1, 0, -1}, 1e-15);
}

TEST(OrbitTangent, MatchesFiniteDifference) {
  Representation rep({1, 3, 4});
  const double h = 1e-6;
  for (double t : {0.1, 1.3, 4.0}) {
    auto a = orbit_point(rep, t + h), b = orbit_point(rep, t - h), d = orbit_tangent(rep, t);
    for (std::size_t i = 0; i < d.size(); ++i) EXPECT_NEAR((a[i] - b[i]) / (2 * h), d[i], 1e-8);
  }
}

TEST(RationalPoint, Examples) {
  EXPECT_EQ(rational_point(Representation({1, 3}), Rational(0)), rv({1, 0, 1, 0}));
  EXPECT_EQ(rational_point(Representation({1, 3}), Rational(1)), rv({0, 1, 0, -1}));
  EXPECT_EQ(rational_point(Representation({1}), Rational(1, 2)),
            (std::vector<Rational>{Rational(3, 5), Rational(4, 5)}));
}

TEST(RationalPoint, AgreesWithTrigonometricParametrization) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
  for (auto idx : {std::vector<unsigned>{1, 3}, {1, 2, 3, 4}, {2, 5, 7}}) {
    Representation rep(idx);
    for (int i = 0; i < 50; ++i) {
      Rational t(num(rng), den(rng));
      t.canonicalize();
      auto exact = rational_point(rep, t);
      auto fl = orbit_point(rep, 2 * std::atan(t.get_d()));
      for (std::size_t k = 0; k < fl.size(); ++k) EXPECT_NEAR(exact[k].get_d(), fl[k], 1e-12);
      // the orbit lies on the sphere of radius sqrt(r), exactly
      Rational norm = 0;
      for (const auto& v : exact) norm += v * v;
      EXPECT_EQ(norm, Rational(static_cast<long>(rep.size())));
    }
  }
}

TEST(CurveInfo, Examples) {
  auto a = curve_info(Representation({1, 3}));
  EXPECT_EQ(a.degree, 6u);
  EXPECT_FALSE(a.smooth);
  EXPECT_EQ(a.ambient_dim, 4u);
  ASSERT_TRUE(a.singular_points.has_value());
  const auto& [p, q] = *a.singular_points;
  ASSERT_EQ(p.size(), 5u);
  for (std::size_t i = 0; i + 2 < p.size(); ++i) EXPECT_EQ(p[i], 0.0);
  EXPECT_EQ(p[3], 1.0);
  EXPECT_EQ(p[4], std::complex<double>(0, 1));
  EXPECT_EQ(q[4], std::complex<double>(0, -1));

  auto b = curve_info(Representation({2, 3}));
  EXPECT_EQ(b.degree, 6u);
  EXPECT_TRUE(b.smooth);
  EXPECT_FALSE(b.singular_points.has_value());

  for (unsigned n = 1; n <= 8; ++n) {
    auto c = curve_info(universal_representation(n));
    EXPECT_EQ(c.degree, 2 * n);
    EXPECT_TRUE(c.smooth) << n;
  }
  // degree uses j / d
  EXPECT_EQ(curve_info(Representation({2, 6})).degree, 6u);
}

TEST(DegreeProbe, Examples) {
  EXPECT_EQ(numeric_degree_probe(Representation({1, 3}), 1), 6u);
  EXPECT_EQ(numeric_degree_probe(Representation({1, 2}), 1), 4u);
  EXPECT_EQ(numeric_degree_probe(Representation({2, 3}), 1), 6u);
  EXPECT_THROW(numeric_degree_probe(Representation({2, 6}), 1), std::invalid_argument);
}

TEST(DegreeProbe, MatchesFormulaForAllReducedSetsUpToNine) {
  const auto sets = reduced_sets(9);
  EXPECT_EQ(sets.size(), 488u);  // Moebius count of gcd-1 subsets of {1..9}
  for (const auto& rep : sets) {
    const unsigned want = 2 * rep.max_index();  // d = 1 for reduced sets
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      unsigned got = 0;
      for (std::uint64_t s = seed;; s += 1000) {
        try {
          got = numeric_degree_probe(rep, s);
          break;
        } catch (const DegenerateHyperplane&) {
        }
      }
      EXPECT_EQ(got, want) << rep.to_string() << " seed " << seed;
    }
  }
}
