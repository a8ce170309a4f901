#include <orbitope/curve.hpp>
#include <orbitope/toeplitz.hpp>

#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <complex>
#include <numbers>
#include <random>

using namespace orbitope;

namespace {

using cd = std::complex<double>;

Eigen::MatrixXcd dense(const HermitianToeplitz& m) {
  const auto s = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXcd out(s, s);
  for (Eigen::Index a = 0; a < s; ++a)
    for (Eigen::Index b = 0; b < s; ++b) {
      const auto e = m.at(a, b);
      out(a, b) = cd(e.re, e.im);
    }
  return out;
}

// rank of a Hermitian matrix from its own complex eigen decomposition
std::size_t hermitian_rank(const Eigen::MatrixXcd& m, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double cut = tol * std::max(ev.cwiseAbs().maxCoeff(), 1.0);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (std::abs(ev(i)) > cut) ++r;
  return r;
}

// separated: angles jittered around m equally spaced ones, which keeps the
// Vandermonde factor well conditioned
std::vector<double> convex_combination(const Representation& rep, std::size_t m, std::mt19937_64& rng,
                                       bool separated = false) {
  std::uniform_real_distribution<double> ang(0, 2 * std::numbers::pi), wt(0.05, 1.0), jit(-0.25, 0.25);
  std::vector<double> w(m);
  double total = 0;
  for (auto& x : w) total += (x = wt(rng));
  const double offset = ang(rng), step = 2 * std::numbers::pi / double(m);
  std::vector<double> out(2 * rep.size(), 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const double t = separated ? offset + step * (double(i) + jit(rng)) : ang(rng);
    const auto p = orbit_point(rep, t);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += w[i] / total * p[k];
  }
  return out;
}

}  // namespace

TEST(Embed, Examples) {
  const auto id = dense(embed(std::vector<double>(6, 0.0)));
  EXPECT_TRUE(id.isApprox(Eigen::MatrixXcd::Identity(4, 4)));

  const auto ones = dense(embed(std::vector<double>{1, 0, 1, 0, 1, 0}));
  EXPECT_TRUE(ones.isApprox(Eigen::MatrixXcd::Ones(4, 4)));

  EXPECT_THROW(embed(std::vector<double>{1, 0, 1}), std::invalid_argument);
  EXPECT_THROW(embed(std::vector<double>{}), std::invalid_argument);
}

TEST(Embed, OrbitPointIsOuterProduct) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto rep = universal_representation(n);
    for (double t : {0.0, 0.4, 2.1, 5.9}) {
      Eigen::VectorXcd v(n + 1);
      for (std::size_t k = 0; k <= n; ++k) v(k) = std::polar(1.0, -double(k) * t);
      const Eigen::MatrixXcd outer = v * v.adjoint();
      const auto m = dense(embed(orbit_point(rep, t)));
      EXPECT_LT((m - outer).cwiseAbs().maxCoeff(), 1e-13) << "n=" << n << " t=" << t;
      EXPECT_TRUE(m.isApprox(m.adjoint()));
    }
  }
}

TEST(RealEmbedding, SpectrumMatchesComplexEigenvalues) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g(0, 0.3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> p(8);
    for (auto& x : p) x = g(rng);
    const auto m = embed(p);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense(m), Eigen::EigenvaluesOnly);
    const auto ours = m.eigenvalues();
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) EXPECT_NEAR(ours[i], es.eigenvalues()(i), 1e-12);
  }
}

TEST(IsMember, Examples) {
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(is_member(std::vector<double>(2 * n, 0.0)), Membership::Interior);
    std::vector<double> far(2 * n, 0.0);
    far[0] = 2;
    EXPECT_EQ(is_member(far), Membership::Outside);
    const auto rep = universal_representation(n);
    for (double t : {0.0, 1.0, 3.3}) EXPECT_EQ(is_member(orbit_point(rep, t)), Membership::Boundary);
  }
}

TEST(FaceDimension, Examples) {
  const auto rep = universal_representation(3);
  EXPECT_EQ(face_dimension(orbit_point(rep, 0.7)), std::optional<std::size_t>(0));
  const auto a = orbit_point(rep, 0.2), b = orbit_point(rep, 2.5);
  std::vector<double> mid(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mid[i] = 0.5 * (a[i] + b[i]);
  EXPECT_EQ(face_dimension(mid), std::optional<std::size_t>(1));
  EXPECT_FALSE(face_dimension(std::vector<double>(6, 0.0)).has_value());
  EXPECT_THROW(face_dimension(std::vector<double>{2, 0, 0, 0}), std::domain_error);
}

TEST(SecantMembership, Examples) {
  const auto rep = universal_representation(4);
  EXPECT_TRUE(secant_membership_universal(orbit_point(rep, 1.1), 1));
  EXPECT_FALSE(secant_membership_universal(std::vector<double>(8, 0.0), 3));
  EXPECT_THROW(secant_membership_universal(std::vector<double>(8, 0.0), 4), std::out_of_range);
  EXPECT_THROW(secant_membership_universal(std::vector<double>(7, 0.0), 1), std::invalid_argument);

  std::mt19937_64 rng(5);
  for (std::size_t k = 0; k < 4; ++k)
    for (int trial = 0; trial < 20; ++trial) {
      const auto p = convex_combination(rep, k + 1, rng);
      EXPECT_TRUE(secant_membership_universal(p, k));
      if (k + 1 < 4) EXPECT_FALSE(secant_membership_universal(convex_combination(rep, k + 2, rng), k));
    }
}

TEST(RankProperty, ConvexCombinationsOfOrbitPoints) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto rep = universal_representation(n);
    for (std::size_t m = 1; m <= n; ++m)
      for (int trial = 0; trial < 200; ++trial) {
        const auto p = convex_combination(rep, m, rng);
        const auto r = membership_report(p);
        EXPECT_NE(r.verdict, Membership::Outside);
        EXPECT_LE(r.rank, m) << "n=" << n << " m=" << m;
        EXPECT_EQ(hermitian_rank(dense(embed(p)), 1e-9), r.rank);
        // well separated points reach rank m
        EXPECT_EQ(membership_report(convex_combination(rep, m, rng, true)).rank, m) << "n=" << n << " m=" << m;
      }
  }
}

TEST(ToeplitzDeterminant, MatchesDenseDeterminant) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g(0, 0.5);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto det = toeplitz_determinant(n);
    EXPECT_EQ(det.nvars(), 2 * n);
    // the cyclic permutation contributes c_1^n conj(c_n)
    EXPECT_EQ(det.degree(), static_cast<int>(n + 1));
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<double> p(2 * n);
      for (auto& x : p) x = g(rng);
      const double want = dense(embed(p)).determinant().real();
      EXPECT_NEAR(eval(to_float(det), p), want, 1e-10 * std::max(1.0, std::abs(want)));
    }
  }
  EXPECT_THROW(toeplitz_determinant(0), std::out_of_range);
}

TEST(ToeplitzDeterminant, TwoByTwoByHand) {
  // det [[1, c], [conj c, 1]] = 1 - x^2 - y^2
  const auto det = toeplitz_determinant(1);
  QPoly want = QPoly::constant(2, Rational(1)) - QPoly::variable(2, 0) * QPoly::variable(2, 0) -
               QPoly::variable(2, 1) * QPoly::variable(2, 1);
  EXPECT_TRUE((det - want).is_zero());
}
