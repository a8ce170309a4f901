#include <orbitope/linalg.hpp>
#include <orbitope/lp.hpp>

#include <gtest/gtest.h>

#include <gmp.h>

#include <random>

using namespace orbitope;
using namespace orbitope::linalg;

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

// random integer matrix rows x cols of rank exactly `rank` (generic), built
// as a product of two random integer factors
IntMatrix low_rank(std::size_t rows, std::size_t cols, std::size_t rank, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-9, 9);
  IntMatrix a(rows, std::vector<Integer>(rank)), b(rank, std::vector<Integer>(cols));
  for (auto& r : a)
    for (auto& x : r) x = d(rng);
  for (auto& r : b)
    for (auto& x : r) x = d(rng);
  IntMatrix m(rows, std::vector<Integer>(cols, Integer(0)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < rank; ++k)
      for (std::size_t j = 0; j < cols; ++j) m[i][j] += a[i][k] * b[k][j];
  return m;
}

Eigen::MatrixXd to_double(const IntMatrix& m) {
  Eigen::MatrixXd out(m.size(), m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) out(i, j) = m[i][j].get_d();
  return out;
}

void expect_exact_null(const IntMatrix& m, const std::vector<Rational>& v) {
  for (const auto& row : m) {
    Rational s = 0;
    for (std::size_t j = 0; j < row.size(); ++j) s += Rational(row[j]) * v[j];
    EXPECT_EQ(s, 0);
  }
}

ExactNullspace multimodular(const IntMatrix& m) {
  const std::size_t cols = m[0].size();
  return exact_nullspace_multimodular(
      m.size(), cols,
      [&](std::size_t i, u64 p, std::vector<u64>& out) {
        for (std::size_t j = 0; j < cols; ++j) out[j] = reduce_mod(m[i][j], p);
      },
      [&](std::size_t i, std::vector<Rational>& out) {
        for (std::size_t j = 0; j < cols; ++j) out[j] = m[i][j];
      });
}

}  // namespace

TEST(Modular, FermatAndInverses) {
  std::mt19937_64 rng(1);
  for (std::size_t i = 0; i < 5; ++i) {
    const u64 p = large_prime(i);
    EXPECT_GT(p, u64(1) << 61);
    // independent primality test from GMP
    EXPECT_GT(mpz_probab_prime_p(to_integer(p).get_mpz_t(), 30), 0);
    for (int k = 0; k < 50; ++k) {
      const u64 a = rng() % (p - 1) + 1;
      EXPECT_EQ(powmod(a, p - 1, p), 1u);
      EXPECT_EQ(mulmod(a, invmod(a, p), p), 1u);
      EXPECT_EQ(addmod(a, submod(0, a, p), p), 0u);
    }
  }
  EXPECT_NE(large_prime(0), large_prime(1));
}

TEST(Modular, ReduceMatchesGmp) {
  const u64 p = large_prime(0);
  Integer big("-123456789012345678901234567890");
  Integer want;
  mpz_fdiv_r(want.get_mpz_t(), big.get_mpz_t(), to_integer(p).get_mpz_t());
  EXPECT_EQ(to_integer(reduce_mod(big, p)), want);
  // 3/7 times 7 is 3
  EXPECT_EQ(mulmod(reduce_mod(Rational(3, 7), p), 7, p), 3u);
}

TEST(RationalReconstruct, RecoversSmallFractions) {
  const Integer m = to_integer(large_prime(0)) * to_integer(large_prime(1));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  for (int k = 0; k < 200; ++k) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    Integer inv, x;
    ASSERT_NE(mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), m.get_mpz_t()), 0);
    x = q.get_num() * inv;
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    auto r = rational_reconstruct(x, m);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r, q);
  }
}

TEST(ExactNullspace, BareissAndMultimodularAgree) {
  std::mt19937_64 rng(3);
  for (auto [rows, cols, rank] : std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>{
           {6, 5, 4}, {10, 8, 5}, {12, 12, 11}, {20, 15, 15}, {9, 9, 1}}) {
    const auto m = low_rank(rows, cols, rank, rng);
    const std::size_t want_rank = Eigen::FullPivLU<Eigen::MatrixXd>(to_double(m)).rank();
    const auto a = bareiss_nullspace(m);
    const auto b = multimodular(m);
    EXPECT_EQ(a.rank, want_rank);
    EXPECT_EQ(b.rank, want_rank);
    ASSERT_EQ(a.basis.size(), cols - want_rank);
    ASSERT_EQ(b.basis.size(), cols - want_rank);
    // both are the canonical basis (1 at each free column), so they coincide
    EXPECT_EQ(a.basis, b.basis);
    for (const auto& v : a.basis) expect_exact_null(m, v);
  }
}

TEST(ExactNullspace, NeedsSeveralPrimesForLargeEntries) {
  // kernel vector (N, -1) with N far beyond one 62-bit prime
  const Integer big("98765432109876543210987654321");
  IntMatrix m{{Integer(1), big}, {Integer(2), 2 * big}};
  const auto r = multimodular(m);
  ASSERT_EQ(r.basis.size(), 1u);
  expect_exact_null(m, r.basis[0]);
  EXPECT_GE(r.primes_used, 2u);
}

TEST(SvdNullspace, FindsPlantedNullspace) {
  std::mt19937_64 rng(4);
  for (auto [rows, cols, rank] : std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>{
           {40, 30, 27}, {100, 60, 59}, {50, 20, 20}}) {
    const auto m = low_rank(rows, cols, rank, rng);
    const Eigen::MatrixXd d = to_double(m);
    std::vector<double> flat;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) flat.push_back(d(i, j));
    const auto r = svd_nullspace(flat, rows, cols, 1e-9);
    ASSERT_EQ(r.basis.size(), cols - rank);
    for (const auto& v : r.basis) {
      const Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(v.data(), v.size());
      EXPECT_LT((d * x).norm(), 1e-9 * d.norm() * x.norm());
    }
    if (rank < cols) {
      EXPECT_GT(r.gap_ratio, 1e4);
    } else {
      EXPECT_TRUE(std::isinf(r.gap_ratio));
    }
    EXPECT_EQ(numerical_rank(d, 1e-9), rank);
  }
  EXPECT_THROW(svd_nullspace(std::vector<double>(6, 1.0), 2, 3, 1e-9), std::invalid_argument);
}

TEST(LinearProgram, SmallExamples) {
  // max x + y, x <= 1, y <= 2, x + y <= 2.5, -x <= 0, -y <= 0
  Eigen::MatrixXd A(5, 2);
  A << 1, 0, 0, 1, 1, 1, -1, 0, 0, -1;
  Eigen::VectorXd b(5);
  b << 1, 2, 2.5, 0, 0;
  Eigen::VectorXd c(2);
  c << 1, 1;
  auto r = lp::maximize(A, b, c);
  ASSERT_EQ(r.status, lp::Status::Optimal);
  EXPECT_NEAR(r.value, 2.5, 1e-12);
  EXPECT_LE((A * r.x - b).maxCoeff(), 1e-12);

  // max x with only x >= 0: unbounded
  Eigen::MatrixXd A2(1, 1);
  A2 << -1;
  auto u = lp::maximize(A2, Eigen::VectorXd::Zero(1), Eigen::VectorXd::Ones(1));
  EXPECT_EQ(u.status, lp::Status::Unbounded);

  // x <= -1 and -x <= -1: infeasible
  Eigen::MatrixXd A3(2, 1);
  A3 << 1, -1;
  Eigen::VectorXd b3(2);
  b3 << -1, -1;
  EXPECT_EQ(lp::maximize(A3, b3, Eigen::VectorXd::Ones(1)).status, lp::Status::Infeasible);
}

TEST(LinearProgram, MatchesVertexEnumerationInThePlane) {
  // polygons circumscribing the unit circle; the optimum of c.x is the best vertex
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ang(0, 2 * std::numbers::pi), rad(1.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int N = 3 + trial % 20;
    std::vector<double> th(N);
    for (auto& t : th) t = ang(rng);
    std::sort(th.begin(), th.end());
    // force a bounded polygon: normals spaced at most 2pi/3 apart
    for (int i = 0; i < N; ++i) th[i] = 2 * std::numbers::pi * i / N + 0.3 * (th[i] - std::numbers::pi) / N;
    Eigen::MatrixXd A(N, 2);
    Eigen::VectorXd b(N);
    for (int i = 0; i < N; ++i) {
      A(i, 0) = std::cos(th[i]);
      A(i, 1) = std::sin(th[i]);
      b(i) = rad(rng);
    }
    const double phi = ang(rng);
    Eigen::Vector2d c(std::cos(phi), std::sin(phi));
    double best = -INFINITY;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j) {
        Eigen::Matrix2d M;
        M << A.row(i), A.row(j);
        if (std::abs(M.determinant()) < 1e-12) continue;
        const Eigen::Vector2d v = M.inverse() * Eigen::Vector2d(b(i), b(j));
        if ((A * v - b).maxCoeff() <= 1e-9) best = std::max(best, c.dot(v));
      }
    auto r = lp::maximize(A, b, c);
    ASSERT_EQ(r.status, lp::Status::Optimal);
    EXPECT_NEAR(r.value, best, 1e-9);
  }
}
