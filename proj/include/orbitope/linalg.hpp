#pragma once

#include <orbitope/rational.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitope::linalg {

// ---------------------------------------------------------------------------
// Arithmetic modulo a word-size prime.

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
inline u64 addmod(u64 a, u64 b, u64 p) { u64 s = a + b; return s >= p ? s - p : s; }
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("invmod: zero has no inverse");
  return powmod(a, p - 2, p);
}

// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

/// The `index`-th prime below 2^62, counting downwards.
inline u64 large_prime(std::size_t index) {
  static thread_local std::vector<u64> cache;
  u64 cand = cache.empty() ? (u64{1} << 62) - 1 : cache.back() - 2;
  while (cache.size() <= index) {
    while (!is_prime_u64(cand)) cand -= 2;
    cache.push_back(cand);
    cand -= 2;
  }
  return cache[index];
}

static_assert(sizeof(unsigned long) == 8, "word-size primes need 64-bit unsigned long");

inline Integer to_integer(u64 x) { return Integer(static_cast<unsigned long>(x)); }

inline u64 reduce_mod(const Integer& z, u64 p) {
  return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
}

/// Image of a rational in Z/p; throws if p divides the denominator.
inline u64 reduce_mod(const Rational& q, u64 p) {
  u64 n = reduce_mod(q.get_num(), p), d = reduce_mod(q.get_den(), p);
  return mulmod(n, invmod(d, p), p);
}

struct ModMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<u64> a;
  u64& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  u64 operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

struct ModNullspace {
  std::size_t rank = 0;
  std::vector<std::size_t> free_cols;
  // one vector per free column, with a 1 at that column and 0 at the others
  std::vector<std::vector<u64>> basis;
};

/// Reduced row echelon form modulo p, then the canonical nullspace basis.
inline ModNullspace nullspace_mod_p(ModMatrix m, u64 p) {
  const std::size_t R = m.rows, C = m.cols;
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t piv = row;
    while (piv < R && m(piv, col) == 0) ++piv;
    if (piv == R) continue;
    if (piv != row)
      std::swap_ranges(m.a.begin() + piv * C, m.a.begin() + (piv + 1) * C, m.a.begin() + row * C);
    const u64 inv = invmod(m(row, col), p);
    for (std::size_t j = col; j < C; ++j) m(row, j) = mulmod(m(row, j), inv, p);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == row) continue;
      const u64 f = m(i, col);
      if (f == 0) continue;
      u64* dst = &m.a[i * C];
      const u64* src = &m.a[row * C];
      for (std::size_t j = col; j < C; ++j) dst[j] = submod(dst[j], mulmod(f, src[j], p), p);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  ModNullspace out;
  out.rank = pivot_cols.size();
  std::vector<bool> is_pivot(C, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t c = 0; c < C; ++c)
    if (!is_pivot[c]) out.free_cols.push_back(c);
  for (auto fc : out.free_cols) {
    std::vector<u64> v(C, 0);
    v[fc] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = (p - m(r, fc)) % p;
    out.basis.push_back(std::move(v));
  }
  return out;
}

/// Wang's rational reconstruction: a/b = x mod m with |a|, b <= sqrt(m/2).
inline std::optional<Rational> rational_reconstruct(const Integer& x, const Integer& m) {
  Integer bound = sqrt(m / 2);
  Integer r0 = m, r1 = x % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (abs(t1) > bound || t1 == 0) return std::nullopt;
  Integer g = gcd(r1, t1);
  if (g != 1) return std::nullopt;
  Rational q(r1, t1);
  q.canonicalize();
  return q;
}

struct ExactNullspace {
  std::vector<std::vector<Rational>> basis;
  std::size_t rank = 0;
  std::size_t primes_used = 0;  // 0 for the fraction-free route
};

/// Exact nullspace of a rational matrix given row-wise through `row_mod_p`
/// (row image modulo p) and `row_exact` (exact row). Candidates come from
/// modular RREF lifted by CRT and rational reconstruction; each candidate is
/// accepted only after exact verification against every row. Because
/// rank over Q >= rank mod p, the verified vectors span the full nullspace.
inline ExactNullspace exact_nullspace_multimodular(
    std::size_t rows, std::size_t cols,
    const std::function<void(std::size_t, u64, std::vector<u64>&)>& row_mod_p,
    const std::function<void(std::size_t, std::vector<Rational>&)>& row_exact,
    std::size_t max_primes = 12) {
  Integer modulus = 1;
  std::vector<std::vector<Integer>> lifted;  // CRT residues per basis vector
  std::optional<ModNullspace> ref;
  std::size_t used = 0;
  std::vector<Rational> exact_row(cols);
  std::vector<u64> buf(cols);
  for (std::size_t pi = 0; used < max_primes; ++pi) {
    const u64 p = large_prime(pi);
    ModMatrix m{rows, cols, std::vector<u64>(rows * cols)};
    bool bad_prime = false;
    for (std::size_t i = 0; i < rows && !bad_prime; ++i) {
      try {
        row_mod_p(i, p, buf);
      } catch (const std::domain_error&) {
        bad_prime = true;  // p divides a denominator
      }
      std::copy(buf.begin(), buf.end(), m.a.begin() + i * cols);
    }
    if (bad_prime) continue;
    ModNullspace ns = nullspace_mod_p(std::move(m), p);
    ++used;
    if (ns.free_cols.empty()) return ExactNullspace{{}, cols, used};
    const Integer P = to_integer(p);
    if (!ref || ns.rank > ref->rank) {
      // a larger rank means all previous primes were unlucky
      ref = ns;
      modulus = P;
      lifted.assign(ns.basis.size(), std::vector<Integer>(cols));
      for (std::size_t b = 0; b < ns.basis.size(); ++b)
        for (std::size_t c = 0; c < cols; ++c) lifted[b][c] = to_integer(ns.basis[b][c]);
    } else if (ns.rank < ref->rank || ns.free_cols != ref->free_cols) {
      continue;  // unlucky prime
    } else {
      // CRT: x = x0 + modulus * ((r - x0) * modulus^{-1} mod p)
      const u64 minv = invmod(reduce_mod(modulus, p), p);
      for (std::size_t b = 0; b < ns.basis.size(); ++b) {
        for (std::size_t c = 0; c < cols; ++c) {
          u64 x0 = reduce_mod(lifted[b][c], p);
          u64 k = mulmod(submod(ns.basis[b][c], x0, p), minv, p);
          lifted[b][c] += modulus * to_integer(k);
        }
      }
      modulus *= P;
    }
    // attempt reconstruction + exact verification
    std::vector<std::vector<Rational>> cand;
    bool ok = true;
    for (std::size_t b = 0; b < lifted.size() && ok; ++b) {
      std::vector<Rational> v(cols);
      for (std::size_t c = 0; c < cols && ok; ++c) {
        auto q = rational_reconstruct(lifted[b][c], modulus);
        if (!q) ok = false;
        else v[c] = *q;
      }
      if (ok) cand.push_back(std::move(v));
    }
    if (!ok) continue;
    for (std::size_t i = 0; i < rows && ok; ++i) {
      row_exact(i, exact_row);
      for (const auto& v : cand) {
        Rational s = 0;
        for (std::size_t c = 0; c < cols; ++c)
          if (sgn(v[c]) != 0) s += exact_row[c] * v[c];
        if (sgn(s) != 0) { ok = false; break; }
      }
    }
    if (ok) return ExactNullspace{std::move(cand), ref->rank, used};
  }
  throw std::runtime_error("exact nullspace: reconstruction did not stabilize within the prime budget");
}

/// Fraction-free (Bareiss) elimination on an integer matrix; returns the
/// nullspace basis over Q in canonical form (1 at each free column).
inline ExactNullspace bareiss_nullspace(std::vector<std::vector<Integer>> m) {
  const std::size_t R = m.size();
  if (R == 0) throw std::invalid_argument("bareiss_nullspace: empty matrix");
  const std::size_t C = m[0].size();
  std::vector<std::size_t> pivot_cols;
  Integer prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t piv = row;
    while (piv < R && m[piv][col] == 0) ++piv;
    if (piv == R) continue;
    std::swap(m[piv], m[row]);
    const Integer& pv = m[row][col];
    for (std::size_t i = row + 1; i < R; ++i) {
      for (std::size_t j = col + 1; j < C; ++j) {
        m[i][j] = (pv * m[i][j] - m[i][col] * m[row][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = pv;
    pivot_cols.push_back(col);
    ++row;
  }
  ExactNullspace out;
  out.rank = pivot_cols.size();
  std::vector<bool> is_pivot(C, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t fc = 0; fc < C; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rational> v(C, Rational(0));
    v[fc] = 1;
    // back substitution on the echelon rows
    for (std::size_t r = pivot_cols.size(); r-- > 0;) {
      const std::size_t pc = pivot_cols[r];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < C; ++j)
        if (sgn(v[j]) != 0) s += Rational(m[r][j]) * v[j];
      v[pc] = -s / Rational(m[r][pc]);
    }
    out.basis.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Floating point.

struct SvdNullspace {
  std::vector<double> singular_values;  // descending
  std::vector<std::vector<double>> basis;
  double sigma_max = 0;
  double smallest_kept = 0;
  double largest_dropped = 0;
  double gap_ratio = 0;  // +inf when nothing is dropped
};

/// Nullspace of a dense row-major matrix. Columns are scaled to unit norm,
/// the matrix is reduced to its n x n triangular factor by Householder QR
/// and the factor goes through divide-and-conquer SVD. Singular values below
/// rel_threshold * sigma_max are null directions; returned vectors are
/// unscaled.
inline SvdNullspace svd_nullspace(std::vector<double> a, std::size_t rows, std::size_t cols,
                                  double rel_threshold) {
  if (rows < cols) throw std::invalid_argument("svd_nullspace: need rows >= cols");
  const auto R = static_cast<Eigen::Index>(rows), C = static_cast<Eigen::Index>(cols);
  Eigen::VectorXd scale = Eigen::VectorXd::Zero(C);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) scale(j) += a[i * cols + j] * a[i * cols + j];
  for (Eigen::Index j = 0; j < C; ++j) scale(j) = scale(j) > 0 ? 1.0 / std::sqrt(scale(j)) : 1.0;
  Eigen::MatrixXd m(R, C);
  for (Eigen::Index i = 0; i < R; ++i)
    for (Eigen::Index j = 0; j < C; ++j) m(i, j) = a[i * cols + j] * scale(j);
  std::vector<double>().swap(a);

  Eigen::MatrixXd tri;
  {
    Eigen::HouseholderQR<Eigen::Ref<Eigen::MatrixXd>> qr(m);
    tri = qr.matrixQR().topRows(C).triangularView<Eigen::Upper>();
  }
  m.resize(0, 0);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(tri, Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) throw std::runtime_error("svd_nullspace: SVD did not converge");
  const Eigen::VectorXd& s = svd.singularValues();
  const Eigen::MatrixXd& V = svd.matrixV();

  SvdNullspace out;
  out.singular_values.assign(s.data(), s.data() + s.size());
  out.sigma_max = s.size() ? s(0) : 0;
  const double cut = rel_threshold * out.sigma_max;
  std::size_t keep = 0;
  while (keep < cols && s(static_cast<Eigen::Index>(keep)) >= cut) ++keep;
  out.smallest_kept = keep ? s(static_cast<Eigen::Index>(keep - 1)) : 0;
  // deflation can return exact zeros; ||R v|| = ||A v|| is the honest size
  out.largest_dropped = 0;
  for (std::size_t k = keep; k < cols; ++k) {
    const auto kk = static_cast<Eigen::Index>(k);
    out.largest_dropped = std::max({out.largest_dropped, s(kk), (tri * V.col(kk)).norm()});
  }
  out.gap_ratio = keep < cols ? (out.largest_dropped > 0 ? out.smallest_kept / out.largest_dropped
                                                         : INFINITY)
                              : INFINITY;
  for (std::size_t k = keep; k < cols; ++k) {
    std::vector<double> v(cols);
    for (std::size_t j = 0; j < cols; ++j)
      v[j] = V(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) * scale(static_cast<Eigen::Index>(j));
    out.basis.push_back(std::move(v));
  }
  return out;
}

/// Numerical rank with a relative threshold on the singular values.
inline std::size_t numerical_rank(const Eigen::MatrixXd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * sv(0)) ++r;
  return r;
}

}  // namespace orbitope::linalg
