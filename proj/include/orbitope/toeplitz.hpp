#pragma once

#include <orbitope/poly.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace orbitope {

struct ComplexEntry {
  double re = 0, im = 0;
};

/// (n+1) x (n+1) Hermitian Toeplitz matrix with unit diagonal; entry (a, b)
/// for b > a is c_{b-a}, conjugated below the diagonal.
class HermitianToeplitz {
 public:
  explicit HermitianToeplitz(std::vector<ComplexEntry> entries) : c_(std::move(entries)) {
    if (c_.empty()) throw std::invalid_argument("HermitianToeplitz: n must be >= 1");
  }

  std::size_t n() const { return c_.size(); }
  std::size_t size() const { return c_.size() + 1; }
  const std::vector<ComplexEntry>& entries() const { return c_; }

  ComplexEntry at(std::size_t a, std::size_t b) const {
    if (a == b) return {1.0, 0.0};
    if (b > a) return c_[b - a - 1];
    const auto& e = c_[a - b - 1];
    return {e.re, -e.im};
  }

  /// Real symmetric 2(n+1) embedding [[Re, -Im], [Im, Re]]; its spectrum is
  /// the Hermitian spectrum with every eigenvalue doubled.
  Eigen::MatrixXd real_embedding() const {
    const auto m = static_cast<Eigen::Index>(size());
    Eigen::MatrixXd r(2 * m, 2 * m);
    for (Eigen::Index a = 0; a < m; ++a)
      for (Eigen::Index b = 0; b < m; ++b) {
        const auto e = at(a, b);
        r(a, b) = e.re;
        r(a + m, b + m) = e.re;
        r(a, b + m) = -e.im;
        r(a + m, b) = e.im;
      }
    return r;
  }

  /// Eigenvalues in ascending order.
  std::vector<double> eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(real_embedding(), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::runtime_error("Hermitian eigen decomposition failed");
    const auto& ev = es.eigenvalues();
    std::vector<double> out;
    for (Eigen::Index i = 0; i < ev.size(); i += 2) out.push_back(0.5 * (ev(i) + ev(i + 1)));
    return out;
  }

 private:
  std::vector<ComplexEntry> c_;
};

inline constexpr double kDefaultToeplitzTol = 1e-9;

inline HermitianToeplitz embed(std::span<const double> point) {
  if (point.empty() || point.size() % 2 != 0)
    throw std::invalid_argument("embed: point must have positive even length");
  std::vector<ComplexEntry> c(point.size() / 2);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = {point[2 * k], point[2 * k + 1]};
  return HermitianToeplitz(std::move(c));
}

inline HermitianToeplitz embed(const std::vector<double>& point) {
  return embed(std::span<const double>(point));
}

enum class Membership { Interior, Boundary, Outside };

inline const char* to_string(Membership m) {
  switch (m) {
    case Membership::Interior: return "interior";
    case Membership::Boundary: return "boundary";
    case Membership::Outside: return "outside";
  }
  return "?";
}

struct MembershipReport {
  Membership verdict = Membership::Outside;
  double min_eigenvalue = 0;
  std::size_t rank = 0;
  std::optional<std::size_t> face_dimension;
};

/// Rank counts eigenvalues above tol * max(largest eigenvalue, 1).
inline std::size_t toeplitz_rank(const std::vector<double>& eig, double tol) {
  const double cut = tol * std::max(eig.back(), 1.0);
  return static_cast<std::size_t>(std::count_if(eig.begin(), eig.end(), [&](double v) { return v > cut; }));
}

inline MembershipReport membership_report(const std::vector<double>& point, double tol = kDefaultToeplitzTol) {
  const auto eig = embed(point).eigenvalues();
  MembershipReport r;
  r.min_eigenvalue = eig.front();
  r.rank = toeplitz_rank(eig, tol);
  if (r.min_eigenvalue > tol) r.verdict = Membership::Interior;
  else if (r.min_eigenvalue >= -tol) r.verdict = Membership::Boundary;
  else r.verdict = Membership::Outside;
  if (r.verdict == Membership::Boundary) r.face_dimension = r.rank - 1;
  return r;
}

inline Membership is_member(const std::vector<double>& point, double tol = kDefaultToeplitzTol) {
  return membership_report(point, tol).verdict;
}

/// Dimension of the face containing `point` in its relative interior, read
/// off as rank - 1; empty for interior points.
inline std::optional<std::size_t> face_dimension(const std::vector<double>& point,
                                                 double tol = kDefaultToeplitzTol) {
  auto r = membership_report(point, tol);
  if (r.verdict == Membership::Outside) throw std::domain_error("face_dimension: point lies outside C_n");
  return r.face_dimension;
}

/// Whether the point lies on the k-th secant variety of the universal curve:
/// all (k+2)-minors vanish, i.e. numerical rank <= k + 1.
inline bool secant_membership_universal(const std::vector<double>& point, std::size_t k,
                                        double tol = kDefaultToeplitzTol) {
  const std::size_t n = point.size() / 2;
  if (point.size() % 2 != 0 || n == 0) throw std::invalid_argument("point must have positive even length");
  if (k >= n) throw std::out_of_range("secant_membership_universal: need k < n");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(embed(point).real_embedding(), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double scale = std::max(ev.cwiseAbs().maxCoeff(), 1.0);
  // Hermitian singular values are |eigenvalues|; each appears twice here
  std::size_t rank2 = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (std::abs(ev(i)) > tol * scale) ++rank2;
  return rank2 / 2 <= k + 1;
}

// ---------------------------------------------------------------------------
// Exact determinant of the Toeplitz matrix as a polynomial in
// (x1, y1, ..., xn, yn), by cofactor expansion over Gaussian-integer-valued
// polynomials (real part, imaginary part).

namespace detail {

struct ComplexPoly {
  QPoly re, im;
  explicit ComplexPoly(std::size_t nvars) : re(nvars), im(nvars) {}
};

inline ComplexPoly cmul(const ComplexPoly& a, const ComplexPoly& b) {
  ComplexPoly out(a.re.nvars());
  out.re = a.re * b.re - a.im * b.im;
  out.im = a.re * b.im + a.im * b.re;
  return out;
}

inline ComplexPoly toeplitz_entry(std::size_t n, std::size_t a, std::size_t b) {
  const std::size_t nv = 2 * n;
  ComplexPoly e(nv);
  if (a == b) {
    e.re = QPoly::constant(nv, Rational(1));
  } else {
    const std::size_t k = (b > a ? b - a : a - b) - 1;
    e.re = QPoly::variable(nv, 2 * k);
    e.im = QPoly::variable(nv, 2 * k + 1);
    if (a > b) e.im = -e.im;
  }
  return e;
}

inline ComplexPoly cofactor_det(std::size_t n, const std::vector<std::size_t>& rows,
                                const std::vector<std::size_t>& cols) {
  if (rows.size() == 1) return toeplitz_entry(n, rows[0], cols[0]);
  ComplexPoly acc(2 * n);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    std::vector<std::size_t> sub_cols;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (c != j) sub_cols.push_back(cols[c]);
    auto term = cmul(toeplitz_entry(n, rows[0], cols[j]), cofactor_det(n, sub_rows, sub_cols));
    if (j % 2 == 0) {
      acc.re += term.re;
      acc.im += term.im;
    } else {
      acc.re -= term.re;
      acc.im -= term.im;
    }
  }
  return acc;
}

}  // namespace detail

/// det of the (n+1) x (n+1) Toeplitz matrix; real coefficients since the
/// matrix is Hermitian.
inline QPoly toeplitz_determinant(std::size_t n) {
  if (n == 0 || n > 5) throw std::out_of_range("toeplitz_determinant: supported for 1 <= n <= 5");
  std::vector<std::size_t> idx(n + 1);
  for (std::size_t i = 0; i <= n; ++i) idx[i] = i;
  auto d = detail::cofactor_det(n, idx, idx);
  if (!d.im.is_zero()) throw std::logic_error("Hermitian determinant has an imaginary part");
  return d.re;
}

}  // namespace orbitope
