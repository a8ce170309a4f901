#pragma once

#include <orbitope/curve.hpp>
#include <orbitope/faces4d.hpp>
#include <orbitope/linalg.hpp>
#include <orbitope/poly.hpp>
#include <orbitope/rational.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitope {

/// All exponent vectors of total degree <= D, in descending grlex order.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t nvars, unsigned max_degree) : nvars_(nvars), max_degree_(max_degree) {
    if (nvars == 0) throw std::invalid_argument("MonomialBasis: nvars must be positive");
    Exponent e(nvars, 0);
    enumerate(e, 0, max_degree);
    std::sort(exps_.begin(), exps_.end(), GrlexGreater{});
    for (std::size_t i = 0; i < exps_.size(); ++i) index_[exps_[i]] = i;
  }

  std::size_t nvars() const { return nvars_; }
  unsigned max_degree() const { return max_degree_; }
  std::size_t size() const { return exps_.size(); }
  const Exponent& operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  std::optional<std::size_t> index_of(const Exponent& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Values of every monomial at `x`, using cached powers per variable.
  template <typename T, typename Mul>
  void evaluate(const std::vector<T>& x, std::vector<T>& out, const T& one, Mul mul) const {
    std::vector<std::vector<T>> pw(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      pw[i].reserve(max_degree_ + 1);
      pw[i].push_back(one);
      for (unsigned k = 1; k <= max_degree_; ++k) pw[i].push_back(mul(pw[i].back(), x[i]));
    }
    out.resize(exps_.size());
    for (std::size_t m = 0; m < exps_.size(); ++m) {
      T v = one;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (exps_[m][i]) v = mul(v, pw[i][exps_[m][i]]);
      out[m] = v;
    }
  }

  template <typename Coeff>
  SparsePoly<Coeff> to_poly(const std::vector<Coeff>& coeffs) const {
    if (coeffs.size() != exps_.size()) throw std::invalid_argument("to_poly: coefficient count mismatch");
    SparsePoly<Coeff> p(nvars_);
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(exps_[i], coeffs[i]);
    return p;
  }

 private:
  void enumerate(Exponent& e, std::size_t var, unsigned left) {
    if (var + 1 == nvars_) {
      for (unsigned k = 0; k <= left; ++k) {
        e[var] = k;
        exps_.push_back(e);
      }
      e[var] = 0;
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[var] = k;
      enumerate(e, var + 1, left - k);
    }
    e[var] = 0;
  }

  std::size_t nvars_;
  unsigned max_degree_;
  std::vector<Exponent> exps_;
  std::map<Exponent, std::size_t> index_;
};

// ---------------------------------------------------------------------------
// Secant samples.

enum class SampleMode { Float, Rational };

/// Float samples carry angles; rational samples carry half-angle
/// parameters t = tan(theta / 2).
template <typename T>
struct SecantSample {
  std::vector<T> params;
  std::vector<T> weights;
  std::vector<T> point;
};

using FloatSample = SecantSample<double>;
using RationalSample = SecantSample<Rational>;

/// sum_i weights[i] * orbit_point(params[i]).
inline FloatSample secant_point(const Representation& rep, const std::vector<double>& params,
                                const std::vector<double>& weights) {
  if (params.size() != weights.size() || params.empty())
    throw std::invalid_argument("secant_point: need matching, non-empty params and weights");
  FloatSample s{params, weights, std::vector<double>(rep.ambient_dim(), 0.0)};
  for (std::size_t i = 0; i < params.size(); ++i) {
    auto x = orbit_point(rep, params[i]);
    for (std::size_t k = 0; k < x.size(); ++k) s.point[k] += weights[i] * x[k];
  }
  return s;
}

inline RationalSample secant_point(const Representation& rep, const std::vector<Rational>& params,
                                   const std::vector<Rational>& weights) {
  if (params.size() != weights.size() || params.empty())
    throw std::invalid_argument("secant_point: need matching, non-empty params and weights");
  RationalParametrization par(rep);
  RationalSample s{params, weights, std::vector<Rational>(rep.ambient_dim(), Rational(0))};
  for (std::size_t i = 0; i < params.size(); ++i) {
    auto x = par.point(params[i]);
    for (std::size_t k = 0; k < x.size(); ++k) s.point[k] += weights[i] * x[k];
  }
  return s;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent stream for row `row` of a run with seed `seed`.
inline std::uint64_t row_seed(std::uint64_t seed, std::uint64_t row) {
  return splitmix64(splitmix64(seed) ^ (row * 0xd1b54a32d192ed03ULL + 1));
}

inline bool points_affinely_independent(const std::vector<std::vector<double>>& pts, double rel_tol = 1e-10) {
  if (pts.size() <= 1) return true;
  const auto d = static_cast<Eigen::Index>(pts[0].size());
  Eigen::MatrixXd m(d, static_cast<Eigen::Index>(pts.size() - 1));
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (Eigen::Index k = 0; k < d; ++k) m(k, static_cast<Eigen::Index>(i - 1)) = pts[i][k] - pts[0][k];
  return linalg::numerical_rank(m, rel_tol) == pts.size() - 1;
}

}  // namespace detail

inline FloatSample sample_secant_float(const Representation& rep, std::size_t r, std::uint64_t seed,
                                       std::uint64_t row) {
  std::mt19937_64 rng(detail::row_seed(seed, row));
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::exponential_distribution<double> expo(1.0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<double> params(r), w(r);
    std::vector<std::vector<double>> pts;
    for (std::size_t i = 0; i < r; ++i) {
      params[i] = angle(rng);
      pts.push_back(orbit_point(rep, params[i]));
    }
    double total = 0;
    for (auto& v : w) total += (v = expo(rng));
    double partial = 0;
    for (std::size_t i = 0; i + 1 < r; ++i) partial += (w[i] /= total);
    w[r - 1] = 1.0 - partial;
    if (!detail::points_affinely_independent(pts)) continue;
    return secant_point(rep, params, w);
  }
  throw std::runtime_error("sample_secant_float: could not draw an affinely independent tuple");
}

/// t = a / b with 1 <= b <= 1000, |a| <= 1000; weights are compositions
/// k_i / N of a random N <= 1000 into r positive parts.
inline RationalSample sample_secant_rational(const Representation& rep, std::size_t r, std::uint64_t seed,
                                             std::uint64_t row) {
  if (r > 999) throw std::invalid_argument("sample_secant_rational: r too large");
  std::mt19937_64 rng(detail::row_seed(seed, row));
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  std::uniform_int_distribution<long> total(static_cast<long>(r), 1000);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Rational> params(r);
    std::vector<std::vector<double>> pts;
    bool distinct = true;
    for (std::size_t i = 0; i < r; ++i) {
      params[i] = make_rational(num(rng), den(rng));
      for (std::size_t k = 0; k < i; ++k)
        if (params[k] == params[i]) distinct = false;
      std::vector<double> x;
      for (const auto& v : rational_point(rep, params[i])) x.push_back(v.get_d());
      pts.push_back(std::move(x));
    }
    if (!distinct || !detail::points_affinely_independent(pts)) continue;
    // composition of N: r - 1 distinct cut points in 1..N-1
    const long N = total(rng);
    std::vector<long> cuts;
    std::uniform_int_distribution<long> cut(1, N - 1);
    while (cuts.size() + 1 < r) {
      long c = cut(rng);
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<Rational> w;
    long prev = 0;
    for (long c : cuts) {
      w.push_back(make_rational(c - prev, N));
      prev = c;
    }
    w.push_back(make_rational(N - prev, N));
    return secant_point(rep, params, w);
  }
  throw std::runtime_error("sample_secant_rational: could not draw an affinely independent tuple");
}

inline std::vector<FloatSample> sample_secants_float(const Representation& rep, std::size_t r,
                                                     std::size_t count, std::uint64_t seed) {
  if (r == 0) throw std::invalid_argument("sample_secants: r must be >= 1");
  std::vector<FloatSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_secant_float(rep, r, seed, i));
  return out;
}

inline std::vector<RationalSample> sample_secants_rational(const Representation& rep, std::size_t r,
                                                           std::size_t count, std::uint64_t seed) {
  if (r == 0) throw std::invalid_argument("sample_secants: r must be >= 1");
  std::vector<RationalSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_secant_rational(rep, r, seed, i));
  return out;
}

// ---------------------------------------------------------------------------
// Interpolation.

struct InsufficientSamples : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NoVanishingPolynomial : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when null and non-null singular values are not separated by the
/// required gap; the report is kept for diagnostics.
struct RankGapTooSmall : std::runtime_error {
  double gap_ratio;
  RankGapTooSmall(const std::string& what, double gap) : std::runtime_error(what), gap_ratio(gap) {}
};

enum class ExactMethod { Auto, Bareiss, Multimodular };

struct FitOptions {
  std::size_t count = 0;  // 0: 2.5 x basis size
  std::uint64_t seed = 1;
  SampleMode mode = SampleMode::Rational;
  ExactMethod exact_method = ExactMethod::Auto;
  std::size_t bareiss_max_basis = 120;
  double rel_threshold = 1e-9;
  double min_gap_ratio = 1e4;
};

struct FitReport {
  std::size_t basis_size = 0;
  std::size_t sample_count = 0;
  std::size_t nullity = 0;
  SampleMode mode = SampleMode::Rational;
  std::string method;
  // float path
  double sigma_max = 0, smallest_kept = 0, largest_dropped = 0, gap_ratio = 0;
  // exact path
  std::size_t rank = 0, primes_used = 0;
};

struct FitResult {
  FitReport report;
  std::vector<QPoly> exact;   // rational mode
  std::vector<FPoly> approx;  // float mode
};

inline std::size_t default_sample_count(std::size_t basis_size) { return (basis_size * 5 + 1) / 2; }

namespace detail {

inline linalg::u64 mul_mod_p(linalg::u64 a, linalg::u64 b, linalg::u64 p) { return linalg::mulmod(a, b, p); }

inline FitResult fit_exact(const Representation& rep, std::size_t r, const MonomialBasis& basis,
                           const FitOptions& opt, std::size_t count) {
  const auto samples = sample_secants_rational(rep, r, count, opt.seed);
  FitResult res;
  const std::size_t C = basis.size();
  auto row_exact = [&](std::size_t i, std::vector<Rational>& out) {
    basis.evaluate<Rational>(samples[i].point, out, Rational(1),
                             [](const Rational& a, const Rational& b) { return Rational(a * b); });
  };
  linalg::ExactNullspace ns;
  const bool bareiss = opt.exact_method == ExactMethod::Bareiss ||
                       (opt.exact_method == ExactMethod::Auto && C <= opt.bareiss_max_basis);
  if (bareiss) {
    std::vector<std::vector<Integer>> m(samples.size(), std::vector<Integer>(C));
    std::vector<Rational> row;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      row_exact(i, row);
      Integer l = 1;
      for (const auto& v : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
      for (std::size_t c = 0; c < C; ++c) m[i][c] = row[c].get_num() * (l / row[c].get_den());
    }
    ns = linalg::bareiss_nullspace(std::move(m));
    res.report.method = "bareiss";
  } else {
    auto row_mod_p = [&](std::size_t i, linalg::u64 p, std::vector<linalg::u64>& out) {
      std::vector<linalg::u64> x;
      for (const auto& v : samples[i].point) x.push_back(linalg::reduce_mod(v, p));
      basis.evaluate<linalg::u64>(x, out, 1, [p](linalg::u64 a, linalg::u64 b) { return mul_mod_p(a, b, p); });
    };
    ns = linalg::exact_nullspace_multimodular(samples.size(), C, row_mod_p, row_exact);
    res.report.method = "multimodular";
  }
  res.report.rank = ns.rank;
  res.report.primes_used = ns.primes_used;
  res.report.nullity = ns.basis.size();
  for (const auto& v : ns.basis) res.exact.push_back(basis.to_poly(v));
  return res;
}

inline FitResult fit_float(const Representation& rep, std::size_t r, const MonomialBasis& basis,
                           const FitOptions& opt, std::size_t count) {
  const auto samples = sample_secants_float(rep, r, count, opt.seed);
  const std::size_t C = basis.size();
  std::vector<double> a(count * C);
  std::vector<double> row;
  for (std::size_t i = 0; i < count; ++i) {
    basis.evaluate<double>(samples[i].point, row, 1.0, [](double x, double y) { return x * y; });
    std::copy(row.begin(), row.end(), a.begin() + i * C);
  }
  auto ns = linalg::svd_nullspace(std::move(a), count, C, opt.rel_threshold);
  FitResult res;
  res.report.method = "svd";
  res.report.sigma_max = ns.sigma_max;
  res.report.smallest_kept = ns.smallest_kept;
  res.report.largest_dropped = ns.largest_dropped;
  res.report.gap_ratio = ns.gap_ratio;
  res.report.rank = C - ns.basis.size();
  res.report.nullity = ns.basis.size();
  for (const auto& v : ns.basis) res.approx.push_back(basis.to_poly(v));
  return res;
}

}  // namespace detail

/// Basis of the polynomials of degree <= D in the 2 * |rep| coordinates that
/// vanish on `count` random points of the (r - 1)-st secant variety.
inline FitResult fit_hypersurface(const Representation& rep, std::size_t r, unsigned D,
                                  const FitOptions& opt = {}) {
  if (D == 0) throw std::invalid_argument("fit_hypersurface: degree must be >= 1");
  if (r == 0) throw std::invalid_argument("fit_hypersurface: r must be >= 1");
  if (!rep.is_reduced()) throw std::invalid_argument("fit_hypersurface: representation must be reduced");
  const MonomialBasis basis(rep.ambient_dim(), D);
  const std::size_t count = opt.count ? opt.count : default_sample_count(basis.size());
  if (count < basis.size())
    throw InsufficientSamples("insufficient samples: " + std::to_string(count) + " < basis size " +
                              std::to_string(basis.size()));
  FitResult res = opt.mode == SampleMode::Rational ? detail::fit_exact(rep, r, basis, opt, count)
                                                   : detail::fit_float(rep, r, basis, opt, count);
  res.report.basis_size = basis.size();
  res.report.sample_count = count;
  res.report.mode = opt.mode;
  if (res.report.nullity == 0)
    throw NoVanishingPolynomial("no vanishing polynomial of degree <= " + std::to_string(D));
  if (opt.mode == SampleMode::Float && res.report.gap_ratio < opt.min_gap_ratio)
    throw RankGapTooSmall("singular value gap " + std::to_string(res.report.gap_ratio) + " below required " +
                              std::to_string(opt.min_gap_ratio),
                          res.report.gap_ratio);
  return res;
}

// ---------------------------------------------------------------------------
// Verification.

/// max |p| over `count` fresh float secant samples.
inline double verify_vanishing(const FPoly& p, const Representation& rep, std::size_t r, std::size_t count,
                               std::uint64_t seed) {
  if (p.nvars() != rep.ambient_dim()) throw std::invalid_argument("verify_vanishing: nvars mismatch");
  double worst = 0;
  for (std::size_t i = 0; i < count; ++i) {
    auto s = sample_secant_float(rep, r, seed, i);
    worst = std::max(worst, std::abs(eval(p, s.point)));
  }
  return worst;
}

inline double verify_vanishing(const QPoly& p, const Representation& rep, std::size_t r, std::size_t count,
                               std::uint64_t seed) {
  return verify_vanishing(to_float(p), rep, r, count, seed);
}

/// max |p| over exact points; zero means exact vanishing.
inline Rational max_abs_residual(const QPoly& p, const std::vector<RationalSample>& samples) {
  Rational worst = 0;
  for (const auto& s : samples) {
    Rational v = abs(eval(p, s.point));
    if (v > worst) worst = v;
  }
  return worst;
}

/// Exact check that p (in w, x, y, z) vanishes on the whole plane spanned by
/// a q-gon of C_pq. Every vertex z(t + j/q) has the same last coordinate
/// pair (cos 2pi q t, sin 2pi q t); `u` is its half-angle parameter, and the
/// first pair is unconstrained on that plane. So the q-gon plane lies in
/// V(p) iff p(w, x, Y, Z) is the zero polynomial.
inline bool vanishes_on_qgon_plane(const QPoly& p, const Rational& u) {
  if (p.nvars() != 4) throw std::invalid_argument("vanishes_on_qgon_plane: need a polynomial in w, x, y, z");
  auto yz = rational_point(Representation({1}), u);
  return restrict(p, std::map<std::size_t, Rational>{{2, yz[0]}, {3, yz[1]}}).is_zero();
}

/// Float points of the q-gon conv{z(t + j/q)} of C_pq with random convex
/// weights, for residual checks.
inline std::vector<std::vector<double>> qgon_samples(const PQData& pq, std::size_t count, std::uint64_t seed) {
  const Representation rep = pq.representation();
  std::vector<std::vector<double>> out;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ut(0.0, 1.0 / pq.q);
  std::exponential_distribution<double> expo(1.0);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = ut(rng);
    std::vector<double> params, w(pq.q);
    double total = 0;
    for (auto& v : w) total += (v = expo(rng));
    for (auto& v : w) v /= total;
    for (unsigned j = 0; j < pq.q; ++j) params.push_back(2 * std::numbers::pi * (t + double(j) / pq.q));
    out.push_back(secant_point(rep, params, w).point);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rounding float fits to rationals.

struct RationalizeResult {
  QPoly poly;
  double max_distance = 0;  // max |scaled coefficient - rounded coefficient|
};

/// Rescales so the anchor coefficient equals `value`, then rounds every
/// coefficient to the closest rational with denominator <= max_den.
inline RationalizeResult rationalize(const FPoly& p, const Exponent& anchor, const Rational& value,
                                     std::int64_t max_den = 1000000) {
  double amax = 0;
  for (const auto& [e, c] : p.terms()) amax = std::max(amax, std::abs(c));
  const double a = p.coefficient(anchor);
  if (amax == 0 || std::abs(a) < 1e-6 * amax)
    throw std::domain_error("rationalize: anchor coefficient below 1e-6 of the largest coefficient");
  const double scale = value.get_d() / a;
  RationalizeResult out{QPoly(p.nvars()), 0.0};
  for (const auto& [e, c] : p.terms()) {
    const double x = e == anchor ? value.get_d() : c * scale;
    Rational q = e == anchor ? value : best_rational(x, max_den);
    out.max_distance = std::max(out.max_distance, std::abs(x - q.get_d()));
    out.poly.add_term(e, q);
  }
  return out;
}

/// Coefficient-vector overload over a monomial basis.
inline RationalizeResult rationalize(const std::vector<double>& coeffs, const MonomialBasis& basis,
                                     const Exponent& anchor, const Rational& value,
                                     std::int64_t max_den = 1000000) {
  return rationalize(basis.to_poly(coeffs), anchor, value, max_den);
}

}  // namespace orbitope
