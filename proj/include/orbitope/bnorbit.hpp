#pragma once

#include <orbitope/certify.hpp>
#include <orbitope/curve.hpp>
#include <orbitope/face.hpp>
#include <orbitope/known.hpp>
#include <orbitope/lp.hpp>
#include <orbitope/poly.hpp>
#include <orbitope/secantfit.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitope {

inline void require_odd(unsigned n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("Barvinok-Novik orbitopes need odd n >= 3");
}

/// (cos t, sin t, cos 3t, sin 3t, ..., cos nt, sin nt).
inline std::vector<double> sm_map(unsigned n, double theta) {
  require_odd(n);
  return orbit_point(barvinok_novik_representation(n), theta);
}

/// Affine rank == count - 1, with a relative tolerance of 1e-10.
inline bool affinely_independent(const std::vector<std::vector<double>>& points) {
  if (points.empty()) throw std::invalid_argument("affinely_independent: empty point list");
  for (const auto& p : points)
    if (p.size() != points[0].size()) throw std::invalid_argument("affinely_independent: dimension mismatch");
  if (points.size() > points[0].size() + 1) return false;
  return detail::points_affinely_independent(points, 1e-10);
}

struct TopFaceOptions {
  std::size_t grid = 10000;
  double exclusion_radius = 1e-3;
};

/// The simplex with vertices SM(theta + 2 pi j / n), j < n, exposed by the
/// functional cos(n theta) x_{n} + sin(n theta) y_{n} which equals
/// cos(n (phi - theta)) on SM(phi).
inline FaceDescriptor top_face(unsigned n, double theta, const TopFaceOptions& opt = {}) {
  require_odd(n);
  const Representation rep = barvinok_novik_representation(n);
  FaceDescriptor f;
  f.kind = FaceKind::Simplex;
  f.dimension = n - 1;
  f.exposed = true;
  HyperplaneCertificate cert;
  cert.normal.assign(rep.ambient_dim(), 0.0);
  cert.normal[rep.ambient_dim() - 2] = std::cos(n * theta);
  cert.normal[rep.ambient_dim() - 1] = std::sin(n * theta);
  cert.level = 1.0;
  const double two_pi = 2 * std::numbers::pi;
  for (unsigned j = 0; j < n; ++j) {
    const double a = theta + two_pi * j / n;
    cert.active_params.push_back(a);
    double t = std::fmod(a / two_pi, 1.0);
    if (t < 0) t += 1.0;
    f.parameters.push_back(t);
  }
  cert.grid_size = opt.grid;
  cert.exclusion_radius = opt.exclusion_radius;
  cert.margin = slack_margin(rep, cert, opt.grid, opt.exclusion_radius);
  cert.normalized_margin = INFINITY;
  for (std::size_t g = 0; g < opt.grid; ++g) {
    const double phi = two_pi * g / double(opt.grid);
    const double rho = detail::contact_weight(phi, cert.active_params);
    if (rho < detail::kMinContactWeight) continue;
    cert.normalized_margin = std::min(cert.normalized_margin, (1 - cert.functional(orbit_point(rep, phi))) / rho);
  }
  f.certificate = std::move(cert);
  return f;
}

/// Exposing-functional search for conv{SM(theta_i)}; at most (n - 1)/2 + 1
/// parameters.
inline CertifyResult certify_face(unsigned n, const std::vector<double>& params, const CertifyOptions& opt = {}) {
  require_odd(n);
  if (params.size() > (n - 1) / 2 + 1)
    throw std::invalid_argument("certify_face: at most (n-1)/2 + 1 parameters");
  return certify_orbit_face(barvinok_novik_representation(n), params, opt);
}

// ---------------------------------------------------------------------------
// Interior certificate at roots of unity.

namespace detail {

using IntPoly = std::vector<Integer>;  // coefficient of x^k at index k

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Remainder of a by the monic polynomial b.
inline IntPoly rem_monic(IntPoly a, const IntPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const Integer lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] -= lead * b[k];
    trim(a);
  }
  return a;
}

/// Exact division by a monic divisor.
inline IntPoly div_monic(IntPoly a, const IntPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  IntPoly q(a.size() - db, Integer(0));
  while (a.size() > db) {
    const Integer lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    q[shift] = lead;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] -= lead * b[k];
    trim(a);
  }
  if (!a.empty()) throw std::logic_error("div_monic: division is not exact");
  return q;
}

inline IntPoly cyclotomic(unsigned m) {
  IntPoly p(m + 1, Integer(0));
  p[0] = -1;
  p[m] = 1;
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) p = div_monic(p, cyclotomic(d));
  return p;
}

}  // namespace detail

/// Whether sum_{k<m} zeta^{j k} = 0 for zeta = exp(2 pi i / m), decided in
/// Q(zeta) by reducing the exponent polynomial modulo the m-th cyclotomic
/// polynomial.
inline bool root_of_unity_sum_vanishes(unsigned m, unsigned j) {
  detail::IntPoly p(m, Integer(0));
  for (unsigned k = 0; k < m; ++k) p[(static_cast<unsigned long>(j) * k) % m] += 1;
  return detail::rem_monic(p, detail::cyclotomic(m)).empty();
}

struct InteriorCertificate {
  unsigned n = 0;
  std::vector<double> vertices;           // angles 2 pi k / m
  std::vector<Rational> vertex_turns;     // k / m
  std::vector<Rational> barycentric;      // all 1 / m
  std::vector<double> target;             // the origin
  bool exact_identity = false;            // sum over vertices vanishes in Q(zeta)
  double float_residual = 0;              // |sum_k w_k SM(theta_k) - target|_inf
  bool vertices_independent = false;
};

/// The origin as barycenter of SM at the (n+2)-th roots of unity: n + 2
/// does not divide any odd j <= n, so every power sum vanishes.
inline InteriorCertificate interior_certificate(unsigned n) {
  require_odd(n);
  const unsigned m = n + 2;
  InteriorCertificate c;
  c.n = n;
  c.target.assign(n + 1, 0.0);
  std::vector<std::vector<double>> pts;
  for (unsigned k = 0; k < m; ++k) {
    c.vertex_turns.push_back(make_rational(k, m));
    c.vertices.push_back(2 * std::numbers::pi * k / m);
    c.barycentric.push_back(make_rational(1, m));
    pts.push_back(sm_map(n, c.vertices.back()));
  }
  Rational wsum = 0;
  for (const auto& w : c.barycentric) wsum += w;
  c.exact_identity = wsum == 1;
  for (unsigned j = 1; j <= n; j += 2) c.exact_identity = c.exact_identity && root_of_unity_sum_vanishes(m, j);
  std::vector<double> bary(n + 1, 0.0);
  for (const auto& p : pts)
    for (std::size_t i = 0; i < p.size(); ++i) bary[i] += p[i] / m;
  for (std::size_t i = 0; i < bary.size(); ++i)
    c.float_residual = std::max(c.float_residual, std::abs(bary[i] - c.target[i]));
  c.vertices_independent = affinely_independent(pts);
  if (!c.vertices_independent) throw std::logic_error("interior_certificate: vertices are affinely dependent");
  return c;
}

// ---------------------------------------------------------------------------
// Witness that B_{n+1} is not basic closed.

struct WitnessReport {
  unsigned n = 0;
  unsigned k = 0;  // secant index (n - 1) / 2
  // the origin is the midpoint of SM(0) and SM(pi), exactly
  std::vector<Rational> sm0, sm_pi, midpoint;
  bool origin_on_secant = false;
  InteriorCertificate interior;
  // n = 3 only
  std::optional<Rational> f_at_origin;
  std::optional<std::vector<Rational>> slice_gradient;
  bool accepted = false;
};

namespace detail {

/// SM at theta = 0 or pi exactly: (+-1, 0, +-1, 0, ...).
inline std::vector<Rational> sm_exact_zero_or_pi(unsigned n, bool pi) {
  std::vector<Rational> x;
  for (unsigned j = 1; j <= n; j += 2) {
    x.push_back(Rational(pi ? -1 : 1));
    x.push_back(Rational(0));
  }
  return x;
}

inline QPoly slice_cubic() {
  const auto x = QPoly::variable(2, 0), z = QPoly::variable(2, 1);
  return x * x * x * Rational(4) - x * Rational(3) + z;
}

}  // namespace detail

inline WitnessReport not_basic_witness(unsigned n) {
  require_odd(n);
  WitnessReport r;
  r.n = n;
  r.k = (n - 1) / 2;
  r.sm0 = detail::sm_exact_zero_or_pi(n, false);
  r.sm_pi = detail::sm_exact_zero_or_pi(n, true);
  r.origin_on_secant = true;
  for (std::size_t i = 0; i < r.sm0.size(); ++i) {
    Rational mid = (r.sm0[i] + r.sm_pi[i]) / 2;
    r.midpoint.push_back(mid);
    if (mid != 0) r.origin_on_secant = false;
  }
  // cross-check the exact values against the trigonometric map
  const auto a = sm_map(n, 0.0), b = sm_map(n, std::numbers::pi);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - r.sm0[i].get_d()) > 1e-12 || std::abs(b[i] - r.sm_pi[i].get_d()) > 1e-12)
      r.origin_on_secant = false;
  r.interior = interior_certificate(n);
  r.accepted = r.origin_on_secant && r.interior.exact_identity && r.interior.vertices_independent;
  if (n == 3) {
    const QPoly f = secant_b4_polynomial();
    r.f_at_origin = eval(f, std::vector<Rational>(4, Rational(0)));
    r.slice_gradient = gradient(detail::slice_cubic(), std::vector<Rational>{Rational(0), Rational(0)});
    const bool regular = (*r.slice_gradient)[0] != 0 || (*r.slice_gradient)[1] != 0;
    r.accepted = r.accepted && *r.f_at_origin == 0 && regular;
  }
  return r;
}

// ---------------------------------------------------------------------------
// The slice {w = y = 0} of B_4.

struct SlicePoint {
  double x = 0, z = 0;
  std::string curve;  // "circle+", "circle-", "line", "cubic"
  bool on_boundary = false;
  double gauge = 0;
};

struct SliceReport {
  QPoly restricted_f{2};        // f(0, x, 0, z) in (x, z)
  QPoly line_cubed{2};          // (x + z)^3
  QPoly cubic{2};               // 4x^3 - 3x + z
  QPoly restricted_circle{2};   // y^2 + z^2 - 1 at w = y = 0, in (x, z)
  QPoly circle_factors{2};      // (z - 1)(z + 1)
  bool f_factorization = false;
  bool circle_factorization = false;
  std::vector<SlicePoint> series;
  double gauge_tolerance = 0;
  std::size_t gauge_grid = 0;

  std::string csv() const {
    std::ostringstream os;
    os.precision(10);
    os << "x,z,tag\n";
    for (const auto& p : series) os << p.x << ',' << p.z << ',' << p.curve << ':' << (p.on_boundary ? "black" : "gray") << '\n';
    return os.str();
  }
};

/// Gauge of conv{SM(theta_g)} at a point of R^4, from the polar LP
/// max { u . p : u . SM(theta_g) <= 1 }.
inline double b4_gauge(const std::vector<double>& p, std::size_t grid = 2048) {
  const Representation rep = barvinok_novik_representation(3);
  Eigen::MatrixXd A(static_cast<Eigen::Index>(grid), 4);
  for (std::size_t g = 0; g < grid; ++g) {
    auto x = orbit_point(rep, 2 * std::numbers::pi * g / double(grid));
    for (int i = 0; i < 4; ++i) A(static_cast<Eigen::Index>(g), i) = x[i];
  }
  Eigen::VectorXd b = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(grid));
  Eigen::VectorXd c = detail::to_eigen(p);
  auto res = lp::maximize(A, b, c);
  if (res.status != lp::Status::Optimal) throw std::runtime_error("b4_gauge: polar LP failed");
  return res.value;
}

struct SliceOptions {
  std::size_t points_per_curve = 121;
  double x_extent = 1.2;
  std::size_t gauge_grid = 2048;
  double gauge_tolerance = 1e-4;
};

inline SliceReport slice_B4(const SliceOptions& opt = {}) {
  SliceReport s;
  const QPoly f = secant_b4_polynomial();
  s.restricted_f = restrict(f, std::map<std::size_t, Rational>{{0, Rational(0)}, {2, Rational(0)}});
  const auto x = QPoly::variable(2, 0), z = QPoly::variable(2, 1);
  s.line_cubed = power(x + z, 3);
  s.cubic = detail::slice_cubic();
  s.f_factorization = s.restricted_f == multiply(s.line_cubed, s.cubic);

  s.restricted_circle = restrict(circle_polynomial(BoundaryComponent::CircleYZ),
                                 std::map<std::size_t, Rational>{{0, Rational(0)}, {2, Rational(0)}});
  const auto one = QPoly::constant(2, Rational(1));
  s.circle_factors = multiply(z - one, z + one);
  s.circle_factorization = s.restricted_circle == s.circle_factors;

  s.gauge_tolerance = opt.gauge_tolerance;
  s.gauge_grid = opt.gauge_grid;
  const std::size_t N = opt.points_per_curve;
  auto add = [&](const std::string& curve, double px, double pz) {
    SlicePoint p{px, pz, curve, false, 0};
    p.gauge = b4_gauge({0.0, px, 0.0, pz}, opt.gauge_grid);
    p.on_boundary = std::abs(p.gauge - 1.0) <= opt.gauge_tolerance;
    s.series.push_back(p);
  };
  for (std::size_t i = 0; i < N; ++i) {
    const double px = -opt.x_extent + 2 * opt.x_extent * double(i) / double(N - 1);
    add("circle+", px, 1.0);
    add("circle-", px, -1.0);
    add("line", px, -px);
    add("cubic", px, -4 * px * px * px + 3 * px);
  }
  return s;
}

}  // namespace orbitope
