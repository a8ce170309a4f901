#pragma once

#include <orbitope/curve.hpp>
#include <orbitope/face.hpp>
#include <orbitope/lp.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitope {

struct CertifyOptions {
  std::size_t grid = 2048;
  std::size_t refine = 4;
  double tol = 1e-9;
  double exclusion_radius = 0.02;
};

/// Success carries a certificate. Failure means no exposing functional was
/// found at this resolution; it is not a proof that the set is not a face.
struct CertifyResult {
  std::optional<HyperplaneCertificate> certificate;
  double normalized_slack = 0;  // LP optimum on the base grid
  std::string reason;
  bool success() const { return certificate.has_value(); }
};

namespace detail {

inline double angle_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), 2 * std::numbers::pi);
  return std::min(d, 2 * std::numbers::pi - d);
}

// rho(phi) = prod_i (1 - cos(phi - theta_i)). A functional touching the
// orbit to second order at every theta_i has slack of this size near the
// contacts, however close together they are.
inline double contact_weight(double phi, const std::vector<double>& active) {
  double rho = 1;
  for (double th : active) rho *= 1 - std::cos(phi - th);
  return rho;
}

// grid points with a smaller weight are too close to a contact for the
// normalized slack to be evaluated reliably
inline constexpr double kMinContactWeight = 1e-10;

inline Eigen::VectorXd to_eigen(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace detail

/// Minimal slack 1 - l(x(phi)) over a uniform grid (with phase `offset` in
/// grid steps) plus the boundary points of the excluded arcs.
inline double slack_margin(const Representation& rep, const HyperplaneCertificate& cert, std::size_t grid,
                           double radius, double offset = 0.0) {
  const double two_pi = 2 * std::numbers::pi;
  double best = INFINITY;
  auto consider = [&](double phi) {
    for (double th : cert.active_params)
      if (detail::angle_distance(phi, th) < radius - 1e-15) return;
    best = std::min(best, 1 - cert.functional(orbit_point(rep, phi)));
  };
  for (std::size_t g = 0; g < grid; ++g) consider(two_pi * (double(g) + offset) / double(grid));
  for (double th : cert.active_params) {
    consider(th - radius);
    consider(th + radius);
  }
  return best;
}

/// Smallest normalized slack (1 - l(x(phi))) / rho(phi) on a uniform grid
/// with the given phase, with every discrete local minimum polished by a
/// golden-section search on its two neighbouring cells. Grid values alone
/// can step over isolated contact points; the polished minima cannot.
inline double refined_normalized_margin(const Representation& rep, const HyperplaneCertificate& cert,
                                        std::size_t grid, double offset) {
  const double two_pi = 2 * std::numbers::pi, h = two_pi / double(grid);
  auto g = [&](double phi) -> double {
    const double rho = detail::contact_weight(phi, cert.active_params);
    if (rho < detail::kMinContactWeight) return INFINITY;
    return (1 - cert.functional(orbit_point(rep, phi))) / rho;
  };
  std::vector<double> v(grid);
  for (std::size_t i = 0; i < grid; ++i) v[i] = g(h * (double(i) + offset));
  double best = INFINITY;
  const double inv_phi = (std::sqrt(5.0) - 1) / 2;
  for (std::size_t i = 0; i < grid; ++i) {
    const double prev = v[(i + grid - 1) % grid], next = v[(i + 1) % grid];
    best = std::min(best, v[i]);
    if (!std::isfinite(v[i]) || v[i] > prev || v[i] > next) continue;
    double lo = h * (double(i) + offset - 1), hi = h * (double(i) + offset + 1);
    double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
    double f1 = g(x1), f2 = g(x2);
    for (int it = 0; it < 60; ++it) {
      if (f1 <= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - inv_phi * (hi - lo);
        f1 = g(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + inv_phi * (hi - lo);
        f2 = g(x2);
      }
    }
    best = std::min({best, f1, f2});
  }
  return best;
}

/// The exposing functional of a single orbit point: the orbit lies on the
/// sphere of radius |x|, so x / |x|^2 supports it exactly at x.
inline HyperplaneCertificate sphere_certificate(const Representation& rep, double theta,
                                                const CertifyOptions& opt = {}) {
  auto x = orbit_point(rep, theta);
  double norm = 0;
  for (double v : x) norm += v * v;
  norm = std::sqrt(norm);
  HyperplaneCertificate cert;
  for (double v : x) cert.normal.push_back(v / norm);
  cert.level = norm;
  cert.active_params = {theta};
  cert.grid_size = opt.grid * opt.refine;
  cert.exclusion_radius = opt.exclusion_radius;
  cert.margin = slack_margin(rep, cert, cert.grid_size, cert.exclusion_radius, 0.5);
  double nm = INFINITY;
  for (std::size_t g = 0; g < cert.grid_size; ++g) {
    double phi = 2 * std::numbers::pi * (g + 0.5) / double(cert.grid_size);
    double rho = detail::contact_weight(phi, cert.active_params);
    if (rho < detail::kMinContactWeight) continue;
    nm = std::min(nm, (1 - cert.functional(orbit_point(rep, phi))) / rho);
  }
  cert.normalized_margin = nm;
  return cert;
}

/// Searches for w with w . x(theta_i) = 1 and w . x'(theta_i) = 0 at every
/// input parameter and w . x(phi) <= 1 elsewhere, maximizing the minimal
/// normalized slack (1 - w . x(phi)) / rho(phi) over a dense grid by LP.
inline CertifyResult certify_orbit_face(const Representation& rep, const std::vector<double>& params,
                                        const CertifyOptions& opt = {}) {
  if (params.empty()) throw std::invalid_argument("certify_face: no parameters");
  if (opt.grid < 8) throw std::invalid_argument("certify_face: grid too small");
  for (std::size_t i = 0; i < params.size(); ++i)
    for (std::size_t j = i + 1; j < params.size(); ++j)
      if (detail::angle_distance(params[i], params[j]) < 1e-12)
        throw std::invalid_argument("certify_face: duplicate parameters");
  CertifyResult res;
  if (params.size() == 1) {
    auto cert = sphere_certificate(rep, params[0], opt);
    res.normalized_slack = cert.normalized_margin;
    res.certificate = std::move(cert);
    return res;
  }
  const auto D = static_cast<Eigen::Index>(rep.ambient_dim());
  const auto m = static_cast<Eigen::Index>(params.size());
  Eigen::MatrixXd E(2 * m, D);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(2 * m);
  for (Eigen::Index i = 0; i < m; ++i) {
    E.row(2 * i) = detail::to_eigen(orbit_point(rep, params[i])).transpose();
    E.row(2 * i + 1) = detail::to_eigen(orbit_tangent(rep, params[i])).transpose();
    e(2 * i) = 1;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(E, Eigen::ComputeFullV | Eigen::ComputeFullU);
  svd.setThreshold(1e-10);
  Eigen::VectorXd w0 = svd.solve(e);
  if ((E * w0 - e).norm() > 1e-9 * (1 + e.norm())) {
    res.reason = "interpolation conditions are inconsistent";
    return res;
  }
  const Eigen::Index r = svd.rank();
  Eigen::MatrixXd N = svd.matrixV().rightCols(D - r);

  const std::vector<double>& active = params;
  const double two_pi = 2 * std::numbers::pi;
  std::vector<double> phis, rhos;
  for (std::size_t g = 0; g < opt.grid; ++g) {
    double phi = two_pi * double(g) / double(opt.grid);
    double rho = detail::contact_weight(phi, active);
    if (rho < detail::kMinContactWeight) continue;
    phis.push_back(phi);
    rhos.push_back(rho);
  }
  const auto G = static_cast<Eigen::Index>(phis.size());
  Eigen::MatrixXd A(G, N.cols() + 1);
  Eigen::VectorXd b(G);
  for (Eigen::Index g = 0; g < G; ++g) {
    Eigen::VectorXd a = detail::to_eigen(orbit_point(rep, phis[g]));
    A.row(g).head(N.cols()) = (N.transpose() * a).transpose();
    A(g, N.cols()) = rhos[g];
    b(g) = 1 - a.dot(w0);
  }
  Eigen::VectorXd c = Eigen::VectorXd::Zero(N.cols() + 1);
  c(N.cols()) = 1;
  auto sol = lp::maximize(A, b, c);
  if (sol.status != lp::Status::Optimal) {
    res.reason = "slack LP did not reach an optimum";
    return res;
  }
  res.normalized_slack = sol.value;
  if (sol.value <= opt.tol) {
    res.reason = "no exposing functional at this resolution";
    return res;
  }
  Eigen::VectorXd w = w0 + N * sol.x.head(N.cols());

  HyperplaneCertificate cert;
  const double wn = w.norm();
  for (Eigen::Index i = 0; i < D; ++i) cert.normal.push_back(w(i) / wn);
  cert.level = 1.0 / wn;
  cert.active_params = params;
  cert.grid_size = opt.grid * opt.refine;
  double min_gap = INFINITY;
  for (std::size_t i = 0; i < params.size(); ++i)
    for (std::size_t j = i + 1; j < params.size(); ++j)
      min_gap = std::min(min_gap, detail::angle_distance(params[i], params[j]));
  cert.exclusion_radius = std::min(opt.exclusion_radius, min_gap / 4);

  // confirmation on the refined, phase-shifted grid
  cert.normalized_margin = refined_normalized_margin(rep, cert, cert.grid_size, 0.5);
  if (cert.normalized_margin <= opt.tol) {
    res.reason = "certificate not confirmed on the refined grid";
    return res;
  }
  cert.margin = slack_margin(rep, cert, cert.grid_size, cert.exclusion_radius, 0.5);
  if (!(cert.margin > 0)) {
    res.reason = "non-positive margin off the active arcs";
    return res;
  }
  res.certificate = std::move(cert);
  return res;
}

}  // namespace orbitope
