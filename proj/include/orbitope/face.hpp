#pragma once

#include <orbitope/rational.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace orbitope {

/// Supporting hyperplane {x : normal . x = level} with the orbit on the side
/// normal . x <= level, touching it at `active_params` (angles in radians).
struct HyperplaneCertificate {
  std::vector<double> normal;  // unit length
  double level = 1.0;
  std::vector<double> active_params;
  // min of 1 - (normal . x) / level over the verification grid, excluding
  // arcs of radius `exclusion_radius` around the active parameters
  double margin = 0;
  double exclusion_radius = 0;
  // min of (1 - l(x)) / rho(x), rho = prod_i (1 - cos(phi - theta_i)); the
  // quantity maximized by the search, positive for a quadratic contact
  double normalized_margin = 0;
  std::size_t grid_size = 0;

  double functional(const std::vector<double>& x) const {
    double s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += normal[i] * x[i];
    return s / level;
  }
};

enum class FaceKind { Vertex, Edge, PGon, QGon, Simplex };

inline const char* to_string(FaceKind k) {
  switch (k) {
    case FaceKind::Vertex: return "vertex";
    case FaceKind::Edge: return "edge";
    case FaceKind::PGon: return "p-gon";
    case FaceKind::QGon: return "q-gon";
    case FaceKind::Simplex: return "simplex";
  }
  return "?";
}

/// A classified face; `parameters` are curve parameters normalized to [0, 1)
/// (t = theta / 2pi), with the exact values kept when they are rational.
struct FaceDescriptor {
  FaceKind kind = FaceKind::Vertex;
  std::vector<double> parameters;
  std::vector<Rational> exact_parameters;
  bool exposed = true;
  unsigned dimension = 0;
  std::optional<HyperplaneCertificate> certificate;
};

}  // namespace orbitope
