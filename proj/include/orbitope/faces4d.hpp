#pragma once

#include <orbitope/curve.hpp>
#include <orbitope/face.hpp>
#include <orbitope/poly.hpp>
#include <orbitope/rational.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orbitope {

struct OpenInterval {
  Rational lo, hi;
  bool contains(const Rational& x) const { return lo < x && x < hi; }
};

/// Data of the 4-dimensional orbitope C_pq: the unique k, l with
/// 0 <= k < p, 1 <= l < q, l p - k q = 1, and the edge-gap set
/// I_pq = (k/p, l/q) u ((q-l)/q, (p-k)/p).
struct PQData {
  unsigned p = 0, q = 0;
  unsigned k = 0, l = 0;
  OpenInterval first, second;

  bool gap_in_interval(const Rational& gap) const { return first.contains(gap) || second.contains(gap); }

  /// Whether the closure of I_pq is all of [0, 1].
  bool closure_is_unit_interval() const {
    std::vector<std::pair<Rational, Rational>> iv{{first.lo, first.hi}, {second.lo, second.hi}};
    std::sort(iv.begin(), iv.end());
    if (iv[0].first != 0 || iv[1].second != 1) return false;
    return iv[0].second >= iv[1].first;
  }

  Representation representation() const { return Representation({p, q}); }
};

inline PQData pq_data(unsigned p, unsigned q) {
  if (p == 0 || p >= q) throw std::invalid_argument("pq_data: need 0 < p < q");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("pq_data: p and q must be coprime");
  // l p = 1 (mod q); l in [1, q)
  long long l = 0;
  {
    long long old_r = p, r = q, old_s = 1, s = 0;
    while (r != 0) {
      long long quo = old_r / r;
      std::tie(old_r, r) = std::make_pair(r, old_r - quo * r);
      std::tie(old_s, s) = std::make_pair(s, old_s - quo * s);
    }
    l = ((old_s % (long long)q) + q) % q;
  }
  if (l == 0) l = q;  // only when q == 1, excluded above
  const long long k = (l * p - 1) / q;
  PQData d;
  d.p = p;
  d.q = q;
  d.k = static_cast<unsigned>(k);
  d.l = static_cast<unsigned>(l);
  if (static_cast<long long>(d.l) * p - static_cast<long long>(d.k) * q != 1)
    throw std::logic_error("pq_data: extended Euclid produced an invalid pair");
  d.first = {make_rational(d.k, p), make_rational(d.l, q)};
  d.second = {make_rational(q - d.l, q), make_rational(p - d.k, p)};
  return d;
}

/// Whether z(s) z(t) is an edge: t - s in I_pq, or the antipodal segment
/// from the p = 2 / q = 2 polygon clauses.
inline bool is_edge(const PQData& pq, Rational s, Rational t) {
  if (s == t) return false;
  if (t < s) std::swap(s, t);
  const Rational gap = t - s;
  if (pq.gap_in_interval(gap)) return true;
  return (pq.p == 2 || pq.q == 2) && gap == Rational(1, 2);
}

inline constexpr double kEndpointTol = 1e-12;

/// Float overload; interval endpoints are excluded with a 1e-12 margin.
inline bool is_edge(const PQData& pq, double s, double t) {
  if (s == t) return false;
  if (t < s) std::swap(s, t);
  const double gap = t - s;
  auto inside = [&](const OpenInterval& iv) {
    return gap > iv.lo.get_d() + kEndpointTol && gap < iv.hi.get_d() - kEndpointTol;
  };
  if (inside(pq.first) || inside(pq.second)) return true;
  return (pq.p == 2 || pq.q == 2) && std::abs(gap - 0.5) <= kEndpointTol;
}

struct PolygonFaces {
  FaceDescriptor face;
  std::vector<FaceDescriptor> non_exposed_edges;
};

/// The face conv{z(t + j/m) : j < m} for m = which in {p, q}, 0 <= t < 1/m.
inline PolygonFaces polygon_faces(const PQData& pq, unsigned which, const Rational& t) {
  if (which != pq.p && which != pq.q) throw std::invalid_argument("polygon_faces: which must be p or q");
  if (t < 0 || t >= Rational(1, which)) throw std::out_of_range("polygon_faces: need 0 <= t < 1/which");
  PolygonFaces out;
  FaceDescriptor& f = out.face;
  for (unsigned j = 0; j < which; ++j) {
    Rational v = t + Rational(j, which);
    v.canonicalize();
    f.exact_parameters.push_back(v);
    f.parameters.push_back(v.get_d());
  }
  f.exposed = true;
  if (which == 1) {
    f.kind = FaceKind::Vertex;
    f.dimension = 0;
  } else if (which == 2) {
    f.kind = FaceKind::Edge;
    f.dimension = 1;
  } else {
    f.kind = which == pq.p ? FaceKind::PGon : FaceKind::QGon;
    f.dimension = 2;
    for (unsigned j = 0; j < which; ++j) {
      FaceDescriptor e;
      e.kind = FaceKind::Edge;
      e.dimension = 1;
      e.exposed = false;
      e.exact_parameters = {f.exact_parameters[j], f.exact_parameters[(j + 1) % which]};
      e.parameters = {f.parameters[j], f.parameters[(j + 1) % which]};
      out.non_exposed_edges.push_back(std::move(e));
    }
  }
  return out;
}

enum class BoundaryComponent { Secant, CircleWX, CircleYZ };

inline const char* to_string(BoundaryComponent c) {
  switch (c) {
    case BoundaryComponent::Secant: return "S1(X)";
    case BoundaryComponent::CircleWX: return "w^2+x^2-1";
    case BoundaryComponent::CircleYZ: return "y^2+z^2-1";
  }
  return "?";
}

/// w^2 + x^2 - 1 or y^2 + z^2 - 1 in variables (w, x, y, z).
inline QPoly circle_polynomial(BoundaryComponent c) {
  if (c == BoundaryComponent::Secant) throw std::invalid_argument("the secant component has no closed form here");
  const std::size_t a = c == BoundaryComponent::CircleWX ? 0 : 2;
  auto u = QPoly::variable(4, a), v = QPoly::variable(4, a + 1);
  return u * u + v * v - QPoly::constant(4, Rational(1));
}

/// Irreducible components of the algebraic boundary of C_pq.
inline std::vector<BoundaryComponent> boundary_components(unsigned p, unsigned q) {
  pq_data(p, q);  // validates
  if (p == 1 && q == 2) return {BoundaryComponent::Secant};
  if (p <= 2) return {BoundaryComponent::Secant, BoundaryComponent::CircleYZ};
  return {BoundaryComponent::Secant, BoundaryComponent::CircleWX, BoundaryComponent::CircleYZ};
}

struct BasicClosedVerdict {
  bool basic_closed = false;
  // for non-universal pairs: a segment z(s) z(t) whose gap lies outside the
  // closure of I_pq, so it is not a face and meets the interior
  std::optional<std::pair<Rational, Rational>> witness_edge;
  std::string certificate;
};

inline BasicClosedVerdict is_basic_closed_4d(unsigned p, unsigned q) {
  const PQData d = pq_data(p, q);
  BasicClosedVerdict v;
  if (d.closure_is_unit_interval()) {
    v.basic_closed = true;
    v.certificate = "universal orbitope: spectrahedron of PSD Hermitian Toeplitz matrices";
    return v;
  }
  // complement of closure(I_pq) in (0, 1). A gap that is a multiple of 1/p
  // or 1/q joins two vertices of one polygon, which is a face, so those are
  // skipped; among the rest take the simplest fraction of the first hole.
  std::vector<std::pair<Rational, Rational>> iv{{d.first.lo, d.first.hi}, {d.second.lo, d.second.hi}};
  std::sort(iv.begin(), iv.end());
  std::vector<std::pair<Rational, Rational>> holes;
  Rational cursor = 0;
  for (const auto& [lo, hi] : iv) {
    if (lo > cursor) holes.emplace_back(cursor, lo);
    cursor = std::max(cursor, hi);
  }
  if (cursor < 1) holes.emplace_back(cursor, Rational(1));
  if (holes.empty()) throw std::logic_error("closure of I_pq covers [0,1] for a non-universal pair");
  auto polygon_gap = [&](const Rational& g) {
    Rational a = g * p, b = g * q;
    a.canonicalize();
    b.canonicalize();
    return a.get_den() == 1 || b.get_den() == 1;
  };
  std::optional<Rational> mid;
  for (unsigned den = 2; !mid; ++den)
    for (const auto& [lo, hi] : holes) {
      for (unsigned a = 1; a < den && !mid; ++a) {
        Rational c = lo + (hi - lo) * Rational(a, den);
        c.canonicalize();
        if (!polygon_gap(c)) mid = c;
      }
      if (mid) break;
    }
  mid->canonicalize();
  v.basic_closed = false;
  v.witness_edge = std::make_pair(Rational(0), *mid);
  v.certificate =
      "gap outside closure(I_pq): the secant z(0)z(" + mid->get_str() +
      ") is not a face, so the secant component meets the interior at central points";
  return v;
}

/// Empirical dimension of the family of edge-spanning pairs (s, t): 2 when
/// some sampled edge has a full product neighbourhood of edges, otherwise
/// 1 if edges were seen at all, else 0.
inline unsigned probe_face_family_dimension(const PQData& pq, std::size_t samples, std::uint64_t seed,
                                            double radius = 1e-3) {
  if (samples == 0) throw std::invalid_argument("probe_face_family_dimension: samples must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  unsigned best = 0;
  const double offsets[] = {-radius, 0.0, radius};
  for (std::size_t i = 0; i < samples; ++i) {
    double s = u(rng), t = u(rng);
    if (!is_edge(pq, s, t)) continue;
    best = std::max(best, 1u);
    bool open = true;
    for (double ds : offsets)
      for (double dt : offsets) {
        double s2 = std::fmod(s + ds + 1.0, 1.0), t2 = std::fmod(t + dt + 1.0, 1.0);
        if (!is_edge(pq, s2, t2)) open = false;
      }
    if (open) return 2;
  }
  return best;
}

}  // namespace orbitope
