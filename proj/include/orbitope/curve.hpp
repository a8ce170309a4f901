#pragma once

#include <orbitope/poly.hpp>
#include <orbitope/rational.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orbitope {

/// SO(2) representation rho_{j1} + ... + rho_{jr} without trivial factor,
/// stored as strictly increasing positive indices.
class Representation {
 public:
  explicit Representation(std::vector<unsigned> indices) : indices_(std::move(indices)) {
    if (indices_.empty()) throw std::invalid_argument("representation needs at least one index");
    std::sort(indices_.begin(), indices_.end());
    if (indices_.front() == 0)
      throw std::invalid_argument("index 0 (trivial factor) is not allowed");
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
      throw std::invalid_argument("duplicate indices: representation must be multiplicity-free");
  }

  /// Parses "1,3"; a leading '-' on an index is dropped (rho_{-j} ~ rho_j).
  static Representation parse(const std::string& text) {
    std::vector<unsigned> idx;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto b = tok.find_first_not_of(" \t");
      auto e = tok.find_last_not_of(" \t");
      if (b == std::string::npos) throw std::invalid_argument("empty index in representation '" + text + "'");
      tok = tok.substr(b, e - b + 1);
      if (!tok.empty() && tok[0] == '-') tok.erase(0, 1);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed representation '" + text + "'");
      idx.push_back(static_cast<unsigned>(std::stoul(tok)));
    }
    return Representation(std::move(idx));
  }

  const std::vector<unsigned>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  std::size_t ambient_dim() const { return 2 * indices_.size(); }
  unsigned max_index() const { return indices_.back(); }
  unsigned gcd() const {
    return std::accumulate(indices_.begin(), indices_.end(), 0u,
                           [](unsigned a, unsigned b) { return std::gcd(a, b); });
  }
  bool is_reduced() const { return gcd() == 1; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < indices_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(indices_[i]);
    }
    return s;
  }

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  std::vector<unsigned> indices_;
};

inline Representation reduce(const Representation& rep) {
  const unsigned d = rep.gcd();
  std::vector<unsigned> idx = rep.indices();
  for (auto& j : idx) j /= d;
  return Representation(std::move(idx));
}

/// The universal orbitope representation 1, 2, ..., n.
inline Representation universal_representation(unsigned n) {
  std::vector<unsigned> idx(n);
  std::iota(idx.begin(), idx.end(), 1u);
  return Representation(std::move(idx));
}

/// Barvinok-Novik representation 1, 3, ..., n (n odd).
inline Representation barvinok_novik_representation(unsigned n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("Barvinok-Novik orbitope needs odd n");
  std::vector<unsigned> idx;
  for (unsigned j = 1; j <= n; j += 2) idx.push_back(j);
  return Representation(std::move(idx));
}

inline std::vector<double> orbit_point(const Representation& rep, double theta) {
  theta = std::fmod(theta, 2 * std::numbers::pi);
  std::vector<double> x;
  x.reserve(rep.ambient_dim());
  for (unsigned j : rep.indices()) {
    x.push_back(std::cos(j * theta));
    x.push_back(std::sin(j * theta));
  }
  return x;
}

/// d/dtheta of orbit_point.
inline std::vector<double> orbit_tangent(const Representation& rep, double theta) {
  std::vector<double> x;
  x.reserve(rep.ambient_dim());
  for (unsigned j : rep.indices()) {
    x.push_back(-double(j) * std::sin(j * theta));
    x.push_back(double(j) * std::cos(j * theta));
  }
  return x;
}

/// Exact orbit points through the half-angle substitution
/// cos = (1 - t^2)/(1 + t^2), sin = 2t/(1 + t^2), with multiple angles
/// from the Chebyshev-type polynomials. Misses only theta = pi.
class RationalParametrization {
 public:
  explicit RationalParametrization(const Representation& rep) : rep_(rep) {
    for (unsigned j : rep.indices()) angles_.push_back(chebyshev_angle<Rational>(j));
  }

  std::vector<Rational> point(const Rational& t) const {
    const Rational den = 1 + t * t;
    const std::vector<Rational> cs{Rational((1 - t * t) / den), Rational(2 * t / den)};
    std::vector<Rational> x;
    x.reserve(rep_.ambient_dim());
    for (const auto& [f, g] : angles_) {
      x.push_back(eval(f, cs));
      x.push_back(eval(g, cs));
    }
    return x;
  }

  const Representation& representation() const { return rep_; }

 private:
  Representation rep_;
  std::vector<std::pair<QPoly, QPoly>> angles_;
};

inline std::vector<Rational> rational_point(const Representation& rep, const Rational& t) {
  return RationalParametrization(rep).point(t);
}

struct CurveInfo {
  unsigned degree = 0;
  bool smooth = false;
  std::size_t ambient_dim = 0;
  // homogeneous coordinates in P^{2r}, present iff the curve is singular
  std::optional<std::pair<std::vector<std::complex<double>>, std::vector<std::complex<double>>>>
      singular_points;
};

inline CurveInfo curve_info(const Representation& rep) {
  const unsigned d = rep.gcd();
  const unsigned top = rep.max_index() / d;
  CurveInfo info;
  info.degree = 2 * top;
  info.ambient_dim = rep.ambient_dim();
  // The derivative of the parametrization at z = 0, infinity is nonzero iff
  // some coordinate has exponent top - 1; the homogenizing coordinate
  // contributes exponent 0, which matters only for the conic {1}.
  info.smooth = top == 1;
  for (unsigned j : rep.indices())
    if (j / d == top - 1) info.smooth = true;
  if (!info.smooth) {
    const std::size_t len = rep.ambient_dim() + 1;
    std::vector<std::complex<double>> a(len, 0.0), b(len, 0.0);
    a[len - 2] = b[len - 2] = 1.0;
    a[len - 1] = {0.0, 1.0};
    b[len - 1] = {0.0, -1.0};
    info.singular_points.emplace(std::move(a), std::move(b));
  }
  return info;
}

struct DegenerateHyperplane : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// dense univariate polynomials over Q, lowest coefficient first
using UPoly = std::vector<Rational>;

inline void utrim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  utrim(out);
  return out;
}

inline UPoly upow(const UPoly& a, unsigned e) {
  UPoly out{Rational(1)};
  for (unsigned i = 0; i < e; ++i) out = umul(out, a);
  return out;
}

inline void uaxpy(UPoly& y, const Rational& a, const UPoly& x) {
  if (y.size() < x.size()) y.resize(x.size(), Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
  utrim(y);
}

// quotient and remainder, b nonzero
inline std::pair<UPoly, UPoly> udivmod(UPoly a, const UPoly& b) {
  utrim(a);
  if (a.size() < b.size()) return {{}, a};
  UPoly q(a.size() - b.size() + 1, Rational(0));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    utrim(a);
  }
  utrim(q);
  return {q, a};
}

inline UPoly ugcd(UPoly a, UPoly b) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    auto r = udivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace detail

/// Degree of a generic hyperplane section, found by pulling a random
/// hyperplane back along the rational parametrization. Each coordinate is
/// reduced to lowest terms with a polynomial gcd and the denominators are
/// cleared with their lcm, so the denominator structure is derived rather
/// than assumed. Throws DegenerateHyperplane when the pulled-back polynomial
/// drops degree, i.e. the hyperplane passes through the point at t = infinity.
inline unsigned numeric_degree_probe(const Representation& rep, std::uint64_t seed) {
  using detail::UPoly;
  if (!rep.is_reduced()) throw std::invalid_argument("numeric_degree_probe: representation must be reduced");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-1000, 1000);
  const UPoly c_num{Rational(1), Rational(0), Rational(-1)};  // 1 - t^2
  const UPoly s_num{Rational(0), Rational(2)};                 // 2 t
  const UPoly den1{Rational(1), Rational(0), Rational(1)};     // 1 + t^2

  std::vector<std::pair<UPoly, UPoly>> coords;  // (numerator, denominator) in lowest terms
  for (unsigned j : rep.indices()) {
    const auto [fj, gj] = chebyshev_angle<Rational>(j);
    for (const QPoly* p : {&fj, &gj}) {
      UPoly num;
      for (const auto& [e, cf] : p->terms())
        detail::uaxpy(num, cf, detail::umul(detail::upow(c_num, e[0]), detail::upow(s_num, e[1])));
      UPoly den = detail::upow(den1, j);
      const UPoly g = detail::ugcd(num, den);
      if (!g.empty() && detail::udeg(g) > 0) {
        num = detail::udivmod(num, g).first;
        den = detail::udivmod(den, g).first;
      }
      coords.emplace_back(std::move(num), std::move(den));
    }
  }
  UPoly lcm{Rational(1)};
  for (const auto& [num, den] : coords)
    lcm = detail::udivmod(detail::umul(lcm, den), detail::ugcd(lcm, den)).first;

  // degree of the binary form obtained after homogenizing
  int form_degree = detail::udeg(lcm);
  UPoly h;
  detail::uaxpy(h, Rational(coef(rng)), lcm);
  for (const auto& [num, den] : coords) {
    const UPoly scaled = detail::umul(num, detail::udivmod(lcm, den).first);
    form_degree = std::max(form_degree, detail::udeg(scaled));
    detail::uaxpy(h, Rational(coef(rng)), scaled);
  }
  if (detail::udeg(h) < form_degree)
    throw DegenerateHyperplane("hyperplane passes through the orbit point at t = infinity");
  return static_cast<unsigned>(detail::udeg(h));
}

}  // namespace orbitope
