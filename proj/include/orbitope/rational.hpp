#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitope {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "a/b", "a" or a decimal literal such as "-0.25".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.find_first_of(".eE") != std::string::npos) {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad rational literal: " + s);
    Rational q(v);
    return q;
  }
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// Closest rational to `x` among those with denominator <= `max_den`, found
/// from the continued-fraction convergents and the best semiconvergent.
inline Rational best_rational(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) throw std::domain_error("best_rational: non-finite input");
  if (max_den < 1) throw std::invalid_argument("best_rational: max_den must be >= 1");
  const bool neg = x < 0;
  double r = std::fabs(x);
  if (r > 1e18) throw std::domain_error("best_rational: magnitude too large");
  // h/k convergents, kept as exact integers
  Integer h_prev = 1, h = static_cast<long>(std::floor(r));
  Integer k_prev = 0, k = 1;
  double frac = r - std::floor(r);
  const Integer dmax = static_cast<long>(max_den);
  while (frac > 1e-300) {
    double inv = 1.0 / frac;
    if (!std::isfinite(inv) || inv > 1e18) break;
    Integer a = static_cast<long>(std::floor(inv));
    frac = inv - std::floor(inv);
    Integer k_next = a * k + k_prev;
    if (k_next > dmax) {
      // largest semiconvergent that still fits
      Integer m = (dmax - k_prev) / k;
      Integer hs = m * h + h_prev, ks = m * k + k_prev;
      Rational cand_semi(hs, ks), cand_conv(h, k);
      cand_semi.canonicalize();
      cand_conv.canonicalize();
      Rational target(r);
      Rational e1 = abs(cand_semi - target), e2 = abs(cand_conv - target);
      Rational best = (ks > 0 && e1 < e2) ? cand_semi : cand_conv;
      return neg ? Rational(-best) : best;
    }
    Integer h_next = a * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  Rational q(h, k);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

}  // namespace orbitope
