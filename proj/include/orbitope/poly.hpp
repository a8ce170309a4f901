#pragma once

#include <orbitope/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace orbitope {

enum class CoeffMode { ExactRational, Float64 };

template <typename T>
struct coeff_traits;

template <>
struct coeff_traits<Rational> {
  static constexpr CoeffMode mode = CoeffMode::ExactRational;
  static bool is_zero(const Rational& c) { return sgn(c) == 0; }
};

template <>
struct coeff_traits<double> {
  static constexpr CoeffMode mode = CoeffMode::Float64;
  static bool is_zero(double c) { return c == 0.0; }
};

using Exponent = std::vector<unsigned>;

inline unsigned total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

// Graded lexicographic order, variable 0 most significant. Used as a
// "greater" comparator so maps iterate from the leading term down.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// Sparse multivariate polynomial with coefficients in `Coeff` (Rational or
/// double). Zero coefficients are never stored; terms iterate in descending
/// graded-lex order.
template <typename Coeff>
class SparsePoly {
 public:
  using coeff_type = Coeff;
  using TermMap = std::map<Exponent, Coeff, GrlexGreater>;
  static constexpr CoeffMode mode = coeff_traits<Coeff>::mode;

  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {
    if (nvars == 0) throw std::invalid_argument("SparsePoly: nvars must be positive");
  }

  static SparsePoly constant(std::size_t nvars, const Coeff& c) {
    SparsePoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }

  static SparsePoly variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::out_of_range("SparsePoly::variable: index out of range");
    SparsePoly p(nvars);
    Exponent e(nvars, 0);
    e[index] = 1;
    p.add_term(std::move(e), Coeff(1));
    return p;
  }

  static SparsePoly monomial(const Exponent& e, const Coeff& c) {
    SparsePoly p(e.size());
    p.add_term(e, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  int degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.begin()->first));
  }

  Coeff coefficient(const Exponent& e) const {
    check_exponent(e);
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  // Accumulates c into the coefficient of e, pruning a resulting zero.
  void add_term(Exponent e, const Coeff& c) {
    check_exponent(e);
    if (coeff_traits<Coeff>::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (coeff_traits<Coeff>::is_zero(it->second)) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  SparsePoly& operator-=(const SparsePoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, Coeff(-c));
    return *this;
  }

  SparsePoly& operator*=(const Coeff& s) {
    if (coeff_traits<Coeff>::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Coeff& s) { return a *= s; }
  friend SparsePoly operator-(SparsePoly a) { return a *= Coeff(-1); }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) { return multiply(a, b); }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_exponent(const Exponent& e) const {
    if (e.size() != nvars_) throw std::invalid_argument("exponent length does not match nvars");
  }
  void check_compatible(const SparsePoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials have different nvars");
  }

  std::size_t nvars_;
  TermMap terms_;
};

using QPoly = SparsePoly<Rational>;
using FPoly = SparsePoly<double>;

template <typename Coeff>
SparsePoly<Coeff> multiply(const SparsePoly<Coeff>& p, const SparsePoly<Coeff>& q) {
  if (p.nvars() != q.nvars()) throw std::invalid_argument("multiply: nvars mismatch");
  SparsePoly<Coeff> out(p.nvars());
  Exponent e(p.nvars());
  for (const auto& [ea, ca] : p.terms()) {
    for (const auto& [eb, cb] : q.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, Coeff(ca * cb));
    }
  }
  return out;
}

template <typename Coeff>
SparsePoly<Coeff> power(const SparsePoly<Coeff>& p, unsigned k) {
  auto out = SparsePoly<Coeff>::constant(p.nvars(), Coeff(1));
  for (unsigned i = 0; i < k; ++i) out = multiply(out, p);
  return out;
}

template <typename Coeff>
Coeff eval(const SparsePoly<Coeff>& p, std::span<const Coeff> point) {
  if (point.size() != p.nvars()) throw std::invalid_argument("eval: point dimension mismatch");
  Coeff sum(0);
  // cache of powers per variable, grown on demand
  std::vector<std::vector<Coeff>> pw(p.nvars(), std::vector<Coeff>{Coeff(1)});
  for (const auto& [e, c] : p.terms()) {
    Coeff m(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& cache = pw[i];
      while (cache.size() <= e[i]) cache.push_back(Coeff(cache.back() * point[i]));
      m *= cache[e[i]];
    }
    sum += m;
  }
  return sum;
}

template <typename Coeff>
Coeff eval(const SparsePoly<Coeff>& p, const std::vector<Coeff>& point) {
  return eval(p, std::span<const Coeff>(point));
}

/// Substitutes the given variables and drops them; the result lives in the
/// remaining variables, in their original relative order.
template <typename Coeff>
SparsePoly<Coeff> restrict(const SparsePoly<Coeff>& p,
                           const std::map<std::size_t, Coeff>& assignments) {
  if (assignments.empty()) return p;
  for (const auto& [idx, v] : assignments)
    if (idx >= p.nvars()) throw std::out_of_range("restrict: variable index out of range");
  if (assignments.size() == p.nvars())
    throw std::invalid_argument("restrict: every variable assigned; use eval");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < p.nvars(); ++i)
    if (!assignments.count(i)) keep.push_back(i);
  SparsePoly<Coeff> out(keep.size());
  Exponent e(keep.size());
  for (const auto& [ep, c] : p.terms()) {
    Coeff m(c);
    for (const auto& [idx, v] : assignments) {
      for (unsigned k = 0; k < ep[idx]; ++k) m *= v;
    }
    for (std::size_t i = 0; i < keep.size(); ++i) e[i] = ep[keep[i]];
    out.add_term(e, m);
  }
  return out;
}

template <typename Coeff>
SparsePoly<Coeff> derivative(const SparsePoly<Coeff>& p, std::size_t var) {
  if (var >= p.nvars()) throw std::out_of_range("derivative: variable index out of range");
  SparsePoly<Coeff> out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    out.add_term(std::move(d), Coeff(c * Coeff(static_cast<long>(e[var]))));
  }
  return out;
}

template <typename Coeff>
std::vector<Coeff> gradient(const SparsePoly<Coeff>& p, std::span<const Coeff> point) {
  if (point.size() != p.nvars()) throw std::invalid_argument("gradient: point dimension mismatch");
  std::vector<Coeff> g;
  g.reserve(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) g.push_back(eval(derivative(p, i), point));
  return g;
}

template <typename Coeff>
std::vector<Coeff> gradient(const SparsePoly<Coeff>& p, const std::vector<Coeff>& point) {
  return gradient(p, std::span<const Coeff>(point));
}

/// (f_j, g_j) in variables (c, s) with cos(j t) = f_j(cos t, sin t) and
/// sin(j t) = g_j(cos t, sin t), via the angle-addition recurrence.
template <typename Coeff = Rational>
std::pair<SparsePoly<Coeff>, SparsePoly<Coeff>> chebyshev_angle(unsigned j) {
  if (j == 0) throw std::invalid_argument("chebyshev_angle: j must be >= 1");
  const auto c = SparsePoly<Coeff>::variable(2, 0);
  const auto s = SparsePoly<Coeff>::variable(2, 1);
  auto f = c, g = s;
  for (unsigned k = 1; k < j; ++k) {
    auto fn = multiply(c, f) - multiply(s, g);
    auto gn = multiply(s, f) + multiply(c, g);
    f = std::move(fn);
    g = std::move(gn);
  }
  return {f, g};
}

inline FPoly to_float(const QPoly& p) {
  FPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, c.get_d());
  return out;
}

/// Rescales so that the coefficient of `anchor` equals `value`.
template <typename Coeff>
SparsePoly<Coeff> normalize(const SparsePoly<Coeff>& p, const Exponent& anchor, const Coeff& value) {
  Coeff a = p.coefficient(anchor);
  if (coeff_traits<Coeff>::is_zero(a)) throw std::domain_error("normalize: anchor coefficient is zero");
  return p * Coeff(value / a);
}

// ---------------------------------------------------------------------------
// Text format: one term per line, "num/den e1 e2 ... en". Lines starting with
// '#' and blank lines are ignored.

inline std::string format_coeff(const Rational& c) { return to_string(c); }
inline std::string format_coeff(double c) {
  std::ostringstream os;
  os.precision(17);
  os << c;
  return os.str();
}

template <typename Coeff>
void write_text(std::ostream& os, const SparsePoly<Coeff>& p) {
  for (const auto& [e, c] : p.terms()) {
    os << format_coeff(c);
    for (unsigned k : e) os << ' ' << k;
    os << '\n';
  }
}

template <typename Coeff>
std::string to_text(const SparsePoly<Coeff>& p) {
  std::ostringstream os;
  write_text(os, p);
  return os.str();
}

namespace detail {
template <typename Coeff>
Coeff parse_coeff(const std::string& tok) {
  if constexpr (std::is_same_v<Coeff, Rational>) {
    return parse_rational(tok);
  } else {
    auto slash = tok.find('/');
    if (slash == std::string::npos) return std::stod(tok);
    return std::stod(tok.substr(0, slash)) / std::stod(tok.substr(slash + 1));
  }
}
}  // namespace detail

/// Parses the text format. If nvars is 0 it is inferred from the first term.
template <typename Coeff = Rational>
SparsePoly<Coeff> read_text(std::istream& is, std::size_t nvars = 0) {
  std::optional<SparsePoly<Coeff>> p;
  if (nvars) p.emplace(nvars);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    Coeff c = detail::parse_coeff<Coeff>(tok);
    Exponent e;
    long k;
    while (ls >> k) {
      if (k < 0) throw std::invalid_argument("negative exponent on line " + std::to_string(lineno));
      e.push_back(static_cast<unsigned>(k));
    }
    if (!ls.eof()) throw std::invalid_argument("malformed term on line " + std::to_string(lineno));
    if (!p) {
      if (e.empty()) throw std::invalid_argument("cannot infer nvars from a term without exponents");
      p.emplace(e.size());
    }
    p->add_term(std::move(e), c);
  }
  if (!p) throw std::invalid_argument("read_text: empty input and nvars unknown");
  return std::move(*p);
}

template <typename Coeff = Rational>
SparsePoly<Coeff> parse_text(const std::string& text, std::size_t nvars = 0) {
  std::istringstream is(text);
  return read_text<Coeff>(is, nvars);
}

/// Human-readable rendering, e.g. "4*x^3 - 3*x + z".
template <typename Coeff>
std::string to_pretty(const SparsePoly<Coeff>& p, const std::vector<std::string>& names = {}) {
  auto name = [&](std::size_t i) {
    if (i < names.size()) return names[i];
    if (p.nvars() == 4 && names.empty()) {
      static const char* wxyz[] = {"w", "x", "y", "z"};
      return std::string(wxyz[i]);
    }
    return "x" + std::to_string(i + 1);
  };
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = c < 0;
    Coeff mag = neg ? Coeff(-c) : c;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    const bool unit = (mag == Coeff(1));
    bool wrote = false;
    if (!unit || total_degree(e) == 0) {
      if constexpr (std::is_same_v<Coeff, Rational>) {
        os << (mag.get_den() == 1 ? mag.get_num().get_str() : to_string(mag));
      } else {
        os << format_coeff(mag);
      }
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << name(i);
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace orbitope
