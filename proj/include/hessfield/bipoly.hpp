#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hessfield/errors.hpp"
#include "hessfield/rational.hpp"

namespace hessfield {

enum class Axis { x, y };

// Sparse bivariate polynomial with exact rational coefficients. Zero
// coefficients are never stored; the zero polynomial has an empty term map.
class BiPoly {
 public:
  using Exp = std::pair<int, int>;  // (i, j) for x^i y^j
  using TermMap = std::map<Exp, Rational>;

  BiPoly() = default;

  static BiPoly zero() { return BiPoly(); }

  static BiPoly constant(Rational c) {
    BiPoly p;
    p.set(0, 0, std::move(c));
    return p;
  }

  static BiPoly monomial(int i, int j, Rational c) {
    if (i < 0 || j < 0) fail(Errc::bad_input, "monomial: negative exponent");
    BiPoly p;
    p.set(i, j, std::move(c));
    return p;
  }

  static BiPoly var_x() { return monomial(1, 0, 1); }
  static BiPoly var_y() { return monomial(0, 1, 1); }

  bool is_zero() const { return terms_.empty(); }

  // -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
  }

  int lowest_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int t = e.first + e.second;
      if (d < 0 || t < d) d = t;
    }
    return d;
  }

  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int t = e.first + e.second;
      if (d < 0) d = t;
      else if (t != d) return false;
    }
    return true;
  }

  Rational coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void set(int i, int j, Rational c) {
    if (c == 0) terms_.erase({i, j});
    else terms_[{i, j}] = std::move(c);
  }

  void add_term(int i, int j, const Rational& c) {
    auto it = terms_.find({i, j});
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(Exp{i, j}, c);
      return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  const TermMap& terms() const { return terms_; }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, c);
    return r;
  }

  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, -c);
    return r;
  }

  BiPoly operator-() const {
    BiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
  }

  friend BiPoly operator*(const Rational& s, const BiPoly& p) {
    BiPoly r;
    if (s == 0) return r;
    for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
    return r;
  }

  friend BiPoly operator*(const BiPoly& p, const Rational& s) { return s * p; }

  BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
  BiPoly& operator-=(const BiPoly& o) { return *this = *this - o; }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  BiPoly derive(Axis axis) const {
    BiPoly r;
    for (const auto& [e, c] : terms_) {
      if (axis == Axis::x) {
        if (e.first > 0) r.add_term(e.first - 1, e.second, c * e.first);
      } else {
        if (e.second > 0) r.add_term(e.first, e.second - 1, c * e.second);
      }
    }
    return r;
  }

  // Sum of all terms of total degree d (possibly zero).
  BiPoly homog_part(int d) const {
    if (d < 0) fail(Errc::bad_input, "homog_part: negative degree");
    BiPoly r;
    for (const auto& [e, c] : terms_)
      if (e.first + e.second == d) r.terms_.emplace(e, c);
    return r;
  }

  BiPoly pow(unsigned e) const {
    BiPoly acc = constant(1), b = *this;
    while (e) {
      if (e & 1u) acc *= b;
      if (e >>= 1u) b *= b;
    }
    return acc;
  }

  Rational eval(const Rational& x, const Rational& y) const {
    int mi = 0, mj = 0;
    for (const auto& [e, c] : terms_) {
      mi = std::max(mi, e.first);
      mj = std::max(mj, e.second);
    }
    std::vector<Rational> xp(mi + 1), yp(mj + 1);
    xp[0] = 1;
    yp[0] = 1;
    for (int i = 1; i <= mi; ++i) xp[i] = xp[i - 1] * x;
    for (int j = 1; j <= mj; ++j) yp[j] = yp[j - 1] * y;
    Rational acc = 0;
    for (const auto& [e, c] : terms_) acc += c * xp[e.first] * yp[e.second];
    return acc;
  }

  double eval(double x, double y) const {
    int mi = 0, mj = 0;
    for (const auto& [e, c] : terms_) {
      mi = std::max(mi, e.first);
      mj = std::max(mj, e.second);
    }
    std::vector<double> xp(mi + 1), yp(mj + 1);
    xp[0] = 1.0;
    yp[0] = 1.0;
    for (int i = 1; i <= mi; ++i) xp[i] = xp[i - 1] * x;
    for (int j = 1; j <= mj; ++j) yp[j] = yp[j - 1] * y;
    double acc = 0.0;
    for (const auto& [e, c] : terms_) acc += to_double(c) * xp[e.first] * yp[e.second];
    return acc;
  }

  // p(X(x,y), Y(x,y)); exact composition.
  BiPoly substitute(const BiPoly& X, const BiPoly& Y) const {
    int mi = 0, mj = 0;
    for (const auto& [e, c] : terms_) {
      mi = std::max(mi, e.first);
      mj = std::max(mj, e.second);
    }
    std::vector<BiPoly> xp(mi + 1), yp(mj + 1);
    xp[0] = constant(1);
    yp[0] = constant(1);
    for (int i = 1; i <= mi; ++i) xp[i] = xp[i - 1] * X;
    for (int j = 1; j <= mj; ++j) yp[j] = yp[j - 1] * Y;
    BiPoly r;
    for (const auto& [e, c] : terms_) r += c * (xp[e.first] * yp[e.second]);
    return r;
  }

  // p(x + cx, y + cy): the expansion of p around (cx, cy) expressed in offset
  // coordinates.
  BiPoly translate(const Rational& cx, const Rational& cy) const {
    return substitute(var_x() + constant(cx), var_y() + constant(cy));
  }

  // p(t x, t y).
  BiPoly scale_args(const Rational& t) const {
    BiPoly r;
    for (const auto& [e, c] : terms_)
      r.terms_.emplace(e, c * rational_pow(t, unsigned(e.first + e.second)));
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest total degree first, then lexicographic in (i, j)
    std::vector<std::pair<Exp, Rational>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
      int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
      if (da != db) return da > db;
      return a.first > b.first;
    });
    for (const auto& [e, c] : ts) {
      Rational a = c;
      if (!first) {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      bool has_var = e.first > 0 || e.second > 0;
      if (!has_var || a != 1) {
        os << numerator(a).str();
        if (denominator(a) != 1) os << "/" << denominator(a).str();
        if (has_var) os << "*";
      }
      if (e.first > 0) {
        os << "x";
        if (e.first > 1) os << "^" << e.first;
      }
      if (e.second > 0) {
        if (e.first > 0) os << "*";
        os << "y";
        if (e.second > 1) os << "^" << e.second;
      }
    }
    return os.str();
  }

 private:
  TermMap terms_;
};

inline BiPoly rho_squared() {
  BiPoly p;
  p.set(2, 0, 1);
  p.set(0, 2, 1);
  return p;
}

// Re((x+iy)^k) and Im((x+iy)^k), exact binomial expansions.
inline BiPoly re_zeta_pow(int k) {
  if (k < 0) fail(Errc::bad_input, "re_zeta_pow: negative power");
  BiPoly p;
  Rational binom = 1;
  for (int j = 0; j <= k; ++j) {
    if (j % 2 == 0) p.add_term(k - j, j, (j / 2) % 2 == 0 ? binom : -binom);
    binom = binom * (k - j) / (j + 1);
  }
  return p;
}

inline BiPoly im_zeta_pow(int k) {
  if (k < 0) fail(Errc::bad_input, "im_zeta_pow: negative power");
  BiPoly p;
  Rational binom = 1;
  for (int j = 0; j <= k; ++j) {
    if (j % 2 == 1) p.add_term(k - j, j, ((j - 1) / 2) % 2 == 0 ? binom : -binom);
    binom = binom * (k - j) / (j + 1);
  }
  return p;
}

}  // namespace hessfield
