#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "hessfield/bipoly.hpp"
#include "hessfield/errors.hpp"
#include "hessfield/rational.hpp"

namespace hessfield {

// Trigonometric polynomial a_0 + sum_k (a_k cos k*theta + b_k sin k*theta)
// with exact rational coefficients. Products expand exactly by
// product-to-sum, so these compose with BiPoly conversions without loss.
class TrigPoly {
 public:
  TrigPoly() : cos_(1, Rational(0)), sin_(1, Rational(0)) {}

  static TrigPoly constant(Rational c) {
    TrigPoly t;
    t.cos_[0] = std::move(c);
    t.trim();
    return t;
  }

  static TrigPoly harmonic_cos(int k, Rational c) {
    if (k < 0) fail(Errc::bad_input, "harmonic_cos: negative harmonic");
    TrigPoly t;
    t.ensure(k);
    t.cos_[k] = std::move(c);
    t.trim();
    return t;
  }

  static TrigPoly harmonic_sin(int k, Rational c) {
    if (k < 1) fail(Errc::bad_input, "harmonic_sin: harmonic must be >= 1");
    TrigPoly t;
    t.ensure(k);
    t.sin_[k] = std::move(c);
    t.trim();
    return t;
  }

  int max_harmonic() const { return static_cast<int>(cos_.size()) - 1; }

  Rational cos_coeff(int k) const {
    return k >= 0 && k < static_cast<int>(cos_.size()) ? cos_[k] : Rational(0);
  }
  Rational sin_coeff(int k) const {
    return k >= 1 && k < static_cast<int>(sin_.size()) ? sin_[k] : Rational(0);
  }
  Rational constant_term() const { return cos_[0]; }

  bool is_zero() const { return max_harmonic() == 0 && cos_[0] == 0; }
  bool is_constant() const { return max_harmonic() == 0; }

  void add_cos(int k, const Rational& c) {
    ensure(k);
    cos_[k] += c;
    trim();
  }
  void add_sin(int k, const Rational& c) {
    if (k < 1) fail(Errc::bad_input, "add_sin: harmonic must be >= 1");
    ensure(k);
    sin_[k] += c;
    trim();
  }

  friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly r;
    int K = std::max(a.max_harmonic(), b.max_harmonic());
    r.ensure(K);
    for (int k = 0; k <= K; ++k) {
      r.cos_[k] = a.cos_coeff(k) + b.cos_coeff(k);
      if (k >= 1) r.sin_[k] = a.sin_coeff(k) + b.sin_coeff(k);
    }
    r.trim();
    return r;
  }

  friend TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) { return a + (Rational(-1) * b); }

  friend TrigPoly operator*(const Rational& s, const TrigPoly& t) {
    TrigPoly r = t;
    for (auto& c : r.cos_) c *= s;
    for (auto& c : r.sin_) c *= s;
    r.trim();
    return r;
  }
  friend TrigPoly operator*(const TrigPoly& t, const Rational& s) { return s * t; }

  // Exact product-to-sum expansion:
  //   cos A cos B = (cos(A-B) + cos(A+B)) / 2
  //   sin A sin B = (cos(A-B) - cos(A+B)) / 2
  //   sin A cos B = (sin(A-B) + sin(A+B)) / 2
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly r;
    r.ensure(a.max_harmonic() + b.max_harmonic());
    const Rational half(1, 2);
    auto emit_cos = [&r](int k, const Rational& c) {
      // cos(-k) = cos(k)
      r.cos_[std::abs(k)] += c;
    };
    auto emit_sin = [&r](int k, const Rational& c) {
      // sin(-k) = -sin(k), sin(0) = 0
      if (k > 0) r.sin_[k] += c;
      else if (k < 0) r.sin_[-k] -= c;
    };
    for (int ka = 0; ka <= a.max_harmonic(); ++ka) {
      Rational ac = a.cos_coeff(ka), as = a.sin_coeff(ka);
      if (ac == 0 && as == 0) continue;
      for (int kb = 0; kb <= b.max_harmonic(); ++kb) {
        Rational bc = b.cos_coeff(kb), bs = b.sin_coeff(kb);
        if (bc == 0 && bs == 0) continue;
        if (ac != 0 && bc != 0) {
          Rational h = ac * bc * half;
          emit_cos(ka - kb, h);
          emit_cos(ka + kb, h);
        }
        if (as != 0 && bs != 0) {
          Rational h = as * bs * half;
          emit_cos(ka - kb, h);
          emit_cos(ka + kb, -h);
        }
        if (as != 0 && bc != 0) {
          Rational h = as * bc * half;
          emit_sin(ka - kb, h);
          emit_sin(ka + kb, h);
        }
        if (ac != 0 && bs != 0) {
          // cos A sin B = (sin(A+B) - sin(A-B)) / 2
          Rational h = ac * bs * half;
          emit_sin(ka + kb, h);
          emit_sin(ka - kb, -h);
        }
      }
    }
    r.trim();
    return r;
  }

  TrigPoly& operator+=(const TrigPoly& o) { return *this = *this + o; }
  TrigPoly& operator-=(const TrigPoly& o) { return *this = *this - o; }
  TrigPoly& operator*=(const TrigPoly& o) { return *this = *this * o; }

  friend bool operator==(const TrigPoly& a, const TrigPoly& b) {
    return a.cos_ == b.cos_ && a.sin_ == b.sin_;
  }

  TrigPoly derivative() const {
    TrigPoly r;
    r.ensure(max_harmonic());
    for (int k = 1; k <= max_harmonic(); ++k) {
      r.cos_[k] = sin_coeff(k) * k;   // d/dθ sin kθ = k cos kθ
      r.sin_[k] = -cos_coeff(k) * k;  // d/dθ cos kθ = -k sin kθ
    }
    r.trim();
    return r;
  }

  double eval(double theta) const {
    double acc = to_double(cos_[0]);
    for (int k = 1; k <= max_harmonic(); ++k) {
      acc += to_double(cos_[k]) * std::cos(k * theta);
      acc += to_double(sin_[k]) * std::sin(k * theta);
    }
    return acc;
  }

 private:
  void ensure(int k) {
    if (k >= static_cast<int>(cos_.size())) {
      cos_.resize(k + 1, Rational(0));
      sin_.resize(k + 1, Rational(0));
    }
  }

  void trim() {
    std::size_t K = cos_.size();
    while (K > 1 && cos_[K - 1] == 0 && sin_[K - 1] == 0) --K;
    cos_.resize(K);
    sin_.resize(K);
  }

  // cos_[k] for k >= 0 (cos_[0] is the constant); sin_[k] for k >= 1
  // (sin_[0] kept as structural zero).
  std::vector<Rational> cos_, sin_;
};

// angular(theta) * rho^degree: a homogeneous field in polar form.
struct PolarHomog {
  int degree = 0;
  TrigPoly angular;
};

inline PolarHomog operator*(const PolarHomog& a, const PolarHomog& b) {
  return {a.degree + b.degree, a.angular * b.angular};
}

inline bool operator==(const PolarHomog& a, const PolarHomog& b) {
  return a.degree == b.degree && a.angular == b.angular;
}

// Exact polar form of a homogeneous polynomial:
// w(rho cos t, rho sin t) = angular(t) * rho^d.
inline PolarHomog to_polar(const BiPoly& w) {
  if (!w.is_homogeneous()) fail(Errc::not_homogeneous, "to_polar: mixed total degrees");
  PolarHomog h;
  h.degree = std::max(w.degree(), 0);
  const TrigPoly ct = TrigPoly::harmonic_cos(1, 1);
  const TrigPoly st = TrigPoly::harmonic_sin(1, 1);
  for (const auto& [e, c] : w.terms()) {
    TrigPoly term = TrigPoly::constant(c);
    for (int i = 0; i < e.first; ++i) term *= ct;
    for (int j = 0; j < e.second; ++j) term *= st;
    h.angular += term;
  }
  return h;
}

// Inverse of to_polar on the polynomial range: requires every harmonic k with
// a nonzero coefficient to satisfy k <= d and k == d (mod 2). Uses
// rho^d cos(k t) = Re(zeta^k) (x^2+y^2)^((d-k)/2) and the sine analogue.
inline BiPoly from_polar(const PolarHomog& h) {
  const int d = h.degree;
  if (d < 0) fail(Errc::bad_input, "from_polar: negative degree");
  BiPoly out;
  const BiPoly r2 = rho_squared();
  for (int k = 0; k <= h.angular.max_harmonic(); ++k) {
    Rational a = h.angular.cos_coeff(k), b = h.angular.sin_coeff(k);
    if (a == 0 && b == 0) continue;
    if (k > d || (d - k) % 2 != 0)
      fail(Errc::not_polynomial,
           "from_polar: harmonic " + std::to_string(k) + " incompatible with degree " +
               std::to_string(d));
    BiPoly radial = r2.pow(unsigned((d - k) / 2));
    if (a != 0) out += a * (re_zeta_pow(k) * radial);
    if (b != 0) out += b * (im_zeta_pow(k) * radial);
  }
  return out;
}

// Laplacian in polar form: Delta(c(t) rho^d) = (c'' + d^2 c) rho^(d-2).
inline PolarHomog polar_laplacian(const PolarHomog& h) {
  if (h.degree < 2) fail(Errc::degree_underflow, "polar_laplacian: degree < 2");
  TrigPoly c2 = h.angular.derivative().derivative();
  return {h.degree - 2, c2 + Rational(h.degree) * Rational(h.degree) * h.angular};
}

}  // namespace hessfield
