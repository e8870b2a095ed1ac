#pragma once

#include <random>

#include "hessfield/bipoly.hpp"
#include "hessfield/fields.hpp"
#include "hessfield/jet.hpp"
#include "hessfield/trig.hpp"

namespace hftest {

using hessfield::BiPoly;
using hessfield::Jet3;
using hessfield::Rational;
using hessfield::TrigPoly;
using hessfield::Vec2;

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int max_num = 9, int max_den = 9) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(Rng& rng, int max_num = 9, int max_den = 9) {
  for (;;) {
    Rational r = random_rational(rng, max_num, max_den);
    if (r != 0) return r;
  }
}

inline BiPoly random_bipoly(Rng& rng, int max_degree, int terms = 6) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  BiPoly p;
  for (int t = 0; t < terms; ++t) {
    int d = deg(rng);
    std::uniform_int_distribution<int> split(0, d);
    int i = split(rng);
    p.add_term(i, d - i, random_rational(rng));
  }
  return p;
}

inline BiPoly random_homog(Rng& rng, int degree, int terms = 4) {
  BiPoly p;
  std::uniform_int_distribution<int> split(0, degree);
  for (int t = 0; t < terms; ++t) {
    int i = split(rng);
    p.add_term(i, degree - i, random_rational(rng));
  }
  if (p.is_zero()) p.add_term(degree, 0, 1);
  return p;
}

// Random trig polynomial whose harmonics all share the parity of `degree`
// and stay <= max_harmonic; this is exactly the admissible angular data for
// a polynomial of that homogeneity degree.
inline TrigPoly random_polynomial_angular(Rng& rng, int degree, int max_harmonic = -1) {
  if (max_harmonic < 0 || max_harmonic > degree) max_harmonic = degree;
  TrigPoly c;
  int start = degree % 2 == 0 ? 0 : 1;
  for (int k = start; k <= max_harmonic; k += 2) {
    c.add_cos(k, random_rational(rng, 5, 5));
    if (k >= 1) c.add_sin(k, random_rational(rng, 5, 5));
  }
  if (c.is_zero()) c.add_cos(start == 0 ? 0 : 1, Rational(1));
  return c;
}

// Checks that every jet entry matches a central finite difference of the
// next-lower analytic entry: ux against d/dx of values, uxx against d/dx of
// ux, and so on through third order. Returns the worst relative error.
template <class F>
double jet_chain_error(const F& field, Vec2 p, double h = 1e-5) {
  auto entry = [&](Vec2 q, int which) {
    Jet3 j = field.jet3_at(q);
    switch (which) {
      case 0: return j.value;
      case 1: return j.ux;
      case 2: return j.uy;
      case 3: return j.uxx;
      case 4: return j.uxy;
      case 5: return j.uyy;
      case 6: return j.uxxx;
      case 7: return j.uxxy;
      case 8: return j.uxyy;
      default: return j.uyyy;
    }
  };
  auto ddx = [&](int which) {
    return (entry({p.x + h, p.y}, which) - entry({p.x - h, p.y}, which)) / (2 * h);
  };
  auto ddy = [&](int which) {
    return (entry({p.x, p.y + h}, which) - entry({p.x, p.y - h}, which)) / (2 * h);
  };
  Jet3 j = field.jet3_at(p);
  double scale = 1.0;
  for (double v : {j.value, j.ux, j.uy, j.uxx, j.uxy, j.uyy, j.uxxx, j.uxxy, j.uxyy, j.uyyy})
    scale = std::max(scale, std::abs(v));
  double worst = 0.0;
  auto acc = [&](double got, double want) {
    worst = std::max(worst, std::abs(got - want) / scale);
  };
  acc(ddx(0), j.ux);
  acc(ddy(0), j.uy);
  acc(ddx(1), j.uxx);
  acc(ddy(1), j.uxy);
  acc(ddx(2), j.uxy);
  acc(ddy(2), j.uyy);
  acc(ddx(3), j.uxxx);
  acc(ddy(3), j.uxxy);
  acc(ddx(4), j.uxxy);
  acc(ddy(4), j.uxyy);
  acc(ddx(5), j.uxyy);
  acc(ddy(5), j.uyyy);
  return worst;
}

// Central finite differences of field values: the independent oracle that
// every closed-form jet is checked against.
template <class F>
Jet3 finite_difference_jet(const F& field, Vec2 p, double h = 1e-5) {
  auto u = [&](double x, double y) { return field.jet3_at(Vec2{x, y}).value; };
  Jet3 j;
  double x = p.x, y = p.y;
  j.value = u(x, y);
  j.ux = (u(x + h, y) - u(x - h, y)) / (2 * h);
  j.uy = (u(x, y + h) - u(x, y - h)) / (2 * h);
  j.uxx = (u(x + h, y) - 2 * u(x, y) + u(x - h, y)) / (h * h);
  j.uyy = (u(x, y + h) - 2 * u(x, y) + u(x, y - h)) / (h * h);
  j.uxy = (u(x + h, y + h) - u(x + h, y - h) - u(x - h, y + h) + u(x - h, y - h)) / (4 * h * h);
  j.uxxx = (u(x + 2 * h, y) - 2 * u(x + h, y) + 2 * u(x - h, y) - u(x - 2 * h, y)) / (2 * h * h * h);
  j.uyyy = (u(x, y + 2 * h) - 2 * u(x, y + h) + 2 * u(x, y - h) - u(x, y - 2 * h)) / (2 * h * h * h);
  auto uxx_at = [&](double yy) { return (u(x + h, yy) - 2 * u(x, yy) + u(x - h, yy)) / (h * h); };
  auto uyy_at = [&](double xx) { return (u(xx, y + h) - 2 * u(xx, y) + u(xx, y - h)) / (h * h); };
  j.uxxy = (uxx_at(y + h) - uxx_at(y - h)) / (2 * h);
  j.uxyy = (uyy_at(x + h) - uyy_at(x - h)) / (2 * h);
  return j;
}

inline double rel_err(double got, double want, double scale = 1.0) {
  return std::abs(got - want) / std::max(scale, std::abs(want));
}

}  // namespace hftest
