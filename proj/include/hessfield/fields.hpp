#pragma once

#include <array>
#include <cmath>
#include <concepts>
#include <vector>

#include "hessfield/geometry.hpp"
#include "hessfield/jet.hpp"
#include "hessfield/operators.hpp"

namespace hessfield {

// A scalar field exposes closed-form jets; nothing in the library ever
// differentiates a field by finite differences (the tests do, as oracles).
template <class F>
concept ScalarField = requires(const F& f, Vec2 p) {
  { f.jet3_at(p) } -> std::same_as<Jet3>;
  { f.contains(p) } -> std::same_as<bool>;
};

// ---------------------------------------------------------------------------
// Polynomial field: jets are the symbolic derivatives, evaluated in doubles.

class PolyField {
 public:
  explicit PolyField(BiPoly p) : poly_(std::move(p)) {
    BiPoly px = poly_.derive(Axis::x), py = poly_.derive(Axis::y);
    BiPoly pxx = px.derive(Axis::x), pxy = px.derive(Axis::y), pyy = py.derive(Axis::y);
    derivs_[0] = densify(poly_);
    derivs_[1] = densify(px);
    derivs_[2] = densify(py);
    derivs_[3] = densify(pxx);
    derivs_[4] = densify(pxy);
    derivs_[5] = densify(pyy);
    derivs_[6] = densify(pxx.derive(Axis::x));
    derivs_[7] = densify(pxx.derive(Axis::y));
    derivs_[8] = densify(pyy.derive(Axis::x));
    derivs_[9] = densify(pyy.derive(Axis::y));
  }

  const BiPoly& poly() const { return poly_; }

  bool contains(Vec2) const { return true; }

  Jet3 jet3_at(Vec2 p) const {
    Jet3 j;
    j.value = eval_dense(derivs_[0], p);
    j.ux = eval_dense(derivs_[1], p);
    j.uy = eval_dense(derivs_[2], p);
    j.uxx = eval_dense(derivs_[3], p);
    j.uxy = eval_dense(derivs_[4], p);
    j.uyy = eval_dense(derivs_[5], p);
    j.uxxx = eval_dense(derivs_[6], p);
    j.uxxy = eval_dense(derivs_[7], p);
    j.uxyy = eval_dense(derivs_[8], p);
    j.uyyy = eval_dense(derivs_[9], p);
    return j;
  }

 private:
  struct DenseTerm {
    int i, j;
    double c;
  };
  using Dense = std::vector<DenseTerm>;

  static Dense densify(const BiPoly& p) {
    Dense d;
    d.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) d.push_back({e.first, e.second, to_double(c)});
    return d;
  }

  static double eval_dense(const Dense& d, Vec2 p) {
    double acc = 0;
    for (const auto& t : d) {
      double m = t.c;
      for (int k = 0; k < t.i; ++k) m *= p.x;
      for (int k = 0; k < t.j; ++k) m *= p.y;
      acc += m;
    }
    return acc;
  }

  BiPoly poly_;
  std::array<Dense, 10> derivs_;
};

// ---------------------------------------------------------------------------
// Bump field: disjoint copies of exp(-1/(rho^2 - r^2)), identically zero
// outside the disks. Smooth but never analytic across a disk boundary.

// Derivatives of g(s) = exp(-1/(rho^2 - s)) with respect to s = r^2.
struct BumpProfile {
  double f = 0, d1 = 0, d2 = 0, d3 = 0;
};

inline BumpProfile bump_profile_derivs(double r2, double rho) {
  if (!(rho > 0)) fail(Errc::bad_input, "bump_profile_derivs: rho must be positive");
  double q = rho * rho - r2;
  if (!(q > 0)) fail(Errc::outside_support, "bump_profile_derivs: r^2 >= rho^2");
  double f = std::exp(-1.0 / q);
  double e1 = -1.0 / (q * q);       // (d/ds)(-1/q)
  double e2 = -2.0 / (q * q * q);   // second derivative of the exponent
  double e3 = -6.0 / (q * q * q * q);
  return {f, e1 * f, (e2 + e1 * e1) * f, (e3 + 3.0 * e2 * e1 + e1 * e1 * e1) * f};
}

struct BumpDisk {
  Vec2 center;
  double radius = 0;
};

class BumpField {
 public:
  explicit BumpField(std::vector<BumpDisk> disks, double amplitude = 1.0,
                     double disjointness_margin = 1e-9)
      : disks_(std::move(disks)), amplitude_(amplitude), margin_(disjointness_margin) {
    for (const auto& d : disks_)
      if (!(d.radius > 0)) fail(Errc::bad_input, "BumpField: disk radius must be positive");
    for (std::size_t i = 0; i < disks_.size(); ++i)
      for (std::size_t j = i + 1; j < disks_.size(); ++j) {
        double gap = dist(disks_[i].center, disks_[j].center) - disks_[i].radius - disks_[j].radius;
        if (gap < margin_)
          fail(Errc::bad_input, "BumpField: disks are not strictly disjoint (gap " +
                                    std::to_string(gap) + " < margin)");
      }
  }

  const std::vector<BumpDisk>& disks() const { return disks_; }
  double amplitude() const { return amplitude_; }
  double disjointness_margin() const { return margin_; }

  bool contains(Vec2) const { return true; }

  Jet3 jet3_at(Vec2 p) const {
    Jet3 j;
    for (const auto& d : disks_) {
      double X = p.x - d.center.x, Y = p.y - d.center.y;
      double r2 = X * X + Y * Y;
      if (r2 >= d.radius * d.radius) continue;
      BumpProfile g = bump_profile_derivs(r2, d.radius);
      // chain rule through s = X^2 + Y^2: s_x = 2X, s_y = 2Y, s_xx = s_yy = 2
      double a = amplitude_;
      j.value += a * g.f;
      j.ux += a * 2.0 * X * g.d1;
      j.uy += a * 2.0 * Y * g.d1;
      j.uxx += a * (4.0 * X * X * g.d2 + 2.0 * g.d1);
      j.uxy += a * 4.0 * X * Y * g.d2;
      j.uyy += a * (4.0 * Y * Y * g.d2 + 2.0 * g.d1);
      j.uxxx += a * (8.0 * X * X * X * g.d3 + 12.0 * X * g.d2);
      j.uxxy += a * (8.0 * X * X * Y * g.d3 + 4.0 * Y * g.d2);
      j.uxyy += a * (8.0 * X * Y * Y * g.d3 + 4.0 * X * g.d2);
      j.uyyy += a * (8.0 * Y * Y * Y * g.d3 + 12.0 * Y * g.d2);
    }
    return j;
  }

 private:
  std::vector<BumpDisk> disks_;
  double amplitude_;
  double margin_;
};

// ---------------------------------------------------------------------------
// u(x,y) = a x + b y + c0 + v(rho), the global normal form singled out by the
// radial classification case. v is a polynomial in rho.

class RadialLinearField {
 public:
  RadialLinearField(double a, double b, double c0, std::vector<double> rho_coeffs)
      : a_(a), b_(b), c0_(c0), v_(std::move(rho_coeffs)) {
    if (v_.empty()) v_.push_back(0.0);
  }

  // v = -c0 + t*rho, the line-pair branch of the boundary ODE.
  static RadialLinearField linear_family(double t, double c0 = 0.0) {
    return RadialLinearField(1.0, 0.0, c0, {-c0, t});
  }

  // v = t1*rho^2 + t2, the radial-disk branch.
  static RadialLinearField quadratic_family(double t1, double t2, double c0 = 0.0) {
    return RadialLinearField(1.0, 0.0, c0, {t2, 0.0, t1});
  }

  double a() const { return a_; }
  double b() const { return b_; }
  double c0() const { return c0_; }
  const std::vector<double>& rho_coeffs() const { return v_; }

  bool even_profile() const {
    for (std::size_t k = 1; k < v_.size(); k += 2)
      if (v_[k] != 0.0) return false;
    return true;
  }

  bool contains(Vec2 p) const { return even_profile() || norm(p) > 0; }

  double profile(double rho) const {
    double acc = 0;
    for (std::size_t k = v_.size(); k-- > 0;) acc = acc * rho + v_[k];
    return acc;
  }

  Jet3 jet3_at(Vec2 p) const {
    double rho = norm(p);
    if (rho < 1e-14) {
      if (!even_profile())
        fail(Errc::out_of_domain, "RadialLinearField: jet at the origin needs an even profile");
      // only the rho^2 term contributes derivatives at the center
      Jet3 j;
      j.value = c0_ + v_[0];
      j.ux = a_;
      j.uy = b_;
      double c2 = v_.size() > 2 ? v_[2] : 0.0;
      j.uxx = 2.0 * c2;
      j.uyy = 2.0 * c2;
      return j;
    }
    double v1 = 0, v2 = 0, v3 = 0;
    for (std::size_t k = 1; k < v_.size(); ++k) {
      double pw = std::pow(rho, double(k) - 1.0);
      v1 += v_[k] * double(k) * pw;
      if (k >= 2) v2 += v_[k] * double(k) * double(k - 1) * pw / rho;
      if (k >= 3) v3 += v_[k] * double(k) * double(k - 1) * double(k - 2) * pw / (rho * rho);
    }
    double c = p.x / rho, s = p.y / rho;
    Jet3 j;
    j.value = a_ * p.x + b_ * p.y + c0_ + profile(rho);
    j.ux = a_ + v1 * c;
    j.uy = b_ + v1 * s;
    j.uxx = v2 * c * c + v1 * s * s / rho;
    j.uxy = (v2 - v1 / rho) * c * s;
    j.uyy = v2 * s * s + v1 * c * c / rho;
    double B = v2 / rho - v1 / (rho * rho);
    j.uxxx = v3 * c * c * c + 3.0 * B * c * s * s;
    j.uxxy = v3 * c * c * s + B * (s * s * s - 2.0 * c * c * s);
    j.uxyy = v3 * c * s * s + B * (c * c * c - 2.0 * c * s * s);
    j.uyyy = v3 * s * s * s + 3.0 * B * s * c * c;
    return j;
  }

 private:
  double a_, b_, c0_;
  std::vector<double> v_;  // v_[k] multiplies rho^k
};

}  // namespace hessfield
