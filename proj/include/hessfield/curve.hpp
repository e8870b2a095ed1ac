#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "hessfield/errors.hpp"
#include "hessfield/geometry.hpp"

namespace hessfield {

namespace detail {

// 16-point Gauss-Legendre rule on [-1, 1]; exact to machine precision for
// the smooth speed functions integrated here.
inline constexpr std::array<double, 8> kGl16Nodes = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499,
};
inline constexpr std::array<double, 8> kGl16Weights = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541,
};

template <class Fn>
double gl16(Fn&& f, double a, double b) {
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0;
  for (int i = 0; i < 8; ++i) {
    double d = half * kGl16Nodes[i];
    acc += kGl16Weights[i] * (f(mid - d) + f(mid + d));
  }
  return acc * half;
}

}  // namespace detail

// Closed analytic curve given by truncated Fourier series for x(tau) and
// y(tau), tau in [0, 2pi). Arc length is realized numerically: a cumulative
// table refined until stable, inverted by bracketed Newton.
class FourierCurve {
 public:
  struct Coeffs {
    std::vector<double> x_cos, x_sin, y_cos, y_sin;
  };

  explicit FourierCurve(Coeffs c, int table_size = 4096) : c_(std::move(c)) {
    pad(c_.x_cos);
    pad(c_.x_sin);
    pad(c_.y_cos);
    pad(c_.y_sin);
    build_arclength_table(table_size);
  }

  static FourierCurve circle(double radius, Vec2 center = {0, 0}) {
    Coeffs c;
    c.x_cos = {center.x, radius};
    c.x_sin = {0, 0};
    c.y_cos = {center.y, 0};
    c.y_sin = {0, radius};
    return FourierCurve(std::move(c));
  }

  // Semi-axis a along x, b along y.
  static FourierCurve ellipse(double a, double b) {
    Coeffs c;
    c.x_cos = {0, a};
    c.x_sin = {0, 0};
    c.y_cos = {0, 0};
    c.y_sin = {0, b};
    return FourierCurve(std::move(c));
  }

  const Coeffs& coeffs() const { return c_; }

  Vec2 point(double tau) const { return {series(c_.x_cos, c_.x_sin, tau, 0), series(c_.y_cos, c_.y_sin, tau, 0)}; }
  Vec2 d1(double tau) const { return {series(c_.x_cos, c_.x_sin, tau, 1), series(c_.y_cos, c_.y_sin, tau, 1)}; }
  Vec2 d2(double tau) const { return {series(c_.x_cos, c_.x_sin, tau, 2), series(c_.y_cos, c_.y_sin, tau, 2)}; }
  Vec2 d3(double tau) const { return {series(c_.x_cos, c_.x_sin, tau, 3), series(c_.y_cos, c_.y_sin, tau, 3)}; }

  double length() const { return length_; }

  double s_of_tau(double tau) const {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double wraps = std::floor(tau / two_pi);
    double t = tau - wraps * two_pi;
    int k = static_cast<int>(t / dtau_);
    if (k >= static_cast<int>(cum_.size()) - 1) k = static_cast<int>(cum_.size()) - 2;
    double base = cum_[k];
    double partial = detail::gl16([this](double u) { return norm(d1(u)); }, k * dtau_, t);
    return wraps * length_ + base + partial;
  }

  double tau_of_s(double s) const {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double wraps = std::floor(s / length_);
    double target = s - wraps * length_;
    // bracket from the table, then Newton with bisection fallback
    int lo = 0, hi = static_cast<int>(cum_.size()) - 1;
    while (hi - lo > 1) {
      int mid = (lo + hi) / 2;
      (cum_[mid] <= target ? lo : hi) = mid;
    }
    double a = lo * dtau_, b = hi * dtau_;
    double tau = a + (b - a) * (target - cum_[lo]) / std::max(cum_[hi] - cum_[lo], 1e-300);
    for (int it = 0; it < 60; ++it) {
      double f = s_of_tau(tau) - target;
      if (std::abs(f) <= 1e-13 * length_) break;
      double speed = norm(d1(tau));
      double step = f / speed;
      double next = tau - step;
      if (next <= a || next >= b) {
        (f > 0 ? b : a) = tau;
        next = 0.5 * (a + b);
      } else {
        (f > 0 ? b : a) = tau;
      }
      tau = next;
    }
    return tau + wraps * two_pi;
  }

  // Signed curvature with respect to the normal (-y', x'); flips sign under
  // orientation reversal.
  double curvature_tau(double tau) const {
    Vec2 g1 = d1(tau), g2 = d2(tau);
    double sp = norm(g1);
    return cross(g1, g2) / (sp * sp * sp);
  }

  double curvature(double s) const { return curvature_tau(tau_of_s(s)); }

  // d(kappa)/ds at tau.
  double curvature_ds_tau(double tau) const {
    Vec2 g1 = d1(tau), g2 = d2(tau), g3 = d3(tau);
    double sp = norm(g1);
    double k = cross(g1, g2) / (sp * sp * sp);
    return cross(g1, g3) / (sp * sp * sp * sp) - 3.0 * k * dot(g1, g2) / (sp * sp * sp);
  }

  struct Frame {
    Vec2 point;
    Vec2 tangent;  // unit
    Vec2 normal;   // (-y', x')/speed
    double speed = 0;
    double curvature = 0;
    double curvature_ds = 0;
  };

  Frame frame_at_tau(double tau) const {
    Frame f;
    f.point = point(tau);
    Vec2 g1 = d1(tau);
    f.speed = norm(g1);
    f.tangent = {g1.x / f.speed, g1.y / f.speed};
    f.normal = perp(f.tangent);
    f.curvature = curvature_tau(tau);
    f.curvature_ds = curvature_ds_tau(tau);
    return f;
  }

  Frame frame_at_s(double s) const { return frame_at_tau(tau_of_s(s)); }

  double max_abs_curvature() const { return max_abs_curvature_; }

  bool is_convex() const { return convex_; }

  // Twice the enclosed area, signed: positive for counterclockwise curves.
  double signed_area() const { return signed_area_; }

  FourierCurve scaled(double factor) const {
    Coeffs c = c_;
    for (auto* v : {&c.x_cos, &c.x_sin, &c.y_cos, &c.y_sin})
      for (double& x : *v) x *= factor;
    return FourierCurve(std::move(c), static_cast<int>(cum_.size()) - 1);
  }

  FourierCurve reversed() const {
    // tau -> -tau keeps cosines and flips sines
    Coeffs c = c_;
    for (double& x : c.x_sin) x = -x;
    for (double& y : c.y_sin) y = -y;
    return FourierCurve(std::move(c), static_cast<int>(cum_.size()) - 1);
  }

  BBox bbox() const { return bbox_; }

 private:
  static void pad(std::vector<double>& v) {
    if (v.empty()) v.push_back(0.0);
  }

  double series(const std::vector<double>& cs, const std::vector<double>& sn, double tau,
                int order) const {
    double acc = order == 0 ? cs[0] : 0.0;
    std::size_t K = std::max(cs.size(), sn.size());
    for (std::size_t k = 1; k < K; ++k) {
      double kk = static_cast<double>(k);
      double a = k < cs.size() ? cs[k] : 0.0;
      double b = k < sn.size() ? sn[k] : 0.0;
      double ck = std::cos(kk * tau), sk = std::sin(kk * tau);
      double pw = std::pow(kk, order);
      switch (order % 4) {
        case 0: acc += pw * (a * ck + b * sk); break;
        case 1: acc += pw * (-a * sk + b * ck); break;
        case 2: acc += pw * (-a * ck - b * sk); break;
        default: acc += pw * (a * sk - b * ck); break;
      }
    }
    return acc;
  }

  void build_arclength_table(int n) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (n < 64) n = 64;
    double prev = -1.0;
    for (;;) {
      dtau_ = two_pi / n;
      cum_.assign(n + 1, 0.0);
      double min_speed = 1e300, max_speed = 0.0;
      for (int k = 0; k < n; ++k) {
        cum_[k + 1] =
            cum_[k] + detail::gl16([this](double u) { return norm(d1(u)); }, k * dtau_, (k + 1) * dtau_);
        double sp = norm(d1((k + 0.5) * dtau_));
        min_speed = std::min(min_speed, sp);
        max_speed = std::max(max_speed, sp);
      }
      length_ = cum_.back();
      if (!(length_ > 0) || min_speed <= 1e-9 * max_speed)
        fail(Errc::bad_input, "FourierCurve: curve is not regular");
      if (prev > 0 && std::abs(length_ - prev) <= 1e-13 * length_) break;
      if (n >= 65536) break;
      prev = length_;
      n *= 2;
    }

    // curvature extrema, convexity, orientation and bbox from a dense sweep
    int m = 8192;
    double best = 0.0, best_tau = 0.0;
    bool pos = false, neg = false;
    bbox_ = {point(0).x, point(0).y, point(0).x, point(0).y};
    signed_area_ = 0.0;
    for (int k = 0; k < m; ++k) {
      double tau = two_pi * k / m;
      double kap = curvature_tau(tau);
      if (std::abs(kap) > best) {
        best = std::abs(kap);
        best_tau = tau;
      }
      (kap > 0 ? pos : neg) = true;
      Vec2 p = point(tau), g = d1(tau);
      bbox_.expand(p);
      signed_area_ += cross(p, g);
    }
    signed_area_ *= 0.5 * two_pi / m;
    convex_ = !(pos && neg);
    // parabolic refinement of the curvature peak
    double h = two_pi / m;
    for (int it = 0; it < 40; ++it) {
      double f0 = std::abs(curvature_tau(best_tau - h));
      double f1 = std::abs(curvature_tau(best_tau));
      double f2 = std::abs(curvature_tau(best_tau + h));
      double denom = f0 - 2 * f1 + f2;
      if (std::abs(denom) > 0) {
        double shift = 0.5 * (f0 - f2) / denom;
        if (std::abs(shift) < 1.0) best_tau += shift * h;
      }
      h *= 0.5;
      best = std::max({f0, f1, f2, best});
    }
    max_abs_curvature_ = std::max(best, std::abs(curvature_tau(best_tau)));
  }

  Coeffs c_;
  std::vector<double> cum_;  // cumulative arc length at k * dtau_
  double dtau_ = 0;
  double length_ = 0;
  double max_abs_curvature_ = 0;
  bool convex_ = false;
  double signed_area_ = 0;
  BBox bbox_;
};

}  // namespace hessfield
