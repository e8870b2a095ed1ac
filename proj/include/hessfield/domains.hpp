#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <variant>
#include <vector>

#include "hessfield/curve.hpp"
#include "hessfield/errors.hpp"
#include "hessfield/fields.hpp"
#include "hessfield/geometry.hpp"
#include "hessfield/jet.hpp"
#include "hessfield/rational.hpp"

namespace hessfield {

// ---------------------------------------------------------------------------
// Tubular band of a closed curve under the normal map
// Psi(s,t) = gamma(s) + t nu(s). The map is invertible on the band when
// |t kappa| stays below 1 and the band does not self-overlap; the former is
// checked exactly against the sampled curvature maximum, the latter by a
// sampled collision certificate (documented as sampled, not proved).

struct InverseResult {
  double s = 0;
  double t = 0;
  double tau = 0;
  double residual = 0;
};

struct InjectivityCertificate {
  bool by_convexity = false;  // convex curve with |kappa| hw < 1 suffices
  bool sampled_ok = false;
  double min_offending_gap = std::numeric_limits<double>::infinity();
};

class NormalMapDomain {
 public:
  explicit NormalMapDomain(FourierCurve curve, double halfwidth = 1.0, bool auto_rescale = true,
                           int seed_s = 256, int seed_t = 33)
      : curve_(std::move(curve)), halfwidth_(halfwidth) {
    if (!(halfwidth_ > 0)) fail(Errc::bad_input, "NormalMapDomain: halfwidth must be positive");
    double mk = curve_.max_abs_curvature();
    if (mk * halfwidth_ >= 1.0) {
      if (!auto_rescale)
        fail(Errc::bad_input, "NormalMapDomain: max|kappa| * halfwidth >= 1, band degenerates");
      scale_factor_ = 2.0 * mk * halfwidth_;
      curve_ = curve_.scaled(scale_factor_);
      mk = curve_.max_abs_curvature();
      if (mk * halfwidth_ >= 1.0)
        fail(Errc::bad_input, "NormalMapDomain: rescaling failed to tame the curvature");
    }
    max_kappa_ = mk;
    build_seeds(seed_s, seed_t);
    certificate_ = check_injectivity();
  }

  const FourierCurve& curve() const { return curve_; }
  double halfwidth() const { return halfwidth_; }
  double scale_factor() const { return scale_factor_; }
  double max_abs_curvature() const { return max_kappa_; }
  const InjectivityCertificate& certificate() const { return certificate_; }
  double diameter() const { return bbox_.diameter(); }
  BBox bbox() const { return bbox_; }

  struct ForwardResult {
    Vec2 point;
    double jacobian;  // 1 - t kappa(s)
  };

  ForwardResult normal_map(double s, double t) const {
    double tau = curve_.tau_of_s(s);
    FourierCurve::Frame f = curve_.frame_at_tau(tau);
    return {f.point + t * f.normal, 1.0 - t * f.curvature};
  }

  InverseResult invert(Vec2 p) const {
    // candidate seeds, nearest first
    std::array<int, 4> picks{-1, -1, -1, -1};
    std::array<double, 4> dists;
    dists.fill(std::numeric_limits<double>::infinity());
    for (int i = 0; i < static_cast<int>(seeds_.size()); ++i) {
      double d = dist(seeds_[i].point, p);
      for (int k = 0; k < 4; ++k)
        if (d < dists[k]) {
          for (int m = 3; m > k; --m) {
            dists[m] = dists[m - 1];
            picks[m] = picks[m - 1];
          }
          dists[k] = d;
          picks[k] = i;
          break;
        }
    }
    const double tol = 1e-12 * std::max(diameter(), 1.0);
    for (int k = 0; k < 4; ++k) {
      if (picks[k] < 0) continue;
      const Seed& sd = seeds_[picks[k]];
      double tau = sd.tau, t = sd.t;
      bool ok = false;
      for (int it = 0; it < 30; ++it) {
        Vec2 g1 = curve_.d1(tau);
        double speed = norm(g1);
        Vec2 g2 = curve_.d2(tau);
        Vec2 nu = {-g1.y / speed, g1.x / speed};
        Vec2 nudot = {(-g2.y - nu.x * dot(g1, g2) / speed) / speed,
                      (g2.x - nu.y * dot(g1, g2) / speed) / speed};
        Vec2 F = curve_.point(tau) + t * nu - p;
        if (norm(F) <= tol) {
          ok = true;
          break;
        }
        Vec2 col_tau = g1 + t * nudot;
        double det = col_tau.x * nu.y - col_tau.y * nu.x;
        if (std::abs(det) < 1e-300) break;
        double dtau = (-F.x * nu.y + F.y * nu.x) / det;
        double dt = (-col_tau.x * F.y + col_tau.y * F.x) / det;
        tau += dtau;
        t += dt;
        if (!std::isfinite(tau) || !std::isfinite(t) || std::abs(t) > 8.0 * halfwidth_) break;
      }
      if (!ok) continue;
      Vec2 F = curve_.point(tau) + t * perp(normalized(curve_.d1(tau))) - p;
      if (std::abs(t) > halfwidth_ + band_eps()) continue;
      double jac = 1.0 - t * curve_.curvature_tau(tau);
      if (jac < 1e-6)
        fail(Errc::ill_conditioned, "invert_normal_map: 1 - t*kappa below 1e-6");
      double s = curve_.s_of_tau(tau);
      double L = curve_.length();
      s = s - std::floor(s / L) * L;
      return {s, t, tau, norm(F)};
    }
    fail(Errc::not_in_band, "invert_normal_map: no seed converged to the band");
  }

  bool contains(Vec2 p) const {
    // cheap reject against the seed cloud before attempting the inversion
    double near = std::numeric_limits<double>::infinity();
    for (const Seed& sd : seeds_) near = std::min(near, dist(sd.point, p));
    if (near > 2.0 * seed_spacing_) return false;
    try {
      invert(p);
      return true;
    } catch (const Error&) {
      return false;
    }
  }

  double band_eps() const { return 1e-6 * halfwidth_; }

 private:
  struct Seed {
    Vec2 point;
    double s, t, tau;
  };

  void build_seeds(int ns, int nt) {
    double L = curve_.length();
    seeds_.reserve(static_cast<std::size_t>(ns) * nt);
    bbox_ = BBox{1e300, 1e300, -1e300, -1e300};
    seed_spacing_ = 0.0;
    for (int i = 0; i < ns; ++i) {
      double s = L * i / ns;
      double tau = curve_.tau_of_s(s);
      FourierCurve::Frame f = curve_.frame_at_tau(tau);
      for (int j = 0; j < nt; ++j) {
        double t = -halfwidth_ + 2.0 * halfwidth_ * j / (nt - 1);
        Vec2 p = f.point + t * f.normal;
        seeds_.push_back({p, s, t, tau});
        bbox_.expand(p);
      }
    }
    seed_spacing_ = std::max(L / ns, 2.0 * halfwidth_ / (nt - 1));
  }

  InjectivityCertificate check_injectivity() const {
    InjectivityCertificate cert;
    cert.by_convexity = curve_.is_convex() && max_kappa_ * halfwidth_ < 1.0;
    const int ns = 512, nt = 9;
    double L = curve_.length();
    std::vector<Seed> grid;
    grid.reserve(static_cast<std::size_t>(ns) * nt);
    double min_adjacent = std::numeric_limits<double>::infinity();
    for (int i = 0; i < ns; ++i) {
      double s = L * i / ns;
      FourierCurve::Frame f = curve_.frame_at_s(s);
      for (int j = 0; j < nt; ++j) {
        double t = -halfwidth_ + 2.0 * halfwidth_ * j / (nt - 1);
        grid.push_back({f.point + t * f.normal, s, t, 0.0});
      }
    }
    for (int i = 0; i + nt < static_cast<int>(grid.size()); ++i)
      min_adjacent = std::min(min_adjacent, dist(grid[i].point, grid[i + nt].point));
    double collide = 0.5 * min_adjacent;
    cert.sampled_ok = true;
    for (std::size_t a = 0; a < grid.size(); ++a)
      for (std::size_t b = a + 1; b < grid.size(); ++b) {
        double ds = std::abs(grid[a].s - grid[b].s);
        ds = std::min(ds, L - ds);
        bool far_params = ds > L / 8.0 || std::abs(grid[a].t - grid[b].t) > halfwidth_;
        if (!far_params || ds <= L / 8.0) continue;
        double gap = dist(grid[a].point, grid[b].point);
        if (gap < collide) {
          cert.sampled_ok = false;
          cert.min_offending_gap = std::min(cert.min_offending_gap, gap);
        }
      }
    return cert;
  }

  FourierCurve curve_;
  double halfwidth_;
  double scale_factor_ = 1.0;
  double max_kappa_ = 0.0;
  std::vector<Seed> seeds_;
  double seed_spacing_ = 0.0;
  BBox bbox_;
  InjectivityCertificate certificate_;
};

// ---------------------------------------------------------------------------
// The band solution u(Psi(s,t)) = 1 - t^2. Jets come from the closed-form
// derivatives of the band coordinates: with T, nu, kappa at the foot point,
//   Du   = -2 t nu
//   D2u  = -2 nu (x) nu + g T (x) T,               g  = 2 t kappa / (1 - t kappa)
//   D3u  = A sym(T,T,nu) + B T (x) T (x) T,        A  = 2 kappa  / (1 - t kappa)^2
//                                                  B  = 2 t kappa' / (1 - t kappa)^3

class AnnulusField {
 public:
  explicit AnnulusField(std::shared_ptr<const NormalMapDomain> domain)
      : domain_(std::move(domain)) {
    if (!domain_) fail(Errc::bad_input, "AnnulusField: null domain");
  }

  const NormalMapDomain& domain() const { return *domain_; }
  std::shared_ptr<const NormalMapDomain> domain_ptr() const { return domain_; }

  bool contains(Vec2 p) const { return domain_->contains(p); }

  Jet3 jet3_at(Vec2 p) const {
    InverseResult inv = domain_->invert(p);
    FourierCurve::Frame f = domain_->curve().frame_at_tau(inv.tau);
    double t = inv.t, kap = f.curvature, kds = f.curvature_ds;
    double w = 1.0 - t * kap;
    Vec2 T = f.tangent, nu = f.normal;
    double g = 2.0 * t * kap / w;
    double A = 2.0 * kap / (w * w);
    double B = 2.0 * t * kds / (w * w * w);
    Jet3 j;
    j.value = 1.0 - t * t;
    j.ux = -2.0 * t * nu.x;
    j.uy = -2.0 * t * nu.y;
    j.uxx = -2.0 * nu.x * nu.x + g * T.x * T.x;
    j.uxy = -2.0 * nu.x * nu.y + g * T.x * T.y;
    j.uyy = -2.0 * nu.y * nu.y + g * T.y * T.y;
    j.uxxx = 3.0 * A * T.x * T.x * nu.x + B * T.x * T.x * T.x;
    j.uxxy = A * (T.x * T.x * nu.y + 2.0 * T.x * T.y * nu.x) + B * T.x * T.x * T.y;
    j.uxyy = A * (T.y * T.y * nu.x + 2.0 * T.x * T.y * nu.y) + B * T.x * T.y * T.y;
    j.uyyy = 3.0 * A * T.y * T.y * nu.y + B * T.y * T.y * T.y;
    return j;
  }

 private:
  std::shared_ptr<const NormalMapDomain> domain_;
};

static_assert(ScalarField<AnnulusField>);

// ---------------------------------------------------------------------------
// Audit regions: where fields are inspected and whose boundaries carry the
// overdetermined data.

struct BoundarySample {
  Vec2 point;
  Vec2 tangent;        // unit
  Vec2 inward_normal;  // unit
};

struct DiskRegion {
  Vec2 center;
  double radius = 1.0;
};

// Region enclosed by a closed curve; point membership via the sampled
// winding number of the boundary polyline.
class CurveRegion {
 public:
  explicit CurveRegion(FourierCurve boundary, int polyline_n = 2048)
      : curve_(std::move(boundary)) {
    poly_.reserve(polyline_n);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (int i = 0; i < polyline_n; ++i) poly_.push_back(curve_.point(two_pi * i / polyline_n));
    ccw_ = curve_.signed_area() > 0;
  }

  const FourierCurve& curve() const { return curve_; }
  bool ccw() const { return ccw_; }

  bool contains(Vec2 p) const {
    double angle = 0;
    for (std::size_t i = 0; i < poly_.size(); ++i) {
      Vec2 a = poly_[i] - p, b = poly_[(i + 1) % poly_.size()] - p;
      angle += std::atan2(cross(a, b), dot(a, b));
    }
    return std::abs(angle) > std::numbers::pi;
  }

 private:
  FourierCurve curve_;
  std::vector<Vec2> poly_;
  bool ccw_ = true;
};

struct BandRegion {
  std::shared_ptr<const NormalMapDomain> band;
};

using Region = std::variant<DiskRegion, CurveRegion, BandRegion>;

inline bool region_contains(const Region& r, Vec2 p) {
  return std::visit(
      [&](const auto& reg) -> bool {
        using T = std::decay_t<decltype(reg)>;
        if constexpr (std::is_same_v<T, DiskRegion>) return dist(p, reg.center) <= reg.radius;
        else if constexpr (std::is_same_v<T, CurveRegion>) return reg.contains(p);
        else return reg.band->contains(p);
      },
      r);
}

inline BBox region_bbox(const Region& r) {
  return std::visit(
      [&](const auto& reg) -> BBox {
        using T = std::decay_t<decltype(reg)>;
        if constexpr (std::is_same_v<T, DiskRegion>)
          return {reg.center.x - reg.radius, reg.center.y - reg.radius, reg.center.x + reg.radius,
                  reg.center.y + reg.radius};
        else if constexpr (std::is_same_v<T, CurveRegion>) return reg.curve().bbox();
        else return reg.band->bbox();
      },
      r);
}

inline bool region_simply_connected(const Region& r) {
  return !std::holds_alternative<BandRegion>(r);
}

// Expected Poincare-Hopf index sum for a boundary-tangent line field:
// Euler characteristic 1 for disk-like regions, 0 for the band.
inline Rational region_expected_index_sum(const Region& r) {
  return region_simply_connected(r) ? Rational(1) : Rational(0);
}

inline std::vector<BoundarySample> region_boundary_samples(const Region& r, int n) {
  std::vector<BoundarySample> out;
  std::visit(
      [&](const auto& reg) {
        using T = std::decay_t<decltype(reg)>;
        if constexpr (std::is_same_v<T, DiskRegion>) {
          out.reserve(n);
          for (int i = 0; i < n; ++i) {
            double th = 2.0 * std::numbers::pi * i / n;
            Vec2 u{std::cos(th), std::sin(th)};
            out.push_back({reg.center + reg.radius * u, perp(u), -1.0 * u});
          }
        } else if constexpr (std::is_same_v<T, CurveRegion>) {
          out.reserve(n);
          double sign = reg.ccw() ? 1.0 : -1.0;
          double L = reg.curve().length();
          for (int i = 0; i < n; ++i) {
            FourierCurve::Frame f = reg.curve().frame_at_s(L * i / n);
            out.push_back({f.point, f.tangent, sign * f.normal});
          }
        } else {
          const NormalMapDomain& d = *reg.band;
          int half = std::max(n / 2, 8);
          out.reserve(2 * half);
          double L = d.curve().length();
          for (int i = 0; i < half; ++i) {
            FourierCurve::Frame f = d.curve().frame_at_s(L * i / half);
            double hw = d.halfwidth();
            out.push_back({f.point + hw * f.normal, f.tangent, -1.0 * f.normal});
            out.push_back({f.point - hw * f.normal, f.tangent, f.normal});
          }
        }
      },
      r);
  return out;
}

// Uniform scaling p -> p / t of a region (reflection through the origin when
// t < 0), matching the field transform u(tx, ty)/t^2.
inline Region region_scaled_inverse(const Region& r, double t) {
  if (t == 0) fail(Errc::zero_scale, "region scaling: t must be nonzero");
  return std::visit(
      [&](const auto& reg) -> Region {
        using T = std::decay_t<decltype(reg)>;
        if constexpr (std::is_same_v<T, DiskRegion>)
          return DiskRegion{{reg.center.x / t, reg.center.y / t}, reg.radius / std::abs(t)};
        else if constexpr (std::is_same_v<T, CurveRegion>)
          return CurveRegion(reg.curve().scaled(1.0 / t));
        else {
          auto nd = std::make_shared<NormalMapDomain>(reg.band->curve().scaled(1.0 / t),
                                                      reg.band->halfwidth() / std::abs(t), false);
          return BandRegion{std::move(nd)};
        }
      },
      r);
}

}  // namespace hessfield
