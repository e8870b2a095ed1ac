#pragma once

#include <cmath>

#include "hessfield/geometry.hpp"

namespace hessfield {

// Value and all partial derivatives through third order of a scalar field at
// a point. Symmetry of mixed partials is structural: only the distinct
// entries are stored.
struct Jet3 {
  double value = 0;
  double ux = 0, uy = 0;
  double uxx = 0, uxy = 0, uyy = 0;
  double uxxx = 0, uxxy = 0, uxyy = 0, uyyy = 0;

  bool finite() const {
    for (double v : {value, ux, uy, uxx, uxy, uyy, uxxx, uxxy, uxyy, uyyy})
      if (!std::isfinite(v)) return false;
    return true;
  }
};

inline Vec2 gradient(const Jet3& j) { return {j.ux, j.uy}; }
inline double laplacian(const Jet3& j) { return j.uxx + j.uyy; }
inline double hess_det(const Jet3& j) { return j.uxx * j.uyy - j.uxy * j.uxy; }

// (Δu)² − 4H(u); numerically this is the sum of squares
// (uxx−uyy)² + 4uxy², which is what keeps sampled values nonnegative.
inline double discriminant(const Jet3& j) {
  double d = j.uxx - j.uyy;
  return d * d + 4.0 * j.uxy * j.uxy;
}

// Double-angle vector of the eigenline pair; vanishes exactly on the
// degenerate set.
inline Vec2 double_angle_vector(const Jet3& j) { return {j.uxx - j.uyy, 2.0 * j.uxy}; }

inline Vec2 grad_laplacian(const Jet3& j) { return {j.uxxx + j.uxyy, j.uxxy + j.uyyy}; }

inline Vec2 grad_hess_det(const Jet3& j) {
  return {j.uxxx * j.uyy + j.uxx * j.uxyy - 2.0 * j.uxy * j.uxxy,
          j.uxxy * j.uyy + j.uxx * j.uyyy - 2.0 * j.uxy * j.uxyy};
}

// J[Δu, H(u)] evaluated from third-order data, plus the magnitude of the two
// products for relative-residual reporting.
struct JacobianSample {
  double value = 0;
  double scale = 0;
};

inline JacobianSample jacobian_sample(const Jet3& j) {
  Vec2 gl = grad_laplacian(j), gh = grad_hess_det(j);
  double a = gl.x * gh.y, b = gl.y * gh.x;
  return {a - b, std::abs(a) + std::abs(b)};
}

}  // namespace hessfield
