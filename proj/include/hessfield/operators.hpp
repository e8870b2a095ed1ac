#pragma once

#include "hessfield/bipoly.hpp"
#include "hessfield/jet.hpp"

namespace hessfield {

// The four differential operators, exact on polynomials.

inline BiPoly laplacian(const BiPoly& p) {
  return p.derive(Axis::x).derive(Axis::x) + p.derive(Axis::y).derive(Axis::y);
}

// H(u) = u_xx u_yy - u_xy^2, the planar Monge-Ampere operator.
inline BiPoly hess_det(const BiPoly& p) {
  BiPoly px = p.derive(Axis::x), py = p.derive(Axis::y);
  BiPoly pxx = px.derive(Axis::x), pxy = px.derive(Axis::y), pyy = py.derive(Axis::y);
  return pxx * pyy - pxy * pxy;
}

// {f,g} = f_xx g_yy + f_yy g_xx - 2 f_xy g_xy; the polarization of H:
// {f,f} = 2 H(f).
inline BiPoly bracket(const BiPoly& f, const BiPoly& g) {
  BiPoly fxx = f.derive(Axis::x).derive(Axis::x);
  BiPoly fyy = f.derive(Axis::y).derive(Axis::y);
  BiPoly fxy = f.derive(Axis::x).derive(Axis::y);
  BiPoly gxx = g.derive(Axis::x).derive(Axis::x);
  BiPoly gyy = g.derive(Axis::y).derive(Axis::y);
  BiPoly gxy = g.derive(Axis::x).derive(Axis::y);
  return fxx * gyy + fyy * gxx - Rational(2) * (fxy * gxy);
}

// J[f,g] = f_x g_y - f_y g_x.
inline BiPoly jacobian(const BiPoly& f, const BiPoly& g) {
  return f.derive(Axis::x) * g.derive(Axis::y) - f.derive(Axis::y) * g.derive(Axis::x);
}

// (Δp)² − 4 H(p); its zero set is where D²p has a double eigenvalue.
inline BiPoly discriminant(const BiPoly& p) {
  BiPoly lap = laplacian(p);
  return lap * lap - Rational(4) * hess_det(p);
}

// Second-order data of a field at a point; symmetric by construction.
struct HessianSample {
  double uxx = 0;
  double uxy = 0;
  double uyy = 0;
};

inline HessianSample hess_at(const Jet3& jet) {
  if (!jet.finite()) fail(Errc::out_of_domain, "hess_at: non-finite jet");
  return {jet.uxx, jet.uxy, jet.uyy};
}

inline double hess_norm(const HessianSample& h) {
  // Frobenius norm of the full symmetric matrix.
  return std::sqrt(h.uxx * h.uxx + 2.0 * h.uxy * h.uxy + h.uyy * h.uyy);
}

}  // namespace hessfield
