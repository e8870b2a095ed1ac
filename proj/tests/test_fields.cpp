#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "hessfield/fields.hpp"
#include "test_util.hpp"

using namespace hessfield;
using hftest::Rng;

static_assert(ScalarField<PolyField>);
static_assert(ScalarField<BumpField>);
static_assert(ScalarField<RadialLinearField>);

TEST_CASE("polynomial field jets", "[fields]") {
  PolyField f(BiPoly::var_x().pow(3));
  Jet3 j = f.jet3_at({1.0, 0.0});
  CHECK(j.value == 1.0);
  CHECK(j.ux == 3.0);
  CHECK(j.uy == 0.0);
  CHECK(j.uxx == 6.0);
  CHECK(j.uxy == 0.0);
  CHECK(j.uyy == 0.0);
  CHECK(j.uxxx == 6.0);

  SECTION("jets agree with symbolic evaluation on random polynomials") {
    Rng rng(101);
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    for (int t = 0; t < 10; ++t) {
      BiPoly p = hftest::random_bipoly(rng, 7);
      PolyField pf(p);
      BiPoly px = p.derive(Axis::x), pyy = p.derive(Axis::y).derive(Axis::y);
      for (int s = 0; s < 20; ++s) {
        Vec2 q{coord(rng), coord(rng)};
        Jet3 jet = pf.jet3_at(q);
        CHECK(std::abs(jet.value - p.eval(q.x, q.y)) < 1e-10);
        CHECK(std::abs(jet.ux - px.eval(q.x, q.y)) < 1e-10);
        CHECK(std::abs(jet.uyy - pyy.eval(q.x, q.y)) < 1e-10);
      }
    }
  }
}

TEST_CASE("bump profile derivatives", "[fields]") {
  SECTION("center value") {
    double rho = 0.7;
    BumpProfile g = bump_profile_derivs(0.0, rho);
    CHECK(std::abs(g.f - std::exp(-1.0 / (rho * rho))) <= 1e-16);
  }

  SECTION("vanishing toward the support boundary") {
    BumpProfile g = bump_profile_derivs(1.0 - 1e-3, 1.0);
    CHECK(std::abs(g.f) <= 1e-6);
    CHECK(std::abs(g.d1) <= 1e-6);
    CHECK(std::abs(g.d2) <= 1e-6);
    CHECK(std::abs(g.d3) <= 1e-6);
  }

  SECTION("first derivative matches a finite difference") {
    double h = 1e-6;
    for (double s : {0.0, 0.1, 0.2, 0.3, 0.4}) {
      BumpProfile g = bump_profile_derivs(s, 0.8);
      double fd = (bump_profile_derivs(s + h, 0.8).f - bump_profile_derivs(s - h, 0.8).f) / (2 * h);
      CHECK(hftest::rel_err(g.d1, fd, std::abs(g.f)) < 1e-6);
    }
  }

  SECTION("outside the support") {
    CHECK_THROWS_AS(bump_profile_derivs(1.0, 1.0), Error);
    CHECK_THROWS_AS(bump_profile_derivs(1.5, 1.0), Error);
  }
}

TEST_CASE("bump field", "[fields]") {
  BumpField f({{{-0.5, 0.0}, 0.45}, {{0.5, 0.0}, 0.45}});

  SECTION("vanishes with its gradient on disk boundaries") {
    for (int i = 0; i < 32; ++i) {
      double th = 2.0 * M_PI * i / 32.0;
      Vec2 p{-0.5 + 0.45 * std::cos(th), 0.45 * std::sin(th)};
      Jet3 j = f.jet3_at(p);
      CHECK(std::abs(j.value) <= 1e-12);
      CHECK(norm(gradient(j)) <= 1e-12);
    }
  }

  SECTION("identically zero between the disks") {
    Jet3 j = f.jet3_at({0.0, 0.3});
    CHECK(j.value == 0.0);
    CHECK(j.uxx == 0.0);
  }

  SECTION("no mixed second derivative at a disk center") {
    Jet3 j = f.jet3_at({-0.5, 0.0});
    CHECK(j.uxy == 0.0);
    CHECK(std::abs(j.uxx - j.uyy) <= 1e-15);
  }

  SECTION("jets pass the finite-difference chain oracle") {
    Rng rng(103);
    std::uniform_real_distribution<double> r(0.03, 0.33), th(0.0, 2 * M_PI);
    int checked = 0;
    for (int t = 0; t < 120; ++t) {
      double rr = r(rng), a = th(rng);
      Vec2 p{-0.5 + rr * std::cos(a), rr * std::sin(a)};
      CHECK(hftest::jet_chain_error(f, p) < 1e-6);
      ++checked;
    }
    CHECK(checked >= 100);
  }

  SECTION("J[laplacian, hessian det] vanishes numerically") {
    Rng rng(107);
    std::uniform_real_distribution<double> r(0.05, 0.42), th(0.0, 2 * M_PI);
    for (int t = 0; t < 200; ++t) {
      double rr = r(rng), a = th(rng);
      Vec2 p{0.5 + rr * std::cos(a), rr * std::sin(a)};
      JacobianSample js = jacobian_sample(f.jet3_at(p));
      CHECK(std::abs(js.value) <= 1e-8 * std::max(1.0, js.scale));
    }
  }

  SECTION("rejects overlapping disks") {
    CHECK_THROWS_AS(BumpField({{{0.0, 0.0}, 0.5}, {{0.6, 0.0}, 0.5}}), Error);
  }
}

TEST_CASE("radial-plus-linear field", "[fields]") {
  SECTION("closed-form gradient of c1 + x + c2 rho^2") {
    double c1 = 0.3, c2 = 0.8;
    RadialLinearField f(1.0, 0.0, c1, {0.0, 0.0, c2});
    Rng rng(109);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (int t = 0; t < 50; ++t) {
      Vec2 p{coord(rng), coord(rng)};
      if (norm(p) < 1e-3) continue;
      Jet3 j = f.jet3_at(p);
      CHECK(std::abs(j.ux - (1.0 + 2.0 * c2 * p.x)) <= 1e-12);
      CHECK(std::abs(j.uy - 2.0 * c2 * p.y) <= 1e-12);
    }
  }

  SECTION("jets pass the finite-difference chain oracle") {
    RadialLinearField f(0.4, -0.2, 0.1, {0.0, 0.0, 0.5, 0.25, -0.125});
    Rng rng(113);
    std::uniform_real_distribution<double> r(0.3, 2.0), th(0.0, 2 * M_PI);
    int checked = 0;
    for (int t = 0; t < 120; ++t) {
      double rr = r(rng), a = th(rng);
      Vec2 p{rr * std::cos(a), rr * std::sin(a)};
      CHECK(hftest::jet_chain_error(f, p) < 1e-6);
      ++checked;
    }
    CHECK(checked >= 100);
  }

  SECTION("pure radial profiles are rotation-equivariant") {
    RadialLinearField f(0.0, 0.0, 0.2, {0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.5});
    Rng rng(127);
    std::uniform_real_distribution<double> r(0.2, 1.8), th(0.0, 2 * M_PI);
    for (int t = 0; t < 60; ++t) {
      double rr = r(rng);
      Vec2 p{rr * std::cos(th(rng)), rr * std::sin(th(rng))};
      double phi = th(rng);
      Vec2 q = rotate(p, phi);
      Jet3 jp = f.jet3_at(p), jq = f.jet3_at(q);
      CHECK(std::abs(jq.value - jp.value) <= 1e-12 * (1.0 + std::abs(jp.value)));
      Vec2 rotated_grad = rotate(gradient(jp), phi);
      double gscale = 1.0 + norm(gradient(jp));
      CHECK(std::abs(jq.ux - rotated_grad.x) <= 1e-12 * gscale);
      CHECK(std::abs(jq.uy - rotated_grad.y) <= 1e-12 * gscale);
      // Hessian transforms as R H R^T
      double c = std::cos(phi), s = std::sin(phi);
      double hxx = c * c * jp.uxx - 2 * c * s * jp.uxy + s * s * jp.uyy;
      double hxy = c * s * (jp.uxx - jp.uyy) + (c * c - s * s) * jp.uxy;
      double hscale = 1.0 + std::abs(jp.uxx) + std::abs(jp.uyy);
      CHECK(std::abs(jq.uxx - hxx) <= 1e-12 * hscale);
      CHECK(std::abs(jq.uxy - hxy) <= 1e-12 * hscale);
    }
  }

  SECTION("origin jets exist only for even profiles") {
    RadialLinearField even(0.5, 0.0, 1.0, {0.0, 0.0, 0.75});
    Jet3 j = even.jet3_at({0.0, 0.0});
    CHECK(j.value == 1.0);
    CHECK(j.ux == 0.5);
    CHECK(j.uxx == 1.5);
    CHECK(j.uxy == 0.0);

    RadialLinearField odd = RadialLinearField::linear_family(0.5);
    CHECK_THROWS_AS(odd.jet3_at({0.0, 0.0}), Error);
  }
}
