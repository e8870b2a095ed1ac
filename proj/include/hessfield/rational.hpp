#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "hessfield/errors.hpp"

namespace hessfield {

// Exact scalar arithmetic. cpp_rational keeps values canonical (reduced,
// positive denominator), which is exactly the invariant every symbolic
// check in this library relies on.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Always "num/den", including den = 1; the wire format for coefficients.
inline std::string rational_str(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "n", "n/d" and plain decimal strings ("-0.125"); decimals are
// converted exactly.
inline Rational parse_rational(std::string_view sv) {
  auto bad = [&] { fail(Errc::parse_error, "invalid rational: '" + std::string(sv) + "'"); };
  if (sv.empty()) bad();
  std::string s(sv);
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) bad();
    try {
      BigInt n{num}, d{den};
      if (d == 0) bad();
      return Rational(n, d);
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      bad();
    }
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    try {
      BigInt n{s};
      return Rational(n);
    } catch (const std::exception&) {
      bad();
    }
  }
  bool neg = false;
  std::string digits = s;
  if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
    neg = digits[0] == '-';
    digits = digits.substr(1);
  }
  dot = digits.find('.');
  std::string ipart = digits.substr(0, dot), fpart = digits.substr(dot + 1);
  if (ipart.empty() && fpart.empty()) bad();
  for (char c : ipart + fpart)
    if (c < '0' || c > '9') bad();
  BigInt scaled = BigInt(ipart.empty() ? "0" : ipart);
  BigInt den = 1;
  for (char c : fpart) {
    scaled = scaled * 10 + (c - '0');
    den *= 10;
  }
  Rational r(scaled, den);
  return neg ? Rational(-r) : r;
}

inline Rational rational_pow(const Rational& base, unsigned e) {
  Rational acc = 1, b = base;
  while (e) {
    if (e & 1u) acc *= b;
    b *= b;
    e >>= 1u;
  }
  return acc;
}

// Floor square root check: returns the exact root when n is a perfect square.
inline std::optional<BigInt> exact_sqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

// Nearest rational with denominator <= max_den (continued fractions); used to
// snap numerically located points onto exact candidates.
inline Rational snap_to_rational(double x, long long max_den = 1'000'000) {
  if (!(max_den >= 1)) fail(Errc::bad_input, "snap_to_rational: max_den < 1");
  bool neg = x < 0;
  double v = neg ? -x : x;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(frac);
    if (fl > 9e17) break;
    long long a = static_cast<long long>(fl);
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-18) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return Rational(0);
  Rational r(p1, q1);
  return neg ? Rational(-r) : r;
}

}  // namespace hessfield
