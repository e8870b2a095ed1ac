#pragma once

#include <stdexcept>
#include <string>

namespace hessfield {

// Failure categories surfaced by the library. Outcomes that are legal results
// (e.g. a proportionality-lemma violation in classification) are modeled as
// values, not errors; these codes cover genuine precondition and convergence
// failures.
enum class Errc {
  bad_input,
  not_homogeneous,
  degree_underflow,
  not_polynomial,
  out_of_domain,
  outside_support,
  near_singular,
  not_in_band,
  ill_conditioned,
  not_in_u,
  degenerate_on_circle,
  non_convergent,
  non_integer_winding,
  degenerate_system,
  zero_scale,
  invalid_constant,
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::bad_input: return "BadInput";
    case Errc::not_homogeneous: return "NotHomogeneous";
    case Errc::degree_underflow: return "DegreeUnderflow";
    case Errc::not_polynomial: return "NotPolynomial";
    case Errc::out_of_domain: return "OutOfDomain";
    case Errc::outside_support: return "OutsideSupport";
    case Errc::near_singular: return "NearSingular";
    case Errc::not_in_band: return "NotInBand";
    case Errc::ill_conditioned: return "IllConditioned";
    case Errc::not_in_u: return "NotInU";
    case Errc::degenerate_on_circle: return "DegenerateOnCircle";
    case Errc::non_convergent: return "NonConvergent";
    case Errc::non_integer_winding: return "NonIntegerWinding";
    case Errc::degenerate_system: return "DegenerateSystem";
    case Errc::zero_scale: return "ZeroScale";
    case Errc::invalid_constant: return "InvalidConstant";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

}  // namespace hessfield
