#pragma once

#include <cmath>
#include <cstdlib>
#include <string>

#include "kreinkit/error.hpp"

namespace kreinkit {

struct Tolerance {
  double zero = 1e-10;      // eigenvalue classification, scaled by dim * ||A||_2
  double psd = 1e-9;        // Loewner-order slack
  double residual = 1e-9;   // factorization / identity residuals
  double subspace = 1e-8;   // principal angles, projector distances

  static Tolerance uniform(double t) { return Tolerance{t, t, t, t}; }

  bool valid() const {
    auto ok = [](double v) { return std::isfinite(v) && v > 0.0; };
    return ok(zero) && ok(psd) && ok(residual) && ok(subspace);
  }

  void validate() const {
    require(valid(), ErrorKind::InvalidInput, "tolerances must be finite and positive");
  }
};

namespace detail {

inline Tolerance initial_default_tolerance() {
  Tolerance t;
  if (const char* env = std::getenv("KREINKIT_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && std::isfinite(v) && v > 0.0) t.zero = v;
  }
  return t;
}

inline Tolerance& default_tolerance_storage() {
  static Tolerance t = initial_default_tolerance();
  return t;
}

}  // namespace detail

// Process-wide default; KREINKIT_TOL overrides the zero threshold. Set once at startup.
inline const Tolerance& default_tolerance() { return detail::default_tolerance_storage(); }

inline void set_default_tolerance(const Tolerance& t) {
  t.validate();
  detail::default_tolerance_storage() = t;
}

}  // namespace kreinkit
