#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace arho {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. The backend canonicalizes on every operation.
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sgn(const Rat& r) { return r.sign(); }
inline int sgn(const Int& r) { return r.sign(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

Rat int_pow(const Rat& base, unsigned exp);

// Parses "p/q" or "p"; also accepts decimal literals like "0.25" and
// scientific shorthand "1e-9" so CLI flags read naturally.
Rat parse_rat(const std::string& text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);

// Fixed-point decimal rendering with `digits` places after the point,
// rounded toward -inf (round_up = false) or +inf (round_up = true).
std::string rat_to_decimal(const Rat& r, int digits, bool round_up);

// The rational with the smallest denominator in [lo, hi] (Stern-Brocot walk).
Rat simplest_between(const Rat& lo, const Rat& hi);

} // namespace arho
