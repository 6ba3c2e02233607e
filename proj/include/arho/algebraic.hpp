#pragma once

#include "arho/poly.hpp"

#include <optional>

namespace arho {

/// A real algebraic number, represented by a defining polynomial together
/// with a rational interval [lo, hi] certified to contain exactly one of its
/// real roots. Enclosures refine by bisection; when a bisection point is an
/// exact root the interval collapses to width zero and the value becomes a
/// known rational.
class AlgebraicValue {
  public:
    const UniPoly& poly() const { return poly_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat width() const { return hi_ - lo_; }

    bool is_exact() const { return lo_ == hi_; }
    const Rat& exact_value() const { return lo_; }

    /// Shrinks the enclosure below `width` (bisection; preserves the
    /// unique-root certificate).
    AlgebraicValue refined(const Rat& width) const;

    /// Exact three-way comparison with a rational.
    int compare(const Rat& r) const;

    /// If the root is rational and "simple" (the simplest rational in a
    /// narrow enclosure), collapse to it. Returns the possibly-collapsed
    /// value; no-op when the root is irrational.
    AlgebraicValue snapped(const Rat& probe_width) const;

    friend AlgebraicValue isolate_unique_root(const UniPoly& p, const Rat& lo, const Rat& hi);
    static AlgebraicValue exact(const Rat& value);

  private:
    AlgebraicValue() = default;
    void bisect_step();

    UniPoly poly_;
    std::vector<UniPoly> chain_; // Sturm chain when endpoint signs agree
    Rat lo_, hi_;
    int sign_lo_ = 0;
};

/// Brackets the unique root of p in [lo, hi]. Requires either a sign change
/// between the endpoints or a Sturm count of exactly one root; throws
/// NoSignChange otherwise, and DegenerateInterval when lo > hi.
/// A degenerate interval [r, r] with p(r) == 0 yields the exact value r.
AlgebraicValue isolate_unique_root(const UniPoly& p, const Rat& lo, const Rat& hi);

inline AlgebraicValue refine(const AlgebraicValue& v, const Rat& width) {
    return v.refined(width);
}

} // namespace arho
