#pragma once

#include "arho/rational.hpp"

#include <compare>

namespace arho {

/// Element base + coeff*sqrt(rad) of a real quadratic field. rad is a
/// squarefree positive integer; elements from different fields must not be
/// mixed (a pure rational has coeff == 0 and is compatible with any field).
class QuadElem {
  public:
    QuadElem() : rad_(0) {}
    QuadElem(Rat base) : base_(std::move(base)), rad_(0) {}
    QuadElem(Rat base, Rat coeff, int rad);

    const Rat& base() const { return base_; }
    const Rat& coeff() const { return coeff_; }
    int rad() const { return rad_; }

    bool is_rational() const { return coeff_ == 0; }
    bool is_zero() const { return base_ == 0 && coeff_ == 0; }

    QuadElem operator-() const { return QuadElem(-base_, -coeff_, rad_); }
    QuadElem conj() const { return QuadElem(base_, -coeff_, rad_); }
    QuadElem inverse() const;

    friend QuadElem operator+(const QuadElem& x, const QuadElem& y);
    friend QuadElem operator-(const QuadElem& x, const QuadElem& y);
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
    friend QuadElem operator/(const QuadElem& x, const QuadElem& y) { return x * y.inverse(); }
    QuadElem& operator+=(const QuadElem& y) { return *this = *this + y; }
    QuadElem& operator-=(const QuadElem& y) { return *this = *this - y; }
    QuadElem& operator*=(const QuadElem& y) { return *this = *this * y; }

    bool operator==(const QuadElem& y) const { return base_ == y.base_ && coeff_ == y.coeff_; }

    std::string str() const;

  private:
    Rat base_, coeff_;
    int rad_; // 0 when the element is rational
};

/// Exact sign of base + coeff*sqrt(rad), by comparing squares.
int quad_sign(const QuadElem& x);

/// Rational enclosure of width <= `width` (uses a bisected sqrt enclosure).
std::pair<Rat, Rat> quad_enclosure(const QuadElem& x, const Rat& width);

} // namespace arho
