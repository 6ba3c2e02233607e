#pragma once

#include "arho/quad.hpp"

#include <vector>

namespace arho {

/// Univariate polynomial with coefficients in Q or a fixed quadratic field.
/// Coefficients are stored in ascending degree order with a nonzero leading
/// coefficient (the zero polynomial has no coefficients).
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<QuadElem> ascending);
    static UniPoly from_rat(std::vector<Rat> ascending);
    static UniPoly constant(QuadElem c);
    static UniPoly monomial(QuadElem c, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; } // -1 for the zero polynomial
    const QuadElem& coeff(int i) const { return c_[i]; }
    const std::vector<QuadElem>& coeffs() const { return c_; }
    const QuadElem& leading() const { return c_.back(); }

    QuadElem eval(const QuadElem& x) const;
    QuadElem eval(const Rat& x) const { return eval(QuadElem(x)); }

    UniPoly derivative() const;

    friend UniPoly operator+(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator-(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator*(const UniPoly& p, const UniPoly& q);
    UniPoly operator-() const;
    UniPoly scaled(const QuadElem& s) const;

    bool operator==(const UniPoly& q) const { return c_ == q.c_; }

    /// Remainder of this modulo q (field division).
    UniPoly rem(const UniPoly& q) const;

    std::string str() const;

  private:
    void trim();
    std::vector<QuadElem> c_;
};

/// Exact sign of p(x) for rational x (Horner evaluation + quad_sign).
int poly_sign_at(const UniPoly& p, const Rat& x);

/// Sturm chain of the squarefree part of p.
std::vector<UniPoly> sturm_chain(const UniPoly& p);

/// Number of distinct real roots of p in (lo, hi], via a prebuilt chain.
int sturm_count(const std::vector<UniPoly>& chain, const Rat& lo, const Rat& hi);

} // namespace arho
