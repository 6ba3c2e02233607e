#include "arho/quad.hpp"

#include "arho/errors.hpp"

#include <stdexcept>

namespace arho {

namespace {

int merge_rad(const QuadElem& x, const QuadElem& y) {
    int dx = x.is_rational() ? 0 : x.rad();
    int dy = y.is_rational() ? 0 : y.rad();
    if (dx == 0) return dy;
    if (dy == 0 || dx == dy) return dx;
    throw std::logic_error("QuadElem: mixed radicands");
}

} // namespace

QuadElem::QuadElem(Rat base, Rat coeff, int rad)
    : base_(std::move(base)), coeff_(std::move(coeff)), rad_(rad) {
    if (coeff_ != 0 && rad_ <= 1) throw std::logic_error("QuadElem: invalid radicand");
    if (coeff_ == 0) rad_ = rad; // keep the field tag for round-tripping
}

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
    int d = merge_rad(x, y);
    return QuadElem(x.base_ + y.base_, x.coeff_ + y.coeff_, d);
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) {
    int d = merge_rad(x, y);
    return QuadElem(x.base_ - y.base_, x.coeff_ - y.coeff_, d);
}

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
    int d = merge_rad(x, y);
    return QuadElem(x.base_ * y.base_ + Rat(d) * x.coeff_ * y.coeff_,
                    x.base_ * y.coeff_ + x.coeff_ * y.base_, d);
}

QuadElem QuadElem::inverse() const {
    // 1/(a+b*sqrt(d)) = (a-b*sqrt(d))/(a^2-d*b^2); norm is nonzero since
    // sqrt(d) is irrational.
    Rat norm = base_ * base_ - Rat(rad_) * coeff_ * coeff_;
    if (norm == 0) throw std::domain_error("QuadElem: inverse of zero");
    return QuadElem(base_ / norm, -coeff_ / norm, rad_);
}

std::string QuadElem::str() const {
    if (is_rational()) return rat_to_string(base_);
    std::string s = rat_to_string(base_);
    s += (coeff_ > 0 ? " + " : " - ");
    s += rat_to_string(rat_abs(coeff_)) + "*sqrt(" + std::to_string(rad_) + ")";
    return s;
}

int quad_sign(const QuadElem& x) {
    const Rat& a = x.base();
    const Rat& b = x.coeff();
    if (b == 0) return sgn(a);
    if (a == 0) return sgn(b);
    int sa = sgn(a), sb = sgn(b);
    if (sa == sb) return sa;
    // signs differ: compare a^2 with d*b^2
    Rat a2 = a * a, db2 = Rat(x.rad()) * b * b;
    if (a2 == db2) return 0;
    return a2 > db2 ? sa : sb;
}

std::pair<Rat, Rat> quad_enclosure(const QuadElem& x, const Rat& width) {
    if (x.is_rational()) return {x.base(), x.base()};
    // bisect sqrt(rad) until coeff*(hi-lo) is small enough
    Rat lo(0), hi(Rat(x.rad()) + 1);
    // tighten integer bracket first
    while (hi - lo > 1) {
        Rat mid = (lo + hi) / 2;
        if (mid * mid <= Rat(x.rad()))
            lo = mid;
        else
            hi = mid;
    }
    Rat cf = rat_abs(x.coeff());
    while (cf * (hi - lo) > width) {
        Rat mid = (lo + hi) / 2;
        if (mid * mid <= Rat(x.rad()))
            lo = mid;
        else
            hi = mid;
    }
    Rat v1 = x.base() + x.coeff() * lo;
    Rat v2 = x.base() + x.coeff() * hi;
    if (v1 > v2) std::swap(v1, v2);
    return {v1, v2};
}

} // namespace arho
