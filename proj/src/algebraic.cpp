#include "arho/algebraic.hpp"

#include "arho/errors.hpp"

namespace arho {

AlgebraicValue AlgebraicValue::exact(const Rat& value) {
    AlgebraicValue v;
    v.lo_ = v.hi_ = value;
    return v;
}

AlgebraicValue isolate_unique_root(const UniPoly& p, const Rat& lo, const Rat& hi) {
    if (lo > hi) throw DegenerateInterval("isolate_unique_root: lo > hi");
    AlgebraicValue v;
    v.poly_ = p;
    v.lo_ = lo;
    v.hi_ = hi;
    int slo = poly_sign_at(p, lo);
    int shi = poly_sign_at(p, hi);
    if (slo == 0) {
        v.hi_ = lo;
        return v;
    }
    if (shi == 0) {
        v.lo_ = hi;
        return v;
    }
    if (lo == hi) throw NoSignChange("isolate_unique_root: point interval without root");
    v.sign_lo_ = slo;
    if (slo == shi) {
        v.chain_ = sturm_chain(p);
        if (sturm_count(v.chain_, lo, hi) != 1)
            throw NoSignChange("isolate_unique_root: no sign change and root count != 1");
    }
    return v;
}

void AlgebraicValue::bisect_step() {
    Rat mid = (lo_ + hi_) / 2;
    int sm = poly_sign_at(poly_, mid);
    if (sm == 0) {
        lo_ = hi_ = mid;
        return;
    }
    if (!chain_.empty()) {
        // endpoint signs agree: keep the half that Sturm-counts one root
        if (sturm_count(chain_, lo_, mid) == 1)
            hi_ = mid;
        else
            lo_ = mid;
        return;
    }
    if (sm == sign_lo_)
        lo_ = mid;
    else
        hi_ = mid;
}

AlgebraicValue AlgebraicValue::refined(const Rat& width) const {
    if (width <= 0) throw DegenerateInterval("refine: width must be positive");
    AlgebraicValue v = *this;
    while (v.hi_ - v.lo_ > width) v.bisect_step();
    return v;
}

int AlgebraicValue::compare(const Rat& r) const {
    if (r < lo_) return +1;
    if (r > hi_) return -1;
    if (is_exact()) return lo_ == r ? 0 : (lo_ > r ? +1 : -1);
    if (poly_sign_at(poly_, r) == 0) return 0; // unique root in [lo,hi] => it is r
    AlgebraicValue v = *this;
    while (v.lo_ <= r && r <= v.hi_) {
        v.bisect_step();
        if (v.is_exact()) return v.lo_ == r ? 0 : (v.lo_ > r ? +1 : -1);
    }
    return r < v.lo_ ? +1 : -1;
}

AlgebraicValue AlgebraicValue::snapped(const Rat& probe_width) const {
    if (is_exact()) return *this;
    AlgebraicValue v = refined(probe_width);
    if (v.is_exact()) return v;
    Rat cand = simplest_between(v.lo_, v.hi_);
    if (poly_sign_at(v.poly_, cand) == 0) {
        v.lo_ = v.hi_ = cand;
        return v;
    }
    return v;
}

} // namespace arho
