#include "arho/poly.hpp"

#include <algorithm>

namespace arho {

UniPoly::UniPoly(std::vector<QuadElem> ascending) : c_(std::move(ascending)) { trim(); }

UniPoly UniPoly::from_rat(std::vector<Rat> ascending) {
    std::vector<QuadElem> c;
    c.reserve(ascending.size());
    for (auto& r : ascending) c.emplace_back(std::move(r));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::constant(QuadElem c) { return UniPoly({std::move(c)}); }

UniPoly UniPoly::monomial(QuadElem c, int degree) {
    std::vector<QuadElem> v(degree + 1);
    v[degree] = std::move(c);
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QuadElem UniPoly::eval(const QuadElem& x) const {
    QuadElem acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<QuadElem> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * QuadElem(Rat((long)i));
    return UniPoly(std::move(d));
}

UniPoly operator+(const UniPoly& p, const UniPoly& q) {
    std::vector<QuadElem> c(std::max(p.c_.size(), q.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < p.c_.size()) c[i] += p.c_[i];
        if (i < q.c_.size()) c[i] += q.c_[i];
    }
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& p, const UniPoly& q) { return p + (-q); }

UniPoly UniPoly::operator-() const {
    std::vector<QuadElem> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) return UniPoly();
    std::vector<QuadElem> c(p.c_.size() + q.c_.size() - 1);
    for (size_t i = 0; i < p.c_.size(); ++i)
        for (size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const QuadElem& s) const {
    std::vector<QuadElem> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::rem(const UniPoly& q) const {
    if (q.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
    std::vector<QuadElem> r = c_;
    QuadElem inv_lead = q.leading().inverse();
    while ((int)r.size() - 1 >= q.degree()) {
        while (!r.empty() && r.back().is_zero()) r.pop_back();
        if ((int)r.size() - 1 < q.degree()) break;
        QuadElem f = r.back() * inv_lead;
        int shift = (int)r.size() - 1 - q.degree();
        for (int i = 0; i <= q.degree(); ++i) r[i + shift] -= f * q.coeff(i);
        r.pop_back();
    }
    return UniPoly(std::move(r));
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c_[i].str() + ")";
        if (i > 0) s += "*z^" + std::to_string(i);
    }
    return s;
}

int poly_sign_at(const UniPoly& p, const Rat& x) { return quad_sign(p.eval(x)); }

namespace {

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

UniPoly quotient(const UniPoly& p, const UniPoly& q) {
    // exact quotient assuming q | p
    std::vector<QuadElem> r = p.coeffs();
    std::vector<QuadElem> out(std::max<int>(p.degree() - q.degree() + 1, 0));
    QuadElem inv_lead = q.leading().inverse();
    int deg = p.degree();
    while (deg >= q.degree()) {
        while (deg >= 0 && r[deg].is_zero()) --deg;
        if (deg < q.degree()) break;
        QuadElem f = r[deg] * inv_lead;
        int shift = deg - q.degree();
        out[shift] = f;
        for (int i = 0; i <= q.degree(); ++i) r[i + shift] -= f * q.coeff(i);
        --deg;
    }
    return UniPoly(std::move(out));
}

} // namespace

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    if (p.is_zero() || p.degree() == 0) return chain;
    UniPoly g = poly_gcd(p, p.derivative());
    UniPoly sf = (g.degree() <= 0) ? p : quotient(p, g);
    chain.push_back(sf);
    chain.push_back(sf.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        UniPoly r = chain[chain.size() - 2].rem(chain.back());
        chain.push_back(-r);
    }
    if (chain.back().is_zero()) chain.pop_back();
    return chain;
}

namespace {

int sign_variations(const std::vector<UniPoly>& chain, const Rat& x) {
    int vars = 0, prev = 0;
    for (const auto& p : chain) {
        int s = poly_sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

} // namespace

int sturm_count(const std::vector<UniPoly>& chain, const Rat& lo, const Rat& hi) {
    if (chain.empty()) return 0;
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

} // namespace arho
