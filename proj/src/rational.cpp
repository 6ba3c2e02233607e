#include "arho/rational.hpp"

#include "arho/errors.hpp"

namespace arho {

Int rat_floor(const Rat& r) {
    Int q = num(r) / den(r);
    if (r < 0 && q * den(r) != num(r)) --q;
    return q;
}

Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

Rat int_pow(const Rat& base, unsigned exp) {
    Rat acc(1), b = base;
    while (exp) {
        if (exp & 1u) acc *= b;
        b *= b;
        exp >>= 1u;
    }
    return acc;
}

Rat parse_rat(const std::string& text) {
    auto bad = [&] { throw ParseError("invalid rational: '" + text + "'"); };
    std::string s = text;
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            Int p(s.substr(0, slash));
            Int q(s.substr(slash + 1));
            if (q == 0) bad();
            return Rat(p, q);
        }
        auto epos = s.find_first_of("eE");
        int exp10 = 0;
        if (epos != std::string::npos) {
            exp10 = std::stoi(s.substr(epos + 1));
            s = s.substr(0, epos);
        }
        auto dot = s.find('.');
        Int q(1);
        if (dot != std::string::npos) {
            std::string frac = s.substr(dot + 1);
            s = s.substr(0, dot) + frac;
            if (s.empty() || s == "-" || s == "+") s += "0";
            for (size_t i = 0; i < frac.size(); ++i) q *= 10;
        }
        if (s.empty() || s == "-" || s == "+") s += "1";
        Rat r(Int(s), q);
        while (exp10 > 0) { r *= 10; --exp10; }
        while (exp10 < 0) { r /= 10; ++exp10; }
        return r;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        bad();
    }
    return Rat(0); // unreachable
}

std::string rat_to_string(const Rat& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

std::string rat_to_decimal(const Rat& r, int digits, bool round_up) {
    Int scale(1);
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rat scaled = r * scale;
    Int n = round_up ? rat_ceil(scaled) : rat_floor(scaled);
    bool neg = n < 0;
    if (neg) n = -n;
    std::string ds = n.str();
    if ((int)ds.size() <= digits) ds = std::string(digits + 1 - ds.size(), '0') + ds;
    std::string out = ds.substr(0, ds.size() - digits);
    if (digits > 0) out += "." + ds.substr(ds.size() - digits);
    if (neg && n != 0) out = "-" + out;
    return out;
}

Rat simplest_between(const Rat& lo, const Rat& hi) {
    if (lo > hi) throw DegenerateInterval("simplest_between: lo > hi");
    if (lo == hi) return lo;
    if (lo <= 0 && 0 <= hi) return Rat(0);
    if (lo > 0) {
        Int c = rat_ceil(lo);
        if (Rat(c) <= hi) return Rat(c);
        Int f = rat_floor(lo);
        Rat sub = simplest_between(Rat(1) / (hi - f), Rat(1) / (lo - f));
        return Rat(f) + Rat(1) / sub;
    }
    return -simplest_between(-hi, -lo);
}

} // namespace arho
