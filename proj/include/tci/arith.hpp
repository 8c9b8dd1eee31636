#ifndef TCI_ARITH_HPP
#define TCI_ARITH_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace tci {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Raised when a documented mathematical precondition fails (CLI exit 3).
struct MathError : std::runtime_error {
    explicit MathError(const std::string& m) : std::runtime_error(m) {}
};

// Raised when a runtime consistency guard trips (CLI exit 4).
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& m) : std::runtime_error(m) {}
};

// Raised on malformed input (CLI exit 2).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int gcd_all(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

inline Int lcm_all(const std::vector<Int>& v) {
    Int l = 1;
    for (const Int& x : v) l = lcm(l, x);
    return l;
}

// Floor division, exact for any signs of a; b must be nonzero.
inline Int fdiv(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int cdiv(const Int& a, const Int& b) { return -fdiv(-a, b); }

// Nonnegative residue of a mod m, m > 0.
inline Int imod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int floor_rat(const Rat& r) { return fdiv(numerator(r), denominator(r)); }
inline Int ceil_rat(const Rat& r) { return cdiv(numerator(r), denominator(r)); }

inline Rat frac_part(const Rat& r) { return r - Rat(floor_rat(r)); }  // in [0,1)

inline std::string to_string(const Int& x) { return x.str(); }

// "p/q" with q omitted when 1.
inline std::string to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Int parse_int(const std::string& s) {
    try {
        if (s.empty()) throw ParseError("empty integer literal");
        return Int(s);
    } catch (const std::exception&) {
        throw ParseError("bad integer literal: '" + s + "'");
    }
}

// Accepts "p" or "p/q".
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int p = parse_int(s.substr(0, slash));
    Int q = parse_int(s.substr(slash + 1));
    if (q == 0) throw ParseError("zero denominator: '" + s + "'");
    return Rat(p) / Rat(q);
}

// Extended gcd: returns g >= 0 and x, y with a*x + b*y = g.
inline Int xgcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int old_r = a, r = b, old_x = 1, xx = 0, old_y = 0, yy = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * xx; old_x = xx; xx = t;
        t = old_y - q * yy; old_y = yy; yy = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x; y = old_y;
    return old_r;
}

inline std::vector<Int> divisors(const Int& n) {
    if (n <= 0) throw MathError("divisors: argument must be positive");
    std::vector<Int> lo, hi;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d * d != n) hi.push_back(n / d);
        }
    }
    for (auto it = hi.rbegin(); it != hi.rend(); ++it) lo.push_back(*it);
    return lo;
}

}  // namespace tci

#endif
