#ifndef WIDTHKIT_EXACT_HPP
#define WIDTHKIT_EXACT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace widthkit::exact {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Int ipow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rat rpow(const Rat& base, unsigned e) {
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    return Rat(ipow(numerator(base), e), ipow(denominator(base), e));
}

/// Sign of (b + c*sqrt(m)) - a for rationals a, b, c >= 0 and integer m >= 0.
/// Decided by squaring; no floating point involved.
inline int cmp_sqrt_form(const Rat& a, const Rat& b, const Rat& c, const Int& m) {
    // a ? b + c*sqrt(m)  <=>  a - b ? c*sqrt(m)
    Rat d = a - b;
    if (d < 0) return 1;                        // a < b <= b + c*sqrt(m)
    if (c == 0 || m == 0) return d == 0 ? 0 : -1;
    // both sides nonnegative: compare squares
    Rat lhs = d * d;
    Rat rhs = c * c * Rat(m);
    if (lhs < rhs) return 1;
    if (lhs > rhs) return -1;
    return 0;
}

/// Sign of x - y * base^{p/q} for rationals x, y >= 0, integer base >= 1,
/// q >= 1. Cleared to an integer comparison of x^q vs y^q * base^p.
inline int cmp_pow_ratio(const Rat& x, const Rat& y, const Int& base, unsigned p, unsigned q) {
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    if (q == 0) throw std::invalid_argument("cmp_pow_ratio: q must be positive");
    // x^q ? y^q * base^p with denominators cleared:
    Int lhs = ipow(numerator(x) * denominator(y), q);
    Int rhs = ipow(numerator(y) * denominator(x), q) * ipow(base, p);
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

/// Sign of log2(r) - t for rational t and integer r >= 1: compares r vs 2^t exactly.
inline int cmp_log2(unsigned r, const Rat& t) {
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    if (r == 0) throw std::invalid_argument("cmp_log2: r must be positive");
    Int tn = numerator(t), td = denominator(t);
    // log2 r ? n/d  <=>  r^d ? 2^n   (d > 0)
    if (tn < 0) return r >= 1 ? 1 : 0;  // log2 r >= 0 > t
    Int lhs = ipow(Int(r), static_cast<unsigned>(td));
    Int rhs = ipow(Int(2), static_cast<unsigned>(tn));
    if (lhs > rhs) return 1;
    if (lhs < rhs) return -1;
    return 0;
}

/// Sign of s - (log2 r)^p for rational s >= 0, r >= 2, p >= 1.
/// Exact when log2 r is rational (r a power of two); otherwise decided by
/// rational interval bisection, which terminates because (log2 r)^p is then
/// irrational and cannot equal s.
inline int cmp_log2_pow(const Rat& s, unsigned r, unsigned p, int max_iter = 256) {
    if (r < 2) throw std::invalid_argument("cmp_log2_pow: r must be at least 2");
    if (p == 0) return s == 1 ? 0 : (s > 1 ? 1 : -1);
    // Power of two: log2 r is an exact integer.
    if ((r & (r - 1)) == 0) {
        unsigned t = 0;
        for (unsigned v = r; v > 1; v >>= 1) ++t;
        Rat rhs = rpow(Rat(t), p);
        return s == rhs ? 0 : (s > rhs ? 1 : -1);
    }
    // Bracket log2 r between consecutive integers, then bisect.
    unsigned flo = 0;
    while ((Int(1) << (flo + 1)) <= Int(r)) ++flo;
    Rat lo = flo, hi = flo + 1;
    for (int it = 0; it < max_iter; ++it) {
        if (s < rpow(lo, p)) return -1;
        if (s > rpow(hi, p)) return 1;
        Rat mid = (lo + hi) / 2;
        if (cmp_log2(r, mid) >= 0)
            lo = mid;
        else
            hi = mid;
    }
    throw std::runtime_error("cmp_log2_pow: interval refinement did not converge");
}

/// Parses "p/q", decimal ("4.51"), or integer text into an exact rational.
inline Rat parse_rational(const std::string& text) {
    auto bad = [&] { throw std::invalid_argument("not a rational: '" + text + "'"); };
    if (text.empty()) bad();
    std::string t = text;
    bool neg = false;
    if (t[0] == '-' || t[0] == '+') {
        neg = t[0] == '-';
        t = t.substr(1);
        if (t.empty()) bad();
    }
    auto digits_only = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    Rat r;
    if (auto slash = t.find('/'); slash != std::string::npos) {
        std::string num = t.substr(0, slash), den = t.substr(slash + 1);
        if (!digits_only(num) || !digits_only(den) || Int(den) == 0) bad();
        r = Rat(Int(num), Int(den));
    } else if (auto dot = t.find('.'); dot != std::string::npos) {
        std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!digits_only(ip) || (!fp.empty() && !digits_only(fp))) bad();
        Int den = ipow(Int(10), static_cast<unsigned>(fp.size()));
        r = Rat(Int(ip) * den + (fp.empty() ? Int(0) : Int(fp)), den);
    } else {
        if (!digits_only(t)) bad();
        r = Rat(Int(t));
    }
    return neg ? -r : r;
}

inline std::string to_string(const Rat& r) {
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace widthkit::exact

#endif
