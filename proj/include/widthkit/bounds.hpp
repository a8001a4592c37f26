#ifndef WIDTHKIT_BOUNDS_HPP
#define WIDTHKIT_BOUNDS_HPP

#include <cmath>
#include <stdexcept>

#include "exact.hpp"

namespace widthkit::bounds {

using exact::Int;
using exact::Rat;

/// Planar bound: twd(G) < 72*rwd(G) - 1 (strict).
inline Int bound_planar(int rwd) {
    if (rwd < 1) throw std::invalid_argument("bound_planar: rwd must be at least 1");
    return Int(72) * rwd - 1;
}

/// Bounded-genus clique-width bound: cwd(G) < 12*rwd(G) + 10*g.
inline Int bound_genus_cwd(int rwd, int g) {
    if (rwd < 1 || g < 0) throw std::invalid_argument("bound_genus_cwd: bad arguments");
    return Int(12) * rwd + Int(10) * g;
}

/// Bounded genus: twd(G) + 1 < 3*(2 + sqrt(2g))*(6*rwd(G) + 5g), decided by
/// exact squaring. Returns true iff the strict inequality holds.
inline bool genus_twd_ok(int twd, int rwd, int g) {
    if (rwd < 1 || g < 0) throw std::invalid_argument("genus_twd_ok: bad arguments");
    // lhs < 6*(6rwd+5g) + 3*(6rwd+5g)*sqrt(2g)
    Rat lhs(twd + 1);
    Rat base = Rat(6) * (Int(6) * rwd + Int(5) * g);
    Rat coef = Rat(3) * (Int(6) * rwd + Int(5) * g);
    return exact::cmp_sqrt_form(lhs, base, coef, Int(2) * g) > 0;
}

/// Numeric value of the genus twd bound for reports only.
inline double bound_genus_twd_approx(int rwd, int g) {
    return 3.0 * (2.0 + std::sqrt(2.0 * g)) * (6.0 * rwd + 5.0 * g);
}

/// K_{r,r}-free clique-width bound (Prop-8.1 chain):
///   cwd(G) < 2(r-2)/(r+1) C(rwd,r) + 2 sum_{i=0}^{r} C(rwd,i).
inline Rat bound_krr_cwd(int rwd, int r) {
    if (r < 2) throw std::invalid_argument("bound_krr_cwd: r must be at least 2");
    if (rwd < 0) throw std::invalid_argument("bound_krr_cwd: rwd must be nonnegative");
    Rat s = Rat(2 * (r - 2), r + 1) *
            Rat(exact::binomial(static_cast<unsigned>(rwd), static_cast<unsigned>(r)));
    for (int i = 0; i <= r; ++i)
        s += Rat(2) * Rat(exact::binomial(static_cast<unsigned>(rwd), static_cast<unsigned>(i)));
    return s;
}

/// K_{r,r}-free tree-width bound: twd(G) + 1 < 3(r-1) * bound_krr_cwd.
inline Rat bound_krr_twd(int rwd, int r) { return Rat(3 * (r - 1)) * bound_krr_cwd(rwd, r); }

/// nabla_1 <= r bounds: twd+1 < 12 r 4^r rwd and cwd < 2 * 4^r * rwd.
inline Int bound_nabla1_twd(int rwd, int r) {
    if (r < 1 || rwd < 1) throw std::invalid_argument("bound_nabla1_twd: bad arguments");
    return Int(12) * r * exact::ipow(4, static_cast<unsigned>(r)) * rwd;
}
inline Int bound_nabla1_cwd(int rwd, int r) {
    if (r < 1 || rwd < 1) throw std::invalid_argument("bound_nabla1_cwd: bad arguments");
    return Int(2) * exact::ipow(4, static_cast<unsigned>(r)) * rwd;
}

// Exponential bounds with log = log2 throughout. 2^{t r log2 r} = r^{t r}
// exactly, so comparisons against these clear to integer power comparisons;
// 2^{m r log2 log2 r} = (log2 r)^{m r} is decided by interval refinement.

/// K_r-topological-minor-free: is twd+1 < (3/4)(r^2+4r-5) * 2^{tau r log2 r} * rwd?
inline bool topminor_twd_ok(int twd, int rwd, int r, const Rat& tau = Rat(451, 100)) {
    if (r <= 2 || rwd < 1) throw std::invalid_argument("topminor_twd_ok: need r > 2, rwd >= 1");
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    Rat coef = Rat(3, 4) * Rat(r * r + 4 * r - 5) * rwd;
    Rat texp = tau * r;  // 2^{tau r log2 r} = r^{tau r}
    unsigned p = static_cast<unsigned>(numerator(texp));
    unsigned q = static_cast<unsigned>(denominator(texp));
    return exact::cmp_pow_ratio(Rat(twd + 1), coef, Int(r), p, q) < 0;
}

/// K_r-topological-minor-free: is cwd_certificate < 2 * 2^{tau r log2 r} * rwd?
inline bool topminor_cwd_ok(int cwd, int rwd, int r, const Rat& tau = Rat(451, 100)) {
    if (r <= 2 || rwd < 1) throw std::invalid_argument("topminor_cwd_ok: need r > 2, rwd >= 1");
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    Rat texp = tau * r;
    unsigned p = static_cast<unsigned>(numerator(texp));
    unsigned q = static_cast<unsigned>(denominator(texp));
    return exact::cmp_pow_ratio(Rat(cwd), Rat(2) * rwd, Int(r), p, q) < 0;
}

inline double bound_topminor_twd_approx(int rwd, int r, double tau = 4.51) {
    return 0.75 * (r * r + 4.0 * r - 5.0) * std::pow(2.0, tau * r * std::log2(r)) * rwd;
}

/// K_r-minor-free (mu must be supplied; the value is not pinned by theory):
/// is twd+1 < 6(r-2) * 2^{mu r log2 log2 r} * rwd = 6(r-2) (log2 r)^{mu r} rwd?
inline bool minor_twd_ok(int twd, int rwd, int r, const Rat& mu) {
    if (r <= 2 || rwd < 1) throw std::invalid_argument("minor_twd_ok: need r > 2, rwd >= 1");
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    Rat mexp = mu * r;
    unsigned p = static_cast<unsigned>(numerator(mexp));
    unsigned q = static_cast<unsigned>(denominator(mexp));
    // twd+1 < K * (log2 r)^{p/q}  <=>  ((twd+1)/K)^q < (log2 r)^p
    Rat s = exact::rpow(Rat(twd + 1) / (Rat(6 * (r - 2)) * rwd), q);
    return exact::cmp_log2_pow(s, static_cast<unsigned>(r), p) < 0;
}

inline bool minor_cwd_ok(int cwd, int rwd, int r, const Rat& mu) {
    if (r <= 2 || rwd < 1) throw std::invalid_argument("minor_cwd_ok: need r > 2, rwd >= 1");
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    Rat mexp = mu * r;
    unsigned p = static_cast<unsigned>(numerator(mexp));
    unsigned q = static_cast<unsigned>(denominator(mexp));
    Rat s = exact::rpow(Rat(cwd) / (Rat(2) * rwd), q);
    return exact::cmp_log2_pow(s, static_cast<unsigned>(r), p) < 0;
}

inline double bound_minor_twd_approx(int rwd, int r, double mu) {
    return 6.0 * (r - 2) * std::pow(2.0, mu * r * std::log2(std::log2(r))) * rwd;
}

/// Clique count of size k in K_r-topological-minor-free graphs:
///   at most (1/(r+1)) C(r+1,k) (beta r)^{k-1} n, beta = 10 by default.
inline Rat clique_bound_topminor(long long n, int r, int k, const Rat& beta = Rat(10)) {
    if (r < 2 || k < 1 || k > r - 1)
        throw std::invalid_argument("clique_bound_topminor: need r >= 2 and 1 <= k <= r-1");
    return Rat(1, r + 1) *
           Rat(exact::binomial(static_cast<unsigned>(r + 1), static_cast<unsigned>(k))) *
           exact::rpow(beta * r, static_cast<unsigned>(k - 1)) * n;
}

/// Total clique count: is count <= 2^{tau r log2 r} n = r^{tau r} n?
inline bool clique_total_topminor_ok(const Int& count, long long n, int r,
                                     const Rat& tau = Rat(451, 100)) {
    if (r <= 2) throw std::invalid_argument("clique_total_topminor_ok: need r > 2");
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    Rat texp = tau * r;
    unsigned p = static_cast<unsigned>(numerator(texp));
    unsigned q = static_cast<unsigned>(denominator(texp));
    return exact::cmp_pow_ratio(Rat(count), Rat(n), Int(r), p, q) <= 0;
}

/// Clique count of size k in K_r-minor-free graphs (alpha must be supplied):
/// is count <= (1/(r+1)) C(r+1,k) (2 alpha sqrt(log2 r))^{k-1} n?
inline bool clique_minor_ok(const Int& count, long long n, int r, int k, const Rat& alpha) {
    if (r < 2 || k < 1 || k > r - 1)
        throw std::invalid_argument("clique_minor_ok: need r >= 2 and 1 <= k <= r-1");
    if (k == 1) return Rat(count) <= Rat(n);
    Rat coef = Rat(1, r + 1) *
               Rat(exact::binomial(static_cast<unsigned>(r + 1), static_cast<unsigned>(k))) *
               exact::rpow(Rat(2) * alpha, static_cast<unsigned>(k - 1)) * n;
    if (coef == 0) return count == 0;
    // count <= coef * (log2 r)^{(k-1)/2}  <=>  (count/coef)^2 <= (log2 r)^{k-1}
    Rat s = exact::rpow(Rat(count) / coef, 2);
    return exact::cmp_log2_pow(s, static_cast<unsigned>(r), static_cast<unsigned>(k - 1)) <= 0;
}

inline double clique_bound_minor_approx(long long n, int r, int k, double alpha) {
    double c = 1.0 / (r + 1) *
               static_cast<double>(exact::binomial(static_cast<unsigned>(r + 1),
                                                   static_cast<unsigned>(k))) *
               std::pow(2.0 * alpha * std::sqrt(std::log2(r)), k - 1) * n;
    return c;
}

/// Restricted-intersection family bound:
///   |F| <= (k-2)/(s+1) C(n,s) + sum_{i=0}^{s} C(n,i).
inline Rat fueredi_sudakov(long long n, int k, int s) {
    if (k < 2 || s < 1 || n < 0)
        throw std::invalid_argument("fueredi_sudakov: need k >= 2, s >= 1, n >= 0");
    Rat out = Rat(k - 2, s + 1) *
              Rat(exact::binomial(static_cast<unsigned>(n), static_cast<unsigned>(s)));
    for (int i = 0; i <= s; ++i)
        out += Rat(exact::binomial(static_cast<unsigned>(n), static_cast<unsigned>(i)));
    return out;
}

/// Least integer t with t > 2 + sqrt(2g), by exact comparison (t-2)^2 > 2g:
/// K_{t,t} does not embed in Euler genus g from this threshold on.
inline int ktt_threshold(int g) {
    if (g < 0) throw std::invalid_argument("ktt_threshold: genus must be nonnegative");
    int t = 3;
    while (static_cast<long long>(t - 2) * (t - 2) <= 2LL * g) ++t;
    return t;
}

/// Wood's bound: a d-degenerate graph on n >= d vertices has at most
/// 2^d (n - d + 1) cliques (empty clique included).
inline Int wood_clique_bound(long long n, int d) {
    if (d < 0 || n < d) throw std::invalid_argument("wood_clique_bound: need n >= d >= 0");
    return exact::ipow(2, static_cast<unsigned>(d)) * Int(n - d + 1);
}

}  // namespace widthkit::bounds

#endif
