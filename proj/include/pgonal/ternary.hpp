#ifndef PGONAL_TERNARY_HPP
#define PGONAL_TERNARY_HPP

#include <array>
#include <optional>
#include <set>
#include <string>

#include "intarith.hpp"

namespace pgonal {

// Diagonal ternary form a w0^2 + b w1^2 + c w2^2 in Legendre normal form:
// nonzero squarefree pairwise coprime integer coefficients.  back[i] maps a
// normal-form solution coordinate back to the original variable z_i = back[i] w_i.
struct LegendreForm {
    std::array<Int, 3> coeffs;
    std::array<Rational, 3> back;
};

inline bool is_legendre_normal(const std::array<Int, 3>& a) {
    for (const Int& x : a)
        if (x == 0 || !is_squarefree(x)) return false;
    return gcd(a[0], a[1]) == 1 && gcd(a[0], a[2]) == 1 && gcd(a[1], a[2]) == 1;
}

// Normalization pipeline: clear denominators and square parts entrywise,
// remove the common factor, remove pairwise gcds (rescaling the two variables
// involved), and flip the overall sign so at most one coefficient is negative.
inline LegendreForm legendre_normalize(const std::array<Rational, 3>& d) {
    for (const auto& x : d) require(x != 0, "conic coefficient must be nonzero");
    std::array<Int, 3> a;
    std::array<Rational, 3> back;
    for (int i = 0; i < 3; ++i) {
        // d_i = e_i * s_i^2  ->  d_i z^2 = e_i (s_i z)^2
        auto split = squarefree_split(num(d[i]) * den(d[i]));
        a[i] = split.squarefree;
        Rational s = Rational(split.square) / Rational(den(d[i]));
        back[i] = Rational(1) / s;
    }
    Int common = gcd(gcd(abs(a[0]), abs(a[1])), abs(a[2]));
    for (int i = 0; i < 3; ++i) a[i] /= common;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < 3 && !changed; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            Int g = gcd(abs(a[j]), abs(a[k]));
            if (g > 1) {
                // multiply the form by g and absorb g^2 into z_j, z_k
                a[j] /= g;
                a[k] /= g;
                a[i] *= g;
                back[j] /= g;
                back[k] /= g;
                auto split = squarefree_split(a[i]);
                a[i] = split.squarefree;
                back[i] *= split.square;
                changed = true;
            }
        }
    }
    int negatives = (a[0] < 0) + (a[1] < 0) + (a[2] < 0);
    if (negatives >= 2)
        for (auto& x : a) x = -x;
    ensure(is_legendre_normal(a), "normalization did not reach Legendre normal form");
    return LegendreForm{a, back};
}

// Primes at which a normal-form conic must be tested: 2, the divisors of the
// coefficients, and the real place (handled separately).
inline std::set<Int> bad_primes(const std::array<Int, 3>& a) {
    std::set<Int> ps{Int(2)};
    for (const Int& x : a)
        for (const auto& [p, e] : factorize(x)) ps.insert(p);
    return ps;
}

// First local obstruction of a w0^2 + b w1^2 + c w2^2 = 0, or nullopt when
// the form is everywhere locally solvable.  "real" or a prime rendered in
// decimal.  Solvability over Q_p is the Hilbert condition (-ac, -bc)_p = 1.
inline std::optional<std::string> conic_local_obstruction(const std::array<Int, 3>& a) {
    ensure(is_legendre_normal(a), "local test expects Legendre normal form");
    bool pos = a[0] > 0 && a[1] > 0 && a[2] > 0;
    bool neg = a[0] < 0 && a[1] < 0 && a[2] < 0;
    if (pos || neg) return "real";
    for (const Int& p : bad_primes(a))
        if (hilbert_symbol(-a[0] * a[2], -a[1] * a[2], p) == -1) return p.str();
    return std::nullopt;
}

// Bounded solution search.  By Holzer's theorem a solvable normal-form conic
// has a solution with |w0| <= sqrt|bc|, |w1| <= sqrt|ac|, |w2| <= sqrt|ab|,
// so the default cap makes the search a complete decision procedure once the
// local tests pass.
inline std::optional<std::array<Int, 3>> conic_search(const std::array<Int, 3>& a,
                                                      const Int& height_cap = -1) {
    Int b0 = isqrt(abs(a[1] * a[2]));
    Int b1 = isqrt(abs(a[0] * a[2]));
    if (height_cap >= 0) {
        b0 = std::min(b0, height_cap);
        b1 = std::min(b1, height_cap);
    }
    for (Int w1 = 0; w1 <= b1; ++w1) {
        Int byy = a[1] * w1 * w1;
        for (Int w0 = 0; w0 <= b0; ++w0) {
            Int r = -(a[0] * w0 * w0 + byy);
            if (r % a[2] != 0) continue;
            Int zz = r / a[2];
            if (zz < 0) continue;
            Int w2 = isqrt(zz);
            if (w2 * w2 != zz) continue;
            if (w0 == 0 && w1 == 0 && w2 == 0) continue;
            Int g = gcd(gcd(w0, w1), w2);
            return std::array<Int, 3>{w0 / g, w1 / g, w2 / g};
        }
    }
    return std::nullopt;
}

struct ConicDecision {
    std::optional<std::array<Int, 3>> point;   // primitive, nonnegative entries
    std::optional<std::string> obstruction;    // local certificate when no point
};

inline ConicDecision decide_conic(const std::array<Int, 3>& a, const Int& height_cap = -1) {
    require(is_legendre_normal(a), "conic decision expects Legendre normal form");
    ConicDecision out;
    out.obstruction = conic_local_obstruction(a);
    if (out.obstruction) return out;
    out.point = conic_search(a, height_cap);
    if (!out.point) {
        if (height_cap >= 0)
            throw invalid_input(
                "height bound too small: the conic is solvable but no point fits under the cap");
        throw invariant_violation("locally solvable conic with no point below the Holzer bound");
    }
    return out;
}

}  // namespace pgonal

#endif
