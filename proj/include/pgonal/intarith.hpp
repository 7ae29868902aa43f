#ifndef PGONAL_INTARITH_HPP
#define PGONAL_INTARITH_HPP

#include <boost/multiprecision/miller_rabin.hpp>
#include <cstdint>
#include <map>
#include <vector>

#include "rational.hpp"

namespace pgonal {

inline Int isqrt(const Int& n) {
    ensure(n >= 0, "isqrt of negative");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

inline bool is_square(const Rational& r) {
    return r >= 0 && is_perfect_square(num(r)) && is_perfect_square(den(r));
}

inline bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    return boost::multiprecision::miller_rabin_test(n, 32);
}

inline bool is_prime_u64(std::uint64_t n) {
    return is_probable_prime(Int(n));
}

namespace detail {

// Brent's cycle variant of Pollard rho.  Returns a nontrivial factor of n
// (n odd composite, not a prime power guard needed by the caller).
inline Int pollard_brent(const Int& n, std::uint64_t seed) {
    if (n % 2 == 0) return 2;
    Int y = 2 + Int(seed % 31337) % (n - 2);
    Int c = 1 + Int(seed / 31337 % 65521) % (n - 1);
    Int m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
        x = y;
        for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
        Int k = 0;
        while (k < r && g == 1) {
            ys = y;
            Int lim = m < r - k ? m : r - k;
            for (Int i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                Int d = x - y;
                if (d < 0) d = -d;
                q = q * d % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
        if (r > (Int(1) << 24)) return 0;  // budget exceeded
    }
    if (g == n) {
        // Backtrack one step at a time.
        do {
            ys = (ys * ys + c) % n;
            Int d = x - ys;
            if (d < 0) d = -d;
            g = gcd(d, n);
        } while (g == 1);
    }
    return g == n ? Int(0) : g;
}

inline void factor_into(Int n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    if (is_perfect_square(n)) {
        Int r = isqrt(n);
        factor_into(r, out);
        factor_into(r, out);
        return;
    }
    for (std::uint64_t s = 1; s <= 24; ++s) {
        Int g = pollard_brent(n, s * 0x9e3779b97f4a7c15ULL);
        if (g > 1 && g < n) {
            factor_into(g, out);
            factor_into(n / g, out);
            return;
        }
    }
    throw invariant_violation("factorization budget exceeded on " + n.str());
}

}  // namespace detail

// Prime factorization of |n|, n != 0.  Small primes by trial division,
// the rest by Miller-Rabin + Pollard-Brent.
inline std::map<Int, int> factorize(Int n) {
    ensure(n != 0, "factorize(0)");
    if (n < 0) n = -n;
    std::map<Int, int> out;
    for (Int p : {Int(2), Int(3), Int(5)})
        while (n % p == 0) {
            out[p] += 1;
            n /= p;
        }
    static const int wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    Int p = 7;
    int w = 0;
    while (p * p <= n && p < 100000) {
        while (n % p == 0) {
            out[p] += 1;
            n /= p;
        }
        p += wheel[w];
        w = (w + 1) & 7;
    }
    if (n > 1) {
        if (p * p > n)
            out[n] += 1;
        else
            detail::factor_into(n, out);
    }
    return out;
}

// n = squarefree * square^2 with squarefree carrying the sign of n.
struct SquarefreeSplit {
    Int squarefree;
    Int square;
};

inline SquarefreeSplit squarefree_split(const Int& n) {
    ensure(n != 0, "squarefree part of 0");
    SquarefreeSplit s{n < 0 ? Int(-1) : Int(1), 1};
    for (const auto& [p, e] : factorize(n)) {
        if (e & 1) s.squarefree *= p;
        for (int i = 0; i < e / 2; ++i) s.square *= p;
    }
    return s;
}

inline bool is_squarefree(const Int& n) {
    if (n == 0) return false;
    return squarefree_split(n).square == 1;
}

// Squarefree integer e with r = e * s^2 for some rational s.
inline Int rational_squarefree_part(const Rational& r) {
    ensure(r != 0, "squarefree part of 0");
    return squarefree_split(num(r) * den(r)).squarefree;
}

// Legendre symbol (a | p) for odd prime p.
inline int legendre_symbol(Int a, const Int& p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    Int r = boost::multiprecision::powm(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

// Hilbert symbol (a, b)_p for nonzero integers at a finite prime p,
// including p = 2.
inline int hilbert_symbol(Int a, Int b, const Int& p) {
    ensure(a != 0 && b != 0, "hilbert symbol needs nonzero arguments");
    int alpha = 0, beta = 0;
    while (a % p == 0) {
        a /= p;
        ++alpha;
    }
    while (b % p == 0) {
        b /= p;
        ++beta;
    }
    if (p == 2) {
        auto eps = [](const Int& u) { return static_cast<int>(((u - 1) / 2) % 2 ? 1 : 0); };
        auto omega = [](const Int& u) { return static_cast<int>(((u * u - 1) / 8) % 2 ? 1 : 0); };
        int e = eps(a) * eps(b) + alpha * omega(b) + beta * omega(a);
        return (e & 1) ? -1 : 1;
    }
    int sign = 1;
    if ((alpha & 1) && (beta & 1) && ((p - 1) / 2) % 2 == 1) sign = -sign;
    if (beta & 1) sign *= legendre_symbol(a, p);
    if (alpha & 1) sign *= legendre_symbol(b, p);
    return sign;
}

// Hilbert symbol at the real place.
inline int hilbert_symbol_real(const Int& a, const Int& b) {
    return (a < 0 && b < 0) ? -1 : 1;
}

}  // namespace pgonal

#endif
