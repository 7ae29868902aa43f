#ifndef PGONAL_RATIONAL_HPP
#define PGONAL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "errors.hpp"

namespace pgonal {

using Int = boost::multiprecision::cpp_int;

// Exact rational number, always stored with gcd(num, den) = 1 and den > 0.
// cpp_rational maintains that canonical form for us.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return numerator(r); }
inline Int den(const Rational& r) { return denominator(r); }

inline Rational make_rational(const Int& n, const Int& d) {
    require(d != 0, "rational with zero denominator");
    return Rational(n) / Rational(d);
}

// Text form "n/d", or "n" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        require(is_integer_literal(s), "malformed rational '" + s + "'");
        return Rational(Int(s));
    }
    std::string ns = s.substr(0, slash);
    std::string ds = s.substr(slash + 1);
    require(is_integer_literal(ns) && is_integer_literal(ds),
            "malformed rational '" + s + "'");
    Int d(ds);
    require(d > 0, "rational denominator must be positive in '" + s + "'");
    return make_rational(Int(ns), d);
}

}  // namespace pgonal

#endif
