#ifndef PGONAL_NORMEQ_HPP
#define PGONAL_NORMEQ_HPP

#include "ternary.hpp"

namespace pgonal {

// x^2 - d y^2 = c over Q: either a solution or the local place at which the
// equation fails.  Decides via the projective conic X^2 - d Y^2 - c Z^2 = 0;
// d non-square forces Z != 0 on every nontrivial point.
struct NormEquationResult {
    std::optional<std::pair<Rational, Rational>> solution;
    std::optional<std::string> obstruction;
    bool solvable() const { return solution.has_value(); }
};

inline NormEquationResult norm_equation(const Rational& d, const Rational& c,
                                        const Int& height_cap = -1) {
    require(d != 0 && c != 0, "norm equation needs d, c nonzero");
    require(!is_square(d), "degenerate norm equation: d is a perfect square");
    LegendreForm nf = legendre_normalize({Rational(1), -d, -c});
    ConicDecision dec = decide_conic(nf.coeffs, height_cap);
    NormEquationResult out;
    if (!dec.point) {
        out.obstruction = dec.obstruction;
        return out;
    }
    const auto& w = *dec.point;
    Rational z0 = nf.back[0] * Rational(w[0]);
    Rational z1 = nf.back[1] * Rational(w[1]);
    Rational z2 = nf.back[2] * Rational(w[2]);
    ensure(z2 != 0, "norm equation conic point landed on the line at infinity");
    Rational x = z0 / z2, y = z1 / z2;
    ensure(x * x - d * y * y == c, "norm equation solution check failed");
    out.solution = {x, y};
    return out;
}

}  // namespace pgonal

#endif
