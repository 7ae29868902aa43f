#ifndef PGONAL_DESCENT_HPP
#define PGONAL_DESCENT_HPP

#include "conic.hpp"

namespace pgonal {

enum class DescentVariant { rational_model, quadratic_model };

// Outcome of the descent pipeline: a p-gonal model q(x) over Q or over a
// quadratic extension Q(sqrt(e)), with the witness map and the data needed
// to check it.  The witness satisfies Phi^sigma . g_sigma = Phi for every
// sigma fixing the target field.
struct DescentOutcome {
    DescentVariant variant;
    std::vector<Rational> model_rational;  // q coefficients, rational model
    std::vector<std::pair<Rational, Rational>> model_quadratic;  // r + s sqrt(e)
    std::optional<Int> extension_disc;
    std::optional<std::string> obstruction;  // local certificate, quadratic case
    Mobius witness;            // over L = K or K(sqrt e)
    Compositum ext;            // L together with the embeddings of K and sqrt(e)
    PgonalCurve model_over_L;  // the image branch divisor, viewed over L
    GaloisCocycle cocycle;
    DescendedConic conic;
};

inline PgonalCurve embed_curve(const PgonalCurve& c, const FieldElement& theta_image) {
    std::vector<std::pair<ProjPoint, int>> e;
    for (const auto& [pt, w] : c.branch().entries())
        e.emplace_back(embed_point(pt, theta_image), w);
    return PgonalCurve::validate(c.p(), WeightedPointSet(c.p(), std::move(e)));
}

namespace detail {

// Split u = l0 * (alpha x + beta y) off the shared linear factor l0 of two
// binary quadratics; returns the residual rows of the Moebius matrix.
struct ResidualRows {
    FieldElement a1, b1, a2, b2;
};

inline ResidualRows divide_common_linear(const BinaryQuadratic& u1, const BinaryQuadratic& u2) {
    const FieldPtr& L = u1.field();
    Polynomial<FieldElement> f1({u1.q2, u1.q1, u1.q0});
    Polynomial<FieldElement> f2({u2.q2, u2.q1, u2.q0});
    ensure(!f1.is_zero() && !f2.is_zero(), "degenerate projection quadratic");
    Polynomial<FieldElement> g = poly_gcd(f1, f2);
    if (g.degree() == 1) {
        FieldElement r = -g[0];
        ensure(!(u1.q0.is_zero() && u2.q0.is_zero()),
               "projection quadratics share two roots");
        auto split = [&](const BinaryQuadratic& u) {
            FieldElement alpha = u.q0;
            FieldElement beta = u.q1 + r * u.q0;
            ensure(-(r * beta) == u.q2, "linear factor division failed");
            return std::pair<FieldElement, FieldElement>(alpha, beta);
        };
        auto [a1, b1] = split(u1);
        auto [a2, b2] = split(u2);
        return {a1, b1, a2, b2};
    }
    if (g.degree() == 0) {
        // the only shared root is at infinity: both quadratics divisible by y
        ensure(u1.q0.is_zero() && u2.q0.is_zero(),
               "projection quadratics share no root");
        return {u1.q1, u1.q2, u2.q1, u2.q2};
    }
    (void)L;
    throw invariant_violation("projection quadratics are proportional");
}

}  // namespace detail

// Builds the witness map Phi from the conic point by projecting the conic
// back to the line, applies it to the branch divisor, and expands the model
// polynomial over the target field.
inline DescentOutcome parametrize_and_model(const PgonalCurve& curve,
                                            const GaloisCocycle& cocycle,
                                            const DescendedConic& conic,
                                            const ConicPointResult& point) {
    const FieldPtr& K = curve.field();
    ensure(point.rational_point || point.quadratic_point, "conic point missing");
    bool rational = point.rational_point.has_value();

    Compositum ext = rational ? Compositum{K, K->gen(), K->zero(), false}
                              : compositum_with_sqrt(K, *point.disc);
    const FieldPtr& L = ext.field;
    std::vector<int> fixing;
    if (rational) {
        for (int i = 0; i < L->automorphism_count(); ++i) fixing.push_back(i);
    } else {
        fixing = fixing_automorphisms(L, ext.sqrt_disc);
    }
    auto restriction = restrict_automorphisms(L, ext.theta, K);

    // conic point in conic coordinates, over L
    std::vector<FieldElement> v0(3, L->zero());
    for (int r = 0; r < 3; ++r) {
        FieldElement acc = L->zero();
        for (int c = 0; c < 3; ++c) {
            FieldElement wc = L->zero();
            if (rational)
                wc = L->from_rational(Rational((*point.rational_point)[c]));
            else {
                const auto& pr = (*point.quadratic_point)[c];
                wc = L->from_rational(pr.first) + L->from_rational(pr.second) * ext.sqrt_disc;
            }
            acc = acc + L->from_rational(conic.point_transform[r][c]) * wc;
        }
        v0[r] = acc;
    }
    ensure(gram_value(conic.gram, v0, L->one()).is_zero(), "point is not on the conic");
    for (int s : fixing)
        for (const auto& z : v0)
            ensure(apply_automorphism(s, z) == z, "conic point is not k2-rational");

    std::array<BinaryQuadratic, 3> QL = {
        BinaryQuadratic(eval_coords_at(conic.quadrics[0].q0.coords(), ext.theta),
                        eval_coords_at(conic.quadrics[0].q1.coords(), ext.theta),
                        eval_coords_at(conic.quadrics[0].q2.coords(), ext.theta)),
        BinaryQuadratic(eval_coords_at(conic.quadrics[1].q0.coords(), ext.theta),
                        eval_coords_at(conic.quadrics[1].q1.coords(), ext.theta),
                        eval_coords_at(conic.quadrics[1].q2.coords(), ext.theta)),
        BinaryQuadratic(eval_coords_at(conic.quadrics[2].q0.coords(), ext.theta),
                        eval_coords_at(conic.quadrics[2].q1.coords(), ext.theta),
                        eval_coords_at(conic.quadrics[2].q2.coords(), ext.theta))};

    // two independent k2-rational lines through the point
    Mat<FieldElement> row = {{v0[0], v0[1], v0[2]}};
    auto lines = kernel_basis(std::move(row), L->one());
    ensure(lines.size() == 2, "line pencil through the conic point is not 2-dimensional");
    auto combine = [&](const std::vector<FieldElement>& l) {
        return BinaryQuadratic(
            l[0] * QL[0].q0 + l[1] * QL[1].q0 + l[2] * QL[2].q0,
            l[0] * QL[0].q1 + l[1] * QL[1].q1 + l[2] * QL[2].q1,
            l[0] * QL[0].q2 + l[1] * QL[1].q2 + l[2] * QL[2].q2);
    };
    auto rows = detail::divide_common_linear(combine(lines[0]), combine(lines[1]));
    Mobius witness(rows.a1, rows.b1, rows.a2, rows.b2);

    // witness law Phi^sigma . g_sigma = Phi on Gal(L/k2)
    for (int s : fixing) {
        Mobius gL = embed_mobius(cocycle.maps[restriction[s]], ext.theta);
        ensure(conjugate_mobius(s, witness).compose(gL) == witness,
               "witness does not satisfy the descent identity");
    }

    // image branch divisor and its stability over k2
    std::vector<std::pair<ProjPoint, int>> image_entries;
    for (const auto& [pt, w] : curve.branch().entries())
        image_entries.emplace_back(witness.apply(embed_point(pt, ext.theta)), w);
    PgonalCurve model =
        PgonalCurve::validate(curve.p(), WeightedPointSet(curve.p(), std::move(image_entries)));
    for (int s : fixing)
        ensure(conjugate_set(s, model.branch()) == model.branch(),
               "image branch divisor is not stable over k2");

    auto q = model.affine_polynomial();
    DescentOutcome out{rational ? DescentVariant::rational_model
                                : DescentVariant::quadratic_model,
                       {},
                       {},
                       point.disc,
                       point.obstruction,
                       witness,
                       ext,
                       model,
                       cocycle,
                       conic};
    for (int i = 0; i <= q.degree(); ++i) {
        const FieldElement& coeff = q[i];
        if (rational) {
            ensure(coeff.is_rational(), "model coefficient is not rational");
            out.model_rational.push_back(coeff.rational_value());
        } else {
            // coeff = r + s sqrt(e)
            Mat<Rational> sys(L->degree(), std::vector<Rational>(2));
            std::vector<Rational> rhs(L->degree());
            for (int j = 0; j < L->degree(); ++j) {
                sys[j][0] = L->one().coords()[j];
                sys[j][1] = ext.sqrt_disc.coords()[j];
                rhs[j] = coeff.coords()[j];
            }
            auto sol = linear_solve(sys, rhs, Rational(1));
            ensure(sol.consistent, "model coefficient is not in Q(sqrt(e))");
            out.model_quadratic.emplace_back(sol.particular[0], sol.particular[1]);
        }
    }
    return out;
}

// Stop report for a nontrivial power character: the curve's p-gonal pair
// only descends after the degree-[k1:k] character kernel extension, which is
// out of scope beyond reporting.
struct CharacterStop {
    PowerCharacter character;
};

using DescendResult = std::variant<DescentOutcome, CharacterStop, FomFailure, CocycleObstruction>;

inline DescendResult descend(const PgonalCurve& curve, const Int& height_cap = -1) {
    auto chiv = power_character(curve);
    if (std::holds_alternative<FomFailure>(chiv)) return std::get<FomFailure>(chiv);
    const PowerCharacter& chi = std::get<PowerCharacter>(chiv);
    if (!chi.trivial()) return CharacterStop{chi};
    auto cv = compute_cocycle(curve);
    if (std::holds_alternative<FomFailure>(cv)) return std::get<FomFailure>(cv);
    if (std::holds_alternative<CocycleObstruction>(cv)) return std::get<CocycleObstruction>(cv);
    const GaloisCocycle& cocycle = std::get<GaloisCocycle>(cv);
    DescendedConic conic = descend_to_conic(cocycle);
    ConicPointResult pt = conic_point(conic.diag, height_cap);
    return parametrize_and_model(curve, cocycle, conic, pt);
}

}  // namespace pgonal

#endif
