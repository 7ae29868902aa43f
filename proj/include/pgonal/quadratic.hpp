#ifndef PGONAL_QUADRATIC_HPP
#define PGONAL_QUADRATIC_HPP

#include "projective.hpp"

namespace pgonal {

// Binary quadratic form q0 x^2 + q1 xy + q2 y^2 over a number field.
struct BinaryQuadratic {
    FieldElement q0, q1, q2;

    BinaryQuadratic(FieldElement a, FieldElement b, FieldElement c)
        : q0(std::move(a)), q1(std::move(b)), q2(std::move(c)) {
        check_same_field(q0, q1);
        check_same_field(q0, q2);
    }

    const FieldPtr& field() const { return q0.field(); }
    bool is_zero() const { return q0.is_zero() && q1.is_zero() && q2.is_zero(); }

    FieldElement eval(const FieldElement& x, const FieldElement& y) const {
        return q0 * x * x + q1 * x * y + q2 * y * y;
    }

    bool operator==(const BinaryQuadratic& o) const {
        return q0 == o.q0 && q1 == o.q1 && q2 == o.q2;
    }
};

// Substitution Q(m00 x + m01 y, m10 x + m11 y).
inline BinaryQuadratic substitute(const BinaryQuadratic& Q, const FieldElement& m00,
                                  const FieldElement& m01, const FieldElement& m10,
                                  const FieldElement& m11) {
    FieldElement two = Q.field()->from_rational(2);
    return BinaryQuadratic(
        Q.eval(m00, m10), two * Q.q0 * m00 * m01 + Q.q1 * (m00 * m11 + m01 * m10) +
                              two * Q.q2 * m10 * m11,
        Q.eval(m01, m11));
}

inline BinaryQuadratic conjugate_quadratic(int sigma, const BinaryQuadratic& Q) {
    return BinaryQuadratic(apply_automorphism(sigma, Q.q0), apply_automorphism(sigma, Q.q1),
                           apply_automorphism(sigma, Q.q2));
}

// det(A) * (sigma(Q) . A^{-1}), computed through the adjugate so it stays
// exact: det(A) * (Q^sigma . A^{-1}) = (1/det(A)) * (Q^sigma . adj(A)).
// The result is invariant under rescaling the lift A.
inline BinaryQuadratic quadratic_twisted_action(int sigma, const Mobius& A,
                                                const BinaryQuadratic& Q) {
    BinaryQuadratic Qs = conjugate_quadratic(sigma, Q);
    BinaryQuadratic sub = substitute(Qs, A.d(), -A.b(), -A.c(), A.a());
    FieldElement inv_det = A.det().inverse();
    return BinaryQuadratic(sub.q0 * inv_det, sub.q1 * inv_det, sub.q2 * inv_det);
}

// Coefficients of the binary quartic Q * R, lowest power of y first:
// index i holds the coefficient of x^(4-i) y^i.
inline std::array<FieldElement, 5> quadratic_product(const BinaryQuadratic& Q,
                                                     const BinaryQuadratic& R) {
    return {Q.q0 * R.q0, Q.q0 * R.q1 + Q.q1 * R.q0, Q.q0 * R.q2 + Q.q1 * R.q1 + Q.q2 * R.q0,
            Q.q1 * R.q2 + Q.q2 * R.q1, Q.q2 * R.q2};
}

}  // namespace pgonal

#endif
