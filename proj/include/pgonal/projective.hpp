#ifndef PGONAL_PROJECTIVE_HPP
#define PGONAL_PROJECTIVE_HPP

#include <array>

#include "numberfield.hpp"

namespace pgonal {

// Point of the projective line over a number field, kept in canonical form:
// (u : 1) for affine points, (1 : 0) for the point at infinity.
class ProjPoint {
  public:
    ProjPoint(FieldElement u, FieldElement v) : u_(std::move(u)), v_(std::move(v)) {
        check_same_field(u_, v_);
        require(!(u_.is_zero() && v_.is_zero()), "(0 : 0) is not a projective point");
        if (v_.is_zero()) {
            u_ = one_like(u_);
        } else {
            u_ = u_ / v_;
            v_ = one_like(v_);
        }
    }

    static ProjPoint affine(FieldElement u) {
        FieldElement one = one_like(u);
        return ProjPoint(std::move(u), std::move(one));
    }
    static ProjPoint infinity(const FieldPtr& field) {
        return ProjPoint(field->one(), field->zero());
    }

    const FieldElement& u() const { return u_; }
    const FieldElement& v() const { return v_; }
    const FieldPtr& field() const { return u_.field(); }
    bool is_infinity() const { return v_.is_zero(); }
    const FieldElement& affine_value() const {
        require(!is_infinity(), "affine value of the point at infinity");
        return u_;
    }

    bool operator==(const ProjPoint& o) const { return u_ == o.u_ && v_ == o.v_; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }

    // Total order used for canonical set storage: affine points by their
    // coordinate vectors, infinity last.
    bool operator<(const ProjPoint& o) const {
        if (is_infinity() != o.is_infinity()) return !is_infinity();
        if (is_infinity()) return false;
        return u_ < o.u_;
    }

  private:
    FieldElement u_, v_;
};

inline ProjPoint conjugate_point(int sigma, const ProjPoint& p) {
    return ProjPoint(apply_automorphism(sigma, p.u()), apply_automorphism(sigma, p.v()));
}

// Moebius transformation as a projective 2x2 matrix.  The canonical form
// scales the first nonzero entry in row-major order to 1; equality and
// ordering act on that form.
class Mobius {
  public:
    Mobius(FieldElement a, FieldElement b, FieldElement c, FieldElement d)
        : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
        for (int i = 1; i < 4; ++i) check_same_field(e_[0], e_[i]);
        require(!det().is_zero(), "singular matrix does not define a Moebius map");
        canonicalize();
    }

    static Mobius identity(const FieldPtr& field) {
        return Mobius(field->one(), field->zero(), field->zero(), field->one());
    }

    const FieldElement& a() const { return e_[0]; }
    const FieldElement& b() const { return e_[1]; }
    const FieldElement& c() const { return e_[2]; }
    const FieldElement& d() const { return e_[3]; }
    const std::array<FieldElement, 4>& entries() const { return e_; }
    const FieldPtr& field() const { return e_[0].field(); }

    FieldElement det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

    ProjPoint apply(const ProjPoint& p) const {
        return ProjPoint(e_[0] * p.u() + e_[1] * p.v(), e_[2] * p.u() + e_[3] * p.v());
    }

    // this . o, with o applied first.
    Mobius compose(const Mobius& o) const {
        return Mobius(e_[0] * o.e_[0] + e_[1] * o.e_[2], e_[0] * o.e_[1] + e_[1] * o.e_[3],
                      e_[2] * o.e_[0] + e_[3] * o.e_[2], e_[2] * o.e_[1] + e_[3] * o.e_[3]);
    }

    Mobius inverse() const { return Mobius(e_[3], -e_[1], -e_[2], e_[0]); }

    bool is_identity() const {
        return e_[1].is_zero() && e_[2].is_zero() && e_[0] == e_[3];
    }

    bool operator==(const Mobius& o) const { return e_ == o.e_; }
    bool operator!=(const Mobius& o) const { return !(*this == o); }
    bool operator<(const Mobius& o) const {
        for (int i = 0; i < 4; ++i) {
            if (e_[i] < o.e_[i]) return true;
            if (o.e_[i] < e_[i]) return false;
        }
        return false;
    }

  private:
    void canonicalize() {
        for (int i = 0; i < 4; ++i) {
            if (!e_[i].is_zero()) {
                FieldElement inv = e_[i].inverse();
                for (int j = 0; j < 4; ++j) e_[j] = e_[j] * inv;
                return;
            }
        }
    }
    std::array<FieldElement, 4> e_;
};

inline Mobius conjugate_mobius(int sigma, const Mobius& g) {
    return Mobius(apply_automorphism(sigma, g.a()), apply_automorphism(sigma, g.b()),
                  apply_automorphism(sigma, g.c()), apply_automorphism(sigma, g.d()));
}

// Map a field element of K into L along theta_image and rebuild the map there.
inline Mobius embed_mobius(const Mobius& g, const FieldElement& theta_image) {
    return Mobius(eval_coords_at(g.a().coords(), theta_image),
                  eval_coords_at(g.b().coords(), theta_image),
                  eval_coords_at(g.c().coords(), theta_image),
                  eval_coords_at(g.d().coords(), theta_image));
}

inline ProjPoint embed_point(const ProjPoint& p, const FieldElement& theta_image) {
    return ProjPoint(eval_coords_at(p.u().coords(), theta_image),
                     eval_coords_at(p.v().coords(), theta_image));
}

// The unique map sending the (pairwise distinct) triple to (0, 1, inf),
// from the one-dimensional kernel of the incidence conditions.
inline Mobius mobius_to_standard_triple(const ProjPoint& p1, const ProjPoint& p2,
                                        const ProjPoint& p3) {
    require(p1 != p2 && p2 != p3 && p1 != p3, "triple points must be pairwise distinct");
    const FieldPtr& F = p1.field();
    FieldElement zero = F->zero();
    // unknowns (a, b, c, d):  a u1 + b v1 = 0,  c u3 + d v3 = 0,
    // (a - c) u2 + (b - d) v2 = 0
    Mat<FieldElement> m = {
        {p1.u(), p1.v(), zero, zero},
        {zero, zero, p3.u(), p3.v()},
        {p2.u(), p2.v(), -p2.u(), -p2.v()},
    };
    auto basis = kernel_basis(std::move(m), F->one());
    ensure(basis.size() == 1, "triple incidence kernel is not one-dimensional");
    const auto& k = basis[0];
    return Mobius(k[0], k[1], k[2], k[3]);
}

// The unique Moebius map with src[i] -> dst[i].
inline Mobius mobius_through_triples(const std::array<ProjPoint, 3>& src,
                                     const std::array<ProjPoint, 3>& dst) {
    Mobius ms = mobius_to_standard_triple(src[0], src[1], src[2]);
    Mobius md = mobius_to_standard_triple(dst[0], dst[1], dst[2]);
    return md.inverse().compose(ms);
}

}  // namespace pgonal

#endif
