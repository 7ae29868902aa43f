#ifndef PGONAL_GALLERY_HPP
#define PGONAL_GALLERY_HPP

#include "curve.hpp"

namespace pgonal {

// One exceptional fixture: a concrete member of each (m, p) shape for which
// the p-gonal group can fail to be unique.  The automorphism-group metadata
// is carried as an inert annotation, never computed.
struct GalleryEntry {
    std::string tag;     // instantiated (m, p)
    std::string family;  // exceptional family label used by the classifier
    PgonalCurve curve;
    int expected_genus;
    std::string note;
};

inline std::vector<GalleryEntry> gallery() {
    std::vector<GalleryEntry> out;
    auto Q = NumberField::rationals();

    // (3,7): y^7 = x^2 (x - 1), infinity carrying the complementary weight
    {
        auto pt = [&](long v) { return ProjPoint::affine(Q->from_rational(Rational(v))); };
        WeightedPointSet b(7, {{pt(0), 2}, {pt(1), 1}, {ProjPoint::infinity(Q), 4}});
        out.push_back({"(3,7)", "(3,7)", PgonalCurve::validate(7, b), 3,
                       "Klein quartic; automorphism group of order 168"});
    }

    // (4,3): y^3 = (x^2 - 1)(x^2 - 15 sqrt(3) + 26)^2 over the field of the
    // roots; r^4 + 52 r^2 + 1 = 0 and sqrt(3) = (r^2 + 26)/15
    {
        auto F = NumberField::create(rat_poly({1, 0, 52, 0, 1}), "Q(r43)");
        auto r = F->gen();
        WeightedPointSet b(3, {{ProjPoint::affine(F->one()), 1},
                               {ProjPoint::affine(-F->one()), 1},
                               {ProjPoint::affine(r), 2},
                               {ProjPoint::affine(-r), 2}});
        out.push_back({"(4,3)", "(4,3)", PgonalCurve::validate(3, b), 2,
                       "genus-two surface; automorphism group of order 48"});
    }

    // (4,5): Bring curve, y^5 = (x^2 - 1)(x^2 + 1)^4 over Q(i)
    {
        auto F = NumberField::create(rat_poly({1, 0, 1}), "Q(i)");
        auto i = F->gen();
        WeightedPointSet b(5, {{ProjPoint::affine(F->one()), 1},
                               {ProjPoint::affine(-F->one()), 1},
                               {ProjPoint::affine(i), 4},
                               {ProjPoint::affine(-i), 4}});
        out.push_back({"(4,5)", "(4,5)", PgonalCurve::validate(5, b), 4,
                       "Bring curve; automorphism group S_5"});
    }

    // (5,3): y^3 = x^2 (x^4 - 1) over Q(i)
    {
        auto F = NumberField::create(rat_poly({1, 0, 1}), "Q(i)");
        auto i = F->gen();
        WeightedPointSet b(3, {{ProjPoint::affine(F->zero()), 2},
                               {ProjPoint::affine(F->one()), 1},
                               {ProjPoint::affine(-F->one()), 1},
                               {ProjPoint::affine(i), 1},
                               {ProjPoint::affine(-i), 1}});
        out.push_back({"(5,3)", "(5,3)", PgonalCurve::validate(3, b), 3,
                       "automorphism group of order 48; quotient signature (0;2,3,12)"});
    }

    // (p,p) at p = 5: Fermat quintic in p-gonal form, branch = roots of x^5 + 1
    {
        auto F = NumberField::create(rat_poly({1, 1, 1, 1, 1}), "Q(zeta5)");
        auto z = F->gen();
        std::vector<std::pair<ProjPoint, int>> e;
        FieldElement pw = F->one();
        for (int k = 0; k < 5; ++k) {
            e.emplace_back(ProjPoint::affine(-pw), 1);
            pw = pw * z;
        }
        WeightedPointSet b(5, std::move(e));
        out.push_back({"(5,5)", "(p,p)", PgonalCurve::validate(5, b), 6,
                       "Fermat quintic; automorphism group Z_5^2 : S_3"});
    }

    // (2p,p) at p = 3, a = 2: y^3 = (x^3 - 8)(x^3 - 1/8) over Q(zeta3)
    {
        auto F = NumberField::create(rat_poly({1, 1, 1}), "Q(zeta3)");
        auto w = F->gen();
        std::vector<std::pair<ProjPoint, int>> e;
        FieldElement pw = F->one();
        for (int k = 0; k < 3; ++k) {
            e.emplace_back(ProjPoint::affine(F->from_rational(2) * pw), 1);
            e.emplace_back(ProjPoint::affine(F->from_rational(Rational(1) / 2) * pw), 1);
            pw = pw * w;
        }
        WeightedPointSet b(3, std::move(e));
        out.push_back({"(6,3)", "(2p,p)", PgonalCurve::validate(3, b), 4,
                       "family member a = 2; automorphism group Z_3^2 : Z_2^2, "
                       "quotient signature (0;2,2,2,3)"});
    }

    return out;
}

}  // namespace pgonal

#endif
