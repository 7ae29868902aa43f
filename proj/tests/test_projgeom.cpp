#include <catch2/catch_amalgamated.hpp>

#include "pgonal/quadratic.hpp"
#include "pgonal/weighted.hpp"
#include "support/corpus.hpp"

using namespace pgonal;
using pgonal::testsupport::Rng;

namespace {

ProjPoint qpt(long v) {
    return ProjPoint::affine(NumberField::rationals()->from_rational(Rational(v)));
}
ProjPoint qinf() { return ProjPoint::infinity(NumberField::rationals()); }

}  // namespace

TEST_CASE("projective point canonical form") {
    auto Q = NumberField::rationals();
    ProjPoint p(Q->from_rational(6), Q->from_rational(4));
    CHECK(p.affine_value() == Q->from_rational(make_rational(3, 2)));
    ProjPoint inf(Q->from_rational(-7), Q->zero());
    CHECK(inf.is_infinity());
    CHECK(inf == qinf());
    CHECK_THROWS_AS(ProjPoint(Q->zero(), Q->zero()), invalid_input);
    // infinity sorts last
    CHECK(qpt(100) < qinf());
    CHECK(qpt(-1) < qpt(0));
}

TEST_CASE("mobius application") {
    auto Q = NumberField::rationals();
    auto id = Mobius::identity(Q);
    CHECK(id.apply(qpt(5)) == qpt(5));

    Mobius swap(Q->zero(), Q->one(), Q->one(), Q->zero());
    CHECK(swap.apply(qinf()) == qpt(0));
    CHECK(swap.apply(qpt(0)) == qinf());

    auto K = NumberField::create(rat_poly({-2, 0, 1}), "Q(sqrt2)");
    auto s = K->gen();
    Mobius tr(K->one(), K->from_rational(-2) * s, K->zero(), K->one());
    CHECK(tr.apply(ProjPoint::affine(s)) == ProjPoint::affine(-s));

    CHECK_THROWS_AS(Mobius(Q->one(), Q->one(), Q->one(), Q->one()), invalid_input);
}

TEST_CASE("mobius composition respects application") {
    auto F = NumberField::create(rat_poly({1, 0, 1}), "Q(i)");
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Mobius g = testsupport::random_mobius(F, rng);
        Mobius h = testsupport::random_mobius(F, rng);
        ProjPoint p = testsupport::random_point(F, rng);
        CHECK(g.compose(h).apply(p) == g.apply(h.apply(p)));
        CHECK(g.compose(g.inverse()).is_identity());
    }
}

TEST_CASE("mobius through triples") {
    auto idm = mobius_through_triples({qpt(0), qpt(1), qinf()}, {qpt(0), qpt(1), qinf()});
    CHECK(idm.is_identity());

    auto inv = mobius_through_triples({qpt(0), qpt(1), qinf()}, {qinf(), qpt(1), qpt(0)});
    CHECK(inv.apply(qpt(0)).is_infinity());
    CHECK(inv.apply(qpt(1)) == qpt(1));
    CHECK(inv.apply(qinf()) == qpt(0));
    CHECK(inv.apply(qpt(2)) == ProjPoint::affine(
                                   NumberField::rationals()->from_rational(make_rational(1, 2))));

    auto sh = mobius_through_triples({qpt(0), qpt(1), qinf()}, {qpt(1), qpt(2), qinf()});
    CHECK(sh.apply(qpt(5)) == qpt(6));

    CHECK_THROWS_AS(mobius_through_triples({qpt(0), qpt(0), qinf()}, {qpt(0), qpt(1), qinf()}),
                    invalid_input);
}

TEST_CASE("matching examples") {
    WeightedPointSet A(2, {{qpt(0), 1}, {qpt(1), 1}, {qinf(), 1}});
    auto ms = match_weighted_sets(A, A);
    CHECK(ms.size() == 6);  // the anharmonic action

    WeightedPointSet B(5, {{qpt(0), 1}, {qpt(1), 2}, {qinf(), 3}});
    auto forced = match_weighted_sets(B, B);
    REQUIRE(forced.size() == 1);
    CHECK(forced[0].is_identity());

    WeightedPointSet C(2, {{qpt(0), 1}, {qpt(2), 1}, {qinf(), 1}});
    auto mc = match_weighted_sets(A, C);
    auto Q = NumberField::rationals();
    Mobius dbl(Q->from_rational(2), Q->zero(), Q->zero(), Q->one());
    CHECK(std::find(mc.begin(), mc.end(), dbl) != mc.end());
    for (const auto& g : mc) CHECK(transport_set(g, A, 1) == C);

    // contract violations are rejections, not legal empty lists
    WeightedPointSet D(5, {{qpt(0), 1}, {qpt(1), 1}, {qinf(), 3}});
    CHECK_THROWS_AS(match_weighted_sets(B, D), invalid_input);
    WeightedPointSet E(5, {{qpt(0), 1}, {qpt(1), 2}, {qpt(3), 3}, {qinf(), 4}});
    CHECK_THROWS_AS(match_weighted_sets(B, E), invalid_input);
}

TEST_CASE("matching equals the all-triples oracle") {
    std::vector<FieldPtr> fields = {
        NumberField::rationals(),
        NumberField::create(rat_poly({-2, 0, 1}), "Q(sqrt2)"),
        NumberField::create(rat_poly({1, 0, 1}), "Q(i)"),
    };
    Rng rng(31);
    std::uniform_int_distribution<int> md(3, 6);
    int done = 0;
    while (done < 24) {
        const auto& F = fields[done % fields.size()];
        int m = md(rng);
        WeightedPointSet A = testsupport::random_weighted_set(F, rng, 5, m);
        // half the time compare against a moved copy, otherwise another set
        WeightedPointSet B = (done % 2 == 0)
                                 ? transport_set(testsupport::random_mobius(F, rng), A, 1)
                                 : testsupport::random_weighted_set(F, rng, 5, m);
        if (A.weight_multiset() != B.weight_multiset()) continue;
        ++done;
        auto fast = match_weighted_sets(A, B);
        auto slow = testsupport::all_triples_matches(A, B);
        CHECK(fast == slow);
        for (const auto& g : fast) CHECK(transport_set(g, A, 1) == B);
    }
}

TEST_CASE("twisted action on quadratics") {
    auto Q = NumberField::rationals();
    BinaryQuadratic x2(Q->one(), Q->zero(), Q->zero());

    auto idm = Mobius::identity(Q);
    CHECK(quadratic_twisted_action(0, idm, x2) == x2);

    Mobius swap(Q->zero(), Q->one(), Q->one(), Q->zero());
    BinaryQuadratic out = quadratic_twisted_action(0, swap, x2);
    CHECK(out.q0.is_zero());
    CHECK(out.q1.is_zero());
    CHECK(out.q2 == Q->from_rational(-1));

    // rescaled lifts act identically
    Mobius swap2(Q->zero(), Q->from_rational(2), Q->from_rational(2), Q->zero());
    CHECK(quadratic_twisted_action(0, swap2, x2) == out);
}

TEST_CASE("twisted action is a semilinear group action") {
    // coboundary cocycle families, fed through their inverses
    std::vector<FieldPtr> fields = {
        NumberField::create(rat_poly({1, 0, 1}), "Q(i)"),
        NumberField::create(rat_poly({1, 1, 1, 1, 1}), "Q(zeta5)"),
    };
    Rng rng(17);
    for (const auto& F : fields) {
        const GaloisGroup& G = F->galois_group();
        Mobius h = testsupport::random_mobius(F, rng);
        std::vector<Mobius> g;
        for (int s = 0; s < G.order(); ++s)
            g.push_back(conjugate_mobius(s, h).compose(h.inverse()));
        // action U_s(Q) = T(s, g_s^{-1}, Q) must compose along the group law
        auto U = [&](int s, const BinaryQuadratic& q) {
            return quadratic_twisted_action(s, g[s].inverse(), q);
        };
        for (int trial = 0; trial < 10; ++trial) {
            BinaryQuadratic q(testsupport::random_element(F, rng),
                              testsupport::random_element(F, rng),
                              testsupport::random_element(F, rng));
            for (int s = 0; s < G.order(); ++s)
                for (int u = 0; u < G.order(); ++u)
                    CHECK(U(G.mul(s, u), q) == U(s, U(u, q)));
        }
    }
}
