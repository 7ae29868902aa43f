#include <catch2/catch_amalgamated.hpp>

#include "pgonal/normeq.hpp"
#include "pgonal/numberfield.hpp"
#include "support/corpus.hpp"

using namespace pgonal;
using pgonal::testsupport::Rng;

TEST_CASE("rational text form") {
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(parse_rational("-7/3") == make_rational(-7, 3));
    CHECK(parse_rational("42") == Rational(42));
    CHECK_THROWS_AS(parse_rational("1/0"), invalid_input);
    CHECK_THROWS_AS(parse_rational("1/-2"), invalid_input);
    CHECK_THROWS_AS(parse_rational("a"), invalid_input);
    CHECK_THROWS_AS(parse_rational("1.5"), invalid_input);
    // canonical invariants: gcd 1, positive denominator
    Rational r = make_rational(-10, -15);
    CHECK(num(r) == 2);
    CHECK(den(r) == 3);
}

TEST_CASE("integer arithmetic helpers") {
    auto f = factorize(Int(720));
    CHECK(f[Int(2)] == 4);
    CHECK(f[Int(3)] == 2);
    CHECK(f[Int(5)] == 1);
    CHECK(squarefree_split(Int(720)).squarefree == 5);
    CHECK(squarefree_split(Int(720)).square == 12);
    CHECK(squarefree_split(Int(-8)).squarefree == -2);
    CHECK(rational_squarefree_part(make_rational(-4, 9)) == -1);
    CHECK(rational_squarefree_part(make_rational(2, 3)) == 6);
    CHECK(is_squarefree(Int(30)));
    CHECK(!is_squarefree(Int(12)));
    CHECK(legendre_symbol(2, 7) == 1);
    CHECK(legendre_symbol(3, 7) == -1);
    CHECK(hilbert_symbol(-1, -1, 2) == -1);
    CHECK(hilbert_symbol(-1, -1, 3) == 1);
    CHECK(hilbert_symbol(2, 7, 7) == 1);
    CHECK(hilbert_symbol_real(-1, -1) == -1);
    CHECK(hilbert_symbol_real(-1, 1) == 1);
    CHECK(is_perfect_square(Int(144)));
    CHECK(!is_perfect_square(Int(-4)));
}

TEST_CASE("polynomial arithmetic") {
    RatPoly f = rat_poly({-1, 0, 1});  // x^2 - 1
    RatPoly g = rat_poly({1, 1});      // x + 1
    auto [q, r] = divmod(f, g);
    CHECK(r.is_zero());
    CHECK(q == rat_poly({-1, 1}));
    CHECK(poly_gcd(f, g) == g.monic());
    CHECK(f.eval(Rational(3)) == 8);
    CHECK(rat_poly({1, 2, 3}).derivative() == rat_poly({2, 6}));
    CHECK((f * g).degree() == 3);
}

TEST_CASE("linear solve") {
    // identity system
    Mat<Rational> id = {{1, 0}, {0, 1}};
    auto s = linear_solve(id, {Rational(3), Rational(-4)}, Rational(1));
    REQUIRE(s.consistent);
    CHECK(s.particular == std::vector<Rational>{3, -4});
    CHECK(s.kernel.empty());

    // 1x2 system x + y = 0: kernel basis (1, -1) up to scale
    Mat<Rational> m = {{1, 1}};
    auto k = kernel_basis(m, Rational(1));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] + k[0][1] == 0);
    CHECK(k[0] != std::vector<Rational>(2, Rational(0)));

    // random invertible 3x3 verified by substitution
    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        Mat<Rational> a(3, std::vector<Rational>(3));
        std::vector<Rational> v(3);
        for (auto& row : a)
            for (auto& x : row) x = testsupport::random_rational(rng, 6, 3);
        for (auto& x : v) x = testsupport::random_rational(rng, 6, 3);
        if (determinant(a, Rational(1)) == 0) continue;
        auto sol = linear_solve(a, v, Rational(1));
        REQUIRE(sol.consistent);
        CHECK(mat_apply(a, sol.particular, Rational(1)) == v);
        CHECK(sol.kernel.empty());
    }

    // inconsistent system: empty solution set, no crash
    Mat<Rational> bad = {{1, 1}, {1, 1}};
    auto nb = linear_solve(bad, {Rational(0), Rational(1)}, Rational(1));
    CHECK(!nb.consistent);

    // kernel vectors annihilate the matrix
    Mat<Rational> wide = {{1, 2, 3}, {2, 4, 6}};
    for (const auto& kv : kernel_basis(wide, Rational(1)))
        CHECK(mat_apply(wide, kv, Rational(1)) == std::vector<Rational>(2, Rational(0)));
}

TEST_CASE("field construction") {
    auto Q = NumberField::rationals();
    CHECK(Q->degree() == 1);
    CHECK(Q->automorphism_count() == 1);
    CHECK(Q->is_galois());

    auto K = NumberField::create(rat_poly({-2, 0, 1}), "Q(sqrt2)");
    CHECK(K->automorphism_count() == 2);
    CHECK(K->is_galois());
    // the two automorphism images are exactly the roots of x^2 - 2 in K
    for (int i = 0; i < 2; ++i)
        CHECK(eval_rat_poly(K->minpoly(), K->automorphism_image(i)).is_zero());
    CHECK(K->automorphism_image(1) == -K->gen());

    auto C = NumberField::create(rat_poly({-2, 0, 0, 1}), "Q(cbrt2)");
    CHECK(C->automorphism_count() == 1);
    CHECK(!C->is_galois());

    CHECK_THROWS_AS(NumberField::create(rat_poly({-1, 0, 1}), "bad"), invalid_input);
    CHECK_THROWS_AS(NumberField::create(rat_poly({4, 0, 0, 0, 1}), "bad"), invalid_input);
    CHECK_THROWS_AS(NumberField::create(rat_poly({0, 0, 1}), "bad"), invalid_input);
    try {
        NumberField::create(rat_poly({-1, 0, 1}), "bad");
    } catch (const invalid_input& e) {
        CHECK(std::string(e.what()).find("reducible") != std::string::npos);
    }
}

TEST_CASE("element arithmetic in Q(sqrt2)") {
    auto K = NumberField::create(rat_poly({-2, 0, 1}), "Q(sqrt2)");
    auto t = K->gen();
    CHECK((K->one() + t) * (K->one() - t) == K->from_rational(-1));
    CHECK((K->one() + t).inverse() == -K->one() + t);
    auto a = K->element({Rational(3), make_rational(1, 2)});
    CHECK(a + K->zero() == a);
    CHECK(a / a == K->one());
    CHECK_THROWS_AS(a / K->zero(), invalid_input);
    auto Qi = NumberField::create(rat_poly({1, 0, 1}), "Q(i)");
    CHECK_THROWS_AS(a + Qi->gen(), invalid_input);
}

TEST_CASE("field axioms on random triples") {
    std::vector<FieldPtr> fields = {
        NumberField::rationals(),
        NumberField::create(rat_poly({-2, 0, 1}), "Q(sqrt2)"),
        NumberField::create(rat_poly({1, 0, 1}), "Q(i)"),
        NumberField::create(rat_poly({1, 1, 1, 1, 1}), "Q(zeta5)"),
        NumberField::create(rat_poly({1, -3, 0, 1}), "cyclic cubic"),
    };
    Rng rng(99);
    for (const auto& F : fields) {
        for (int trial = 0; trial < 100; ++trial) {
            auto a = testsupport::random_element(F, rng, 3);
            auto b = testsupport::random_element(F, rng, 3);
            auto c = testsupport::random_element(F, rng, 3);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == F->one());
        }
    }
}

TEST_CASE("automorphisms") {
    auto K = NumberField::create(rat_poly({-2, 0, 1}), "Q(sqrt2)");
    auto a = K->element({Rational(3), Rational(5)});
    CHECK(apply_automorphism(0, a) == a);
    CHECK(apply_automorphism(1, a) == K->element({Rational(3), Rational(-5)}));
    CHECK(apply_automorphism(1, apply_automorphism(1, a)) == a);
    // homomorphism laws
    Rng rng(5);
    auto x = testsupport::random_element(K, rng);
    auto y = testsupport::random_element(K, rng);
    CHECK(apply_automorphism(1, x * y) ==
          apply_automorphism(1, x) * apply_automorphism(1, y));
    CHECK(apply_automorphism(1, x + y) ==
          apply_automorphism(1, x) + apply_automorphism(1, y));
}

TEST_CASE("galois groups close under composition") {
    std::vector<FieldPtr> fields = {
        NumberField::create(rat_poly({1, 0, 1}), "Q(i)"),
        NumberField::create(rat_poly({1, 1, 1, 1, 1}), "Q(zeta5)"),
        NumberField::create(rat_poly({1, -3, 0, 1}), "cyclic cubic"),
        NumberField::create(rat_poly({1, 0, 52, 0, 1}), "quartic"),
        NumberField::create(rat_poly({1, 1, 1, 1, 1, 1, 1}), "Q(zeta7)"),
    };
    for (const auto& F : fields) {
        REQUIRE(F->is_galois());
        const GaloisGroup& G = F->galois_group();
        CHECK(G.order() == F->degree());
        for (int i = 0; i < G.order(); ++i) {
            CHECK(G.mul(0, i) == i);
            CHECK(G.mul(i, G.inverse(i)) == 0);
            int o = G.element_order(i);
            CHECK(G.order() % o == 0);
        }
        // distinct images, all roots of the minimal polynomial
        std::set<std::vector<Rational>> images;
        for (int i = 0; i < G.order(); ++i) {
            auto im = F->automorphism_image(i);
            CHECK(eval_rat_poly(F->minpoly(), im).is_zero());
            images.insert(im.coords());
        }
        CHECK(static_cast<int>(images.size()) == F->degree());
    }
}

TEST_CASE("zeta5 automorphisms are the power maps") {
    auto F = NumberField::create(rat_poly({1, 1, 1, 1, 1}), "Q(zeta5)");
    auto z = F->gen();
    std::set<std::vector<Rational>> images;
    for (int i = 0; i < 4; ++i) images.insert(F->automorphism_image(i).coords());
    std::set<std::vector<Rational>> powers;
    FieldElement pw = z;
    for (int k = 1; k <= 4; ++k) {
        powers.insert(pw.coords());
        pw = pw * z;
    }
    CHECK(images == powers);
}

TEST_CASE("norm equation examples") {
    auto r1 = norm_equation(Rational(2), Rational(1));
    REQUIRE(r1.solvable());
    CHECK(*r1.solution == std::pair<Rational, Rational>{1, 0});

    auto r2 = norm_equation(Rational(2), Rational(7));
    REQUIRE(r2.solvable());
    CHECK(r2.solution->first * r2.solution->first -
              Rational(2) * r2.solution->second * r2.solution->second ==
          7);

    auto r3 = norm_equation(Rational(-1), Rational(-1));
    CHECK(!r3.solvable());
    CHECK(*r3.obstruction == "real");

    CHECK_THROWS_AS(norm_equation(Rational(4), Rational(3)), invalid_input);
    CHECK_THROWS_AS(norm_equation(make_rational(9, 4), Rational(3)), invalid_input);
}

TEST_CASE("norm equation agrees with brute force") {
    Rng rng(2024);
    std::uniform_int_distribution<int> vd(-20, 20);
    int checked = 0;
    while (checked < 25) {
        int d = vd(rng), c = vd(rng);
        if (d == 0 || c == 0 || is_square(Rational(d))) continue;
        ++checked;
        auto res = norm_equation(Rational(d), Rational(c));
        auto oracle = testsupport::brute_norm(d, c, 50);
        if (res.solvable()) {
            auto [x, y] = *res.solution;
            CHECK(x * x - Rational(d) * y * y == c);
        } else {
            CHECK(!oracle.has_value());
            CHECK(res.obstruction.has_value());
        }
        if (oracle.has_value()) CHECK(res.solvable());
    }
}
