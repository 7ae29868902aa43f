#ifndef PGONAL_COCYCLE_HPP
#define PGONAL_COCYCLE_HPP

#include "curve.hpp"

namespace pgonal {

// Family sigma -> g_sigma of Moebius maps over K with g_sigma(B) = sigma(B)
// and the cocycle relation g_{sigma tau} = (g_tau)^sigma . g_sigma.
struct GaloisCocycle {
    FieldPtr field;
    std::vector<Mobius> maps;  // indexed by automorphism index, maps[0] = id
    bool multiple_selections = false;
};

inline bool cocycle_relation_holds(const GaloisCocycle& c) {
    const GaloisGroup& G = c.field->galois_group();
    int n = G.order();
    for (int s = 0; s < n; ++s)
        for (int u = 0; u < n; ++u) {
            Mobius rhs = conjugate_mobius(s, c.maps[u]).compose(c.maps[s]);
            if (!(c.maps[G.mul(s, u)] == rhs)) return false;
        }
    return true;
}

// Matches exist for every automorphism but no globally consistent selection.
struct CocycleObstruction {
    std::string detail;
};

namespace detail {

struct CocycleSearch {
    const GaloisGroup* G;
    int n;
    std::vector<std::vector<Mobius>> candidates;
    std::vector<int> chosen;
    std::vector<Mobius> first;
    int solutions = 0;

    bool relations_ok(int upto) const {
        // check every relation whose three participants are already assigned
        for (int s = 0; s <= upto; ++s)
            for (int u = 0; u <= upto; ++u) {
                int prod = G->mul(s, u);
                if (prod > upto) continue;
                Mobius rhs = conjugate_mobius(s, candidates[u][chosen[u]])
                                 .compose(candidates[s][chosen[s]]);
                if (!(candidates[prod][chosen[prod]] == rhs)) return false;
            }
        return true;
    }

    void run(int k) {
        if (solutions >= 2) return;
        if (k == n) {
            ++solutions;
            if (solutions == 1) {
                first.clear();
                for (int i = 0; i < n; ++i) first.push_back(candidates[i][chosen[i]]);
            }
            return;
        }
        for (std::size_t c = 0; c < candidates[k].size(); ++c) {
            chosen[k] = static_cast<int>(c);
            if (relations_ok(k)) run(k + 1);
            if (solutions >= 2) return;
        }
    }
};

}  // namespace detail

// Builds the cocycle for a curve whose power character is trivial: selects
// g_sigma among the weight-preserving matches so the relation holds across
// the whole group, candidates tried in canonical order.
inline std::variant<GaloisCocycle, FomFailure, CocycleObstruction> compute_cocycle(
    const PgonalCurve& curve) {
    const FieldPtr& K = curve.field();
    require(K->is_galois(), "cocycle needs a Galois field over Q");
    const GaloisGroup& G = K->galois_group();
    int n = G.order();

    detail::CocycleSearch search;
    search.G = &G;
    search.n = n;
    search.candidates.resize(n);
    for (int s = 0; s < n; ++s) {
        WeightedPointSet conj = conjugate_set(s, curve.branch());
        search.candidates[s] = match_with_unit(curve.branch(), conj, 1);
        if (search.candidates[s].empty())
            return FomFailure{s, "branch set admits no weight-preserving match against its "
                                 "conjugate under automorphism " +
                                     std::to_string(s)};
    }
    // the identity automorphism must map to the identity
    search.candidates[0] = {Mobius::identity(K)};
    search.chosen.assign(n, 0);
    search.run(0);
    if (search.solutions == 0)
        return CocycleObstruction{"per-automorphism matches exist but no selection satisfies "
                                  "the cocycle relation"};
    GaloisCocycle c{K, search.first, search.solutions >= 2};
    ensure(cocycle_relation_holds(c), "selected cocycle fails the relation");
    ensure(c.maps[0].is_identity(), "cocycle does not send the identity to the identity");
    return c;
}

// For an order-2 automorphism sigma, any lift A of g_sigma has A * sigma(A)
// scalar; that scalar, well defined modulo norms from K, detects whether the
// descended conic splits.
inline Rational cocycle_lift_scalar(const GaloisCocycle& c, int sigma) {
    const GaloisGroup& G = c.field->galois_group();
    require(G.mul(sigma, sigma) == 0 && sigma != 0, "lift scalar needs an order-2 automorphism");
    const Mobius& A = c.maps[sigma];
    Mobius As = conjugate_mobius(sigma, A);
    // product without canonical rescaling
    FieldElement m00 = A.a() * As.a() + A.b() * As.c();
    FieldElement m01 = A.a() * As.b() + A.b() * As.d();
    FieldElement m10 = A.c() * As.a() + A.d() * As.c();
    FieldElement m11 = A.c() * As.b() + A.d() * As.d();
    ensure(m01.is_zero() && m10.is_zero() && m00 == m11, "A * sigma(A) is not scalar");
    ensure(m00.is_rational(), "lift scalar is not rational");
    return m00.rational_value();
}

}  // namespace pgonal

#endif
