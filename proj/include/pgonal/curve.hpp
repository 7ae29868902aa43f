#ifndef PGONAL_CURVE_HPP
#define PGONAL_CURVE_HPP

#include <variant>

#include "weighted.hpp"

namespace pgonal {

inline bool is_prime_int(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Cyclic p-gonal curve y^p = prod (x - a_j)^(n_j), carried as its branch
// divisor.  A branched point at infinity is stored explicitly, so the weight
// congruence always holds on the stored divisor; serialization to the affine
// polynomial drops the infinity factor.
class PgonalCurve {
  public:
    static PgonalCurve validate(int p, const WeightedPointSet& branch) {
        require(is_prime_int(p), "p-not-prime: p = " + std::to_string(p));
        require(branch.prime() == p, "prime-mismatch: branch set built for a different p");
        long long sum = 0;
        for (const auto& [pt, w] : branch.entries()) {
            require(w >= 1 && w <= p - 1,
                    "weight-out-of-range: weight " + std::to_string(w));
            if (p == 2)
                require(w == 1, "p2-weight: hyperelliptic weights must all be 1");
            sum += w;
        }
        require(sum % p == 0, "congruence: weights sum to " + std::to_string(sum) +
                                  " which is not 0 mod " + std::to_string(p));
        int m = static_cast<int>(branch.size());
        require(m >= 3, "too-few-points: m = " + std::to_string(m));
        long long gtwice = static_cast<long long>(m - 2) * (p - 1);
        require(gtwice % 2 == 0, "genus-not-integral");
        require(gtwice / 2 >= 2, "genus-too-small: genus = " + std::to_string(gtwice / 2));
        return PgonalCurve(p, branch);
    }

    int p() const { return p_; }
    const WeightedPointSet& branch() const { return branch_; }
    const FieldPtr& field() const { return branch_.field(); }
    int num_branch_points() const { return static_cast<int>(branch_.size()); }

    int genus() const { return (num_branch_points() - 2) * (p_ - 1) / 2; }

    // prod over finite branch points of (x - a_j)^(n_j)
    Polynomial<FieldElement> affine_polynomial() const {
        Polynomial<FieldElement> f = Polynomial<FieldElement>::constant(field()->one());
        for (const auto& [pt, w] : branch_.entries()) {
            if (pt.is_infinity()) continue;
            auto lin = linear_from_root(pt.affine_value());
            for (int i = 0; i < w; ++i) f = f * lin;
        }
        return f;
    }

    bool operator==(const PgonalCurve& o) const {
        return p_ == o.p_ && branch_ == o.branch_;
    }

  private:
    PgonalCurve(int p, WeightedPointSet branch) : p_(p), branch_(std::move(branch)) {}
    int p_;
    WeightedPointSet branch_;
};

inline PgonalCurve conjugate_curve(const PgonalCurve& c, int sigma) {
    return PgonalCurve::validate(c.p(), conjugate_set(sigma, c.branch()));
}

// All (t, g) with g carrying the branch set of c1 onto that of c2, weights
// transported by the single unit t.  Empty when no unit matches; sorted by
// t, then by the canonical matrix order.
inline std::vector<std::pair<int, Mobius>> isomorphic_as_pgonal(const PgonalCurve& c1,
                                                                const PgonalCurve& c2) {
    require(c1.p() == c2.p(), "isomorphism test requires equal p");
    require(c1.field()->same_presentation(*c2.field()),
            "isomorphism test requires curves over the same field presentation");
    std::vector<std::pair<int, Mobius>> out;
    for (int t = 1; t < c1.p(); ++t)
        for (const Mobius& g : match_with_unit(c1.branch(), c2.branch(), t))
            out.emplace_back(t, g);
    return out;
}

// ---------------------------------------------------------------------------
// power character

// The character sigma -> t with phi^sigma = phi^t, realized on branch data:
// t is valid for sigma when some Moebius carries the branch set with weights
// multiplied by t onto the conjugated branch set.
struct PowerCharacter {
    FieldPtr field;
    std::vector<int> values;                // smallest valid t per automorphism
    std::vector<std::vector<int>> valid;    // all valid units per automorphism
    std::vector<int> kernel;                // sigma with t = 1 valid
    std::vector<int> unit_stabilizer;       // valid units of the identity
    int image_order = 1;

    bool trivial() const { return image_order == 1; }
    int k1_degree() const { return image_order; }
};

// Relative field-of-moduli failure: some automorphism admits no match at all.
struct FomFailure {
    int sigma;
    std::string detail;
};

inline std::variant<PowerCharacter, FomFailure> power_character(const PgonalCurve& c) {
    const FieldPtr& K = c.field();
    require(K->is_galois(), "power character needs a Galois field over Q");
    const GaloisGroup& G = K->galois_group();
    PowerCharacter chi;
    chi.field = K;
    int n = G.order();
    chi.values.assign(n, 0);
    chi.valid.assign(n, {});
    for (int s = 0; s < n; ++s) {
        WeightedPointSet conj = conjugate_set(s, c.branch());
        for (int t = 1; t < c.p(); ++t)
            if (!match_with_unit(c.branch(), conj, t).empty()) chi.valid[s].push_back(t);
        if (chi.valid[s].empty())
            return FomFailure{s, "no unit admits a Moebius match for automorphism " +
                                     std::to_string(s)};
        chi.values[s] = chi.valid[s].front();
    }
    chi.unit_stabilizer = chi.valid[0];
    for (int s = 0; s < n; ++s) {
        bool has_one = false;
        for (int t : chi.valid[s]) has_one |= (t == 1);
        if (has_one) chi.kernel.push_back(s);
    }
    ensure(!chi.kernel.empty() && chi.kernel[0] == 0, "identity not in the character kernel");
    ensure(n % static_cast<int>(chi.kernel.size()) == 0, "kernel size does not divide group order");
    chi.image_order = n / static_cast<int>(chi.kernel.size());
    // consistency at the level of units modulo the stabilizer subgroup
    for (int s = 0; s < n; ++s)
        for (int u = 0; u < n; ++u) {
            int prod = G.mul(s, u);
            long long tv = static_cast<long long>(chi.values[s]) * chi.values[u] % c.p();
            bool ok = false;
            for (int t : chi.valid[prod]) ok |= (t == static_cast<int>(tv));
            ensure(ok, "character values are not multiplicative modulo the stabilizer");
        }
    return chi;
}

// ---------------------------------------------------------------------------
// uniqueness of the p-gonal group

struct UniquenessVerdict {
    bool unique;
    std::string reason;  // castelnuovo-severi | wootton-generic | exceptional-...
};

inline UniquenessVerdict uniqueness_classify(int p, int m) {
    require(is_prime_int(p), "p-not-prime: p = " + std::to_string(p));
    require(m >= 3, "too-few-points: m = " + std::to_string(m));
    long long gtwice = static_cast<long long>(m - 2) * (p - 1);
    require(gtwice % 2 == 0, "genus-not-integral: (m,p) = (" + std::to_string(m) + "," +
                                 std::to_string(p) + ")");
    require(gtwice / 2 >= 2, "genus-too-small: genus = " + std::to_string(gtwice / 2));
    if (2 * p < m) return {true, "castelnuovo-severi"};
    if (m == 3 && p == 7) return {false, "exceptional-(3,7)"};
    if (m == 4 && p == 3) return {false, "exceptional-(4,3)"};
    if (m == 4 && p == 5) return {false, "exceptional-(4,5)"};
    if (m == 5 && p == 3) return {false, "exceptional-(5,3)"};
    if (m == p && p >= 5) return {false, "exceptional-(p,p)"};
    if (m == 2 * p && p >= 3) return {false, "exceptional-(2p,p)"};
    return {true, "wootton-generic"};
}

}  // namespace pgonal

#endif
