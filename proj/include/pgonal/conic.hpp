#ifndef PGONAL_CONIC_HPP
#define PGONAL_CONIC_HPP

#include "cocycle.hpp"
#include "quadratic.hpp"
#include "ternary.hpp"

namespace pgonal {

// Scale a rational vector to a primitive integer vector with positive first
// nonzero entry.
inline std::vector<Rational> primitive_scale(std::vector<Rational> v) {
    Int l = 1, g = 0;
    for (const auto& x : v) l = lcm(l, den(x));
    for (auto& x : v) x *= Rational(l);
    for (const auto& x : v) g = gcd(g, num(x));
    if (g == 0) return v;
    Rational inv = Rational(1) / Rational(g);
    for (auto& x : v) x *= inv;
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

// Explicit Weil descent datum for a cocycle over K: a Q-basis of the fixed
// space of the twisted action on binary quadratics, the conic they satisfy,
// and its Legendre normal form with the transform back to conic coordinates.
struct DescendedConic {
    std::array<BinaryQuadratic, 3> quadrics;  // over K, Q-basis of the fixed space
    Mat<Rational> gram;                       // symmetric 3x3 over Q, det != 0
    std::array<Int, 3> diag;                  // Legendre normal form coefficients
    Mat<Rational> point_transform;            // normal-form solution -> conic coords
};

namespace detail {

inline std::vector<Rational> flatten_quadratic(const BinaryQuadratic& Q) {
    std::vector<Rational> v = Q.q0.coords();
    const auto& c1 = Q.q1.coords();
    const auto& c2 = Q.q2.coords();
    v.insert(v.end(), c1.begin(), c1.end());
    v.insert(v.end(), c2.begin(), c2.end());
    return v;
}

inline BinaryQuadratic unflatten_quadratic(const FieldPtr& K, const std::vector<Rational>& v) {
    int n = K->degree();
    auto part = [&](int k) {
        return K->element(std::vector<Rational>(v.begin() + k * n, v.begin() + (k + 1) * n));
    };
    return BinaryQuadratic(part(0), part(1), part(2));
}

// Congruence diagonalization P^T S P = diag; returns {diag entries, P}.
inline std::pair<std::array<Rational, 3>, Mat<Rational>> diagonalize_symmetric(
    Mat<Rational> S) {
    Mat<Rational> P = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto add_col = [&](int dst, int src, const Rational& f) {
        // column operation v_dst += f v_src applied congruently
        for (int r = 0; r < 3; ++r) S[r][dst] += f * S[r][src];
        for (int c = 0; c < 3; ++c) S[dst][c] += f * S[src][c];
        for (int r = 0; r < 3; ++r) P[r][dst] += f * P[r][src];
    };
    auto swap_cols = [&](int i, int j) {
        for (int r = 0; r < 3; ++r) std::swap(S[r][i], S[r][j]);
        for (int c = 0; c < 3; ++c) std::swap(S[i][c], S[j][c]);
        for (int r = 0; r < 3; ++r) std::swap(P[r][i], P[r][j]);
    };
    for (int k = 0; k < 3; ++k) {
        if (S[k][k] == 0) {
            int nz = -1;
            for (int i = k + 1; i < 3; ++i)
                if (S[i][i] != 0) nz = i;
            if (nz >= 0) {
                swap_cols(k, nz);
            } else {
                // all remaining diagonal entries vanish; bring one in
                int a = -1, b = -1;
                for (int i = k; i < 3 && a < 0; ++i)
                    for (int j = i + 1; j < 3 && a < 0; ++j)
                        if (S[i][j] != 0) {
                            a = i;
                            b = j;
                        }
                ensure(a >= 0, "singular form during diagonalization");
                add_col(a, b, 1);
                if (a != k) swap_cols(k, a);
            }
        }
        for (int i = k + 1; i < 3; ++i) {
            if (S[i][k] == 0) continue;
            add_col(i, k, -S[i][k] / S[k][k]);
        }
    }
    return {{S[0][0], S[1][1], S[2][2]}, P};
}

}  // namespace detail

// The fixed space of the twisted semilinear action, the quadratic relation
// its basis satisfies, and the diagonalized conic.  The twisted action is fed
// the inverse maps: for the stored relation g_{st} = (g_t)^s g_s, the family
// g_sigma^{-1} is exactly the one the action composes along.
inline DescendedConic descend_to_conic(const GaloisCocycle& cocycle) {
    const FieldPtr& K = cocycle.field;
    const GaloisGroup& G = K->galois_group();
    int n = K->degree();
    int N = 3 * n;

    // fixed space over Q
    Mat<Rational> sys;
    for (int s = 1; s < G.order(); ++s) {
        Mobius lift = cocycle.maps[s].inverse();
        // columns: basis quadratic e_r * theta^i
        Mat<Rational> Ms(N, std::vector<Rational>(N, Rational(0)));
        for (int col = 0; col < N; ++col) {
            std::vector<Rational> flat(N, Rational(0));
            flat[col] = 1;
            BinaryQuadratic base = detail::unflatten_quadratic(K, flat);
            auto img = detail::flatten_quadratic(quadratic_twisted_action(s, lift, base));
            for (int row = 0; row < N; ++row) Ms[row][col] = img[row];
        }
        for (int row = 0; row < N; ++row) {
            Ms[row][row] -= 1;
            sys.push_back(Ms[row]);
        }
    }
    std::vector<std::vector<Rational>> basis;
    if (sys.empty()) {
        // trivial group: everything is fixed
        for (int col = 0; col < N; ++col) {
            std::vector<Rational> v(N, Rational(0));
            v[col] = 1;
            basis.push_back(v);
        }
    } else {
        basis = kernel_basis(std::move(sys), Rational(1));
    }
    ensure(basis.size() == 3,
           "fixed space of the twisted action has Q-dimension " + std::to_string(basis.size()) +
               ", expected 3");
    std::array<BinaryQuadratic, 3> Q = {
        detail::unflatten_quadratic(K, primitive_scale(basis[0])),
        detail::unflatten_quadratic(K, primitive_scale(basis[1])),
        detail::unflatten_quadratic(K, primitive_scale(basis[2]))};

    // exact rechecks: fixedness and K-linear independence
    for (int s = 1; s < G.order(); ++s) {
        Mobius lift = cocycle.maps[s].inverse();
        for (const auto& q : Q)
            ensure(quadratic_twisted_action(s, lift, q) == q, "quadric is not fixed");
    }
    {
        Mat<FieldElement> dep = {{Q[0].q0, Q[0].q1, Q[0].q2},
                                 {Q[1].q0, Q[1].q1, Q[1].q2},
                                 {Q[2].q0, Q[2].q1, Q[2].q2}};
        ensure(!determinant(dep, K->one()).is_zero(),
               "fixed quadrics are K-linearly dependent");
    }

    // unique quadratic relation: unknowns s00 s01 s02 s11 s12 s22
    static const int pair_idx[6][2] = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
    Mat<Rational> rel(5 * n, std::vector<Rational>(6, Rational(0)));
    for (int u = 0; u < 6; ++u) {
        auto prod = quadratic_product(Q[pair_idx[u][0]], Q[pair_idx[u][1]]);
        for (int slot = 0; slot < 5; ++slot) {
            const auto& coords = prod[slot].coords();
            for (int i = 0; i < n; ++i) rel[slot * n + i][u] = coords[i];
        }
    }
    auto relker = kernel_basis(std::move(rel), Rational(1));
    ensure(relker.size() == 1, "quadratic relation space has dimension " +
                                   std::to_string(relker.size()) + ", expected 1");
    auto s = primitive_scale(relker[0]);
    Mat<Rational> gram = {{s[0], s[1] / 2, s[2] / 2},
                          {s[1] / 2, s[3], s[4] / 2},
                          {s[2] / 2, s[4] / 2, s[5]}};
    ensure(determinant(gram, Rational(1)) != 0, "conic gram matrix is singular");

    auto [diag_entries, P] = detail::diagonalize_symmetric(gram);
    for (const auto& d : diag_entries) ensure(d != 0, "diagonalization produced a zero entry");
    LegendreForm nf = legendre_normalize({diag_entries[0], diag_entries[1], diag_entries[2]});
    // normal-form solution w -> conic coords z = P diag(back) w
    Mat<Rational> T = P;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) T[r][c] *= nf.back[c];
    return DescendedConic{Q, gram, nf.coeffs, T};
}

// Value of the gram form at a vector.
template <class T>
T gram_value(const Mat<Rational>& S, const std::vector<T>& z, const T& one) {
    T acc = zero_like(one);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) acc = acc + embed_rational(one, S[i][j]) * z[i] * z[j];
    return acc;
}

// Rational point on the conic, or a local certificate together with a point
// over a quadratic extension cut out by a coordinate line.
struct ConicPointResult {
    std::optional<std::array<Int, 3>> rational_point;      // normal-form coords
    std::optional<std::string> obstruction;                // local place
    std::optional<Int> disc;                               // squarefree e of Q(sqrt e)
    // quadratic point coordinates r + s sqrt(e), normal-form coords
    std::optional<std::array<std::pair<Rational, Rational>, 3>> quadratic_point;
    int line_used = -1;  // which coordinate was set to 0 for the quadratic point
};

inline ConicPointResult conic_point(const std::array<Int, 3>& a, const Int& height_cap = -1) {
    ConicPointResult out;
    ConicDecision dec = decide_conic(a, height_cap);
    if (dec.point) {
        out.rational_point = dec.point;
        return out;
    }
    out.obstruction = dec.obstruction;
    // intersect with coordinate lines w_k = 0, preferring the last coordinate;
    // a Q-reducible intersection (square ratio) falls through to the next line
    for (int k = 2; k >= 0; --k) {
        int i = (k + 1) % 3, j = (k + 2) % 3;
        if (i > j) std::swap(i, j);
        // a_i w_i^2 + a_j w_j^2 = 0 on the line w_k = 0: t^2 = -a_i/a_j
        Rational ratio = -Rational(a[i]) / Rational(a[j]);
        if (is_square(ratio)) continue;
        auto split = squarefree_split(num(ratio) * den(ratio));
        Int e = split.squarefree;
        // t = s sqrt(e) with s = square part / |a_j|
        Rational scoef = Rational(split.square) / Rational(abs(a[j]));
        std::array<std::pair<Rational, Rational>, 3> pt;
        pt[i] = {Rational(1), Rational(0)};
        pt[j] = {Rational(0), scoef};
        pt[k] = {Rational(0), Rational(0)};
        // exact check: a_i + a_j (s sqrt e)^2 = a_i + a_j s^2 e = 0
        ensure(Rational(a[i]) + Rational(a[j]) * scoef * scoef * Rational(e) == 0,
               "quadratic point check failed");
        out.disc = e;
        out.quadratic_point = pt;
        out.line_used = k;
        return out;
    }
    throw invariant_violation("all coordinate lines met the conic rationally");
}

}  // namespace pgonal

#endif
