#ifndef PGONAL_NUMBERFIELD_HPP
#define PGONAL_NUMBERFIELD_HPP

#include <algorithm>
#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "intarith.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"

namespace pgonal {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Element of a number field, stored as the reduced coordinate vector in the
// power basis 1, theta, ..., theta^(n-1).  Equality is coordinate-wise.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::vector<Rational> coords);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < coords_.size(); ++i)
            if (coords_[i] != 0) return false;
        return true;
    }
    const Rational& rational_value() const {
        ensure(is_rational(), "element is not rational");
        return coords_[0];
    }

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

    bool operator==(const FieldElement& o) const { return coords_ == o.coords_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    // Lexicographic coordinate order; used for all canonical orderings.
    bool operator<(const FieldElement& o) const { return coords_ < o.coords_; }

    FieldElement inverse() const;

  private:
    FieldPtr field_;
    std::vector<Rational> coords_;
};

inline bool is_zero_val(const FieldElement& x) { return x.is_zero(); }
FieldElement zero_like(const FieldElement& x);
FieldElement one_like(const FieldElement& x);

// Finite quotient Gal(K/Q) of a Galois number field: automorphism indices
// with their multiplication table.  mul(i, j) composes with j applied first.
struct GaloisGroup {
    FieldPtr field;
    std::vector<std::vector<int>> table;
    std::vector<int> inverse_of;

    int order() const { return static_cast<int>(table.size()); }
    int identity() const { return 0; }
    int mul(int i, int j) const { return table[i][j]; }
    int inverse(int i) const { return inverse_of[i]; }
    int element_order(int i) const {
        int k = i, ord = 1;
        while (k != 0) {
            k = mul(i, k);
            ++ord;
        }
        return ord;
    }
};

// Number field Q[x]/(f) for monic irreducible f, with its automorphisms
// enumerated up front.  Instances are immutable and shared by pointer.
class NumberField : public std::enable_shared_from_this<NumberField> {
  public:
    // Builds the field, verifying irreducibility and enumerating all
    // automorphisms.  Degree is capped at 6; larger fields only arise
    // internally through quadratic extensions.
    static FieldPtr create(const RatPoly& minpoly, const std::string& label);

    // The rationals presented as the degree-1 field with minimal polynomial x.
    static FieldPtr rationals();

    const RatPoly& minpoly() const { return minpoly_; }
    int degree() const { return degree_; }
    const std::string& label() const { return label_; }

    int automorphism_count() const { return static_cast<int>(aut_images_.size()); }
    bool is_galois() const { return automorphism_count() == degree_; }
    const GaloisGroup& galois_group() const {
        require(is_galois(), "field " + label_ + " is not Galois over Q");
        return group_;
    }

    FieldElement element(std::vector<Rational> coords) const;
    FieldElement from_rational(const Rational& r) const;
    FieldElement zero() const { return from_rational(0); }
    FieldElement one() const { return from_rational(1); }
    FieldElement gen() const;

    // Image of theta under automorphism i; index 0 is the identity.
    FieldElement automorphism_image(int i) const;

    bool same_presentation(const NumberField& o) const {
        return this == &o || minpoly_ == o.minpoly_;
    }

    // Reduction of coordinate polynomials of degree < 2n-1.
    std::vector<Rational> reduce(std::vector<Rational> raw) const;

  private:
    friend struct FieldBuilder;
    NumberField() = default;

    RatPoly minpoly_;
    int degree_ = 0;
    std::string label_;
    std::vector<std::vector<Rational>> powers_;      // theta^k, k = 0..2n-2
    std::vector<std::vector<Rational>> aut_images_;  // coordinates of sigma(theta)
    GaloisGroup group_;
};

// ---------------------------------------------------------------------------
// numeric helpers (all answers they suggest are verified exactly afterwards)

namespace detail {

using Cplx = std::complex<long double>;

inline std::vector<Cplx> complex_roots(const std::vector<long double>& monic) {
    int n = static_cast<int>(monic.size()) - 1;
    std::vector<Cplx> w(n);
    long double radius = 1;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(monic[i]));
    radius = 1 + radius;
    Cplx seed(0.4L, 0.9L);
    Cplx acc(1, 0);
    for (int i = 0; i < n; ++i) {
        acc *= seed;
        w[i] = acc * radius / std::abs(acc);
    }
    auto eval = [&](Cplx z) {
        Cplx v(1, 0);
        for (int i = n - 1; i >= 0; --i) v = v * z + monic[i];
        return v;
    };
    for (int iter = 0; iter < 600; ++iter) {
        long double shift = 0;
        for (int i = 0; i < n; ++i) {
            Cplx d(1, 0);
            for (int j = 0; j < n; ++j)
                if (j != i) d *= (w[i] - w[j]);
            Cplx step = eval(w[i]) / d;
            w[i] -= step;
            shift = std::max(shift, std::abs(step));
        }
        if (shift < 1e-19L) break;
    }
    return w;
}

inline std::vector<Cplx> complex_roots(const RatPoly& f) {
    ensure(f.is_monic(), "complex_roots expects a monic polynomial");
    std::vector<long double> c;
    for (int i = 0; i < f.degree(); ++i) c.push_back(f[i].convert_to<long double>());
    c.push_back(1.0L);
    return complex_roots(c);
}

inline std::optional<std::vector<Cplx>> solve_complex(std::vector<std::vector<Cplx>> m,
                                                      std::vector<Cplx> rhs) {
    int n = static_cast<int>(m.size());
    for (int c = 0; c < n; ++c) {
        int sel = c;
        for (int i = c + 1; i < n; ++i)
            if (std::abs(m[i][c]) > std::abs(m[sel][c])) sel = i;
        if (std::abs(m[sel][c]) < 1e-14L) return std::nullopt;
        std::swap(m[sel], m[c]);
        std::swap(rhs[sel], rhs[c]);
        for (int i = 0; i < n; ++i) {
            if (i == c) continue;
            Cplx f = m[i][c] / m[c][c];
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
            rhs[i] -= f * rhs[c];
        }
    }
    std::vector<Cplx> x(n);
    for (int i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

inline std::optional<Rational> round_to_rational(long double x, long long maxden,
                                                 long double tol) {
    long double target = x;
    Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        long double fl = std::floor(x);
        if (fl > 9e17L || fl < -9e17L) return std::nullopt;
        Int a = static_cast<long long>(fl);
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > maxden) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        long double approx = p1.convert_to<long double>() / q1.convert_to<long double>();
        if (std::abs(approx - target) <= tol) return make_rational(p1, q1);
        long double frac = x - fl;
        if (frac < 1e-19L) break;
        x = 1.0L / frac;
    }
    return std::nullopt;
}

// Candidate coordinate vector for the element whose j-th embedding is
// values[j], obtained from the Vandermonde system on the embeddings.
inline std::optional<std::vector<Rational>> coords_from_embeddings(
    const std::vector<Cplx>& roots, const std::vector<Cplx>& values) {
    int n = static_cast<int>(roots.size());
    std::vector<std::vector<Cplx>> V(n, std::vector<Cplx>(n));
    for (int j = 0; j < n; ++j) {
        Cplx acc(1, 0);
        for (int i = 0; i < n; ++i) {
            V[j][i] = acc;
            acc *= roots[j];
        }
    }
    auto sol = solve_complex(std::move(V), values);
    if (!sol) return std::nullopt;
    std::vector<Rational> out;
    out.reserve(n);
    for (const Cplx& c : *sol) {
        if (std::abs(c.imag()) > 1e-7L) return std::nullopt;
        auto r = round_to_rational(c.real(), 100000000LL, 1e-7L);
        if (!r) return std::nullopt;
        out.push_back(*r);
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// irreducibility over Q

// Monic polynomial over Q, rewritten as a monic integer polynomial via
// x -> x/c with c the lcm of the coefficient denominators.
inline std::pair<std::vector<Int>, Int> monic_integer_model(const RatPoly& f) {
    ensure(f.is_monic(), "expected monic polynomial");
    Int c = 1;
    for (int i = 0; i <= f.degree(); ++i) c = lcm(c, den(f[i]));
    std::vector<Int> g(f.degree() + 1);
    Int scale = 1;
    for (int i = f.degree(); i >= 0; --i) {
        Rational v = f[i] * Rational(scale);
        ensure(den(v) == 1, "denominator clearing failed");
        g[i] = num(v);
        scale *= c;
    }
    return {g, c};
}

// Returns a proper monic factor of f over Q if one exists.  Factors are
// located from subsets of the complex roots and confirmed by exact division.
inline std::optional<RatPoly> find_rational_factor(const RatPoly& f) {
    int n = f.degree();
    if (n <= 1) return std::nullopt;
    auto [g, c] = monic_integer_model(f);
    std::vector<long double> gd;
    for (const Int& x : g) gd.push_back(x.convert_to<long double>());
    auto roots = detail::complex_roots(gd);
    RatPoly gpoly([&] {
        std::vector<Rational> v;
        for (const Int& x : g) v.emplace_back(x);
        return v;
    }());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int bits = __builtin_popcount(mask);
        if (bits == 0 || bits > n / 2) continue;
        // numeric product of (x - root) over the subset
        std::vector<detail::Cplx> coeff(1, detail::Cplx(1, 0));
        for (int j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            coeff.push_back(detail::Cplx(0, 0));
            for (int k = static_cast<int>(coeff.size()) - 1; k >= 1; --k)
                coeff[k] = coeff[k - 1] - roots[j] * coeff[k];
            coeff[0] = -roots[j] * coeff[0];
        }
        std::vector<Rational> cand(coeff.size());
        bool ok = true;
        for (std::size_t i = 0; ok && i + 1 < coeff.size(); ++i) {
            long double re = coeff[i].real();
            if (std::abs(coeff[i].imag()) > 1e-5L * (1 + std::abs(re))) ok = false;
            long double r = std::roundl(re);
            if (std::abs(re - r) > 1e-5L * (1 + std::abs(re))) ok = false;
            if (ok) cand[i] = Rational(Int(static_cast<long long>(r)));
        }
        if (!ok) continue;
        cand.back() = 1;
        RatPoly candidate(cand);
        auto [q, r] = divmod(gpoly, candidate);
        if (!r.is_zero()) continue;
        // map the factor h of g back to a factor of f: h(c x), then monic
        std::vector<Rational> back(candidate.degree() + 1);
        Rational scale = 1;
        for (int i = 0; i <= candidate.degree(); ++i) {
            back[i] = candidate[i] * scale;
            scale = scale * Rational(c);
        }
        (void)q;
        return RatPoly(back).monic();
    }
    return std::nullopt;
}

inline bool is_irreducible_over_Q(const RatPoly& f) {
    if (f.degree() == 1) return true;
    return !find_rational_factor(f).has_value();
}

// ---------------------------------------------------------------------------
// FieldElement arithmetic

inline FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    ensure(static_cast<int>(coords_.size()) == field_->degree(),
           "coordinate vector length mismatch");
}

inline void check_same_field(const FieldElement& a, const FieldElement& b) {
    require(a.field() && b.field() && a.field()->same_presentation(*b.field()),
            "elements of different fields");
}

inline FieldElement FieldElement::operator-() const {
    auto c = coords_;
    for (auto& x : c) x = -x;
    return FieldElement(field_, std::move(c));
}

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    auto c = a.coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
    return FieldElement(a.field_, std::move(c));
}

inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return a + (-b);
}

inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    std::size_t n = a.coords_.size();
    std::vector<Rational> raw(2 * n - 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coords_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.coords_[j] == 0) continue;
            raw[i + j] += a.coords_[i] * b.coords_[j];
        }
    }
    return FieldElement(a.field_, a.field_->reduce(std::move(raw)));
}

inline FieldElement FieldElement::inverse() const {
    require(!is_zero(), "division by zero");
    // extended euclid of the coordinate polynomial against the minimal
    // polynomial; the gcd is 1 because the minimal polynomial is irreducible
    RatPoly a{std::vector<Rational>(coords_)};
    RatPoly b = field_->minpoly();
    RatPoly r0 = b, r1 = a;
    RatPoly s0, s1 = RatPoly::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        RatPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    ensure(r0.degree() == 0, "inverse failed: minimal polynomial not irreducible?");
    RatPoly inv = s0.scaled(Rational(1) / r0[0]);
    std::vector<Rational> c(inv.coeffs());
    c.resize(coords_.size(), Rational(0));
    return FieldElement(field_, field_->reduce(std::move(c)));
}

inline FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    return a * b.inverse();
}

inline FieldElement zero_like(const FieldElement& x) { return x.field()->zero(); }
inline FieldElement one_like(const FieldElement& x) { return x.field()->one(); }

// Lift a rational into the same structure as the sample value; lets generic
// code scale either Rational or FieldElement values by rationals.
inline Rational embed_rational(const Rational&, const Rational& r) { return r; }
inline FieldElement embed_rational(const FieldElement& like, const Rational& r) {
    return like.field()->from_rational(r);
}

// Value of the coordinate polynomial "coords" at the element x.
inline FieldElement eval_coords_at(const std::vector<Rational>& coords, const FieldElement& x) {
    FieldElement acc = x.field()->zero();
    for (auto it = coords.rbegin(); it != coords.rend(); ++it)
        acc = acc * x + x.field()->from_rational(*it);
    return acc;
}

inline FieldElement eval_rat_poly(const RatPoly& f, const FieldElement& x) {
    return eval_coords_at(f.coeffs(), x);
}

inline FieldElement apply_automorphism(int sigma, const FieldElement& a) {
    require(sigma >= 0 && sigma < a.field()->automorphism_count(),
            "automorphism index out of range");
    if (sigma == 0) return a;
    return eval_coords_at(a.coords(), a.field()->automorphism_image(sigma));
}

// ---------------------------------------------------------------------------
// NumberField construction

struct FieldBuilder {
    static std::shared_ptr<NumberField> bare(const RatPoly& minpoly, const std::string& label) {
        auto f = std::shared_ptr<NumberField>(new NumberField());
        f->minpoly_ = minpoly;
        f->degree_ = minpoly.degree();
        f->label_ = label;
        int n = f->degree_;
        f->powers_.assign(std::max(1, 2 * n - 1), std::vector<Rational>(n, Rational(0)));
        for (int k = 0; k < n; ++k) f->powers_[k][k] = 1;
        for (int k = n; k <= 2 * n - 2; ++k) {
            // theta^k = theta * theta^(k-1), reduced by the minimal polynomial
            std::vector<Rational> prev = f->powers_[k - 1];
            std::vector<Rational> cur(n, Rational(0));
            Rational top = prev[n - 1];
            for (int i = n - 1; i >= 1; --i) cur[i] = prev[i - 1];
            if (top != 0)
                for (int i = 0; i < n; ++i) cur[i] -= top * minpoly[i];
            f->powers_[k] = std::move(cur);
        }
        return f;
    }

    static void install_automorphisms(std::shared_ptr<NumberField>& f,
                                      std::vector<std::vector<Rational>> images) {
        int n = f->degree_;
        // identity first, the rest in coordinate order
        std::vector<Rational> id(n, Rational(0));
        if (n >= 2)
            id[1] = 1;  // theta itself
        else
            id[0] = -f->minpoly_[0];  // root of the linear minimal polynomial
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        auto it = std::find(images.begin(), images.end(), id);
        ensure(it != images.end(), "identity automorphism missing");
        images.erase(it);
        images.insert(images.begin(), id);
        for (const auto& img : images) {
            FieldElement r(f, img);
            ensure(eval_rat_poly(f->minpoly_, r).is_zero(),
                   "automorphism image is not a root of the minimal polynomial");
        }
        f->aut_images_ = std::move(images);
        build_group(f);
    }

    static void build_group(std::shared_ptr<NumberField>& f) {
        int c = f->automorphism_count();
        auto find_index = [&](const FieldElement& e) {
            for (int k = 0; k < c; ++k)
                if (e.coords() == f->aut_images_[k]) return k;
            return -1;
        };
        GaloisGroup g;
        g.field = f;
        g.table.assign(c, std::vector<int>(c, -1));
        for (int i = 0; i < c; ++i) {
            FieldElement ri(f, f->aut_images_[i]);
            for (int j = 0; j < c; ++j) {
                // (sigma_i . sigma_j)(theta) = r_j evaluated at r_i
                FieldElement comp = eval_coords_at(f->aut_images_[j], ri);
                int k = find_index(comp);
                ensure(k >= 0, "automorphisms do not close under composition");
                g.table[i][j] = k;
            }
        }
        g.inverse_of.assign(c, -1);
        for (int i = 0; i < c; ++i) {
            for (int j = 0; j < c; ++j)
                if (g.table[i][j] == 0 && g.table[j][i] == 0) g.inverse_of[i] = j;
            ensure(g.inverse_of[i] >= 0, "automorphism without inverse");
        }
        f->group_ = std::move(g);
    }
};

inline FieldPtr NumberField::rationals() {
    static FieldPtr q = [] {
        auto f = FieldBuilder::bare(rat_poly({0, 1}), "Q");
        FieldBuilder::install_automorphisms(f, {{Rational(0)}});
        return FieldPtr(f);
    }();
    return q;
}

inline FieldPtr NumberField::create(const RatPoly& minpoly, const std::string& label) {
    require(minpoly.degree() >= 1, "minimal polynomial must have degree >= 1");
    require(minpoly.is_monic(), "minimal polynomial must be monic");
    require(minpoly.degree() <= 6, "fields of degree > 6 are not supported");
    if (minpoly.degree() == 1 && minpoly[0] == 0) return rationals();
    if (auto factor = find_rational_factor(minpoly)) {
        std::string fs;
        for (int i = 0; i <= factor->degree(); ++i) {
            if (i) fs += ", ";
            fs += to_string((*factor)[i]);
        }
        throw invalid_input("minimal polynomial is reducible; factor with coefficients [" + fs +
                            "]");
    }
    auto f = FieldBuilder::bare(minpoly, label);
    int n = f->degree();

    // Enumerate the roots of the minimal polynomial inside the field.  Every
    // root determines (and is determined by) the permutation its conjugates
    // induce on the complex roots; candidates are read off the Vandermonde
    // system for each permutation and then verified exactly.
    auto roots = detail::complex_roots(minpoly);
    std::vector<std::vector<Rational>> images;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        std::vector<detail::Cplx> values(n);
        for (int j = 0; j < n; ++j) values[j] = roots[perm[j]];
        auto cand = detail::coords_from_embeddings(roots, values);
        if (!cand) continue;
        FieldElement alpha(f, *cand);
        if (!eval_rat_poly(minpoly, alpha).is_zero()) continue;
        images.push_back(*cand);
    } while (std::next_permutation(perm.begin(), perm.end()));
    ensure(!images.empty(), "no automorphisms found (identity missing)");
    FieldBuilder::install_automorphisms(f, std::move(images));
    return f;
}

inline FieldElement NumberField::element(std::vector<Rational> coords) const {
    require(static_cast<int>(coords.size()) == degree_, "wrong number of coordinates");
    return FieldElement(shared_from_this(), std::move(coords));
}

inline FieldElement NumberField::from_rational(const Rational& r) const {
    std::vector<Rational> c(degree_, Rational(0));
    c[0] = r;
    return FieldElement(shared_from_this(), std::move(c));
}

inline FieldElement NumberField::gen() const {
    std::vector<Rational> c(degree_, Rational(0));
    if (degree_ == 1)
        c[0] = -minpoly_[0];  // the root of a linear minimal polynomial
    else
        c[1] = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

inline FieldElement NumberField::automorphism_image(int i) const {
    require(i >= 0 && i < automorphism_count(), "automorphism index out of range");
    return FieldElement(shared_from_this(), aut_images_[i]);
}

inline std::vector<Rational> NumberField::reduce(std::vector<Rational> raw) const {
    ensure(static_cast<int>(raw.size()) <= 2 * degree_ - 1 || degree_ == 1,
           "reduction input too long");
    std::vector<Rational> out(degree_, Rational(0));
    for (std::size_t k = 0; k < raw.size(); ++k) {
        if (raw[k] == 0) continue;
        if (static_cast<int>(k) < degree_) {
            out[k] += raw[k];
        } else {
            const auto& pw = powers_[k];
            for (int i = 0; i < degree_; ++i) out[i] += raw[k] * pw[i];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// square roots and quadratic extensions

// All square roots of the rational e inside K, found from sign assignments
// on the embeddings and verified exactly.
inline std::vector<FieldElement> square_roots_in_field(const FieldPtr& K, const Rational& e) {
    std::vector<FieldElement> out;
    if (e == 0) {
        out.push_back(K->zero());
        return out;
    }
    if (K->degree() == 1) {
        if (is_square(e)) {
            Rational r = make_rational(isqrt(num(e)), isqrt(den(e)));
            out.push_back(K->from_rational(r));
            out.push_back(K->from_rational(-r));
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    int n = K->degree();
    auto roots = detail::complex_roots(K->minpoly());
    long double ev = Rational(e).convert_to<long double>();
    detail::Cplx base = std::sqrt(detail::Cplx(ev, 0));
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<detail::Cplx> values(n);
        for (int j = 0; j < n; ++j) values[j] = (mask & (1u << j)) ? -base : base;
        auto cand = detail::coords_from_embeddings(roots, values);
        if (!cand) continue;
        FieldElement w(K, *cand);
        if (w * w == K->from_rational(e)) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// K together with sqrt(e): either K itself or the compositum K(sqrt(e)),
// with the images of K's generator and of sqrt(e).
struct Compositum {
    FieldPtr field;
    FieldElement theta;      // image of K's generator
    FieldElement sqrt_disc;  // image of sqrt(e)
    bool extended = false;
};

inline FieldElement embed_in(const Compositum& ext, const FieldElement& x) {
    return eval_coords_at(x.coords(), ext.theta);
}

inline Compositum compositum_with_sqrt(const FieldPtr& K, const Int& e) {
    require(e != 0 && is_squarefree(e), "discriminant must be squarefree and nonzero");
    auto inside = square_roots_in_field(K, Rational(e));
    if (!inside.empty()) {
        FieldElement w = inside.back();  // the lexicographically largest root
        return Compositum{K, K->gen(), w, false};
    }
    require(K->is_galois(), "quadratic extension requires a Galois base field");
    int n = K->degree();
    int N = 2 * n;

    // K  tensor  Q(sqrt(e)) with basis theta^i and theta^i * s; since
    // sqrt(e) is not in K and K is Galois, the tensor product is a field.
    struct Pair {
        FieldElement a, b;  // a + b s
    };
    FieldElement se = K->from_rational(Rational(e));
    auto mul = [&](const Pair& x, const Pair& y) {
        return Pair{x.a * y.a + se * (x.b * y.b), x.a * y.b + x.b * y.a};
    };
    auto flat = [&](const Pair& x) {
        std::vector<Rational> v = x.a.coords();
        const auto& bc = x.b.coords();
        v.insert(v.end(), bc.begin(), bc.end());
        return v;
    };

    for (int shift = 1; shift <= 8; ++shift) {
        Pair gamma{K->gen(), K->from_rational(shift)};  // theta + shift * s
        std::vector<Pair> pw;
        pw.push_back(Pair{K->one(), K->zero()});
        for (int k = 1; k <= N; ++k) pw.push_back(mul(pw.back(), gamma));

        // primitive iff gamma^0..gamma^(N-1) are linearly independent
        Mat<Rational> M(N, std::vector<Rational>(N));
        for (int k = 0; k < N; ++k) {
            auto col = flat(pw[k]);
            for (int r = 0; r < N; ++r) M[r][k] = col[r];
        }
        if (determinant(M, Rational(1)) == 0) continue;

        auto sol = linear_solve(M, flat(pw[N]), Rational(1));
        ensure(sol.consistent, "power expansion failed");
        std::vector<Rational> mp = sol.particular;
        for (auto& x : mp) x = -x;
        mp.push_back(1);
        RatPoly minpoly((std::vector<Rational>(mp)));

        auto L = FieldBuilder::bare(minpoly, K->label() + "(sqrt(" + e.str() + "))");
        auto in_gamma_basis = [&](const Pair& x) {
            auto s2 = linear_solve(M, flat(x), Rational(1));
            ensure(s2.consistent, "element outside the gamma power basis");
            return s2.particular;
        };

        // Gal(L/Q): each automorphism of K lifted two ways by the sign on s.
        std::vector<std::vector<Rational>> images;
        for (int sigma = 0; sigma < K->automorphism_count(); ++sigma) {
            FieldElement st = K->automorphism_image(sigma);
            for (int sign : {1, -1})
                images.push_back(in_gamma_basis(Pair{st, K->from_rational(sign * shift)}));
        }
        FieldBuilder::install_automorphisms(L, std::move(images));
        FieldPtr Lc(L);
        FieldElement theta_L(Lc, in_gamma_basis(Pair{K->gen(), K->zero()}));
        FieldElement s_L(Lc, in_gamma_basis(Pair{K->zero(), K->one()}));
        ensure(s_L * s_L == Lc->from_rational(Rational(e)), "sqrt image check failed");
        ensure(eval_rat_poly(K->minpoly(), theta_L).is_zero(), "theta image check failed");
        return Compositum{Lc, theta_L, s_L, true};
    }
    throw invariant_violation("no primitive element found for the quadratic extension");
}

// Indices of the automorphisms of L fixing the given element.
inline std::vector<int> fixing_automorphisms(const FieldPtr& L, const FieldElement& w) {
    std::vector<int> out;
    for (int i = 0; i < L->automorphism_count(); ++i)
        if (apply_automorphism(i, w) == w) out.push_back(i);
    return out;
}

// Restriction map Gal(L/Q) -> Gal(K/Q) along the embedding theta_in_L.
inline std::vector<int> restrict_automorphisms(const FieldPtr& L, const FieldElement& theta_in_L,
                                               const FieldPtr& K) {
    std::vector<int> out(L->automorphism_count(), -1);
    for (int i = 0; i < L->automorphism_count(); ++i) {
        FieldElement moved = apply_automorphism(i, theta_in_L);
        for (int t = 0; t < K->automorphism_count(); ++t) {
            FieldElement target = eval_coords_at(K->automorphism_image(t).coords(), theta_in_L);
            if (moved == target) {
                out[i] = t;
                break;
            }
        }
        ensure(out[i] >= 0, "automorphism does not restrict to the base field");
    }
    return out;
}

}  // namespace pgonal

#endif
