#ifndef PGONAL_POLYNOMIAL_HPP
#define PGONAL_POLYNOMIAL_HPP

#include <vector>

#include "rational.hpp"

namespace pgonal {

inline bool is_zero_val(const Rational& r) { return r == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

// Dense univariate polynomial over an exact field type T.  Coefficients are
// stored low degree first; the zero polynomial has no coefficients.
template <class T>
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }

    const std::vector<T>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const T& operator[](std::size_t i) const { return c_[i]; }
    const T& lead() const { return c_.back(); }

    bool operator==(const Polynomial& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator-() const {
        auto r = c_;
        for (auto& x : r) x = -x;
        return Polynomial(std::move(r));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        const auto& big = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
        const auto& small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
        auto r = big;
        for (std::size_t i = 0; i < small.size(); ++i) r[i] = r[i] + small[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }

    Polynomial scaled(const T& s) const {
        auto r = c_;
        for (auto& x : r) x = x * s;
        return Polynomial(std::move(r));
    }

    // Quotient and remainder; the divisor's leading coefficient must be a unit.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        ensure(!b.is_zero(), "polynomial division by zero");
        if (a.degree() < b.degree()) return {Polynomial(), a};
        auto rem = a.c_;
        std::vector<T> quot(a.degree() - b.degree() + 1, zero_like(b.lead()));
        T inv_lead = one_like(b.lead()) / b.lead();
        for (int k = a.degree() - b.degree(); k >= 0; --k) {
            T q = rem[k + b.degree()] * inv_lead;
            quot[k] = q;
            for (int i = 0; i <= b.degree(); ++i)
                rem[k + i] = rem[k + i] - q * b.c_[i];
        }
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    T eval(const T& x) const {
        if (is_zero()) return zero_like(x);
        T acc = c_.back();
        for (int i = degree() - 1; i >= 0; --i) acc = acc * x + c_[i];
        return acc;
    }

    Polynomial derivative() const {
        if (degree() < 1) return Polynomial();
        std::vector<T> r;
        r.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            T k = zero_like(c_[i]);
            for (std::size_t j = 0; j < i; ++j) k = k + one_like(c_[i]);
            r.push_back(k * c_[i]);
        }
        return Polynomial(std::move(r));
    }

    Polynomial monic() const {
        ensure(!is_zero(), "monic of zero polynomial");
        return scaled(one_like(lead()) / lead());
    }

    bool is_monic() const { return !is_zero() && lead() == one_like(lead()); }

  private:
    void trim() {
        while (!c_.empty() && is_zero_val(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

template <class T>
Polynomial<T> poly_gcd(Polynomial<T> a, Polynomial<T> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

// X - root.
template <class T>
Polynomial<T> linear_from_root(const T& root) {
    return Polynomial<T>({-root, one_like(root)});
}

using RatPoly = Polynomial<Rational>;

inline RatPoly rat_poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return RatPoly(std::move(v));
}

}  // namespace pgonal

#endif
