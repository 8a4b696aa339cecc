#ifndef CSCK_POLY_HPP
#define CSCK_POLY_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "csck/rational.hpp"

namespace csck {

/// Dense univariate polynomial with exact rational coefficients.
/// coeffs()[k] multiplies x^k; the leading coefficient is nonzero
/// unless the polynomial is identically zero (empty vector).
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs_low_to_high)
        : c_(coeffs_low_to_high) { trim(); }
    explicit Poly(std::vector<Rational> coeffs_low_to_high)
        : c_(std::move(coeffs_low_to_high)) { trim(); }
    static Poly constant(const Rational& v) { return Poly({v}); }
    /// c * x^k
    static Poly monomial(const Rational& c, int k);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
    }
    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& x) const;  ///< exact Horner
    real eval_real(real x) const;                  ///< Horner in long double

    Poly derivative() const;
    /// Antiderivative with zero constant term.
    Poly antiderivative() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    friend Poly operator*(const Rational& s, const Poly& p);

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Quotient and remainder of exact polynomial division.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    /// Division asserting zero remainder.
    Poly exact_div(const Poly& divisor) const;

    /// Leading coefficient scaled to 1.
    Poly monic() const;
    /// p(s*x) — argument scaling, used by the dilation identity tests.
    Poly scale_arg(const Rational& s) const;
    /// x^deg * p(1/x) — coefficient reversal, used for integrals to infinity.
    Poly reverse() const;

    /// 1 + max_k |c_k / c_deg|; every real root lies in (-bound, bound).
    Rational cauchy_root_bound() const;

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Monic greatest common divisor by the Euclidean algorithm.
Poly poly_gcd(const Poly& p, const Poly& q);

/// Rational function P/Q over the rationals, reduced on construction
/// (gcd of numerator and denominator divided out, denominator monic-signed
/// to keep the leading denominator coefficient positive).
class RatFunc {
public:
    RatFunc() : num_(), den_({Rational(1)}) {}
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    Rational operator()(const Rational& x) const;
    real eval_real(real x) const;

    RatFunc derivative() const;

    /// Equality as rational functions (cross-multiplied).
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

private:
    Poly num_, den_;
};

} // namespace csck

#endif
