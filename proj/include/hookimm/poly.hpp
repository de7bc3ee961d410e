#pragma once

#include <string>
#include <vector>

#include "hookimm/rational.hpp"

namespace hookimm {

// Dense univariate polynomial over Rational, coefficients stored ascending by
// power. Canonical form: the highest stored coefficient is nonzero; the zero
// polynomial stores no coefficients at all.
class Poly {
public:
    Poly() = default;  // zero

    static Poly constant(Rational c);
    static Poly variable();                       // x
    static Poly linear(Rational c0, Rational c1); // c0 + c1*x
    static Poly from_coeffs(std::vector<Rational> coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const;  // logic_error on the zero polynomial
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& at) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly& operator*=(const Rational& s);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly p, const Rational& s) { return p *= s; }
    friend Poly operator*(const Rational& s, Poly p) { return p *= s; }

    bool operator==(const Poly&) const = default;

    std::vector<std::string> coeff_strings() const;
    std::string str() const;  // human form, highest power first

private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace hookimm
