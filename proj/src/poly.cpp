#include "hookimm/poly.hpp"

#include <stdexcept>

namespace hookimm {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(Rational c) {
    Poly p;
    if (!c.is_zero()) p.c_.push_back(std::move(c));
    return p;
}

Poly Poly::variable() { return linear(Rational(0), Rational(1)); }

Poly Poly::linear(Rational c0, Rational c1) {
    Poly p;
    p.c_.push_back(std::move(c0));
    p.c_.push_back(std::move(c1));
    p.trim();
    return p;
}

Poly Poly::from_coeffs(std::vector<Rational> coeffs) {
    Poly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

int Poly::degree() const {
    if (c_.empty()) throw std::logic_error("degree of the zero polynomial");
    return static_cast<int>(c_.size()) - 1;
}

Rational Poly::eval(const Rational& at) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly Poly::operator-() const {
    Poly p;
    p.c_.reserve(c_.size());
    for (const auto& c : c_) p.c_.push_back(-c);
    return p;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    if (a.c_.empty() || b.c_.empty()) return p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, Rational());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
    }
    p.trim();
    return p;
}

std::vector<std::string> Poly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.str());
    return out;
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational a = c;
        if (out.empty()) {
            if (c.sign() < 0) out += "-", a = -a;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            if (c.sign() < 0) a = -a;
        }
        std::string mag = a.str();
        if (i == 0) {
            out += mag;
        } else {
            if (mag != "1") out += mag + "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace hookimm
