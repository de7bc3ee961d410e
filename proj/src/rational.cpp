#include "hookimm/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "hookimm/errors.hpp"

namespace hookimm {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    if (sgn(v_.get_den()) == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational Rational::parse(std::string_view text) {
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string_view s = text.substr(b, e - b);
    if (s.empty()) throw ParseError("empty rational");

    std::size_t i = 0;
    if (s[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) throw ParseError("bad rational: '" + std::string(text) + "'");

    bool den_zero = false;
    if (i < s.size()) {
        if (s[i] != '/') throw ParseError("bad rational: '" + std::string(text) + "'");
        ++i;
        std::size_t den_begin = i;
        den_zero = true;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            if (s[i] != '0') den_zero = false;
            ++i;
        }
        if (i == den_begin || i != s.size())
            throw ParseError("bad rational: '" + std::string(text) + "'");
    }
    if (den_zero) throw ParseError("rational with zero denominator: '" + std::string(text) + "'");

    mpq_class q(std::string(s), 10);
    q.canonicalize();
    Rational r;
    r.v_ = std::move(q);
    return r;
}

Rational pow(const Rational& base, int exp) {
    if (exp < 0) throw std::domain_error("negative exponent");
    Rational r(1);
    Rational b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

}  // namespace hookimm
