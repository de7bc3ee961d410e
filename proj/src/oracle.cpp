#include "hookimm/oracle.hpp"

#include <bit>
#include <string>

#include "hookimm/errors.hpp"
#include "hookimm/hook_character.hpp"
#include "hookimm/permutation.hpp"

namespace hookimm {

namespace {

void check_oracle_order(int n) {
    if (n > kMaxOracleOrder)
        throw SizeLimitError("brute-force immanants limited to order <= " +
                             std::to_string(kMaxOracleOrder) + ", got " + std::to_string(n));
}

Rational chi_rational(int n, int k, const CycleType& ct) {
    return Rational(hook_character(n, k, ct));
}

}  // namespace

std::vector<Rational> immanants_bruteforce_all(const RationalMatrix& m) {
    const int n = m.order();
    check_oracle_order(n);
    if (n == 0) return {Rational(1)};

    std::vector<Rational> acc(n + 1);
    for_each_permutation(n, [&](const Permutation& s) {
        Rational prod(1);
        for (int i = 0; i < n; ++i) {
            const Rational& e = m.at(i, s.images[i]);
            if (e.is_zero()) return;
            prod *= e;
        }
        const CycleType ct = cycle_type(s);
        for (int k = 1; k <= n; ++k) {
            Rational chi = chi_rational(n, k, ct);
            if (!chi.is_zero()) acc[k] += chi * prod;
        }
    });
    return acc;
}

std::vector<Poly> hook_polys_bruteforce_all(const RationalMatrix& m) {
    const int n = m.order();
    check_oracle_order(n);
    if (n == 0) return {Poly::constant(Rational(1))};

    std::vector<Poly> acc(n + 1);
    for_each_permutation(n, [&](const Permutation& s) {
        // Entry (i, sigma(i)) of x*I - m is x - m_ii on fixed points and
        // -m_{i sigma(i)} elsewhere; split the product accordingly.
        Rational scalar(1);
        Poly lin = Poly::constant(Rational(1));
        for (int i = 0; i < n; ++i) {
            if (s.images[i] == i) {
                lin *= Poly::linear(-m.at(i, i), Rational(1));
            } else {
                const Rational& e = m.at(i, s.images[i]);
                if (e.is_zero()) return;
                scalar *= -e;
            }
        }
        lin *= scalar;
        const CycleType ct = cycle_type(s);
        for (int k = 1; k <= n; ++k) {
            Rational chi = chi_rational(n, k, ct);
            if (!chi.is_zero()) acc[k] += chi * lin;
        }
    });
    return acc;
}

Rational immanant_bruteforce(const RationalMatrix& m, int k) {
    const int n = m.order();
    check_oracle_order(n);
    if (n == 0) return k == 0 ? Rational(1) : Rational(0);
    if (k < 1 || k > n) return Rational(0);
    return immanants_bruteforce_all(m)[k];
}

Poly hook_poly_bruteforce(const RationalMatrix& m, int k) {
    const int n = m.order();
    check_oracle_order(n);
    if (n == 0) return k == 0 ? Poly::constant(Rational(1)) : Poly();
    if (k < 1 || k > n) return Poly();
    return hook_polys_bruteforce_all(m)[k];
}

Rational determinant(const RationalMatrix& m) {
    const int n = m.order();
    if (n == 0) return Rational(1);
    std::vector<Rational> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i * n + j] = m.at(i, j);

    // Bareiss: a[i][j] <- (a[i][j]*pivot - a[i][k]*a[k][j]) / previous pivot,
    // with the division exact; the last pivot is the determinant.
    Rational prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int pr = -1;
        for (int i = k; i < n; ++i) {
            if (!a[i * n + k].is_zero()) {
                pr = i;
                break;
            }
        }
        if (pr < 0) return Rational(0);
        if (pr != k) {
            for (int j = 0; j < n; ++j) std::swap(a[pr * n + j], a[k * n + j]);
            sign = -sign;
        }
        const Rational pivot = a[k * n + k];
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a[i * n + j] = (a[i * n + j] * pivot - a[i * n + k] * a[k * n + j]) / prev;
            a[i * n + k] = Rational(0);
        }
        prev = pivot;
    }
    Rational det = a[(n - 1) * n + (n - 1)];
    return sign < 0 ? -det : det;
}

Rational permanent(const RationalMatrix& m) {
    const int n = m.order();
    if (n == 0) return Rational(1);
    if (n > kMaxPermanentOrder)
        throw SizeLimitError("permanent limited to order <= " +
                             std::to_string(kMaxPermanentOrder) + ", got " + std::to_string(n));

    // Ryser: per = (-1)^n sum_{S != empty} (-1)^|S| prod_i rowsum_i(S), with
    // Gray-code updates so each step toggles one column.
    std::vector<Rational> rowsum(n);
    Rational total(0);
    std::uint32_t prev_gray = 0;
    const std::uint32_t end = std::uint32_t(1) << n;
    for (std::uint32_t s = 1; s < end; ++s) {
        const std::uint32_t gray = s ^ (s >> 1);
        const std::uint32_t diff = gray ^ prev_gray;
        const int j = std::countr_zero(diff);
        if (gray & diff) {
            for (int i = 0; i < n; ++i) rowsum[i] += m.at(i, j);
        } else {
            for (int i = 0; i < n; ++i) rowsum[i] -= m.at(i, j);
        }
        prev_gray = gray;

        Rational prod(1);
        bool zero = false;
        for (int i = 0; i < n; ++i) {
            if (rowsum[i].is_zero()) {
                zero = true;
                break;
            }
            prod *= rowsum[i];
        }
        if (zero) continue;
        if (std::popcount(gray) % 2 == 0)
            total += prod;
        else
            total -= prod;
    }
    return n % 2 == 0 ? total : -total;
}

}  // namespace hookimm
