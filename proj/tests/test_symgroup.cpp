#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "hookimm/errors.hpp"
#include "hookimm/hook_character.hpp"
#include "hookimm/permutation.hpp"

using namespace hookimm;

namespace {

// Independent character oracle: general Murnaghan-Nakayama over beta-numbers.
// A border strip of length l removed from the shape corresponds to lowering
// one beta-number by l onto a free slot; the sign counts the beta-numbers
// jumped over.
mpz_class mn_general(const std::vector<int>& shape, const std::vector<int>& rho,
                     std::size_t idx = 0) {
    if (idx == rho.size()) {
        for (int part : shape)
            if (part != 0) return 0;
        return 1;
    }
    const int m = static_cast<int>(shape.size()) + 1;
    std::set<int> beta;
    for (std::size_t i = 0; i < shape.size(); ++i)
        beta.insert(shape[i] + (m - 1 - static_cast<int>(i)));
    beta.insert(0 + (m - 1 - static_cast<int>(shape.size())));  // padding row

    const int l = rho[idx];
    mpz_class total = 0;
    for (int b : beta) {
        if (b < l || beta.count(b - l)) continue;
        int jumped = 0;
        for (int c : beta)
            if (c > b - l && c < b) ++jumped;
        std::set<int> nb = beta;
        nb.erase(b);
        nb.insert(b - l);
        std::vector<int> ns;
        int row = 0;
        for (auto it = nb.rbegin(); it != nb.rend(); ++it, ++row) {
            int part = *it - (m - 1 - row);
            if (part > 0) ns.push_back(part);
        }
        mpz_class sub = mn_general(ns, rho, idx + 1);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    return total;
}

std::vector<int> hook_shape(int n, int k) {
    std::vector<int> shape{k};
    for (int i = 0; i < n - k; ++i) shape.push_back(1);
    return shape;
}

Permutation from_one_based(std::vector<int> images) {
    Permutation p;
    for (int x : images) p.images.push_back(x - 1);
    return p;
}

}  // namespace

TEST_CASE("cycle type extraction") {
    CHECK(cycle_type(Permutation::identity(4)).parts == std::vector<int>{1, 1, 1, 1});
    CHECK(cycle_type(from_one_based({2, 1, 3, 4})).parts == std::vector<int>{2, 1, 1});
    CHECK(cycle_type(from_one_based({2, 3, 1})).parts == std::vector<int>{3});
    CHECK(cycle_type(Permutation::identity(0)).parts.empty());
    CHECK_THROWS_AS(cycle_type(from_one_based({1, 1})), std::invalid_argument);
}

TEST_CASE("permutation enumeration") {
    int count = 0;
    std::set<std::vector<int>> seen;
    for_each_permutation(3, [&](const Permutation& p) {
        ++count;
        seen.insert(p.images);
    });
    CHECK(count == 6);
    CHECK(seen.size() == 6);

    count = 0;
    for_each_permutation(0, [&](const Permutation& p) {
        ++count;
        CHECK(p.size() == 0);
    });
    CHECK(count == 1);

    seen.clear();
    PermutationStream stream(4);
    while (auto p = stream.next()) {
        CHECK(p->is_valid());
        seen.insert(p->images);
    }
    CHECK(seen.size() == 24);

    CHECK_THROWS_AS(PermutationStream(11), SizeLimitError);
    CHECK_THROWS_AS(for_each_permutation(11, [](const Permutation&) {}), SizeLimitError);
    CHECK_THROWS_AS(PermutationStream(-1), std::invalid_argument);
}

TEST_CASE("hook character pinned values") {
    auto ct = [](std::vector<int> parts) { return CycleType{std::move(parts)}; };
    // S_3, k = 2: the standard representation.
    CHECK(hook_character(3, 2, ct({1, 1, 1})) == 2);
    CHECK(hook_character(3, 2, ct({2, 1})) == 0);
    CHECK(hook_character(3, 2, ct({3})) == -1);

    // k = n: trivial character; k = 1: sign character.
    for (int n = 1; n <= 7; ++n) {
        for (const auto& parts : partitions_of(n)) {
            CHECK(hook_character(n, n, ct(parts)) == 1);
            mpz_class sign = ((n - static_cast<int>(parts.size())) % 2 == 0) ? 1 : -1;
            CHECK(hook_character(n, 1, ct(parts)) == sign);
        }
    }

    // Out-of-range hooks vanish; bad cycle types are rejected.
    CHECK(hook_character(3, 0, ct({2, 1})) == 0);
    CHECK(hook_character(3, 4, ct({2, 1})) == 0);
    CHECK(hook_character(0, 0, ct({})) == 1);
    CHECK(hook_character(0, 1, ct({})) == 0);
    CHECK_THROWS_AS(hook_character(3, 2, ct({2, 2})), std::invalid_argument);
    CHECK_THROWS_AS(hook_character(3, 2, ct({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(hook_character(3, 2, ct({3, 0})), std::invalid_argument);
}

TEST_CASE("hook character agrees with the general MN oracle") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& parts : partitions_of(n)) {
            CycleType ct{parts};
            for (int k = 1; k <= n; ++k)
                CHECK(hook_character(n, k, ct) == mn_general(hook_shape(n, k), parts));
        }
    }
}

TEST_CASE("splitting identities, small exhaustive") {
    for (int n = 2; n <= 5; ++n) {
        for_each_permutation(n, [&](const Permutation& s) {
            const CycleType ct = cycle_type(s);
            std::set<int> lens(ct.parts.begin(), ct.parts.end());
            for (int l : lens) {
                if (n - l < 1) continue;
                CycleType rest;
                bool dropped = false;
                for (int part : ct.parts) {
                    if (!dropped && part == l) {
                        dropped = true;
                        continue;
                    }
                    rest.parts.push_back(part);
                }
                for (int k = 0; k <= n + 1; ++k) {
                    mpz_class rhs = hook_character(n - l, k - l, rest);
                    mpz_class leg = hook_character(n - l, k, rest);
                    rhs += (l % 2 == 1) ? leg : -leg;
                    CHECK(hook_character(n, k, ct) == rhs);
                }
            }
        });
    }
}

TEST_CASE("hook dimensions are binomials") {
    for (int n = 1; n <= 8; ++n) {
        CycleType ones;
        ones.parts.assign(n, 1);
        for (int k = 1; k <= n; ++k)
            CHECK(hook_character(n, k, ones) == binomial(n - 1, k - 1));
    }
}

TEST_CASE("partitions enumeration") {
    CHECK(partitions_of(0) == std::vector<std::vector<int>>{{}});
    CHECK(partitions_of(3) ==
          std::vector<std::vector<int>>{{1, 1, 1}, {2, 1}, {3}});
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(8).size() == 22);
}
