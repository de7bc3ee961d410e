#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "hookimm/errors.hpp"

namespace hookimm {

// Permutation enumeration is factorial time; anything above this is refused.
inline constexpr int kMaxEnumeratedN = 10;

// A permutation of {0..n-1}; images[i] = sigma(i).
struct Permutation {
    std::vector<int> images;

    int size() const { return static_cast<int>(images.size()); }
    static Permutation identity(int n);
    bool is_valid() const;
};

// Weakly decreasing positive parts summing to n; the conjugacy-class label.
struct CycleType {
    std::vector<int> parts;

    int total() const;
    bool operator==(const CycleType&) const = default;
    bool operator<(const CycleType& o) const { return parts < o.parts; }
};

CycleType cycle_type(const Permutation& p);

// Streams all n! permutations of {0..n-1} in lexicographic order, each exactly
// once; n = 0 yields the single empty permutation.
class PermutationStream {
public:
    explicit PermutationStream(int n);
    std::optional<Permutation> next();

private:
    Permutation cur_;
    bool exhausted_ = false;
};

void check_enumeration_size(int n);  // SizeLimitError above kMaxEnumeratedN

template <typename F>
void for_each_permutation(int n, F&& f) {
    check_enumeration_size(n);
    Permutation p = Permutation::identity(n);
    if (n == 0) {
        f(static_cast<const Permutation&>(p));
        return;
    }
    do {
        f(static_cast<const Permutation&>(p));
    } while (std::next_permutation(p.images.begin(), p.images.end()));
}

}  // namespace hookimm
