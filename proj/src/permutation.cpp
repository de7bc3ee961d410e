#include "hookimm/permutation.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hookimm {

Permutation Permutation::identity(int n) {
    if (n < 0) throw std::invalid_argument("negative permutation size");
    Permutation p;
    p.images.resize(n);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

bool Permutation::is_valid() const {
    const int n = size();
    std::vector<bool> seen(n, false);
    for (int x : images) {
        if (x < 0 || x >= n || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

int CycleType::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

CycleType cycle_type(const Permutation& p) {
    if (!p.is_valid()) throw std::invalid_argument("not a permutation");
    const int n = p.size();
    std::vector<bool> seen(n, false);
    CycleType ct;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p.images[j]) {
            seen[j] = true;
            ++len;
        }
        ct.parts.push_back(len);
    }
    std::sort(ct.parts.begin(), ct.parts.end(), std::greater<int>());
    return ct;
}

void check_enumeration_size(int n) {
    if (n < 0) throw std::invalid_argument("negative permutation size");
    if (n > kMaxEnumeratedN)
        throw SizeLimitError("permutation enumeration limited to n <= " +
                             std::to_string(kMaxEnumeratedN) + ", got n = " + std::to_string(n));
}

PermutationStream::PermutationStream(int n) {
    check_enumeration_size(n);
    cur_ = Permutation::identity(n);
}

std::optional<Permutation> PermutationStream::next() {
    if (exhausted_) return std::nullopt;
    Permutation out = cur_;
    if (cur_.size() == 0 ||
        !std::next_permutation(cur_.images.begin(), cur_.images.end()))
        exhausted_ = true;
    return out;
}

}  // namespace hookimm
