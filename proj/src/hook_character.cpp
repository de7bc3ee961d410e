#include "hookimm/hook_character.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace hookimm {

namespace {

using MemoKey = std::pair<int, std::vector<int>>;  // (k, remaining parts)

std::map<MemoKey, mpz_class> g_memo;
std::mutex g_memo_mutex;

// Murnaghan-Nakayama on hook shapes. A hook with arm k and n cells total has
// at most three border strips of a given length l:
//   - the tail of the arm (keeps the corner), leaving the hook (k-l, n-l);
//     needs k-l >= 1; one row, sign +1;
//   - the tail of the leg, leaving (k, n-l); needs l <= n-k; sign (-1)^(l-1);
//   - the whole diagram when l = n, leaving the empty shape; sign (-1)^(n-k).
mpz_class chi(int k, int n, const std::vector<int>& parts, std::size_t idx) {
    if (n == 0) return k == 0 ? 1 : 0;
    if (k < 1 || k > n) return 0;

    MemoKey key{k, std::vector<int>(parts.begin() + idx, parts.end())};
    {
        std::lock_guard<std::mutex> lock(g_memo_mutex);
        auto it = g_memo.find(key);
        if (it != g_memo.end()) return it->second;
    }

    const int l = parts[idx];
    mpz_class r = 0;
    if (k - l >= 1) r += chi(k - l, n - l, parts, idx + 1);
    if (l <= n - k) {
        mpz_class leg = chi(k, n - l, parts, idx + 1);
        r += (l % 2 == 1) ? leg : -leg;
    }
    if (l == n) r += ((n - k) % 2 == 0) ? 1 : -1;

    std::lock_guard<std::mutex> lock(g_memo_mutex);
    return g_memo.emplace(std::move(key), std::move(r)).first->second;
}

}  // namespace

mpz_class hook_character(int n, int k, const CycleType& ct) {
    if (n < 0) throw std::invalid_argument("negative n");
    int sum = 0;
    int prev = INT_MAX;
    for (int p : ct.parts) {
        if (p < 1) throw std::invalid_argument("cycle type with nonpositive part");
        if (p > prev) throw std::invalid_argument("cycle type parts must be weakly decreasing");
        prev = p;
        sum += p;
    }
    if (sum != n)
        throw std::invalid_argument("cycle type does not sum to n");
    return chi(k, n, ct.parts, 0);
}

namespace {
void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<std::vector<int>> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("negative n");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    if (n == 0) out = {{}};
    std::sort(out.begin(), out.end());
    return out;
}

mpz_class binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace hookimm
