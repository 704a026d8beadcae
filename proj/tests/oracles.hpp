#pragma once

// Deliberately naive reference implementations, written straight from the
// definitions and sharing no code with the library. Everything is uint64 and
// only meant for small parameters.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline u64 fib(int n) {
    u64 a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        const u64 t = a + b;
        a = b;
        b = t;
    }
    return a;
}

// F^(s)_n with the s-1 zeros before F_1 = 1.
inline u64 s_step_fib(int s, int n) {
    if (n <= 0) return 0;
    std::vector<u64> t(static_cast<std::size_t>(n) + static_cast<std::size_t>(s), 0);
    const int off = s - 1;  // t[i + off] = F_i
    t[static_cast<std::size_t>(1 + off)] = 1;
    for (int i = 2; i <= n; ++i) {
        u64 sum = 0;
        for (int j = 1; j <= s; ++j) sum += t[static_cast<std::size_t>(i - j + off)];
        t[static_cast<std::size_t>(i + off)] = sum;
    }
    return t[static_cast<std::size_t>(n + off)];
}

inline u64 k_seq(int u, int n) {
    std::vector<u64> t(static_cast<std::size_t>(n) + 1, 1);
    for (int i = u + 1; i <= n; ++i) t[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i - 1)] + t[static_cast<std::size_t>(i - u)];
    return t[static_cast<std::size_t>(n)];
}

inline u64 ipow(u64 b, u64 e) {
    u64 r = 1;
    while (e--) r *= b;
    return r;
}

// Plain subsets of {1..n} as bitmasks (bit v-1 <-> value v).
template <typename Pred>
u64 count_subsets(int n, Pred pred) {
    u64 hits = 0;
    for (u64 mask = 0; mask < (u64{1} << n); ++mask) {
        const int card = std::popcount(mask);
        const int lo = mask ? std::countr_zero(mask) + 1 : 0;
        const int hi = mask ? 64 - std::countl_zero(mask) : 0;
        auto has = [&](int v) { return v >= 1 && v <= n && (mask >> (v - 1)) & 1U; };
        if (pred(card, lo, hi, has)) ++hits;
    }
    return hits;
}

inline u64 family_d(int n) {
    return count_subsets(n, [](int card, int lo, int hi, auto has) {
        return card == 0 || (has(hi - 1) && lo >= card);
    });
}

inline u64 family_s(int p, int n) {
    return count_subsets(n, [&](int card, int lo, int, auto has) {
        return has(n) && static_cast<u64>(lo) > ipow(static_cast<u64>(card), static_cast<u64>(p));
    });
}

inline u64 family_ap(int p, int n) {
    return count_subsets(n, [&](int card, int lo, int, auto has) {
        return has(n) && static_cast<u64>(lo) >= ipow(static_cast<u64>(card), static_cast<u64>(p));
    });
}

inline u64 family_bp(int p, int n) {
    return count_subsets(n, [&](int card, int lo, int hi, auto has) {
        return card == 0 || (has(hi - 1) && static_cast<u64>(lo) >= ipow(static_cast<u64>(card), static_cast<u64>(p)));
    });
}

// Odometer over multiplicity vectors m_1..m_n with 0 <= m_v <= caps[v-1].
template <typename Pred>
u64 count_multisets(const std::vector<int>& caps, Pred pred) {
    const std::size_t n = caps.size();
    std::vector<int> m(n, 0);
    u64 hits = 0;
    while (true) {
        int card = 0, lo = 0;
        for (std::size_t i = 0; i < n; ++i) {
            card += m[i];
            if (m[i] && !lo) lo = static_cast<int>(i) + 1;
        }
        if (pred(m, card, lo)) ++hits;
        std::size_t i = 0;
        while (i < n && m[i] == caps[i]) m[i++] = 0;
        if (i == n) break;
        ++m[i];
    }
    return hits;
}

inline u64 family_a(int s, int n) {
    std::vector<int> caps(static_cast<std::size_t>(n), s - 1);
    caps.back() = 1;
    return count_multisets(caps, [&](const std::vector<int>& m, int card, int lo) {
        return m.back() == 1 && lo >= card;
    });
}

inline u64 family_b(int u, const std::vector<int>& caps) {
    return count_multisets(caps, [&](const std::vector<int>&, int card, int lo) {
        return card == 0 || lo >= u * card + 1;
    });
}

// Colored universe: (n-1)(s-1) labelled colored items plus n, as one bitmask.
inline u64 family_c(int s, int n) {
    const int colored = (n - 1) * (s - 1);
    const int size = colored + 1;
    u64 hits = 0;
    for (u64 mask = 0; mask < (u64{1} << size); ++mask) {
        if (!((mask >> colored) & 1U)) continue;  // n must be present
        const int card = std::popcount(mask);
        int lo = n;
        for (int item = 0; item < colored; ++item) {
            if ((mask >> item) & 1U) lo = std::min(lo, item / (s - 1) + 1);
        }
        if (lo >= card) ++hits;
    }
    return hits;
}

// All 2^(n-1) compositions of n via cut positions.
inline std::vector<std::vector<int>> all_compositions(int n) {
    std::vector<std::vector<int>> out;
    for (u64 cuts = 0; cuts < (u64{1} << (n - 1)); ++cuts) {
        std::vector<int> parts;
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if ((cuts >> i) & 1U) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.push_back(std::move(parts));
    }
    return out;
}

inline u64 compositions(int n, int p, int only_k = 0) {
    u64 hits = 0;
    for (const auto& parts : all_compositions(n)) {
        const auto k = static_cast<u64>(parts.size());
        if (only_k && k != static_cast<u64>(only_k)) continue;
        const auto lo = static_cast<u64>(*std::min_element(parts.begin(), parts.end()));
        if (lo > ipow(k, static_cast<u64>(p))) ++hits;
    }
    return hits;
}

inline u64 binom(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    u64 r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<u64>(n - k + i) / static_cast<u64>(i);
    return r;
}

inline u64 occupancy(int n, int k, int s) {
    std::vector<int> boxes(static_cast<std::size_t>(n), 0);
    u64 hits = 0;
    while (true) {
        int total = 0;
        for (int b : boxes) total += b;
        if (total == k) ++hits;
        std::size_t i = 0;
        while (i < boxes.size() && boxes[i] == s) boxes[i++] = 0;
        if (i == boxes.size()) break;
        ++boxes[i];
    }
    return hits;
}

}  // namespace oracle
