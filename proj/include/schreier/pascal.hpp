#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "schreier/bigcount.hpp"
#include "schreier/sequences.hpp"

namespace schreier {

/// Ordinary binomial coefficient, zero whenever n < 0, k < 0 or n < k.
BigCount binom(std::int64_t n, std::int64_t k);

/// Bounded-occupancy binomial: ways to put k identical objects into n labelled
/// boxes holding at most s objects each. Zero for k < 0 or k > s*n.
///
/// Built row by row from C(n, k)_s = sum_{j=0}^{s} C(n-1, k-j)_s with row 0 = [1].
BigCount s_binom(std::int64_t n, std::int64_t k, std::int64_t s);

/// Rows 0..n_max of the s-Pascal triangle; row n has s*n + 1 entries.
struct STriangle {
    std::int64_t s = 1;
    std::vector<std::vector<BigCount>> rows;
};

STriangle s_pascal_rows(std::int64_t s, std::int64_t n_max);

/// Ascending diagonal sum sum_{k=0}^{floor(sn/(s+1))} C(n-k, k)_s, which equals F^(s+1)_{n+1}.
BigCount diagonal_sum(std::int64_t s, std::int64_t n);

/// Solutions of x_1 + ... + x_p = n with x_i >= lower_bounds[i]:
/// C(n - sum c_i + p - 1, p - 1). Requires a nonempty bound list.
BigCount stars_and_bars(std::int64_t n, std::span<const std::int64_t> lower_bounds);

/// Checks sum_{m=r}^{n} C(m, r) = C(n+1, r+1) for every n in [r, n_max].
IdentityCheck hockey_stick_check(std::int64_t r, std::int64_t n_max);

}  // namespace schreier
