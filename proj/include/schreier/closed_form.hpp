#pragma once

#include <cstdint>

#include "schreier/bigcount.hpp"

namespace schreier {

// Polynomial-time counters, one per family. Each is a binomial sum whose
// out-of-range terms vanish under the zero convention of binom().

/// sum_{k=0}^{floor((n-1)(s-1)/s)} C(n-1-k, k)_{s-1}; equals F^(s)_n.
BigCount count_A(std::int64_t s, std::int64_t n);

/// sum_{k=0}^{floor((n-1)/u)} C(k+n-uk-1, k); equals K^(u)_n.
BigCount count_B(std::int64_t u, std::int64_t n);

/// sum_{k=1}^{floor((n(s-1)+1)/s)} C(n(s-1)-ks+k, k-1); equals K^(s)_{(s-1)(n-1)+1}.
BigCount count_C(std::int64_t s, std::int64_t n);

/// Compositions of n into exactly k parts, each greater than k^p: C(n - k^(p+1) - 1, k - 1).
BigCount count_K_npk(std::int64_t n, std::int64_t p, std::int64_t k);

/// sum_{k=1}^{n} count_K_npk(n, p, k).
BigCount count_K_np(std::int64_t n, std::int64_t p);

/// sum_{k=1}^{n} C(n - k^p - 1, k - 1); equals K_{n,p-1}.
BigCount count_S(std::int64_t p, std::int64_t n);

/// sum_{k=1}^{n} C(n - k^p, k - 1); equals K_{n+1,p-1}.
BigCount count_Ap(std::int64_t p, std::int64_t n);

/// 1 + sum_{k=2}^{n} C(n - k^p, k - 1). The leading 1 is the empty set, which
/// stands in for the singletons that cannot satisfy max - 1 in S.
BigCount count_Bp(std::int64_t p, std::int64_t n);

}  // namespace schreier
