#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "schreier/bigcount.hpp"

namespace schreier {

// Index conventions:
//   classic_fib   F_0 = 0, F_1 = 1                         n >= 0
//   s_step_fib    F^(s)_{2-s} = ... = F^(s)_0 = 0, F^(s)_1 = 1  n >= 2 - s
//   k_seq         K^(u)_1 = ... = K^(u)_u = 1               n >= 1
//   tau           tau_n = K^(s)_{(s-1)(n-1)+1}              n >= 1
// Indices below the domain raise DomainError.

enum class SequenceKind { classic_fib, s_step_fib, k_seq, tau };

struct SequenceSpec {
    SequenceKind kind = SequenceKind::classic_fib;
    /// s for s_step_fib and tau, u for k_seq; ignored for classic_fib.
    std::int64_t param = 2;

    /// Smallest valid index. Throws DomainError when param is invalid for kind.
    std::int64_t first_index() const;
    void validate() const;
};

BigCount classic_fib(std::int64_t n);
BigCount s_step_fib(std::int64_t s, std::int64_t n);
BigCount k_seq(std::int64_t u, std::int64_t n);
BigCount tau(std::int64_t s, std::int64_t n);

/// Position of tau_n inside K^(s), i.e. (s-1)(n-1)+1.
std::int64_t tau_index(std::int64_t s, std::int64_t n);

BigCount sequence_term(const SequenceSpec& spec, std::int64_t n);

/// Inclusive run of consecutive terms [n_from, n_to].
std::vector<std::pair<std::int64_t, BigCount>> sequence_range(const SequenceSpec& spec,
                                                              std::int64_t n_from,
                                                              std::int64_t n_to);

/// Outcome of checking a linear identity index by index.
struct IdentityCheck {
    bool pass = true;
    std::int64_t points_checked = 0;
    std::optional<std::int64_t> first_failure;
    BigCount expected;  // right-hand side at first_failure
    BigCount got;       // left-hand side at first_failure
};

/// Checks tau_n = sum_{i=1}^{s} C(s-1, i-1) tau_{n-i} for n in [s+1, n_max].
///
/// Only s = 4 is shown in the literature (coefficients 1,3,3,1); for other s the
/// binomial coefficient pattern is the candidate under test.
IdentityCheck check_tau_recurrence(std::int64_t s, std::int64_t n_max);

}  // namespace schreier
