#include "schreier/sequences.hpp"

#include <algorithm>
#include <string>

#include "schreier/errors.hpp"
#include "schreier/pascal.hpp"
#include "prefix_cache.hpp"

namespace schreier {
namespace {

using Terms = std::vector<BigCount>;

using PrefixCache = detail::PrefixCache<std::pair<SequenceKind, std::int64_t>, BigCount>;

PrefixCache& cache() {
    static PrefixCache instance;
    return instance;
}

std::size_t to_len(std::int64_t last_index) {
    return static_cast<std::size_t>(last_index) + 1;
}

// terms[i] = F_i, i >= 0
std::shared_ptr<const Terms> fib_prefix(std::int64_t n_max) {
    return cache().at_least({SequenceKind::classic_fib, 0}, to_len(n_max), [](Terms& t, std::size_t len) {
        while (t.size() < len) {
            const std::size_t i = t.size();
            t.push_back(i < 2 ? BigCount(i) : t[i - 1] + t[i - 2]);
        }
    });
}

// terms[i] = F^(s)_i, i >= 0; indices 2-s..0 are all zero.
std::shared_ptr<const Terms> sfib_prefix(std::int64_t s, std::int64_t n_max) {
    return cache().at_least({SequenceKind::s_step_fib, s}, to_len(n_max), [s](Terms& t, std::size_t len) {
        const auto width = static_cast<std::size_t>(s);
        while (t.size() < len) {
            const std::size_t i = t.size();
            if (i < 2) {
                t.emplace_back(i);
                continue;
            }
            BigCount sum;
            for (std::size_t j = 1; j <= width && j <= i; ++j) sum += t[i - j];
            t.push_back(std::move(sum));
        }
    });
}

// terms[i] = K^(u)_i for i >= 1; terms[0] is an unused placeholder.
std::shared_ptr<const Terms> kseq_prefix(std::int64_t u, std::int64_t n_max) {
    return cache().at_least({SequenceKind::k_seq, u}, to_len(n_max), [u](Terms& t, std::size_t len) {
        const auto lag = static_cast<std::size_t>(u);
        if (t.empty()) t.emplace_back(0);
        while (t.size() < len) {
            const std::size_t i = t.size();
            t.push_back(i <= lag ? BigCount(1) : t[i - 1] + t[i - lag]);
        }
    });
}

void require_param(bool ok, const char* what, std::int64_t value) {
    if (!ok) throw DomainError(std::string(what) + " (got " + std::to_string(value) + ")");
}

void require_index(std::int64_t n, std::int64_t first, const char* seq) {
    if (n < first) {
        throw DomainError(std::string(seq) + ": index " + std::to_string(n) +
                          " is below the defined range (first index " + std::to_string(first) + ")");
    }
}

}  // namespace

std::int64_t SequenceSpec::first_index() const {
    validate();
    switch (kind) {
        case SequenceKind::classic_fib: return 0;
        case SequenceKind::s_step_fib: return 2 - param;
        case SequenceKind::k_seq:
        case SequenceKind::tau: return 1;
    }
    return 0;
}

void SequenceSpec::validate() const {
    switch (kind) {
        case SequenceKind::classic_fib: return;
        case SequenceKind::s_step_fib: require_param(param >= 2, "s-step Fibonacci needs s >= 2", param); return;
        case SequenceKind::k_seq: require_param(param >= 2, "K^(u) needs u >= 2", param); return;
        case SequenceKind::tau: require_param(param >= 2, "tau needs s >= 2", param); return;
    }
}

BigCount classic_fib(std::int64_t n) {
    require_index(n, 0, "F");
    return (*fib_prefix(n))[static_cast<std::size_t>(n)];
}

BigCount s_step_fib(std::int64_t s, std::int64_t n) {
    require_param(s >= 2, "s-step Fibonacci needs s >= 2", s);
    require_index(n, 2 - s, "F^(s)");
    if (n <= 0) return BigCount(0);
    return (*sfib_prefix(s, n))[static_cast<std::size_t>(n)];
}

BigCount k_seq(std::int64_t u, std::int64_t n) {
    require_param(u >= 2, "K^(u) needs u >= 2", u);
    require_index(n, 1, "K^(u)");
    return (*kseq_prefix(u, n))[static_cast<std::size_t>(n)];
}

std::int64_t tau_index(std::int64_t s, std::int64_t n) {
    require_param(s >= 2, "tau needs s >= 2", s);
    require_index(n, 1, "tau");
    std::int64_t idx = 0;
    if (__builtin_mul_overflow(s - 1, n - 1, &idx) || __builtin_add_overflow(idx, 1, &idx)) {
        throw DomainError("tau index overflows for n = " + std::to_string(n));
    }
    return idx;
}

BigCount tau(std::int64_t s, std::int64_t n) { return k_seq(s, tau_index(s, n)); }

BigCount sequence_term(const SequenceSpec& spec, std::int64_t n) {
    switch (spec.kind) {
        case SequenceKind::classic_fib: return classic_fib(n);
        case SequenceKind::s_step_fib: return s_step_fib(spec.param, n);
        case SequenceKind::k_seq: return k_seq(spec.param, n);
        case SequenceKind::tau: return tau(spec.param, n);
    }
    return BigCount(0);
}

std::vector<std::pair<std::int64_t, BigCount>> sequence_range(const SequenceSpec& spec,
                                                              std::int64_t n_from,
                                                              std::int64_t n_to) {
    const std::int64_t first = spec.first_index();
    if (n_from > n_to) {
        throw DomainError("empty range: from " + std::to_string(n_from) + " > to " + std::to_string(n_to));
    }
    require_index(n_from, first, "sequence range");

    // Materialise the prefix once, then slice it.
    std::shared_ptr<const Terms> prefix;
    switch (spec.kind) {
        case SequenceKind::classic_fib: prefix = fib_prefix(n_to); break;
        case SequenceKind::s_step_fib: prefix = sfib_prefix(spec.param, std::max<std::int64_t>(n_to, 0)); break;
        case SequenceKind::k_seq: prefix = kseq_prefix(spec.param, n_to); break;
        case SequenceKind::tau: prefix = kseq_prefix(spec.param, tau_index(spec.param, n_to)); break;
    }

    std::vector<std::pair<std::int64_t, BigCount>> out;
    out.reserve(static_cast<std::size_t>(n_to - n_from + 1));
    for (std::int64_t n = n_from; n <= n_to; ++n) {
        if (spec.kind == SequenceKind::s_step_fib && n <= 0) {
            out.emplace_back(n, BigCount(0));
            continue;
        }
        const std::int64_t pos = spec.kind == SequenceKind::tau ? tau_index(spec.param, n) : n;
        out.emplace_back(n, (*prefix)[static_cast<std::size_t>(pos)]);
    }
    return out;
}

IdentityCheck check_tau_recurrence(std::int64_t s, std::int64_t n_max) {
    require_param(s >= 2, "tau needs s >= 2", s);
    if (n_max < s + 1) {
        throw DomainError("tau recurrence check needs n_max >= s + 1 (got n_max = " + std::to_string(n_max) + ")");
    }
    std::vector<BigCount> coeff;
    coeff.reserve(static_cast<std::size_t>(s));
    for (std::int64_t i = 1; i <= s; ++i) coeff.push_back(binom(s - 1, i - 1));

    const auto terms = sequence_range({SequenceKind::tau, s}, 1, n_max);
    auto at = [&](std::int64_t n) -> const BigCount& { return terms[static_cast<std::size_t>(n - 1)].second; };

    IdentityCheck result;
    for (std::int64_t n = s + 1; n <= n_max; ++n) {
        BigCount rhs;
        for (std::int64_t i = 1; i <= s; ++i) rhs += coeff[static_cast<std::size_t>(i - 1)] * at(n - i);
        ++result.points_checked;
        if (rhs != at(n)) {
            result.pass = false;
            result.first_failure = n;
            result.expected = rhs;
            result.got = at(n);
            break;
        }
    }
    return result;
}

}  // namespace schreier
