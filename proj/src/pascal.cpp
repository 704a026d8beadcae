#include "schreier/pascal.hpp"

#include <algorithm>
#include <string>

#include "schreier/errors.hpp"
#include "prefix_cache.hpp"

namespace schreier {
namespace {

using Row = std::vector<BigCount>;
using TriangleCache = detail::PrefixCache<std::int64_t, Row>;

TriangleCache& triangle_cache() {
    static TriangleCache instance;
    return instance;
}

Row next_row(const Row& prev, std::int64_t s) {
    const auto cap = static_cast<std::size_t>(s);
    Row row(prev.size() + cap);
    // Each entry of the previous row feeds s+1 consecutive entries of the next.
    for (std::size_t i = 0; i < prev.size(); ++i) {
        for (std::size_t j = 0; j <= cap; ++j) row[i + j] += prev[i];
    }
    return row;
}

std::shared_ptr<const std::vector<Row>> triangle_prefix(std::int64_t s, std::int64_t n_max) {
    return triangle_cache().at_least(s, static_cast<std::size_t>(n_max) + 1,
                                     [s](std::vector<Row>& rows, std::size_t len) {
                                         if (rows.empty()) rows.push_back(Row{BigCount(1)});
                                         while (rows.size() < len) rows.push_back(next_row(rows.back(), s));
                                     });
}

void require_capacity(std::int64_t s) {
    if (s < 1) throw DomainError("box capacity s must be >= 1 (got " + std::to_string(s) + ")");
}

}  // namespace

BigCount binom(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || n < k) return BigCount(0);
    k = std::min(k, n - k);
    BigCount out(1);
    for (std::int64_t i = 0; i < k; ++i) {
        out *= BigCount(static_cast<std::uint64_t>(n - i));
        out.divide_exact(static_cast<std::uint64_t>(i + 1));
    }
    return out;
}

BigCount s_binom(std::int64_t n, std::int64_t k, std::int64_t s) {
    require_capacity(s);
    if (n < 0 || k < 0 || k > s * n) return BigCount(0);
    return (*triangle_prefix(s, n))[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

STriangle s_pascal_rows(std::int64_t s, std::int64_t n_max) {
    require_capacity(s);
    if (n_max < 0) throw DomainError("row count must be >= 0 (got " + std::to_string(n_max) + ")");
    const auto prefix = triangle_prefix(s, n_max);
    STriangle tri;
    tri.s = s;
    tri.rows.assign(prefix->begin(), prefix->begin() + n_max + 1);
    return tri;
}

BigCount diagonal_sum(std::int64_t s, std::int64_t n) {
    require_capacity(s);
    if (n < 0) throw DomainError("diagonal index must be >= 0 (got " + std::to_string(n) + ")");
    BigCount sum;
    const std::int64_t top = s * n / (s + 1);
    for (std::int64_t k = 0; k <= top; ++k) sum += s_binom(n - k, k, s);
    return sum;
}

BigCount stars_and_bars(std::int64_t n, std::span<const std::int64_t> lower_bounds) {
    if (lower_bounds.empty()) throw DomainError("stars and bars needs at least one variable");
    if (n < 0) throw DomainError("stars and bars total must be >= 0 (got " + std::to_string(n) + ")");
    std::int64_t floor_total = 0;
    for (std::int64_t c : lower_bounds) {
        if (c < 0) throw DomainError("lower bounds must be >= 0 (got " + std::to_string(c) + ")");
        floor_total += c;
    }
    const auto p = static_cast<std::int64_t>(lower_bounds.size());
    return binom(n - floor_total + (p - 1), p - 1);
}

IdentityCheck hockey_stick_check(std::int64_t r, std::int64_t n_max) {
    if (r < 0) throw DomainError("hockey stick needs r >= 0 (got " + std::to_string(r) + ")");
    if (n_max < r) {
        throw DomainError("hockey stick needs n_max >= r (got r = " + std::to_string(r) +
                          ", n_max = " + std::to_string(n_max) + ")");
    }
    IdentityCheck result;
    BigCount running;
    for (std::int64_t n = r; n <= n_max; ++n) {
        running += binom(n, r);
        const BigCount closed = binom(n + 1, r + 1);
        ++result.points_checked;
        if (running != closed) {
            result.pass = false;
            result.first_failure = n;
            result.expected = closed;
            result.got = running;
            break;
        }
    }
    return result;
}

}  // namespace schreier
