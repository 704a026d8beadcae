#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schreier/bigcount.hpp"
#include "schreier/enumerate.hpp"

namespace schreier {

enum class TheoremId {
    T1,               // |A_s| = F^(s)_n
    T2,               // |B_su| = K^(u)_n
    T3,               // |C_s| = K^(s)_{(s-1)(n-1)+1}
    T4_S,             // |S_p| = K_{n,p-1}
    T4_A,             // |A_p| = K_{n+1,p-1}
    T_AB,             // |A_p| = |B_p|
    COR1,             // K_{n,0} = F_{n-1}
    DIAG_SUM,         // s-Pascal diagonal sums = F^(s+1)_{n+1}
    TAU_REC,          // order-s recurrence for tau
    MULT_INVARIANCE,  // |B_su| does not depend on the admissible caps
    D_FIB,            // |D_n| = F_n
    HOCKEY,           // hockey-stick identity
    STARS_BARS,       // stars and bars against brute force
};

std::string to_string(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);
const std::vector<TheoremId>& all_theorems();

/// Inclusive integer range; empty when lo > hi.
struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = -1;

    bool empty() const { return lo > hi; }
    std::string to_string() const;
    /// Accepts "a..b" or a single integer "a". Throws DomainError otherwise.
    static IntRange parse(std::string_view text);
    bool operator==(const IntRange&) const = default;
};

/// Named parameter axes. Axis meaning depends on the theorem; HOCKEY and
/// TAU_REC read "n" as the upper end of the checked run, STARS_BARS reads "p"
/// as the number of variables and "b" as the range of every lower bound.
struct Grid {
    std::map<std::string, IntRange> axes;

    std::string to_string() const;
    bool operator==(const Grid&) const = default;
};

Grid default_grid(TheoremId id);

using Params = std::vector<std::pair<std::string, std::int64_t>>;

std::string to_string(const Params& params);

struct Failure {
    Params params;
    BigCount expected;
    BigCount got;
    std::string sources;  // e.g. "enum vs sequence"
};

struct Skip {
    Params params;
    std::string reason;  // machine-readable code: budget_exceeded, unasserted
    std::string detail;
};

struct VerificationReport {
    TheoremId theorem = TheoremId::T1;
    Grid grid;
    std::uint64_t points_checked = 0;
    std::vector<Failure> failures;
    std::vector<Skip> skipped;
    std::chrono::duration<double> wall_time{0};

    bool passed() const { return failures.empty(); }
    /// A pass that checked nothing.
    bool vacuous() const { return passed() && points_checked == 0; }
};

/// Every closed-form counter the harness checks, routed through one table so a
/// caller can substitute a deliberately broken counter and watch it get caught.
struct ClosedFormTable {
    std::function<BigCount(std::int64_t, std::int64_t)> count_A;
    std::function<BigCount(std::int64_t, std::int64_t)> count_B;
    std::function<BigCount(std::int64_t, std::int64_t)> count_C;
    std::function<BigCount(std::int64_t, std::int64_t, std::int64_t)> count_K_npk;
    std::function<BigCount(std::int64_t, std::int64_t)> count_K_np;
    std::function<BigCount(std::int64_t, std::int64_t)> count_S;
    std::function<BigCount(std::int64_t, std::int64_t)> count_Ap;
    std::function<BigCount(std::int64_t, std::int64_t)> count_Bp;
    std::function<BigCount(std::int64_t, std::int64_t, std::int64_t)> s_binom;
    std::function<BigCount(std::int64_t, std::int64_t)> diagonal_sum;
    std::function<BigCount(std::int64_t, std::span<const std::int64_t>)> stars_and_bars;

    static ClosedFormTable standard();
};

struct VerifyOptions {
    EnumerationBudget budget;
    /// Worker threads for grid points; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

/// Runs one theorem over `grid_overrides` merged onto its default grid.
/// Throws DomainError for an axis the theorem does not use or a value outside
/// its domain. Oracle points that exceed the budget are recorded as skipped.
VerificationReport verify(TheoremId theorem, const Grid& grid_overrides = {}, const VerifyOptions& options = {},
                          const ClosedFormTable& table = ClosedFormTable::standard());

/// Every theorem on its default grid. Override axes apply to each theorem
/// that has an axis of that name.
std::vector<VerificationReport> verify_all(const VerifyOptions& options = {}, const Grid& grid_overrides = {},
                                           const ClosedFormTable& table = ClosedFormTable::standard());

}  // namespace schreier
