#include "schreier/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <charconv>
#include <thread>

#include "schreier/closed_form.hpp"
#include "schreier/errors.hpp"
#include "schreier/pascal.hpp"
#include "schreier/sequences.hpp"
#include "int_math.hpp"

namespace schreier {
namespace {

struct TheoremInfo {
    TheoremId id;
    const char* name;
    // axis name, default range, smallest allowed value
    std::vector<std::tuple<const char*, IntRange, std::int64_t>> axes;
};

const std::vector<TheoremInfo>& registry() {
    static const std::vector<TheoremInfo> table = {
        {TheoremId::T1, "T1", {{"s", {2, 5}, 2}, {"n", {1, 14}, 1}}},
        {TheoremId::T2, "T2", {{"u", {2, 5}, 2}, {"n", {1, 16}, 1}}},
        {TheoremId::T3, "T3", {{"s", {2, 4}, 2}, {"n", {1, 9}, 1}}},
        {TheoremId::T4_S, "T4_S", {{"p", {1, 3}, 1}, {"n", {1, 18}, 1}}},
        {TheoremId::T4_A, "T4_A", {{"p", {1, 3}, 1}, {"n", {1, 18}, 1}}},
        {TheoremId::T_AB, "T_AB", {{"p", {1, 3}, 1}, {"n", {1, 16}, 1}}},
        {TheoremId::COR1, "COR1", {{"n", {1, 30}, 1}}},
        {TheoremId::DIAG_SUM, "DIAG_SUM", {{"s", {1, 4}, 1}, {"n", {0, 30}, 0}}},
        {TheoremId::TAU_REC, "TAU_REC", {{"s", {2, 5}, 2}, {"n", {30, 30}, 3}}},
        {TheoremId::MULT_INVARIANCE, "MULT_INVARIANCE", {{"u", {2, 3}, 2}, {"n", {1, 14}, 1}}},
        {TheoremId::D_FIB, "D_FIB", {{"n", {1, 20}, 1}}},
        {TheoremId::HOCKEY, "HOCKEY", {{"r", {0, 6}, 0}, {"n", {25, 25}, 0}}},
        {TheoremId::STARS_BARS, "STARS_BARS", {{"n", {0, 12}, 0}, {"p", {1, 4}, 1}, {"b", {0, 3}, 0}}},
    };
    return table;
}

const TheoremInfo& info(TheoremId id) {
    for (const auto& t : registry()) {
        if (t.id == id) return t;
    }
    throw DomainError("unknown theorem id");
}

// Per grid point results, merged into the report in grid order.
struct PointOutcome {
    std::uint64_t checked = 0;
    std::vector<Failure> failures;
    std::vector<Skip> skipped;
};

class PointContext {
public:
    PointContext(Params params, const VerifyOptions& options, const ClosedFormTable& table)
        : params_(std::move(params)), options_(options), table_(table) {}

    std::int64_t operator[](std::string_view axis) const {
        for (const auto& [name, value] : params_) {
            if (name == axis) return value;
        }
        throw DomainError("missing axis " + std::string(axis));
    }

    const ClosedFormTable& table() const { return table_; }
    const EnumOptions& enum_options() const { return enum_options_; }
    std::uint64_t budget() const { return options_.budget.max_nodes; }
    PointOutcome& outcome() { return outcome_; }
    const Params& params() const { return params_; }

    void compare(std::string sources, const BigCount& expected, const BigCount& got, const Params& at) {
        if (expected != got) outcome_.failures.push_back({at, expected, got, std::move(sources)});
    }
    void compare(std::string sources, const BigCount& expected, const BigCount& got) {
        compare(std::move(sources), expected, got, params_);
    }

    // Runs an enumeration oracle; a blown budget becomes a skip entry.
    template <typename Oracle>
    std::optional<BigCount> oracle(std::string_view label, Oracle&& run) {
        try {
            return run();
        } catch (const BudgetExceeded& e) {
            skip("budget_exceeded", std::string(label) + ": " + e.what());
            return std::nullopt;
        }
    }

    void skip(std::string reason, std::string detail) { skip(std::move(reason), std::move(detail), params_); }
    void skip(std::string reason, std::string detail, const Params& at) {
        outcome_.skipped.push_back({at, std::move(reason), std::move(detail)});
    }

    void count_point(std::uint64_t n = 1) { outcome_.checked += n; }

private:
    Params params_;
    const VerifyOptions& options_;
    const ClosedFormTable& table_;
    EnumOptions enum_options_{options_.budget, false, 0, true};
    PointOutcome outcome_;
};

std::optional<BigCount> enum_count(PointContext& ctx, const FamilySpec& spec) {
    return ctx.oracle(to_string(spec.tag), [&] { return enum_family(spec, ctx.enum_options()).count; });
}

void check_t1(PointContext& ctx) {
    const auto s = ctx["s"], n = ctx["n"];
    const BigCount seq = s_step_fib(s, n);
    ctx.compare("closed vs sequence", seq, ctx.table().count_A(s, n));
    if (auto e = enum_count(ctx, FamilySpec::a_s(s, n))) ctx.compare("enum vs sequence", seq, *e);
    ctx.count_point();
}

void check_t2(PointContext& ctx) {
    const auto u = ctx["u"], n = ctx["n"];
    const BigCount seq = k_seq(u, n);
    const BigCount closed = ctx.table().count_B(u, n);
    ctx.compare("closed vs sequence", seq, closed);
    if (n <= u) ctx.compare("base case 1 vs closed", BigCount(1), closed);
    const auto minimal = enum_count(ctx, FamilySpec::b_su(u, n, {CapSequence::Kind::minimal, {}}));
    const auto uniform = enum_count(ctx, FamilySpec::b_su(u, n, {CapSequence::Kind::uniform, {}}));
    if (minimal) ctx.compare("enum(minimal caps) vs sequence", seq, *minimal);
    if (uniform) ctx.compare("enum(uniform caps) vs sequence", seq, *uniform);
    if (minimal && uniform) ctx.compare("enum(minimal caps) vs enum(uniform caps)", *minimal, *uniform);
    ctx.count_point();
}

void check_t3(PointContext& ctx) {
    const auto s = ctx["s"], n = ctx["n"];
    const BigCount seq = k_seq(s, tau_index(s, n));
    ctx.compare("tau vs K^(s)", seq, tau(s, n));
    ctx.compare("closed vs sequence", seq, ctx.table().count_C(s, n));
    if (auto e = enum_count(ctx, FamilySpec::c_s(s, n))) ctx.compare("enum vs sequence", seq, *e);
    ctx.count_point();
}

// K_{m,q} against the composition oracle, in total and per length.
void check_compositions(PointContext& ctx, std::int64_t m, std::int64_t q, const BigCount& reference) {
    auto total = ctx.oracle("compositions", [&] { return enum_compositions(m, q, ctx.enum_options()).count; });
    if (!total) return;
    ctx.compare("compositions oracle vs K_{n,p}", *total, reference);
    for (std::int64_t k = 1; k <= m; ++k) {
        auto by_len = ctx.oracle("compositions by length", [&] {
            return enum_compositions_by_length(m, q, k, ctx.enum_options().budget);
        });
        if (!by_len) return;
        Params at = ctx.params();
        at.emplace_back("k", k);
        ctx.compare("compositions oracle vs K_{n,p,k}", *by_len, ctx.table().count_K_npk(m, q, k), at);
    }
}

void check_t4_s(PointContext& ctx) {
    const auto p = ctx["p"], n = ctx["n"];
    const BigCount k_np = ctx.table().count_K_np(n, p - 1);
    ctx.compare("K_{n,p-1} vs closed", k_np, ctx.table().count_S(p, n));
    if (n == 1) ctx.compare("|S^p_1| = 0 vs closed", BigCount(0), ctx.table().count_S(p, n));
    if (auto e = enum_count(ctx, FamilySpec::s_p(p, n))) ctx.compare("enum vs K_{n,p-1}", *e, k_np);
    check_compositions(ctx, n, p - 1, k_np);
    ctx.count_point();
}

void check_t4_a(PointContext& ctx) {
    const auto p = ctx["p"], n = ctx["n"];
    const BigCount k_np = ctx.table().count_K_np(n + 1, p - 1);
    const BigCount closed = ctx.table().count_Ap(p, n);
    ctx.compare("K_{n+1,p-1} vs closed", k_np, closed);
    ctx.compare("count_S(p,n+1) vs closed", ctx.table().count_S(p, n + 1), closed);
    if (auto e = enum_count(ctx, FamilySpec::a_p(p, n))) ctx.compare("enum vs K_{n+1,p-1}", *e, k_np);
    check_compositions(ctx, n + 1, p - 1, k_np);
    ctx.count_point();
}

void check_t_ab(PointContext& ctx) {
    const auto p = ctx["p"], n = ctx["n"];
    const BigCount a = ctx.table().count_Ap(p, n);
    const BigCount b = ctx.table().count_Bp(p, n);
    ctx.compare("closed A_p vs closed B_p", a, b);
    if (auto e = enum_count(ctx, FamilySpec::a_p(p, n))) ctx.compare("enum A_p vs closed A_p", *e, a);
    if (auto e = enum_count(ctx, FamilySpec::b_p(p, n))) ctx.compare("enum B_p vs closed B_p", *e, b);
    ctx.count_point();
}

void check_cor1(PointContext& ctx) {
    const auto n = ctx["n"];
    const BigCount fib = classic_fib(n - 1);
    const BigCount closed = ctx.table().count_K_np(n, 0);
    ctx.compare("F_{n-1} vs K_{n,0}", fib, closed);
    check_compositions(ctx, n, 0, fib);
    ctx.count_point();
}

void check_diag_sum(PointContext& ctx) {
    const auto s = ctx["s"], n = ctx["n"];
    ctx.compare("F^(s+1)_{n+1} vs diagonal sum", s_step_fib(s + 1, n + 1), ctx.table().diagonal_sum(s, n));
    // Row entries against brute-force occupancy where the row is small enough.
    if (n <= 6 && s <= 3) {
        const std::uint64_t cost = detail::sat_pow(static_cast<std::uint64_t>(s + 1), static_cast<std::uint64_t>(n));
        if (cost > ctx.budget()) {
            ctx.skip("budget_exceeded", "occupancy: " + std::to_string(cost) + " vectors");
        } else {
            for (std::int64_t k = 0; k <= s * n; ++k) {
                Params at = ctx.params();
                at.emplace_back("k", k);
                ctx.compare("occupancy oracle vs s-binomial", enum_occupancy(n, k, s), ctx.table().s_binom(n, k, s), at);
            }
        }
    }
    ctx.count_point();
}

bool tau_recurrence_asserted(std::int64_t s) { return s == 2 || s == 4; }

void check_tau_rec(PointContext& ctx) {
    const auto s = ctx["s"], n = ctx["n"];
    const IdentityCheck res = check_tau_recurrence(s, n);
    if (res.pass) {
        ctx.count_point();
        return;
    }
    Params at = ctx.params();
    at.emplace_back("at", *res.first_failure);
    if (tau_recurrence_asserted(s)) {
        ctx.compare("binomial-weighted recurrence vs tau", res.expected, res.got, at);
        ctx.count_point();
    } else {
        ctx.skip("unasserted", "binomial-weighted recurrence fails at n = " + std::to_string(*res.first_failure), at);
    }
}

void check_mult_invariance(PointContext& ctx) {
    const auto u = ctx["u"], n = ctx["n"];
    ctx.compare("sequence vs closed", k_seq(u, n), ctx.table().count_B(u, n));
    const auto minimal = enum_count(ctx, FamilySpec::b_su(u, n, {CapSequence::Kind::minimal, {}}));
    const auto uniform = enum_count(ctx, FamilySpec::b_su(u, n, {CapSequence::Kind::uniform, {}}));
    if (minimal && uniform) ctx.compare("enum(minimal caps) vs enum(uniform caps)", *minimal, *uniform);
    ctx.count_point();
}

void check_d_fib(PointContext& ctx) {
    const auto n = ctx["n"];
    const BigCount fib = classic_fib(n);
    // D is B_p at p = 1.
    ctx.compare("F_n vs closed B_1", fib, ctx.table().count_Bp(1, n));
    if (auto e = enum_count(ctx, FamilySpec::d(n))) ctx.compare("F_n vs enum D", fib, *e);
    ctx.count_point();
}

void check_hockey(PointContext& ctx) {
    const IdentityCheck res = hockey_stick_check(ctx["r"], ctx["n"]);
    if (!res.pass) {
        Params at = ctx.params();
        at.emplace_back("at", *res.first_failure);
        ctx.compare("C(n+1,r+1) vs running sum", res.expected, res.got, at);
    }
    ctx.count_point();
}

void check_stars_bars(PointContext& ctx, IntRange bounds_range) {
    const auto n = ctx["n"], p = ctx["p"];
    if (bounds_range.empty()) return;
    std::vector<std::int64_t> bounds(static_cast<std::size_t>(p), bounds_range.lo);
    while (true) {
        Params at = {{"n", n}, {"p", p}};
        std::uint64_t cost = 1;
        for (std::size_t i = 0; i < bounds.size(); ++i) {
            at.emplace_back("c" + std::to_string(i + 1), bounds[i]);
            cost = detail::sat_mul(cost, static_cast<std::uint64_t>(std::max<std::int64_t>(n - bounds[i] + 1, 1)));
        }
        if (cost > ctx.budget()) {
            ctx.skip("budget_exceeded", "bounded solutions: " + std::to_string(cost) + " vectors", at);
        } else {
            ctx.compare("brute force vs stars and bars", enum_bounded_solutions(n, bounds),
                        ctx.table().stars_and_bars(n, bounds), at);
            ctx.count_point();
        }
        std::size_t i = 0;
        while (i < bounds.size() && bounds[i] == bounds_range.hi) bounds[i++] = bounds_range.lo;
        if (i == bounds.size()) break;
        ++bounds[i];
    }
}

Grid merged_grid(const TheoremInfo& ti, const Grid& overrides, bool strict) {
    Grid grid;
    for (const auto& [name, range, floor] : ti.axes) grid.axes[name] = range;
    for (const auto& [name, range] : overrides.axes) {
        auto it = grid.axes.find(name);
        if (it == grid.axes.end()) {
            if (strict) throw DomainError(std::string(ti.name) + " has no axis '" + name + "'");
            continue;
        }
        it->second = range;
    }
    for (const auto& [name, range, floor] : ti.axes) {
        const IntRange& r = grid.axes.at(name);
        if (!r.empty() && r.lo < floor) {
            throw DomainError(std::string(ti.name) + ": axis " + name + " must be >= " + std::to_string(floor) +
                              " (got " + r.to_string() + ")");
        }
    }
    const auto pairwise_floor = [&](const char* lower, const char* upper, std::int64_t gap, const char* what) {
        const IntRange& a = grid.axes.at(lower);
        const IntRange& b = grid.axes.at(upper);
        if (!a.empty() && !b.empty() && b.lo < a.hi + gap) {
            throw DomainError(std::string(ti.name) + ": " + what);
        }
    };
    if (ti.id == TheoremId::TAU_REC) pairwise_floor("s", "n", 1, "n must be >= s + 1");
    if (ti.id == TheoremId::HOCKEY) pairwise_floor("r", "n", 0, "n must be >= r");
    return grid;
}

std::vector<Params> grid_points(const Grid& grid, const std::vector<std::string>& axis_names) {
    std::vector<Params> points;
    for (const auto& name : axis_names) {
        if (grid.axes.at(name).empty()) return points;
    }
    Params current;
    for (const auto& name : axis_names) current.emplace_back(name, grid.axes.at(name).lo);
    // Odometer with the last axis varying fastest.
    while (true) {
        points.push_back(current);
        std::size_t i = axis_names.size();
        while (i > 0 && current[i - 1].second == grid.axes.at(axis_names[i - 1]).hi) {
            current[i - 1].second = grid.axes.at(axis_names[i - 1]).lo;
            --i;
        }
        if (i == 0) return points;
        ++current[i - 1].second;
    }
}

void evaluate(TheoremId id, PointContext& ctx, const Grid& grid) {
    switch (id) {
        case TheoremId::T1: check_t1(ctx); break;
        case TheoremId::T2: check_t2(ctx); break;
        case TheoremId::T3: check_t3(ctx); break;
        case TheoremId::T4_S: check_t4_s(ctx); break;
        case TheoremId::T4_A: check_t4_a(ctx); break;
        case TheoremId::T_AB: check_t_ab(ctx); break;
        case TheoremId::COR1: check_cor1(ctx); break;
        case TheoremId::DIAG_SUM: check_diag_sum(ctx); break;
        case TheoremId::TAU_REC: check_tau_rec(ctx); break;
        case TheoremId::MULT_INVARIANCE: check_mult_invariance(ctx); break;
        case TheoremId::D_FIB: check_d_fib(ctx); break;
        case TheoremId::HOCKEY: check_hockey(ctx); break;
        case TheoremId::STARS_BARS: check_stars_bars(ctx, grid.axes.at("b")); break;
    }
}

VerificationReport run(TheoremId id, const Grid& overrides, const VerifyOptions& options,
                       const ClosedFormTable& table, bool strict) {
    const auto started = std::chrono::steady_clock::now();
    const TheoremInfo& ti = info(id);
    VerificationReport report;
    report.theorem = id;
    report.grid = merged_grid(ti, overrides, strict);

    std::vector<std::string> point_axes;
    for (const auto& [name, range, floor] : ti.axes) {
        if (id == TheoremId::STARS_BARS && std::string_view(name) == "b") continue;
        point_axes.emplace_back(name);
    }
    const std::vector<Params> points = grid_points(report.grid, point_axes);

    std::vector<PointOutcome> outcomes(points.size());
    std::vector<std::exception_ptr> errors(points.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            try {
                PointContext ctx(points[i], options, table);
                evaluate(id, ctx, report.grid);
                outcomes[i] = std::move(ctx.outcome());
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(points.size(), 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    // Points were generated in parameter order, so assembly is deterministic.
    for (auto& o : outcomes) {
        report.points_checked += o.checked;
        std::move(o.failures.begin(), o.failures.end(), std::back_inserter(report.failures));
        std::move(o.skipped.begin(), o.skipped.end(), std::back_inserter(report.skipped));
    }
    report.wall_time = std::chrono::steady_clock::now() - started;
    return report;
}

}  // namespace

std::string to_string(TheoremId id) { return info(id).name; }

std::optional<TheoremId> parse_theorem(std::string_view name) {
    for (const auto& t : registry()) {
        if (name == t.name) return t.id;
    }
    return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
    static const std::vector<TheoremId> ids = [] {
        std::vector<TheoremId> out;
        for (const auto& t : registry()) out.push_back(t.id);
        return out;
    }();
    return ids;
}

std::string IntRange::to_string() const { return std::to_string(lo) + ".." + std::to_string(hi); }

IntRange IntRange::parse(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        std::int64_t v = 0;
        const auto* end = part.data() + part.size();
        const auto [ptr, ec] = std::from_chars(part.data(), end, v);
        if (part.empty() || ec != std::errc{} || ptr != end) {
            throw DomainError("bad range '" + std::string(text) + "', expected a..b or a single integer");
        }
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto v = parse_int(text);
        return {v, v};
    }
    return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
}

std::string Grid::to_string() const {
    std::string out;
    for (const auto& [name, range] : axes) {
        if (!out.empty()) out += ' ';
        out += name + "=" + range.to_string();
    }
    return out;
}

Grid default_grid(TheoremId id) { return merged_grid(info(id), {}, true); }

std::string to_string(const Params& params) {
    std::string out;
    for (const auto& [name, value] : params) {
        if (!out.empty()) out += ' ';
        out += name + "=" + std::to_string(value);
    }
    return out;
}

ClosedFormTable ClosedFormTable::standard() {
    ClosedFormTable t;
    t.count_A = schreier::count_A;
    t.count_B = schreier::count_B;
    t.count_C = schreier::count_C;
    t.count_K_npk = schreier::count_K_npk;
    t.count_K_np = schreier::count_K_np;
    t.count_S = schreier::count_S;
    t.count_Ap = schreier::count_Ap;
    t.count_Bp = schreier::count_Bp;
    t.s_binom = schreier::s_binom;
    t.diagonal_sum = schreier::diagonal_sum;
    t.stars_and_bars = [](std::int64_t n, std::span<const std::int64_t> bounds) { return schreier::stars_and_bars(n, bounds); };
    return t;
}

VerificationReport verify(TheoremId theorem, const Grid& grid_overrides, const VerifyOptions& options,
                          const ClosedFormTable& table) {
    return run(theorem, grid_overrides, options, table, true);
}

std::vector<VerificationReport> verify_all(const VerifyOptions& options, const Grid& grid_overrides,
                                           const ClosedFormTable& table) {
    std::vector<VerificationReport> reports;
    for (TheoremId id : all_theorems()) reports.push_back(run(id, grid_overrides, options, table, false));
    return reports;
}

}  // namespace schreier
