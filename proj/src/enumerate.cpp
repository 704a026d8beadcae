#include "schreier/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "schreier/errors.hpp"
#include "schreier/pascal.hpp"
#include "int_math.hpp"

namespace schreier {
namespace {

using detail::sat_add;
using detail::sat_mul;
using detail::sat_pow;

constexpr std::int64_t kMaxColors = 31;

std::string str(std::int64_t v) { return std::to_string(v); }

// Membership rules shared by every family: a nonempty member must satisfy
// min >= min_required(|member|), a nondecreasing function of cardinality.
struct Rules {
    FamilyTag tag;
    std::uint64_t u = 0;
    std::uint64_t p = 0;
    bool requires_n = false;
    bool allow_empty = false;
    bool adjacent_max = false;

    std::uint64_t min_required(std::uint64_t card) const {
        switch (tag) {
            case FamilyTag::A_s:
            case FamilyTag::C_s:
            case FamilyTag::D: return card;
            case FamilyTag::B_su: return sat_add(sat_mul(u, card), 1);
            case FamilyTag::S_p: return sat_add(sat_pow(card, p), 1);
            case FamilyTag::A_p:
            case FamilyTag::B_p: return sat_pow(card, p);
        }
        return card;
    }
};

Rules rules_for(const FamilySpec& spec) {
    Rules r{spec.tag};
    r.u = static_cast<std::uint64_t>(std::max<std::int64_t>(spec.u, 0));
    r.p = static_cast<std::uint64_t>(std::max<std::int64_t>(spec.p, 0));
    switch (spec.tag) {
        case FamilyTag::A_s:
        case FamilyTag::C_s:
        case FamilyTag::S_p:
        case FamilyTag::A_p: r.requires_n = true; break;
        case FamilyTag::B_su: r.allow_empty = true; break;
        case FamilyTag::D:
        case FamilyTag::B_p:
            r.allow_empty = true;
            r.adjacent_max = true;
            break;
    }
    return r;
}

// Universe as per-value slot counts. For a multiset universe slots[v] is the
// multiplicity cap; for a colored universe it is the number of distinct colors
// (selections are bitmasks over those colors).
struct Universe {
    std::int64_t n = 0;
    bool colored = false;
    std::vector<std::int64_t> slots;  // index v = 1..n; slots[0] unused
};

Universe universe_for(const FamilySpec& spec) {
    Universe uni;
    uni.n = spec.n;
    uni.slots.assign(static_cast<std::size_t>(spec.n) + 1, 0);
    switch (spec.tag) {
        case FamilyTag::A_s:
            for (std::int64_t v = 1; v < spec.n; ++v) uni.slots[static_cast<std::size_t>(v)] = spec.s - 1;
            uni.slots.back() = 1;
            break;
        case FamilyTag::B_su: {
            const auto caps = spec.mult_seq.resolve(spec.u, spec.n);
            for (std::int64_t v = 1; v <= spec.n; ++v) {
                uni.slots[static_cast<std::size_t>(v)] = caps[static_cast<std::size_t>(v - 1)];
            }
            break;
        }
        case FamilyTag::C_s:
            uni.colored = true;
            for (std::int64_t v = 1; v < spec.n; ++v) uni.slots[static_cast<std::size_t>(v)] = spec.s - 1;
            uni.slots.back() = 1;
            break;
        case FamilyTag::D:
        case FamilyTag::S_p:
        case FamilyTag::A_p:
        case FamilyTag::B_p:
            std::fill(uni.slots.begin() + 1, uni.slots.end(), 1);
            break;
    }
    return uni;
}

class FamilySearch {
public:
    FamilySearch(const FamilySpec& spec, const EnumOptions& options)
        : spec_(spec), options_(options), rules_(rules_for(spec)), uni_(universe_for(spec)) {
        selection_.assign(uni_.slots.size(), 0);
    }

    FamilyEnumeration run() {
        visit(uni_.n, 0, 0);
        FamilyEnumeration out;
        out.count = BigCount(count_);
        out.nodes_visited = nodes_;
        out.members = std::move(members_);
        std::sort(out.members.begin(), out.members.end());
        return out;
    }

private:
    std::int64_t multiplicity(std::int64_t v) const {
        const auto sel = selection_[static_cast<std::size_t>(v)];
        return uni_.colored ? std::popcount(sel) : static_cast<std::int64_t>(sel);
    }

    // The full membership predicate, evaluated from scratch on the selection.
    bool is_member() const {
        std::uint64_t card = 0;
        std::int64_t lo = 0;
        std::int64_t hi = 0;
        for (std::int64_t v = 1; v <= uni_.n; ++v) {
            const std::int64_t m = multiplicity(v);
            if (m == 0) continue;
            if (lo == 0) lo = v;
            hi = v;
            card += static_cast<std::uint64_t>(m);
        }
        if (card == 0) return rules_.allow_empty && !rules_.requires_n;
        if (rules_.requires_n && multiplicity(uni_.n) == 0) return false;
        if (rules_.adjacent_max && (hi < 2 || multiplicity(hi - 1) == 0)) return false;
        return static_cast<std::uint64_t>(lo) >= rules_.min_required(card);
    }

    void record_leaf() {
        if (!is_member()) return;
        ++count_;
        if (!options_.list_members) return;
        if (members_.size() >= options_.listing_cap) throw ListingCapExceeded(options_.listing_cap);
        SubMultiset member;
        for (std::int64_t v = 1; v <= uni_.n; ++v) {
            const auto sel = selection_[static_cast<std::size_t>(v)];
            if (uni_.colored && v < uni_.n) {
                for (std::int64_t c = 0; c < uni_.slots[static_cast<std::size_t>(v)]; ++c) {
                    if (sel & (1U << c)) member.elements.push_back({v, c + 1});
                }
            } else {
                const std::int64_t m = multiplicity(v);
                for (std::int64_t i = 0; i < m; ++i) member.elements.push_back({v, 0});
            }
        }
        members_.push_back(std::move(member));
    }

    // v: next value to decide (descending); card: elements chosen so far;
    // top: largest chosen value (0 while nothing is chosen).
    void visit(std::int64_t v, std::uint64_t card, std::int64_t top) {
        if (++nodes_ > options_.budget.max_nodes) {
            throw BudgetExceeded(estimate_cost(spec_), options_.budget.max_nodes);
        }
        if (v == 0) {
            record_leaf();
            return;
        }
        const bool prune = options_.prune;
        if (prune) {
            // The element just below the maximum had to be taken.
            if (rules_.adjacent_max && card == 1 && v < top - 1) return;
            // Nothing at or below v can be added any more; the rest stays empty.
            if (static_cast<std::uint64_t>(v) < rules_.min_required(card + 1)) {
                record_leaf();
                return;
            }
        }

        const std::int64_t slots = uni_.slots[static_cast<std::size_t>(v)];
        const std::uint64_t options = uni_.colored ? (std::uint64_t{1} << slots) : static_cast<std::uint64_t>(slots) + 1;
        auto& sel = selection_[static_cast<std::size_t>(v)];
        for (std::uint64_t opt = 0; opt < options; ++opt) {
            const std::uint64_t m = uni_.colored ? static_cast<std::uint64_t>(std::popcount(opt)) : opt;
            if (prune) {
                if (m == 0) {
                    if (rules_.requires_n && v == uni_.n) continue;
                    if (rules_.adjacent_max && card == 1 && v == top - 1) continue;
                } else if (static_cast<std::uint64_t>(v) < rules_.min_required(card + m)) {
                    if (uni_.colored) continue;
                    break;  // multiplicity only grows from here
                }
            }
            sel = static_cast<std::uint32_t>(opt);
            visit(v - 1, card + m, (top == 0 && m > 0) ? v : top);
        }
        sel = 0;
    }

    const FamilySpec& spec_;
    const EnumOptions& options_;
    Rules rules_;
    Universe uni_;
    std::vector<std::uint32_t> selection_;
    std::uint64_t nodes_ = 0;
    std::uint64_t count_ = 0;
    std::vector<SubMultiset> members_;
};

// Enumerates compositions of exactly `parts` parts, each >= lower.
class CompositionSearch {
public:
    CompositionSearch(std::uint64_t budget, bool list, std::uint64_t cap, std::vector<Composition>* sink)
        : budget_(budget), list_(list), cap_(cap), sink_(sink) {}

    void run(std::int64_t n, std::int64_t parts, std::int64_t lower) {
        lower_ = lower;
        current_.clear();
        visit(parts, n);
    }

    std::uint64_t count() const { return count_; }
    std::uint64_t nodes() const { return nodes_; }
    BigCount projected = BigCount(0);

private:
    void visit(std::int64_t parts_left, std::int64_t remaining) {
        if (++nodes_ > budget_) throw BudgetExceeded(projected, budget_);
        if (parts_left == 0) {
            if (remaining != 0) return;
            ++count_;
            if (list_) {
                if (sink_->size() >= cap_) throw ListingCapExceeded(cap_);
                sink_->push_back(Composition{current_});
            }
            return;
        }
        if (parts_left == 1) {
            if (remaining < lower_) return;
            current_.push_back(remaining);
            visit(0, 0);
            current_.pop_back();
            return;
        }
        const std::int64_t hi = remaining - (parts_left - 1) * lower_;
        for (std::int64_t x = lower_; x <= hi; ++x) {
            current_.push_back(x);
            visit(parts_left - 1, remaining - x);
            current_.pop_back();
        }
    }

    std::uint64_t budget_;
    bool list_;
    std::uint64_t cap_;
    std::vector<Composition>* sink_;
    std::int64_t lower_ = 1;
    std::vector<std::int64_t> current_;
    std::uint64_t nodes_ = 0;
    std::uint64_t count_ = 0;
};

// Smallest admissible part for a k-part composition under exponent p: k^p + 1.
// Returns nullopt once k * (k^p + 1) exceeds n, after which no longer length fits.
std::optional<std::int64_t> part_floor(std::int64_t n, std::int64_t p, std::int64_t k) {
    const std::uint64_t lower = sat_add(sat_pow(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(p)), 1);
    if (sat_mul(lower, static_cast<std::uint64_t>(k)) > static_cast<std::uint64_t>(n)) return std::nullopt;
    return static_cast<std::int64_t>(lower);
}

void require_composition_args(std::int64_t n, std::int64_t p) {
    if (n < 1) throw DomainError("compositions need n >= 1 (got " + str(n) + ")");
    if (p < 0) throw DomainError("compositions need p >= 0 (got " + str(p) + ")");
}

}  // namespace

std::string to_string(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::A_s: return "A_s";
        case FamilyTag::B_su: return "B_su";
        case FamilyTag::C_s: return "C_s";
        case FamilyTag::D: return "D";
        case FamilyTag::S_p: return "S_p";
        case FamilyTag::A_p: return "A_p";
        case FamilyTag::B_p: return "B_p";
    }
    return "?";
}

std::vector<std::int64_t> minimal_mult_seq(std::int64_t u, std::int64_t n) {
    if (u < 2) throw DomainError("multiplicity sequence needs u >= 2 (got " + str(u) + ")");
    if (n < 1) throw DomainError("multiplicity sequence needs n >= 1 (got " + str(n) + ")");
    std::vector<std::int64_t> caps;
    caps.reserve(static_cast<std::size_t>(n));
    for (std::int64_t m = 1; m <= n; ++m) caps.push_back((m - 1) / u);
    return caps;
}

std::vector<std::int64_t> CapSequence::resolve(std::int64_t u, std::int64_t n) const {
    switch (kind) {
        case Kind::minimal: return minimal_mult_seq(u, n);
        case Kind::uniform: return std::vector<std::int64_t>(static_cast<std::size_t>(n), n);
        case Kind::explicit_list:
            if (static_cast<std::int64_t>(caps.size()) < n) {
                throw DomainError("cap list has " + str(static_cast<std::int64_t>(caps.size())) +
                                  " entries, need at least n = " + str(n));
            }
            return {caps.begin(), caps.begin() + n};
    }
    return {};
}

void FamilySpec::validate() const {
    if (n < 1) throw DomainError(to_string(tag) + ": n must be >= 1 (got " + str(n) + ")");
    switch (tag) {
        case FamilyTag::A_s:
            if (s < 2) throw DomainError("A_s: s must be >= 2 (got " + str(s) + ")");
            break;
        case FamilyTag::C_s:
            if (s < 2) throw DomainError("C_s: s must be >= 2 (got " + str(s) + ")");
            if (s - 1 > kMaxColors) throw DomainError("C_s: at most " + str(kMaxColors) + " colors supported");
            break;
        case FamilyTag::B_su: {
            if (u < 2) throw DomainError("B_su: u must be >= 2 (got " + str(u) + ")");
            const auto caps = mult_seq.resolve(u, n);
            // Admissible: c_m >= k whenever m >= uk + 1, i.e. c_m >= floor((m-1)/u).
            for (std::int64_t m = 1; m <= n; ++m) {
                const std::int64_t have = caps[static_cast<std::size_t>(m - 1)];
                if (have < 0) throw DomainError("B_su: caps must be >= 0");
                if (have < (m - 1) / u) {
                    throw DomainError("B_su: cap sequence is not admissible at m = " + str(m) + " (c_m = " +
                                      str(have) + ", need >= " + str((m - 1) / u) + ")");
                }
            }
            break;
        }
        case FamilyTag::S_p:
        case FamilyTag::A_p:
        case FamilyTag::B_p:
            if (p < 1) throw DomainError(to_string(tag) + ": p must be >= 1 (got " + str(p) + ")");
            break;
        case FamilyTag::D: break;
    }
}

std::optional<std::int64_t> SubMultiset::min() const {
    if (elements.empty()) return std::nullopt;
    return elements.front().value;
}

std::optional<std::int64_t> SubMultiset::max() const {
    if (elements.empty()) return std::nullopt;
    return elements.back().value;
}

std::string SubMultiset::to_string() const {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < elements.size();) {
        const Element& e = elements[i];
        if (!first) out += ',';
        first = false;
        out += std::to_string(e.value);
        if (e.color != 0) {
            out += '_' + std::to_string(e.color);
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < elements.size() && elements[j] == e) ++j;
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out + "}";
}

std::strong_ordering SubMultiset::operator<=>(const SubMultiset& other) const {
    if (auto c = cardinality() <=> other.cardinality(); c != 0) return c;
    return elements <=> other.elements;
}

std::string Composition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += '+';
        out += std::to_string(parts[i]);
    }
    return out;
}

std::strong_ordering Composition::operator<=>(const Composition& other) const {
    if (auto c = parts.size() <=> other.parts.size(); c != 0) return c;
    return parts <=> other.parts;
}

BigCount estimate_cost(const FamilySpec& spec) {
    spec.validate();
    const Universe uni = universe_for(spec);
    BigCount bound(1);
    if (uni.colored) {
        std::int64_t size = 0;
        for (std::int64_t v = 1; v <= uni.n; ++v) size += uni.slots[static_cast<std::size_t>(v)];
        for (std::int64_t i = 0; i < size; ++i) bound *= BigCount(2);
        return bound;
    }
    for (std::int64_t v = 1; v <= uni.n; ++v) {
        bound *= BigCount(static_cast<std::uint64_t>(uni.slots[static_cast<std::size_t>(v)]) + 1);
    }
    return bound;
}

FamilyEnumeration enum_family(const FamilySpec& spec, const EnumOptions& options) {
    spec.validate();
    return FamilySearch(spec, options).run();
}

CompositionEnumeration enum_compositions(std::int64_t n, std::int64_t p, const EnumOptions& options) {
    require_composition_args(n, p);
    CompositionEnumeration out;
    CompositionSearch search(options.budget.max_nodes, options.list_members, options.listing_cap, &out.members);
    // Unpruned bound: 2^(n-1) compositions of n.
    search.projected = BigCount(1);
    for (std::int64_t i = 1; i < n; ++i) search.projected *= BigCount(2);
    for (std::int64_t k = 1; k <= n; ++k) {
        const auto lower = part_floor(n, p, k);
        if (!lower) break;
        search.run(n, k, *lower);
    }
    out.count = BigCount(search.count());
    out.nodes_visited = search.nodes();
    std::sort(out.members.begin(), out.members.end());
    return out;
}

BigCount enum_compositions_by_length(std::int64_t n, std::int64_t p, std::int64_t k,
                                     const EnumerationBudget& budget) {
    require_composition_args(n, p);
    if (k < 1) throw DomainError("composition length must be >= 1 (got " + str(k) + ")");
    const auto lower = part_floor(n, p, k);
    if (!lower) return BigCount(0);
    CompositionSearch search(budget.max_nodes, false, 0, nullptr);
    search.projected = binom(n - 1, k - 1);
    search.run(n, k, *lower);
    return BigCount(search.count());
}

BigCount enum_occupancy(std::int64_t n, std::int64_t k, std::int64_t s) {
    if (n < 0 || s < 1) throw DomainError("occupancy needs n >= 0 and s >= 1");
    std::vector<std::int64_t> boxes(static_cast<std::size_t>(n), 0);
    std::uint64_t hits = 0;
    while (true) {
        std::int64_t total = 0;
        for (std::int64_t b : boxes) total += b;
        if (total == k) ++hits;
        // odometer step
        std::size_t i = 0;
        while (i < boxes.size() && boxes[i] == s) boxes[i++] = 0;
        if (i == boxes.size()) break;
        ++boxes[i];
    }
    return BigCount(hits);
}

BigCount enum_bounded_solutions(std::int64_t n, std::span<const std::int64_t> lower_bounds) {
    if (lower_bounds.empty()) throw DomainError("need at least one variable");
    if (n < 0) return BigCount(0);
    std::vector<std::int64_t> x(lower_bounds.size(), 0);
    std::uint64_t hits = 0;
    while (true) {
        std::int64_t total = 0;
        bool ok = true;
        for (std::size_t i = 0; i < x.size(); ++i) {
            total += x[i];
            ok = ok && x[i] >= lower_bounds[i];
        }
        if (ok && total == n) ++hits;
        std::size_t i = 0;
        while (i < x.size() && x[i] == n) x[i++] = 0;
        if (i == x.size()) break;
        ++x[i];
    }
    return BigCount(hits);
}

}  // namespace schreier
