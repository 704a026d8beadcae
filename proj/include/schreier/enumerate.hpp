#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schreier/bigcount.hpp"

namespace schreier {

/// The Schreier-type families.
///
///   A_s   sub-multisets of {1^(s-1), ..., (n-1)^(s-1), n} containing n, min >= |A|
///   B_su  sub-multisets of {1^(c_1), ..., n^(c_n)}, empty or min >= u|B| + 1
///   C_s   subsets of s-1 colored copies of 1..n-1 plus an uncolored n, containing n, min >= |C|
///   D     subsets of {1..n}, empty or (max - 1 in D and min >= |D|)
///   S_p   subsets of {1..n} containing n, min > |S|^p
///   A_p   subsets of {1..n} containing n, min >= |S|^p
///   B_p   subsets of {1..n}, empty or (max - 1 in S and min >= |S|^p)
enum class FamilyTag { A_s, B_su, C_s, D, S_p, A_p, B_p };

std::string to_string(FamilyTag tag);

/// Multiplicity caps c_1..c_n for the B_su universe.
struct CapSequence {
    enum class Kind {
        minimal,   // c_m = floor((m-1)/u), the pointwise smallest admissible choice
        uniform,   // c_m = n
        explicit_list,
    };
    Kind kind = Kind::minimal;
    std::vector<std::int64_t> caps;  // explicit_list only; caps[m-1] = c_m

    /// Caps for values 1..n.
    std::vector<std::int64_t> resolve(std::int64_t u, std::int64_t n) const;
};

struct FamilySpec {
    FamilyTag tag = FamilyTag::A_s;
    std::int64_t n = 1;
    std::int64_t s = 0;  // A_s, C_s
    std::int64_t u = 0;  // B_su
    std::int64_t p = 0;  // S_p, A_p, B_p
    CapSequence mult_seq;  // B_su

    static FamilySpec a_s(std::int64_t s, std::int64_t n) { return {FamilyTag::A_s, n, s, 0, 0, {}}; }
    static FamilySpec b_su(std::int64_t u, std::int64_t n, CapSequence caps = {}) {
        return {FamilyTag::B_su, n, 0, u, 0, std::move(caps)};
    }
    static FamilySpec c_s(std::int64_t s, std::int64_t n) { return {FamilyTag::C_s, n, s, 0, 0, {}}; }
    static FamilySpec d(std::int64_t n) { return {FamilyTag::D, n, 0, 0, 0, {}}; }
    static FamilySpec s_p(std::int64_t p, std::int64_t n) { return {FamilyTag::S_p, n, 0, 0, p, {}}; }
    static FamilySpec a_p(std::int64_t p, std::int64_t n) { return {FamilyTag::A_p, n, 0, 0, p, {}}; }
    static FamilySpec b_p(std::int64_t p, std::int64_t n) { return {FamilyTag::B_p, n, 0, 0, p, {}}; }

    /// Throws DomainError on out-of-domain parameters or an inadmissible cap sequence.
    void validate() const;
};

struct EnumerationBudget {
    std::uint64_t max_nodes = 100'000'000;
};

struct EnumOptions {
    EnumerationBudget budget;
    bool list_members = false;
    std::uint64_t listing_cap = 100'000;
    /// Disable to walk every multiplicity vector and test membership only at the leaves.
    bool prune = true;
};

/// One element of a member; color 0 means uncolored.
struct Element {
    std::int64_t value = 0;
    std::int64_t color = 0;
    auto operator<=>(const Element&) const = default;
};

/// A chosen sub-multiset. Elements are kept sorted, with repeats for multiplicity.
struct SubMultiset {
    std::vector<Element> elements;

    std::size_t cardinality() const { return elements.size(); }
    std::optional<std::int64_t> min() const;
    std::optional<std::int64_t> max() const;

    /// Canonical text: "{}", "{2,3}", "{2^2,5}", "{1_1,2_2,4}".
    std::string to_string() const;

    /// Orders by cardinality, then lexicographically by element.
    std::strong_ordering operator<=>(const SubMultiset& other) const;
    bool operator==(const SubMultiset&) const = default;
};

struct FamilyEnumeration {
    BigCount count;
    std::uint64_t nodes_visited = 0;
    std::vector<SubMultiset> members;  // sorted; filled only when listing
};

/// Exhaustive search over the family's universe. Values are visited in
/// descending order choosing a multiplicity (or color subset) for each; a
/// branch is cut once the smallest value still available cannot satisfy the
/// min-versus-cardinality bound. Every leaf is re-checked against the full
/// membership predicate.
///
/// Throws BudgetExceeded when the search visits more than budget.max_nodes
/// nodes and ListingCapExceeded when the listing outgrows listing_cap.
FamilyEnumeration enum_family(const FamilySpec& spec, const EnumOptions& options = {});

/// Upper bound on search nodes for the unpruned search: prod (c_v + 1) for a
/// multiset universe, 2^(universe size) for a labelled one.
BigCount estimate_cost(const FamilySpec& spec);

/// c_m = floor((m-1)/u) for m = 1..n.
std::vector<std::int64_t> minimal_mult_seq(std::int64_t u, std::int64_t n);

/// An ordered decomposition of n; 3+10 and 10+3 are different compositions.
struct Composition {
    std::vector<std::int64_t> parts;

    /// Parts joined with '+', e.g. "4+4+5".
    std::string to_string() const;
    std::strong_ordering operator<=>(const Composition& other) const;
    bool operator==(const Composition&) const = default;
};

struct CompositionEnumeration {
    BigCount count;
    std::uint64_t nodes_visited = 0;
    std::vector<Composition> members;  // sorted by length, then lexicographically
};

/// Compositions (x_1, ..., x_k) of n with min x_i > k^p, over every length k.
CompositionEnumeration enum_compositions(std::int64_t n, std::int64_t p, const EnumOptions& options = {});

/// Same count restricted to exactly k parts.
BigCount enum_compositions_by_length(std::int64_t n, std::int64_t p, std::int64_t k,
                                     const EnumerationBudget& budget = {});

/// Brute-force count of occupancy vectors (m_1..m_n) with 0 <= m_i <= s and sum k.
BigCount enum_occupancy(std::int64_t n, std::int64_t k, std::int64_t s);

/// Brute-force count of integer solutions of x_1 + ... + x_p = n with x_i >= lower_bounds[i].
BigCount enum_bounded_solutions(std::int64_t n, std::span<const std::int64_t> lower_bounds);

}  // namespace schreier
