#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "schreier/enumerate.hpp"
#include "schreier/errors.hpp"
#include "schreier/sequences.hpp"

using namespace schreier;

namespace {

BigCount big(std::uint64_t v) { return BigCount(v); }

BigCount count(const FamilySpec& spec) { return enum_family(spec).count; }

std::vector<std::string> listing(const FamilySpec& spec) {
    EnumOptions opts;
    opts.list_members = true;
    std::vector<std::string> out;
    for (const auto& m : enum_family(spec, opts).members) out.push_back(m.to_string());
    return out;
}

CapSequence explicit_caps(std::vector<std::int64_t> caps) {
    return {CapSequence::Kind::explicit_list, std::move(caps)};
}

}  // namespace

TEST_CASE("family examples") {
    CHECK(count(FamilySpec::a_s(2, 4)) == big(3));
    CHECK(count(FamilySpec::d(4)) == big(3));
    CHECK(count(FamilySpec::s_p(2, 5)) == big(1));

    CHECK(listing(FamilySpec::a_s(2, 4)) == std::vector<std::string>{"{4}", "{2,4}", "{3,4}"});
    CHECK(listing(FamilySpec::d(4)) == std::vector<std::string>{"{}", "{2,3}", "{3,4}"});
    CHECK(listing(FamilySpec::s_p(2, 5)) == std::vector<std::string>{"{5}"});
    CHECK(listing(FamilySpec::c_s(3, 3)) == std::vector<std::string>{"{3}", "{2_1,3}", "{2_2,3}"});
    // u = 2, n = 7 with minimal caps [0,0,1,1,2,2,3]: {} plus singletons 3..7, then {5^2},{5,6},...
    const auto b = listing(FamilySpec::b_su(2, 7));
    CHECK(b.size() == 13);
    CHECK(b.front() == "{}");
    CHECK(std::find(b.begin(), b.end(), "{5^2}") != b.end());  // 5 >= 2*2+1
    CHECK(std::find(b.begin(), b.end(), "{4,5}") == b.end());
    CHECK(std::find(b.begin(), b.end(), "{7^2}") != b.end());
    CHECK(std::find(b.begin(), b.end(), "{5,6}") != b.end());
}

TEST_CASE("member serialization") {
    SubMultiset empty;
    CHECK(empty.to_string() == "{}");
    CHECK_FALSE(empty.min().has_value());
    SubMultiset m{{{2, 0}, {2, 0}, {5, 0}}};
    CHECK(m.to_string() == "{2^2,5}");
    CHECK(m.cardinality() == 3);
    CHECK(*m.min() == 2);
    CHECK(*m.max() == 5);
    SubMultiset c{{{1, 1}, {2, 2}, {4, 0}}};
    CHECK(c.to_string() == "{1_1,2_2,4}");
    CHECK(SubMultiset{{{9, 0}}} < SubMultiset{{{1, 0}, {2, 0}}});
    CHECK(Composition{{4, 4, 5}}.to_string() == "4+4+5");
    CHECK(Composition{{13}} < Composition{{3, 10}});
    CHECK(Composition{{3, 10}} < Composition{{10, 3}});
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(enum_family(FamilySpec::a_s(1, 4)), DomainError);
    CHECK_THROWS_AS(enum_family(FamilySpec::c_s(1, 4)), DomainError);
    CHECK_THROWS_AS(enum_family(FamilySpec::b_su(1, 4)), DomainError);
    CHECK_THROWS_AS(enum_family(FamilySpec::s_p(0, 4)), DomainError);
    CHECK_THROWS_AS(enum_family(FamilySpec::d(0)), DomainError);
    // c_3 = 0 but m = 3 >= 2*1 + 1 needs c_3 >= 1.
    CHECK_THROWS_AS(enum_family(FamilySpec::b_su(2, 4, explicit_caps({0, 0, 0, 1}))), DomainError);
    CHECK_THROWS_AS(enum_family(FamilySpec::b_su(2, 4, explicit_caps({0, 0, 1}))), DomainError);
    CHECK_NOTHROW(enum_family(FamilySpec::b_su(2, 4, explicit_caps({5, 0, 1, 1}))));
}

TEST_CASE("minimal_mult_seq") {
    CHECK(minimal_mult_seq(2, 5) == std::vector<std::int64_t>{0, 0, 1, 1, 2});
    CHECK(minimal_mult_seq(3, 4) == std::vector<std::int64_t>{0, 0, 0, 1});
    CHECK(minimal_mult_seq(4, 9) == std::vector<std::int64_t>{0, 0, 0, 0, 1, 1, 1, 1, 2});
    CHECK_THROWS_AS(minimal_mult_seq(1, 3), DomainError);
}

TEST_CASE("estimate_cost") {
    CHECK(estimate_cost(FamilySpec::a_s(2, 5)) == big(32));
    CHECK(estimate_cost(FamilySpec::c_s(3, 4)) == big(128));
    CHECK(estimate_cost(FamilySpec::b_su(2, 7)) == big(144));
    CHECK(estimate_cost(FamilySpec::d(10)) == big(1024));
}

TEST_CASE("compositions") {
    CHECK(enum_compositions(13, 1).count == big(12));
    CHECK(enum_compositions(1, 1).count == big(0));
    CHECK(enum_compositions(6, 0).count == big(5));
    CHECK(enum_compositions_by_length(13, 1, 3) == big(3));
    CHECK(enum_compositions_by_length(13, 1, 2) == big(8));
    CHECK(enum_compositions_by_length(13, 1, 1) == big(1));
    CHECK(enum_compositions_by_length(5, 2, 2) == big(0));
    CHECK_THROWS_AS(enum_compositions(0, 1), DomainError);
    CHECK_THROWS_AS(enum_compositions_by_length(5, 1, 0), DomainError);

    EnumOptions opts;
    opts.list_members = true;
    std::vector<std::string> six;
    for (const auto& c : enum_compositions(6, 0, opts).members) six.push_back(c.to_string());
    CHECK(six == std::vector<std::string>{"6", "2+4", "3+3", "4+2", "2+2+2"});

    std::vector<std::string> thirteen;
    for (const auto& c : enum_compositions(13, 1, opts).members) thirteen.push_back(c.to_string());
    REQUIRE(thirteen.size() == 12);
    CHECK(thirteen.front() == "13");
    CHECK(std::vector<std::string>(thirteen.end() - 3, thirteen.end()) ==
          std::vector<std::string>{"4+4+5", "4+5+4", "5+4+4"});

    for (int n = 1; n <= 22; ++n) CHECK(enum_compositions(n, 0).count == classic_fib(n - 1));
    for (int n = 1; n <= 16; ++n) {
        for (int p = 0; p <= 2; ++p) {
            BigCount by_length;
            for (int k = 1; k <= n; ++k) by_length += enum_compositions_by_length(n, p, k);
            CHECK(enum_compositions(n, p).count == by_length);
            CHECK(enum_compositions(n, p).count == big(oracle::compositions(n, p)));
            for (int k = 1; k <= 4; ++k) CHECK(enum_compositions_by_length(n, p, k) == big(oracle::compositions(n, p, k)));
        }
    }
}

TEST_CASE("families against naive oracles") {
    for (int n = 1; n <= 16; ++n) {
        CHECK(count(FamilySpec::d(n)) == big(oracle::family_d(n)));
        for (int p = 1; p <= 3; ++p) {
            CHECK(count(FamilySpec::s_p(p, n)) == big(oracle::family_s(p, n)));
            CHECK(count(FamilySpec::a_p(p, n)) == big(oracle::family_ap(p, n)));
            CHECK(count(FamilySpec::b_p(p, n)) == big(oracle::family_bp(p, n)));
        }
    }
    for (int s = 2; s <= 4; ++s) {
        for (int n = 1; n <= 8; ++n) CHECK(count(FamilySpec::a_s(s, n)) == big(oracle::family_a(s, n)));
    }
    for (int s = 2; s <= 4; ++s) {
        for (int n = 1; (n - 1) * (s - 1) + 1 <= 19; ++n) CHECK(count(FamilySpec::c_s(s, n)) == big(oracle::family_c(s, n)));
    }
    for (int u = 2; u <= 4; ++u) {
        for (int n = 1; n <= 12; ++n) {
            std::vector<int> caps;
            for (auto c : minimal_mult_seq(u, n)) caps.push_back(static_cast<int>(c));
            CHECK(count(FamilySpec::b_su(u, n)) == big(oracle::family_b(u, caps)));
        }
    }
}

TEST_CASE("classical Fibonacci families") {
    for (int n = 1; n <= 20; ++n) {
        CHECK(count(FamilySpec::a_s(2, n)) == classic_fib(n));
        CHECK(count(FamilySpec::d(n)) == classic_fib(n));
        CHECK(count(FamilySpec::s_p(1, n)) == classic_fib(n - 1));
    }
}

TEST_CASE("multiplicity-sequence invariance") {
    const CapSequence uniform{CapSequence::Kind::uniform, {}};
    for (int u = 2; u <= 3; ++u) {
        for (int n = 1; n <= 14; ++n) {
            const auto minimal = count(FamilySpec::b_su(u, n));
            CHECK(minimal == count(FamilySpec::b_su(u, n, uniform)));
            CHECK(minimal == k_seq(u, n));
        }
        // An irregular admissible sequence: minimal plus a bump every third value.
        std::vector<std::int64_t> caps = minimal_mult_seq(u, 12);
        for (std::size_t i = 0; i < caps.size(); i += 3) caps[i] += 2;
        CHECK(count(FamilySpec::b_su(u, 12, explicit_caps(caps))) == k_seq(u, 12));
    }
}

TEST_CASE("pruning is sound") {
    EnumOptions unpruned;
    unpruned.prune = false;
    std::vector<FamilySpec> specs;
    for (int n = 1; n <= 16; ++n) {
        specs.push_back(FamilySpec::d(n));
        for (int p = 1; p <= 3; ++p) {
            specs.push_back(FamilySpec::s_p(p, n));
            specs.push_back(FamilySpec::a_p(p, n));
            specs.push_back(FamilySpec::b_p(p, n));
        }
        for (int s = 2; s <= 5; ++s) {
            specs.push_back(FamilySpec::a_s(s, n));
            specs.push_back(FamilySpec::c_s(s, n));
        }
        for (int u = 2; u <= 5; ++u) {
            specs.push_back(FamilySpec::b_su(u, n));
            specs.push_back(FamilySpec::b_su(u, n, {CapSequence::Kind::uniform, {}}));
        }
    }
    int compared = 0;
    for (const auto& spec : specs) {
        if (BigCount(100'000) < estimate_cost(spec)) continue;
        const auto pruned = enum_family(spec);
        const auto full = enum_family(spec, unpruned);
        CHECK(pruned.count == full.count);
        CHECK(pruned.nodes_visited <= full.nodes_visited);
        ++compared;
    }
    CHECK(compared > 100);
}

TEST_CASE("budget and listing cap") {
    EnumOptions tight;
    tight.budget.max_nodes = 10;
    CHECK_THROWS_AS(enum_family(FamilySpec::d(12), tight), BudgetExceeded);
    try {
        enum_family(FamilySpec::d(12), tight);
    } catch (const BudgetExceeded& e) {
        CHECK(e.projected() == big(4096));
        CHECK(e.allowed() == 10);
    }
    CHECK_THROWS_AS(enum_compositions(30, 0, tight), BudgetExceeded);

    EnumOptions capped;
    capped.list_members = true;
    capped.listing_cap = 5;
    CHECK_THROWS_AS(enum_family(FamilySpec::d(10), capped), ListingCapExceeded);
    CHECK_THROWS_AS(enum_compositions(13, 1, capped), ListingCapExceeded);
    capped.listing_cap = 12;
    CHECK(enum_compositions(13, 1, capped).members.size() == 12);
}

TEST_CASE("brute-force helpers") {
    CHECK(enum_occupancy(3, 3, 2) == big(7));
    CHECK(enum_occupancy(0, 0, 2) == big(1));
    const std::vector<std::int64_t> ones{1, 1};
    CHECK(enum_bounded_solutions(5, ones) == big(4));
    CHECK_THROWS_AS(enum_occupancy(2, 1, 0), DomainError);
}
