#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "schreier/closed_form.hpp"
#include "schreier/enumerate.hpp"
#include "schreier/pascal.hpp"
#include "schreier/sequences.hpp"

using namespace schreier;

namespace {
BigCount big(std::uint64_t v) { return BigCount(v); }
}  // namespace

TEST_CASE("closed-form examples") {
    CHECK(count_A(2, 4) == big(3));
    CHECK(count_A(3, 5) == big(7));
    CHECK(count_B(4, 22) == big(476));
    CHECK(count_B(3, 2) == big(1));
    CHECK(count_C(4, 8) == big(476));
    CHECK(count_K_np(13, 1) == big(12));
    CHECK(count_K_npk(13, 1, 1) == big(1));
    CHECK(count_K_npk(13, 1, 2) == big(8));
    CHECK(count_K_npk(13, 1, 3) == big(3));
    CHECK(count_K_npk(13, 1, 4).is_zero());
    CHECK(count_S(2, 5) == big(1));
    CHECK(count_K_np(1, 0).is_zero());
}

TEST_CASE("K_{n,1} prefix") {
    const std::vector<std::uint64_t> want{0, 1, 1, 1, 1, 2, 3, 4, 5, 6, 7, 9, 12, 16, 21, 27, 34, 42};
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(count_K_np(static_cast<std::int64_t>(i) + 1, 1) == big(want[i]));
}

TEST_CASE("closed forms equal their sequences") {
    for (std::int64_t s = 2; s <= 6; ++s) {
        for (std::int64_t n = 1; n <= 40; ++n) {
            CHECK(count_A(s, n) == s_step_fib(s, n));
            CHECK(count_B(s, n) == k_seq(s, n));
            CHECK(count_C(s, n) == tau(s, n));
        }
    }
    for (std::int64_t n = 1; n <= 40; ++n) CHECK(count_K_np(n, 0) == classic_fib(n - 1));
    for (std::int64_t p = 1; p <= 4; ++p) {
        for (std::int64_t n = 1; n <= 40; ++n) {
            CHECK(count_S(p, n) == count_K_np(n, p - 1));
            CHECK(count_Ap(p, n) == count_K_np(n + 1, p - 1));
            CHECK(count_Bp(p, n) == count_Ap(p, n));
        }
    }
    for (std::int64_t n = 1; n <= 40; ++n) CHECK(count_Bp(1, n) == classic_fib(n));
}

TEST_CASE("K_npk is the per-length composition count") {
    for (int n = 1; n <= 18; ++n) {
        for (int p = 0; p <= 3; ++p) {
            BigCount sum;
            for (int k = 1; k <= n; ++k) {
                sum += count_K_npk(n, p, k);
                if (k <= 4) CHECK(count_K_npk(n, p, k) == big(oracle::compositions(n, p, k)));
            }
            CHECK(count_K_np(n, p) == sum);
            CHECK(count_K_np(n, p) == big(oracle::compositions(n, p)));
        }
    }
}

TEST_CASE("closed forms against enumeration") {
    const CapSequence uniform{CapSequence::Kind::uniform, {}};
    for (std::int64_t n = 1; n <= 12; ++n) {
        for (std::int64_t s = 2; s <= 4; ++s) CHECK(count_A(s, n) == enum_family(FamilySpec::a_s(s, n)).count);
        for (std::int64_t u = 2; u <= 4; ++u) {
            CHECK(count_B(u, n) == enum_family(FamilySpec::b_su(u, n)).count);
            CHECK(count_B(u, n) == enum_family(FamilySpec::b_su(u, n, uniform)).count);
        }
        for (std::int64_t p = 1; p <= 3; ++p) {
            CHECK(count_S(p, n) == enum_family(FamilySpec::s_p(p, n)).count);
            CHECK(count_Ap(p, n) == enum_family(FamilySpec::a_p(p, n)).count);
            CHECK(count_Bp(p, n) == enum_family(FamilySpec::b_p(p, n)).count);
            CHECK(count_K_np(n, p) == enum_compositions(n, p).count);
        }
    }
    for (std::int64_t s = 2; s <= 4; ++s) {
        for (std::int64_t n = 1; n <= 7; ++n) CHECK(count_C(s, n) == enum_family(FamilySpec::c_s(s, n)).count);
    }
}

TEST_CASE("large arguments stay exact") {
    // K^(2) is Fibonacci, so count_B(2, 200) must agree with the 200th term.
    CHECK(count_B(2, 200) == classic_fib(200));
    CHECK(count_A(3, 150) == s_step_fib(3, 150));
    for (std::int64_t p = 1; p <= 3; ++p) CHECK(count_S(p, 1).is_zero());
    CHECK(count_S(5, 3) == big(1));  // {3}
    CHECK(count_Ap(1, 1) == big(1));
}
