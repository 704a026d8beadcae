#include "schreier/closed_form.hpp"

#include <string>

#include "schreier/errors.hpp"
#include "schreier/pascal.hpp"
#include "int_math.hpp"

namespace schreier {
namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

// C(n - k^e - shift, k - 1). A power too large for int64 certainly exceeds n,
// which puts the upper index below zero and the term at zero.
BigCount power_term(std::int64_t n, std::int64_t k, std::int64_t e, std::int64_t shift) {
    const auto power = detail::checked_pow(k, e);
    if (!power || *power > n) return BigCount(0);
    return binom(n - *power - shift, k - 1);
}

}  // namespace

BigCount count_A(std::int64_t s, std::int64_t n) {
    require(s >= 2 && n >= 1, "count_A needs s >= 2 and n >= 1");
    BigCount total;
    const std::int64_t top = (n - 1) * (s - 1) / s;
    for (std::int64_t k = 0; k <= top; ++k) total += s_binom(n - 1 - k, k, s - 1);
    return total;
}

BigCount count_B(std::int64_t u, std::int64_t n) {
    require(u >= 2 && n >= 1, "count_B needs u >= 2 and n >= 1");
    BigCount total;
    const std::int64_t top = (n - 1) / u;
    for (std::int64_t k = 0; k <= top; ++k) total += binom(k + n - u * k - 1, k);
    return total;
}

BigCount count_C(std::int64_t s, std::int64_t n) {
    require(s >= 2 && n >= 1, "count_C needs s >= 2 and n >= 1");
    BigCount total;
    const std::int64_t top = (n * (s - 1) + 1) / s;
    for (std::int64_t k = 1; k <= top; ++k) total += binom(n * (s - 1) - k * s + k, k - 1);
    return total;
}

BigCount count_K_npk(std::int64_t n, std::int64_t p, std::int64_t k) {
    require(n >= 1 && p >= 0 && k >= 1, "count_K_npk needs n >= 1, p >= 0, k >= 1");
    return power_term(n, k, p + 1, 1);
}

BigCount count_K_np(std::int64_t n, std::int64_t p) {
    require(n >= 1 && p >= 0, "count_K_np needs n >= 1 and p >= 0");
    BigCount total;
    for (std::int64_t k = 1; k <= n; ++k) total += count_K_npk(n, p, k);
    return total;
}

BigCount count_S(std::int64_t p, std::int64_t n) {
    require(p >= 1 && n >= 1, "count_S needs p >= 1 and n >= 1");
    BigCount total;
    for (std::int64_t k = 1; k <= n; ++k) total += power_term(n, k, p, 1);
    return total;
}

BigCount count_Ap(std::int64_t p, std::int64_t n) {
    require(p >= 1 && n >= 1, "count_Ap needs p >= 1 and n >= 1");
    BigCount total;
    for (std::int64_t k = 1; k <= n; ++k) total += power_term(n, k, p, 0);
    return total;
}

BigCount count_Bp(std::int64_t p, std::int64_t n) {
    require(p >= 1 && n >= 1, "count_Bp needs p >= 1 and n >= 1");
    BigCount total(1);
    for (std::int64_t k = 2; k <= n; ++k) total += power_term(n, k, p, 0);
    return total;
}

}  // namespace schreier
