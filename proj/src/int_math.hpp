#pragma once

#include <cstdint>
#include <limits>
#include <optional>

namespace schreier::detail {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    return __builtin_add_overflow(a, b, &r) ? kSaturated : r;
}

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    return __builtin_mul_overflow(a, b, &r) ? kSaturated : r;
}

inline std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        r = sat_mul(r, base);
        if (r == kSaturated || r == 0) break;
    }
    return r;
}

// Exact base^exp, or nullopt when it does not fit in int64.
inline std::optional<std::int64_t> checked_pow(std::int64_t base, std::int64_t exp) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(r, base, &r)) return std::nullopt;
        if (r == 0 || r == 1) break;
    }
    return r;
}

}  // namespace schreier::detail
