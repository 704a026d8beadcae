#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace schreier {

/// Exact nonnegative integer used for every count and sequence term.
///
/// There is deliberately no subtraction: every quantity in this library is a
/// cardinality or a sum of cardinalities.
class BigCount {
public:
    BigCount() = default;
    BigCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    /// Parses a decimal string of digits. Throws std::invalid_argument otherwise.
    static BigCount from_decimal(std::string_view digits);

    BigCount& operator+=(const BigCount& rhs) {
        value_ += rhs.value_;
        return *this;
    }
    BigCount& operator*=(const BigCount& rhs) {
        value_ *= rhs.value_;
        return *this;
    }
    friend BigCount operator+(BigCount lhs, const BigCount& rhs) { return lhs += rhs; }
    friend BigCount operator*(BigCount lhs, const BigCount& rhs) { return lhs *= rhs; }

    /// Division by a positive divisor that is known to divide exactly.
    /// Throws std::domain_error when the remainder is nonzero.
    BigCount& divide_exact(std::uint64_t divisor);

    friend bool operator==(const BigCount& a, const BigCount& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    bool is_zero() const { return value_.is_zero(); }

    /// True when the value is representable as std::uint64_t.
    bool fits_u64() const;
    /// Throws std::overflow_error when !fits_u64().
    std::uint64_t to_u64() const;

    /// Plain decimal digits, never scientific notation.
    std::string to_string() const { return value_.str(); }

private:
    boost::multiprecision::cpp_int value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigCount& c);

}  // namespace schreier
