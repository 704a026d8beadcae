#include "schreier/bigcount.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace schreier {

BigCount BigCount::from_decimal(std::string_view digits) {
    if (digits.empty()) throw std::invalid_argument("empty decimal string");
    BigCount out;
    for (char ch : digits) {
        if (ch < '0' || ch > '9') {
            throw std::invalid_argument("not a decimal digit string: " + std::string(digits));
        }
        out.value_ = out.value_ * 10 + (ch - '0');
    }
    return out;
}

BigCount& BigCount::divide_exact(std::uint64_t divisor) {
    if (divisor == 0) throw std::domain_error("division by zero");
    boost::multiprecision::cpp_int q;
    boost::multiprecision::cpp_int r;
    boost::multiprecision::divide_qr(value_, boost::multiprecision::cpp_int(divisor), q, r);
    if (!r.is_zero()) throw std::domain_error("inexact division");
    value_ = std::move(q);
    return *this;
}

bool BigCount::fits_u64() const {
    return value_ <= std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t BigCount::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("count exceeds 64 bits: " + to_string());
    return value_.convert_to<std::uint64_t>();
}

std::ostream& operator<<(std::ostream& os, const BigCount& c) { return os << c.to_string(); }

}  // namespace schreier
