#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "schreier/bigcount.hpp"

namespace schreier {

/// A parameter or index outside the domain of the requested object.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration visited more search nodes than its budget allows.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(BigCount projected, std::uint64_t allowed)
        : std::runtime_error("enumeration budget exceeded: projected " + projected.to_string() +
                             " nodes (unpruned bound), allowed " + std::to_string(allowed)),
          projected_(std::move(projected)),
          allowed_(allowed) {}

    const BigCount& projected() const { return projected_; }
    std::uint64_t allowed() const { return allowed_; }

private:
    BigCount projected_;
    std::uint64_t allowed_;
};

/// A member listing grew past its cap.
class ListingCapExceeded : public std::runtime_error {
public:
    explicit ListingCapExceeded(std::uint64_t cap)
        : std::runtime_error("member listing exceeds cap of " + std::to_string(cap)), cap_(cap) {}
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t cap_;
};

}  // namespace schreier
