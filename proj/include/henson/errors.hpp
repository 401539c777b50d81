#pragma once

#include <stdexcept>
#include <string>

namespace henson {

// Search ran out of prefix/stage budget.  A first-class outcome for the
// "infinitely many" finitizations, never a sign of structural breakage.
struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Caller violated a documented precondition.
struct PreconditionViolation : std::invalid_argument {
    explicit PreconditionViolation(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace henson
