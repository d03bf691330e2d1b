#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace projmet {

// Domain error: bad input, violated precondition, impossible request.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An exhaustive operation would exceed its state/search budget.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

// Limits for exhaustive enumerations. Every operation that walks q^N states
// or a combinatorial search space checks these up front and fails fast.
struct Budget {
    std::uint64_t max_states = std::uint64_t(1) << 24;
    std::uint64_t max_search = std::uint64_t(1) << 20;
};

// q^n with overflow detection; throws BudgetError when the count alone
// exceeds `limit`.
inline std::uint64_t checked_pow(std::uint64_t q, unsigned n, std::uint64_t limit,
                                 const char* what = "state space") {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (v > limit / q)
            throw BudgetError(std::string(what) + " exceeds budget: " + std::to_string(q) + "^" +
                              std::to_string(n) + " > " + std::to_string(limit));
        v *= q;
    }
    if (v > limit)
        throw BudgetError(std::string(what) + " exceeds budget: " + std::to_string(v) + " > " +
                          std::to_string(limit));
    return v;
}

inline std::uint64_t pow_u64(std::uint64_t q, unsigned n) {
    std::uint64_t v = 1;
    while (n--) v *= q;
    return v;
}

} // namespace projmet
