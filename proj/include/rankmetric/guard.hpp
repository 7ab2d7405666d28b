/**
 * @file guard.hpp
 * @brief Enumeration guard shared by all exhaustive loops.
 */

#ifndef RANKMETRIC_GUARD_HPP
#define RANKMETRIC_GUARD_HPP

#include <stdexcept>
#include <string>

#include "rankmetric/galois.hpp"

namespace rankmetric {

class guard_exceeded : public std::runtime_error {
   public:
    explicit guard_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

/// Upper bound on the number of states any exhaustive loop may visit. Every
/// brute-force routine checks its total against the guard before starting.
struct EnumGuard {
    BigInt max_states = BigInt(1) << 24;

    void check(const BigInt& total, const char* what) const {
        if (total > max_states)
            throw guard_exceeded(std::string(what) + ": " + total.str() + " states exceed the guard of " +
                                 max_states.str());
    }
};

}  // namespace rankmetric

#endif  // RANKMETRIC_GUARD_HPP
