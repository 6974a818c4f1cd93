#pragma once

#include <stdexcept>
#include <string>

namespace gbal {

// Bad user input: malformed files, out-of-range indices, more than two
// weight values, oversized oracle instances. CLI exit code 1.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Broken internal contract: an infeasible flow handed to the rounder, a
// split graph violating its degree bounds. CLI exit code 2.
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace gbal
