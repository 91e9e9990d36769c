#pragma once

#include <stdexcept>
#include <string>

namespace movsum {

// Requested tolerance below what the routine can deliver.
class unsupported_tolerance : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Parameter combination makes a denominator (or similar) vanish.
class singular_input : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Iterative scheme failed to converge; carries the last iterate.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double last)
        : std::runtime_error(what), last_value(last) {}
    double last_value;
};

// A Monte Carlo estimate degenerated (e.g. a survival denominator <= 0).
class degenerate_estimate : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace movsum
