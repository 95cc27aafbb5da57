#pragma once

#include <stdexcept>
#include <string>

namespace dcheb {

// Inputs outside an operation's mathematical domain (n > capN, wrong regime side, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A root solve failed to bracket or converge.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A quantity that must be real came out with a non-negligible imaginary part.
class BranchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dcheb
