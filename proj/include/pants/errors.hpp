#pragma once

#include <stdexcept>
#include <string>

namespace pants {

// Input outside the mathematical domain of an operation (e.g. a level below
// the minimum, a closed form requested off its leaf).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// The numerics gave up: singular matrix, stiff segment, escaped trajectory.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pants
