#pragma once

#include <stdexcept>
#include <string>

namespace tspgap {

// Violated operation precondition or unparseable input (CLI exit code 2).
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Request exceeds a documented size cap (CLI exit code 3).
class SizeGuardError : public std::length_error {
public:
    explicit SizeGuardError(const std::string& what) : std::length_error(what) {}
};

}  // namespace tspgap
