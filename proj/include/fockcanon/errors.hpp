#pragma once

#include <stdexcept>
#include <string>

namespace fockcanon {

// Violation of an internal invariant (e.g. a basis column failing its
// triangularity checks, or a divided power that fails exact division).
// Distinct from std::invalid_argument, which signals bad caller input;
// the CLI maps the two to different exit codes.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fockcanon
