#pragma once

#include <stdexcept>
#include <string>

namespace ipsat {

// Caller passed arguments that violate a precondition.
struct usage_error : std::invalid_argument {
  explicit usage_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Parameters are structurally valid but the requested object cannot exist
// (e.g. n < 2s+t-1 leaves too few chains for a lantern).
struct infeasible_error : std::runtime_error {
  explicit infeasible_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Cover relation is cyclic or otherwise not a partial order.
struct invalid_poset_error : std::runtime_error {
  explicit invalid_poset_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal case analysis reached a state its correctness argument rules
// out. Firing one of these is a bug, and the tests treat it as such.
struct defect_error : std::logic_error {
  explicit defect_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace ipsat
