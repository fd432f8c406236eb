#ifndef PATHIDEAL_ERRORS_HPP
#define PATHIDEAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pathideal {

/// Input violates a precondition (malformed graph, wrong graph class,
/// mismatched variable universes, ...). Maps to CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation exceeded its configured size budget. Maps to CLI exit code 3.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pathideal

#endif
