#ifndef CROWNVOL_ERRORS_HPP
#define CROWNVOL_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace crownvol {

/// Invalid argument to a public operation (bad n, wrong kind, malformed spec).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A formal variable occurring in a value has no numeric assignment.
class UnassignedVariable : public DomainError {
 public:
  explicit UnassignedVariable(const std::string& name)
      : DomainError("no value assigned to variable '" + name + "'"), name_(name) {}
  [[nodiscard]] const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Moment request outside the closed-form table.
class MomentError : public DomainError {
 public:
  enum class Reason { Divergent, WrongParity };
  MomentError(Reason reason, const std::string& what) : DomainError(what), reason_(reason) {}
  [[nodiscard]] Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// Invalid document; `pointer()` is a JSON pointer to the offending node.
class SchemaError : public DomainError {
 public:
  enum class Kind { Schema, OddPower, NotHomogeneous, NegativeCoefficient, VariableCount };
  SchemaError(Kind kind, std::string pointer, const std::string& what)
      : DomainError(pointer.empty() ? what : what + " (at " + pointer + ")"), kind_(kind), pointer_(std::move(pointer)) {}
  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] const std::string& pointer() const { return pointer_; }

 private:
  Kind kind_;
  std::string pointer_;
};

/// A numerical method did not reach its target within its budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input carries too few correct digits for the requested computation.
class InsufficientPrecision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace crownvol

#endif  // CROWNVOL_ERRORS_HPP
