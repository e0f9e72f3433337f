#pragma once

#include <stdexcept>
#include <string>

namespace skewla {

/// Base of all domain errors raised by the library. The CLI maps these to exit
/// status 2 and reports `code()` as the machine-readable error tag.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class ShapeError : public DomainError {
 public:
  explicit ShapeError(const std::string& what) : DomainError("shape", what) {}
};

class SingularMatrix : public DomainError {
 public:
  SingularMatrix(int rank, const std::string& what) : DomainError("singular", what), rank_(rank) {}
  int rank() const { return rank_; }

 private:
  int rank_;
};

class NoSolution : public DomainError {
 public:
  explicit NoSolution(const std::string& what) : DomainError("no_solution", what) {}
};

class UndefinedQuasideterminant : public DomainError {
 public:
  explicit UndefinedQuasideterminant(const std::string& what)
      : DomainError("undefined_quasideterminant", what) {}
};

class PreconditionError : public DomainError {
 public:
  explicit PreconditionError(const std::string& what) : DomainError("precondition", what) {}
};

class UnsupportedMode : public DomainError {
 public:
  explicit UnsupportedMode(const std::string& what) : DomainError("unsupported_mode", what) {}
};

class RejectedSolution : public DomainError {
 public:
  RejectedSolution(std::string condition, const std::string& what)
      : DomainError("rejected_solution", what), condition_(std::move(condition)) {}
  /// Which precondition failed ("eigen_equation", "center_condition", "residual").
  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

}  // namespace skewla
