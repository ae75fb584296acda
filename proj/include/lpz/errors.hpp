#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lpz {

/// One broken invariant, addressed by a document path such as
/// `terminals[3].construction.ring`.
struct Violation {
  std::string path;
  std::string kind;
  std::string message;

  bool operator==(const Violation&) const = default;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class GeometryError : public Error {
 public:
  using Error::Error;
};

class RefError : public Error {
 public:
  using Error::Error;
};

class KindError : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class NoTerminals : public Error {
 public:
  NoTerminals() : Error("relief needs at least one terminal") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class VersionError : public Error {
 public:
  using Error::Error;
};

/// Carries the violation list of a document that failed validation.
class ViolationError : public Error {
 public:
  ViolationError(const std::string& what, std::vector<Violation> violations)
      : Error(what + describe(violations)), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  static std::string describe(const std::vector<Violation>& vs) {
    std::string out;
    for (const auto& v : vs) out += "\n  " + v.path + ": " + v.kind + ": " + v.message;
    return out;
  }

  std::vector<Violation> violations_;
};

class ValidationError : public ViolationError {
 public:
  explicit ValidationError(std::vector<Violation> vs)
      : ViolationError("invalid settings", std::move(vs)) {}
};

class IntegrityError : public ViolationError {
 public:
  explicit IntegrityError(std::vector<Violation> vs)
      : ViolationError("loaded project fails validation", std::move(vs)) {}
};

class SaveRefused : public ViolationError {
 public:
  explicit SaveRefused(std::vector<Violation> vs)
      : ViolationError("refusing to save an invalid project", std::move(vs)) {}
};

class RenderError : public ViolationError {
 public:
  explicit RenderError(std::vector<Violation> vs)
      : ViolationError("cannot render an invalid project", std::move(vs)) {}
};

}  // namespace lpz
