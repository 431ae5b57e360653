#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tsheaf {

// Error families map onto CLI exit codes: parse = 2, validation = 3,
// size limit = 4.
enum class ErrorKind : int {
  Parse = 2,
  Validation = 3,
  SizeLimit = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorKind::Parse, w) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& w)
      : Error(ErrorKind::Validation, w) {}
};

struct SizeLimitExceeded : Error {
  explicit SizeLimitExceeded(const std::string& w)
      : Error(ErrorKind::SizeLimit, w) {}
};

struct CyclicCovers : ValidationError {
  explicit CyclicCovers(const std::string& w) : ValidationError(w) {}
};

// glb or lub of (a, b) is absent or not unique
struct NotALattice : ValidationError {
  NotALattice(std::uint32_t a_, std::uint32_t b_, const std::string& w)
      : ValidationError(w), a(a_), b(b_) {}
  std::uint32_t a;
  std::uint32_t b;
};

struct NotJoinPreserving : ValidationError {
  NotJoinPreserving(std::uint32_t a_, std::uint32_t b_, const std::string& w)
      : ValidationError(w), a(a_), b(b_) {}
  std::uint32_t a;
  std::uint32_t b;
};

struct DomainMismatch : ValidationError {
  explicit DomainMismatch(const std::string& w) : ValidationError(w) {}
};

struct DegreeMismatch : ValidationError {
  explicit DegreeMismatch(const std::string& w) : ValidationError(w) {}
};

struct DimMismatch : ValidationError {
  explicit DimMismatch(const std::string& w) : ValidationError(w) {}
};

struct UnknownCell : ValidationError {
  explicit UnknownCell(const std::string& w) : ValidationError(w) {}
};

struct IncidenceViolation : ValidationError {
  explicit IncidenceViolation(const std::string& w) : ValidationError(w) {}
};

struct NotAGraph : ValidationError {
  explicit NotAGraph(const std::string& w) : ValidationError(w) {}
};

struct LoopEdge : ValidationError {
  explicit LoopEdge(const std::string& w) : ValidationError(w) {}
};

struct FunctorialityViolation : ValidationError {
  explicit FunctorialityViolation(const std::string& w) : ValidationError(w) {}
};

struct NotAFixedPoint : ValidationError {
  explicit NotAFixedPoint(const std::string& w) : ValidationError(w) {}
};

struct ShapeMismatch : ValidationError {
  explicit ShapeMismatch(const std::string& w) : ValidationError(w) {}
};

struct NotPrime : ValidationError {
  explicit NotPrime(const std::string& w) : ValidationError(w) {}
};

// exceeding the step bound of a harmonic flow signals a bug: the bound is a
// theorem for finite stalks
struct StepBoundExceeded : ValidationError {
  explicit StepBoundExceeded(const std::string& w) : ValidationError(w) {}
};

}  // namespace tsheaf
