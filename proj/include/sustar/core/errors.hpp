#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sustar {

enum class ErrorKind {
  NonHermitianInput,
  NonCommuting,
  NonCommutingTuple,
  NotPositive,
  NotBounded,
  NotCoercive,
  NotNormal,
  NotApplicable,
  NoConvergence,
  BackendMismatch,
  EmptyDomain,
  GeneratorNotInvertible,
  PostconditionFailed,
  ParseError,
  UnknownSuite,
  UnknownFixture,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonHermitianInput: return "NonHermitianInput";
    case ErrorKind::NonCommuting: return "NonCommuting";
    case ErrorKind::NonCommutingTuple: return "NonCommutingTuple";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::NotCoercive: return "NotCoercive";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::BackendMismatch: return "BackendMismatch";
    case ErrorKind::EmptyDomain: return "EmptyDomain";
    case ErrorKind::GeneratorNotInvertible: return "GeneratorNotInvertible";
    case ErrorKind::PostconditionFailed: return "PostconditionFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
  }
  return "Unknown";
}

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sustar
