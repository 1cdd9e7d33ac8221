#pragma once

#include <stdexcept>
#include <string>

namespace emw {

enum class ErrorCode {
  kInconsistentRotation,
  kNonPlanarEmbedding,
  kDisconnectedInput,
  kUnknownVertex,
  kNotAMatching,
  kForeignVertexInBag,
  kEmptyDecomposition,
  kInvalidSpec,
  kStaleFamily,
  kPreconditionViolated,
  kInstanceTooLarge,
  kInvalidInputDecomposition,
  kBagForFamilyMissing,
  kSelfLoopInput,
  kParseError,
  kNotRepresentable,
};

const char* to_string(ErrorCode code);

/// Every failure the library reports carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures also remember the 1-based input line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace emw
