#ifndef UMCONV_ERROR_HPP
#define UMCONV_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace umconv {

enum class ErrorKind {
  IoError,
  // CoNLL-U parsing
  WrongColumnCount,
  MalformedId,
  MalformedFeats,
  StrayComment,
  EmptySentence,
  // registry / mapping / table loading
  DuplicateKey,
  UnknownTargetAtom,
  MalformedRow,
  // rule DSL
  SyntaxError,
  UnknownAtom,
  UnknownKeyword,
  // conversion / evaluation
  ExcludedPos,
  DimensionConflict,
  EmptyCorpus,
  AlignmentError,
};

const char* error_kind_name(ErrorKind kind);

/// Error with a structured kind and, where it applies, a 1-based source line.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::size_t line = 0)
      : std::runtime_error(format(kind, message, line)), kind_(kind), line_(line) {}

  ErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  static std::string format(ErrorKind kind, const std::string& message, std::size_t line);

  ErrorKind kind_;
  std::size_t line_;
};

}  // namespace umconv

#endif
