#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace hyperharm {

enum class ErrorKind {
  InvalidDimension,
  InvalidParameters,
  InvalidParameter,
  Pole,
  SingularArgument,
  OutOfStrip,
  Accuracy,
  InvalidExponent,
  InvalidShift,
  UndefinedDefect,
  SymbolEvaluation,
  OutOfSpectrum,
  DegenerateExponent,
  HypothesisViolation,
  InadmissibleOrder,
  OutOfRange,
  InadmissibleWeight,
  InadmissibleSymbol,
  CorpusConstruction,
  TruncationRisk,
  Parse,
  Usage,
  Io,
};

const char* kind_name(ErrorKind kind);

/// True for kinds that indicate a numerical convergence problem rather than bad input.
bool is_numerical(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

namespace detail {
inline void append(std::ostringstream&) {}
template <class T, class... Rest>
void append(std::ostringstream& out, const T& head, const Rest&... rest) {
  out << head;
  append(out, rest...);
}
}  // namespace detail

template <class... Parts>
[[noreturn]] void fail(ErrorKind kind, const Parts&... parts) {
  std::ostringstream out;
  out.precision(17);
  detail::append(out, parts...);
  throw Error(kind, out.str());
}

}  // namespace hyperharm
