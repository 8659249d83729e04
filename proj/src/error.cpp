#include "hyperharm/error.hpp"

namespace hyperharm {

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidDimension: return "invalid-dimension";
    case ErrorKind::InvalidParameters: return "invalid-parameters";
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::SingularArgument: return "singular-argument";
    case ErrorKind::OutOfStrip: return "out-of-strip";
    case ErrorKind::Accuracy: return "accuracy";
    case ErrorKind::InvalidExponent: return "invalid-exponent";
    case ErrorKind::InvalidShift: return "invalid-shift";
    case ErrorKind::UndefinedDefect: return "undefined-defect";
    case ErrorKind::SymbolEvaluation: return "symbol-evaluation";
    case ErrorKind::OutOfSpectrum: return "out-of-spectrum";
    case ErrorKind::DegenerateExponent: return "degenerate-exponent";
    case ErrorKind::HypothesisViolation: return "hypothesis-violation";
    case ErrorKind::InadmissibleOrder: return "inadmissible-order";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::InadmissibleWeight: return "inadmissible-weight";
    case ErrorKind::InadmissibleSymbol: return "inadmissible-symbol";
    case ErrorKind::CorpusConstruction: return "corpus-construction";
    case ErrorKind::TruncationRisk: return "truncation-risk";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

bool is_numerical(ErrorKind kind) {
  return kind == ErrorKind::Accuracy || kind == ErrorKind::TruncationRisk;
}

}  // namespace hyperharm
