#ifndef STARALG_ERRORS_HPP
#define STARALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace staralg {

/// Machine-readable failure codes surfaced by library operations.
/// The CLI maps these to {"error": <name>, ...} with exit status 1.
enum class ErrorCode {
  DimensionMismatch,
  DimensionTooSmall,
  NonRealMu,
  NonPositiveMu,
  NotInvariant,
  NotHermitian,
  LimitDiverges,
  TranscendentalResidue,
  ZeroMomentumPoint,
  NotAHomMatrix,
  AlgebraMismatch,
  MixedAlgebra,
  TruncationTooSmall,
  NotReducible,
  WeylHasNoEigenstates,
  BadGeneratorIndex,
  NonCommutativeAlgebra,
  IndexOutOfRange,
  SyntaxError,
};

const char* error_name(ErrorCode code);

/// Domain error carrying a code plus a human-readable detail string.
/// SyntaxError additionally records the byte offset of the failure.
class StarError : public std::runtime_error {
 public:
  StarError(ErrorCode code, std::string detail, long position = -1)
      : std::runtime_error(std::string(error_name(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code),
        detail_(std::move(detail)),
        position_(position) {}

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }
  long position() const { return position_; }

 private:
  ErrorCode code_;
  std::string detail_;
  long position_;
};

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::NonRealMu: return "NonRealMu";
    case ErrorCode::NonPositiveMu: return "NonPositiveMu";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::LimitDiverges: return "LimitDiverges";
    case ErrorCode::TranscendentalResidue: return "TranscendentalResidue";
    case ErrorCode::ZeroMomentumPoint: return "ZeroMomentumPoint";
    case ErrorCode::NotAHomMatrix: return "NotAHomMatrix";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::MixedAlgebra: return "MixedAlgebra";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::NotReducible: return "NotReducible";
    case ErrorCode::WeylHasNoEigenstates: return "WeylHasNoEigenstates";
    case ErrorCode::BadGeneratorIndex: return "BadGeneratorIndex";
    case ErrorCode::NonCommutativeAlgebra: return "NonCommutativeAlgebra";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

}  // namespace staralg

#endif
