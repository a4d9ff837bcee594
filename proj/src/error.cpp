#include "linchoice/error.hpp"

namespace linchoice {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInconsistent: return "Inconsistent";
    case ErrorKind::kNotTotalPreorder: return "NotTotalPreorder";
    case ErrorKind::kCarrierNotRealizable: return "CarrierNotRealizable";
    case ErrorKind::kFallbackNotRealizable: return "FallbackNotRealizable";
    case ErrorKind::kNotUnionClosed: return "NotUnionClosed";
    case ErrorKind::kAxiomViolation: return "AxiomViolation";
    case ErrorKind::kInternalIncompatibility: return "InternalIncompatibility";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kOutOfDomain: return "OutOfDomain";
    case ErrorKind::kFamilyInvalid: return "FamilyInvalid";
    case ErrorKind::kSyntaxError: return "SyntaxError";
    case ErrorKind::kUndeclaredArgument: return "UndeclaredArgument";
    case ErrorKind::kUnknownAlternative: return "UnknownAlternative";
    case ErrorKind::kInvalidStructure: return "InvalidStructure";
    case ErrorKind::kInvalidTable: return "InvalidTable";
    case ErrorKind::kInvalidOrder: return "InvalidOrder";
    case ErrorKind::kInvalidRelation: return "InvalidRelation";
    case ErrorKind::kFormat: return "Format";
    case ErrorKind::kIo: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(std::move(detail)) {}

}  // namespace linchoice
