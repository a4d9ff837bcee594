#ifndef LINCHOICE_ERROR_HPP_
#define LINCHOICE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace linchoice {

enum class ErrorKind {
  kInconsistent,
  kNotTotalPreorder,
  kCarrierNotRealizable,
  kFallbackNotRealizable,
  kNotUnionClosed,
  kAxiomViolation,
  kInternalIncompatibility,
  kTooLarge,
  kOutOfDomain,
  kFamilyInvalid,
  kSyntaxError,
  kUndeclaredArgument,
  kUnknownAlternative,
  kInvalidStructure,
  kInvalidTable,
  kInvalidOrder,
  kInvalidRelation,
  kFormat,
  kIo,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every module. `kind` is machine readable and is what
/// the command line tool reports.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail);

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace linchoice

#endif  // LINCHOICE_ERROR_HPP_
