#pragma once

#include <stdexcept>
#include <string>

namespace qeom {

// Every failure the library reports derives from Error and carries a stable
// code string usable in tests and CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define QEOM_DEFINE_ERROR(NAME)                         \
  class NAME : public Error {                           \
   public:                                              \
    explicit NAME(const std::string& what)              \
        : Error(#NAME, what) {}                         \
  }

QEOM_DEFINE_ERROR(MissingHeaderField);
QEOM_DEFINE_ERROR(IndexOutOfRange);
QEOM_DEFINE_ERROR(MalformedLine);
QEOM_DEFINE_ERROR(ConflictingDuplicate);
QEOM_DEFINE_ERROR(ValidationFailed);
QEOM_DEFINE_ERROR(IoFailure);
QEOM_DEFINE_ERROR(QubitCountMismatch);
QEOM_DEFINE_ERROR(NonHermitianInput);
QEOM_DEFINE_ERROR(EmptySector);
QEOM_DEFINE_ERROR(OddElectronCount);
QEOM_DEFINE_ERROR(SizeMismatch);
QEOM_DEFINE_ERROR(MissingExpectation);
QEOM_DEFINE_ERROR(SingularMetric);
QEOM_DEFINE_ERROR(NotInformationallyComplete);
QEOM_DEFINE_ERROR(EmptyRecord);
QEOM_DEFINE_ERROR(DimensionMismatch);
QEOM_DEFINE_ERROR(EmptySpectrum);

#undef QEOM_DEFINE_ERROR

}  // namespace qeom
