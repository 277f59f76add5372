#ifndef QPOLYA_ERROR_HPP
#define QPOLYA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qpolya {

enum class ErrorKind {
    DomainError,      // argument outside a function's mathematical domain
    NotSquarefree,    // D has a square factor
    DegenerateD,      // D in {0, 1}
    WrongSignature,   // real/imaginary mismatch
    MissingUnitNorm,  // real field requires a fundamental-unit norm
    NonIntegerResult, // an identity that must produce an integer failed
    NotAUnit,         // Degert formula produced a non-unit
    PrecisionFailure, // analytic value too far from an integer
    NoCrossing,       // threshold solver found no f = 1 crossing
    ResourceLimit,    // sweep exceeds the configured memory budget
    DataFileMissing,  // reference table file not found / unreadable
    InternalCheck,    // a theorem-backed identity failed: implementation bug
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace qpolya

#endif
