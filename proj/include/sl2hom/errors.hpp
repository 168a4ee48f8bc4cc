#ifndef SL2HOM_ERRORS_HPP
#define SL2HOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sl2hom {

enum class Err {
  ZeroInverse,
  BudgetExceeded,
  VarMismatch,
  CharMismatch,
  UnboundVariable,
  NotSquare,
  NotRegular,
  RingMismatch,
  BadParams,
  BadCharacteristic,
  UnknownLemma,
  DegreeTooLarge,
  AmbiguousSolution,
  DegreeBoundTooSmall,
  InterpolationFailed,
  FieldTooSmall,
  SearchBudgetExceeded,
  NoMatch,
  AmbiguousMatch,
  UnidentifiedSummand,
  NotUnimodular,
};

const char* err_name(Err e);

class ToolError : public std::runtime_error {
 public:
  ToolError(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw ToolError(code, what); }

}  // namespace sl2hom

#endif
