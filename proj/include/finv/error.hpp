#ifndef FINV_ERROR_HPP
#define FINV_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace finv
{

enum class ErrorCode
{
  NotABijection,
  NotAnInvolution,
  Parse,
  NegativeHeight,
  NonzeroFinalHeight,
  LabelOutOfRange,
  OutOfDomain,
  PositionOutOfRange,
  ArityMismatch,
  Undecomposable,
  NotADyckPath,
  NotIrreducible,
  DivisionByNonUnit,
  BadConstantTerm,
  NonzeroInnerConstant,
  InternalMismatch,
  UnknownSeries,
  OutOfRange,
};

// Stable snake_case token, used by the C API and the CLI.
std::string_view error_token(ErrorCode code) noexcept;

class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, std::string const &what)
    : std::runtime_error(what), _code(code)
  {}

  ErrorCode code() const noexcept { return _code; }

private:
  ErrorCode _code;
};

} // namespace finv

#endif
