#include "finv/error.hpp"

namespace finv
{

std::string_view error_token(ErrorCode code) noexcept
{
  switch (code) {
  case ErrorCode::NotABijection: return "not_a_bijection";
  case ErrorCode::NotAnInvolution: return "not_an_involution";
  case ErrorCode::Parse: return "parse_error";
  case ErrorCode::NegativeHeight: return "negative_height";
  case ErrorCode::NonzeroFinalHeight: return "nonzero_final_height";
  case ErrorCode::LabelOutOfRange: return "label_out_of_range";
  case ErrorCode::OutOfDomain: return "out_of_domain";
  case ErrorCode::PositionOutOfRange: return "position_out_of_range";
  case ErrorCode::ArityMismatch: return "arity_mismatch";
  case ErrorCode::Undecomposable: return "undecomposable";
  case ErrorCode::NotADyckPath: return "not_a_dyck_path";
  case ErrorCode::NotIrreducible: return "not_irreducible";
  case ErrorCode::DivisionByNonUnit: return "division_by_non_unit";
  case ErrorCode::BadConstantTerm: return "bad_constant_term";
  case ErrorCode::NonzeroInnerConstant: return "nonzero_inner_constant";
  case ErrorCode::InternalMismatch: return "internal_mismatch";
  case ErrorCode::UnknownSeries: return "unknown_series";
  case ErrorCode::OutOfRange: return "out_of_range";
  }
  return "unknown_error";
}

} // namespace finv
