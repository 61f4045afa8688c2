#include "unigraph/error.hpp"

namespace unigraph {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNegativeDegree: return "NegativeDegree";
    case ErrorCode::kNotGraphical: return "NotGraphical";
    case ErrorCode::kInvalidPartition: return "InvalidPartition";
    case ErrorCode::kVariantUndefined: return "VariantUndefined";
    case ErrorCode::kParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::kNotUnigraph: return "NotUnigraph";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace unigraph
