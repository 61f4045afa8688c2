#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace unigraph {

using Count = std::int64_t;
// Degree sums and products of counts can exceed 64 bits for huge
// run-length sequences.
using Wide = __int128;

enum class ErrorCode {
  kInvalidArgument,
  kNegativeDegree,
  kNotGraphical,
  kInvalidPartition,
  kVariantUndefined,
  kParamOutOfRange,
  kNotUnigraph,
  kTooLarge,
  kInfeasible,
  kParse,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace unigraph
