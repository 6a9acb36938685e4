#pragma once

#include <stdexcept>
#include <string>

namespace z2sum {

inline constexpr const char* kVersion = "0.3.0";

/// Dimension caps. The bitmap carrier supports up to kMaxDim; the exhaustive
/// searches are deliberately held far below that.
struct Limits {
  int max_dim = 30;
  int transform_max_dim = 26;         // 2^26 int64 cells per operand
  int fixpoint_max_dim = 12;          // full 2^n sweep of index sets
  int hs_oracle_max_log = 16;         // hs_oracle operands <= 2^16
  int exhaustive_unrestricted_dim = 3;
  int exhaustive_generating_dim = 4;
  int compressed_generating_dim = 5;
};

inline constexpr int kMaxDim = 30;

/// Process-wide caps; mutable so the CLI and tests can raise them.
Limits& limits();

/// Thrown for violated preconditions and malformed inputs. The CLI maps this
/// to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace z2sum
