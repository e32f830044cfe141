#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace imverma {

/// Exact rational scalar. mpq_class keeps numerator/denominator reduced as
/// long as every value is produced by arithmetic or by parse_scalar().
using Scalar = mpq_class;

/// Malformed textual input (config, state files, generator names).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that is inconsistent with the algebra or module in use.
class SemanticError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p" or "p/q" (optional leading '-'); rejects decimals and q = 0.
Scalar parse_scalar(std::string_view text);

/// Canonical form: "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& x);

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

}  // namespace imverma
