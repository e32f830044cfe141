#include "imverma/scalar.hpp"

#include <cctype>

namespace imverma {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "' (expected p or p/q)");
  }
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Scalar value(mpz_class(std::string(num), 10), d);
  value.canonicalize();
  if (!text.empty() && text.front() == '-') value = -value;
  return value;
}

std::string to_string(const Scalar& x) { return x.get_str(10); }

}  // namespace imverma
