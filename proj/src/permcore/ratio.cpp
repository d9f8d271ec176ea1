#include "drg/ratio.hpp"

#include "drg/error.hpp"

namespace drg {

ExactRatio::ExactRatio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
  value_ = Rep(num, den);
}

ExactRatio ExactRatio::from_string(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return ExactRatio(BigInt(text), BigInt(1));
    return ExactRatio(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw Error(ErrorKind::InvalidInput, "malformed ratio '" + text + "'");
  }
}

std::string ExactRatio::to_string() const {
  return numerator().str() + "/" + denominator().str();
}

double ExactRatio::to_double() const { return value_.convert_to<double>(); }

ExactRatio ExactRatio::operator/(const ExactRatio& o) const {
  if (o.value_ == 0) throw Error(ErrorKind::InvalidInput, "division by zero");
  return ExactRatio(value_ / o.value_);
}

} // namespace drg
