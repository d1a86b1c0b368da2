#include "blowup/exact_int.h"

#include <algorithm>
#include <cctype>

namespace blowup {

ExactInt ipow(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(ExactInt(base), static_cast<unsigned>(exp));
}

ExactInt choose2(const ExactInt& n) {
  if (n < 2) return 0;
  return n * (n - 1) / 2;
}

ExactInt exact_div(const ExactInt& dividend, const ExactInt& divisor) {
  if (divisor == 0) throw InexactDivision("division by zero");
  ExactInt q, r;
  boost::multiprecision::divide_qr(dividend, divisor, q, r);
  if (r != 0) {
    throw InexactDivision(dividend.str() + " is not divisible by " + divisor.str());
  }
  return q;
}

bool is_integer(const ExactRational& q) { return denominator(q) == 1; }

std::string to_string(const ExactInt& v) { return v.str(); }

std::string to_string(const ExactRational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

ExactInt parse_exact_int(const std::string& text) {
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (start == text.size() ||
      !std::all_of(text.begin() + start, text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  return ExactInt(text);
}

ExactRational parse_exact_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return ExactRational(parse_exact_int(text));
  const ExactInt den = parse_exact_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return ExactRational(parse_exact_int(text.substr(0, slash)), den);
}

void CountAccumulator::merge(const CountAccumulator& other) {
  add(other.low_);
  overflow_ += other.overflow_;
}

ExactInt CountAccumulator::value() const { return (overflow_ << 64) + low_; }

}  // namespace blowup
