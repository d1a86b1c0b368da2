#ifndef BLOWUP_EXACT_INT_H_
#define BLOWUP_EXACT_INT_H_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace blowup {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

class InexactDivision : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

ExactInt ipow(std::uint64_t base, std::uint64_t exp);

// C(n, 2).
ExactInt choose2(const ExactInt& n);

// Throws InexactDivision when divisor does not divide dividend.
ExactInt exact_div(const ExactInt& dividend, const ExactInt& divisor);

bool is_integer(const ExactRational& q);

// Integral rationals render as plain decimal, others as "p/q" in lowest terms.
std::string to_string(const ExactInt& v);
std::string to_string(const ExactRational& q);

ExactInt parse_exact_int(const std::string& text);
ExactRational parse_exact_rational(const std::string& text);

// Sums uint64 terms; carries spill into an arbitrary-precision total.
class CountAccumulator {
 public:
  void add(std::uint64_t x) {
    if (__builtin_add_overflow(low_, x, &low_)) overflow_ += 1;
  }
  void merge(const CountAccumulator& other);
  ExactInt value() const;

 private:
  std::uint64_t low_ = 0;
  ExactInt overflow_ = 0;  // in units of 2^64
};

}  // namespace blowup

#endif  // BLOWUP_EXACT_INT_H_
