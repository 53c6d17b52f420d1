#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace torus {

// Exact rational scalar used throughout the exponent calculus. Canonical form
// (positive denominator, reduced) is maintained by boost.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

struct parse_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parses "5/6", "-1/10", "3". Rejects zero denominators and floats.
Rat parse_rat(const std::string& text);

std::string to_string(const Rat& r);

inline bool is_nonneg_integer(const Rat& r) {
  return r >= 0 && denominator(r) == 1;
}

// A rational extended with +infinity, for time-integrability exponents
// (q = +inf is the L^inf(0,T) case). +inf compares above every rational.
class ExtRat {
 public:
  ExtRat() : finite_(true), value_(0) {}
  ExtRat(Rat v) : finite_(true), value_(std::move(v)) {}
  ExtRat(int v) : finite_(true), value_(v) {}
  static ExtRat infinity() {
    ExtRat e;
    e.finite_ = false;
    return e;
  }

  bool is_finite() const { return finite_; }
  const Rat& value() const {
    if (!finite_) throw std::logic_error("ExtRat: value() on +inf");
    return value_;
  }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) { return !(b < a); }
  friend bool operator>=(const ExtRat& a, const ExtRat& b) { return !(a < b); }

 private:
  bool finite_;
  Rat value_;
};

// Accepts everything parse_rat does, plus "inf" / "+inf" / "infinity".
ExtRat parse_ext_rat(const std::string& text);

std::string to_string(const ExtRat& r);

}  // namespace torus
