#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace xratio {

using BigInt = boost::multiprecision::cpp_int;

/// A point of the extended line: a rational number in lowest terms, or the
/// single (unsigned) point at infinity. Representation is canonical, so
/// equality is structural.
///
/// Infinity is a marker, not a number: the only arithmetic involving it is
/// the divide-by-zero convention. Everything else throws, and callers that
/// need limit behaviour (Mobius::apply) do explicit case analysis instead.
class ExtRational {
public:
  ExtRational() : num_(0), den_(1) {}
  ExtRational(long long n) : num_(n), den_(1) {}
  ExtRational(const BigInt &n) : num_(n), den_(1) {}

  // n/0 with n != 0 yields infinity; 0/0 throws.
  static ExtRational make(BigInt num, BigInt den);
  static ExtRational infinity();

  bool is_finite() const { return den_ != 0; }
  bool is_zero() const { return den_ != 0 && num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  const BigInt &num() const { return num_; }
  const BigInt &den() const { return den_; }

  ExtRational operator+(const ExtRational &o) const;
  ExtRational operator-(const ExtRational &o) const;
  ExtRational operator*(const ExtRational &o) const;
  ExtRational operator/(const ExtRational &o) const;
  ExtRational operator-() const;

  bool operator==(const ExtRational &o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const ExtRational &o) const { return !(*this == o); }

  // Total order used for canonical sorting; infinity compares above every
  // finite value.
  bool operator<(const ExtRational &o) const;
  bool operator>(const ExtRational &o) const { return o < *this; }
  bool operator<=(const ExtRational &o) const { return !(o < *this); }
  bool operator>=(const ExtRational &o) const { return !(*this < o); }

  std::string str() const;

  // Accepts "p", "p/q" or "inf". Throws std::invalid_argument on junk.
  static ExtRational parse(const std::string &text);

  double to_double() const;

private:
  ExtRational(BigInt num, BigInt den, int /*canonical tag*/)
      : num_(std::move(num)), den_(std::move(den)) {}

  void require_finite(const char *op) const;

  BigInt num_;
  BigInt den_; // 0 encodes infinity (num_ fixed at 1)
};

} // namespace xratio
