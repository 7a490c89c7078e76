#include "xratio/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace xratio {

using boost::multiprecision::gcd;

ExtRational ExtRational::make(BigInt num, BigInt den) {
  if (num == 0 && den == 0)
    throw std::invalid_argument("ExtRational: 0/0 is indeterminate");
  if (den == 0)
    return infinity();
  if (den < 0) {
    num = -num;
    den = -den;
  }
  BigInt g = gcd(num < 0 ? BigInt(-num) : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return ExtRational(std::move(num), std::move(den), 0);
}

ExtRational ExtRational::infinity() { return ExtRational(BigInt(1), BigInt(0), 0); }

void ExtRational::require_finite(const char *op) const {
  if (den_ == 0)
    throw std::domain_error(std::string("ExtRational: ") + op +
                            " is undefined for infinity");
}

ExtRational ExtRational::operator+(const ExtRational &o) const {
  require_finite("add");
  o.require_finite("add");
  return make(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ExtRational ExtRational::operator-(const ExtRational &o) const {
  require_finite("subtract");
  o.require_finite("subtract");
  return make(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

ExtRational ExtRational::operator*(const ExtRational &o) const {
  require_finite("multiply");
  o.require_finite("multiply");
  return make(num_ * o.num_, den_ * o.den_);
}

ExtRational ExtRational::operator/(const ExtRational &o) const {
  require_finite("divide");
  o.require_finite("divide");
  if (o.num_ == 0) {
    if (num_ == 0)
      throw std::domain_error("ExtRational: 0/0 is indeterminate");
    return infinity(); // nonzero / 0
  }
  return make(num_ * o.den_, den_ * o.num_);
}

ExtRational ExtRational::operator-() const {
  require_finite("negate");
  return ExtRational(-num_, den_, 0);
}

bool ExtRational::operator<(const ExtRational &o) const {
  if (den_ == 0)
    return false; // infinity is maximal
  if (o.den_ == 0)
    return true;
  return num_ * o.den_ < o.num_ * den_;
}

std::string ExtRational::str() const {
  if (den_ == 0)
    return "inf";
  if (den_ == 1)
    return num_.str();
  return num_.str() + "/" + den_.str();
}

ExtRational ExtRational::parse(const std::string &text) {
  if (text.empty())
    throw std::invalid_argument("ExtRational: empty string");
  if (text == "inf" || text == "Inf" || text == "INF")
    return infinity();
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return ExtRational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0)
      throw std::invalid_argument("zero denominator");
    return make(std::move(num), std::move(den));
  } catch (const std::runtime_error &) {
    throw std::invalid_argument("ExtRational: cannot parse '" + text + "'");
  }
}

double ExtRational::to_double() const {
  if (den_ == 0)
    throw std::domain_error("ExtRational: infinity has no double value");
  return num_.convert_to<double>() / den_.convert_to<double>();
}

} // namespace xratio
