#include "xratio/mobius.hpp"

#include <boost/multiprecision/integer.hpp>

namespace xratio {

using boost::multiprecision::gcd;

namespace {

BigInt abs_big(const BigInt &x) { return x < 0 ? BigInt(-x) : x; }

void require_distinct3(const ExtRational &a, const ExtRational &b,
                       const ExtRational &c, const char *what) {
  if (a == b || a == c || b == c)
    throw std::invalid_argument(std::string(what) + ": entries must be distinct");
}

// Mobius with the given rational entries, denominators cleared.
Mobius from_rationals(const ExtRational &e00, const ExtRational &e01,
                      const ExtRational &e10, const ExtRational &e11) {
  BigInt d = e00.den() * e01.den() * e10.den() * e11.den();
  auto scale = [&](const ExtRational &e) { return e.num() * (d / e.den()); };
  return Mobius(scale(e00), scale(e01), scale(e10), scale(e11));
}

} // namespace

Mobius::Mobius(BigInt p, BigInt q, BigInt r, BigInt s)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {
  if (p_ * s_ - q_ * r_ == 0)
    throw std::invalid_argument("Mobius: determinant must be nonzero");
  BigInt g = gcd(gcd(abs_big(p_), abs_big(q_)), gcd(abs_big(r_), abs_big(s_)));
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
    s_ /= g;
  }
  const BigInt *lead = &p_;
  if (*lead == 0) lead = &q_;
  if (*lead == 0) lead = &r_;
  if (*lead == 0) lead = &s_;
  if (*lead < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
    s_ = -s_;
  }
}

ExtRational Mobius::apply(const ExtRational &x) const {
  if (!x.is_finite()) {
    if (r_ == 0)
      return ExtRational::infinity();
    return ExtRational::make(p_, r_);
  }
  BigInt den = r_ * x.num() + s_ * x.den();
  if (den == 0)
    return ExtRational::infinity();
  return ExtRational::make(p_ * x.num() + q_ * x.den(), std::move(den));
}

Mobius Mobius::compose(const Mobius &o) const {
  return Mobius(p_ * o.p_ + q_ * o.r_, p_ * o.q_ + q_ * o.s_,
                r_ * o.p_ + s_ * o.r_, r_ * o.q_ + s_ * o.s_);
}

Mobius Mobius::inverse() const { return Mobius(s_, -q_, -r_, p_); }

std::string Mobius::str() const {
  return "[" + p_.str() + "," + q_.str() + "," + r_.str() + "," + s_.str() + "]";
}

Mobius send_to_inf_zero_one(const ExtRational &a, const ExtRational &b,
                            const ExtRational &c) {
  require_distinct3(a, b, c, "send_to_inf_zero_one");
  // Finite case: x -> (c-a)(x-b) / ((c-b)(x-a)). One infinite entry drops
  // the corresponding difference factor.
  if (!a.is_finite()) // x -> (x-b)/(c-b)
    return from_rationals(ExtRational(1), -b, ExtRational(0), c - b);
  if (!b.is_finite()) // x -> (c-a)/(x-a)
    return from_rationals(ExtRational(0), c - a, ExtRational(1), -a);
  if (!c.is_finite()) // x -> (x-b)/(x-a)
    return from_rationals(ExtRational(1), -b, ExtRational(1), -a);
  ExtRational ca = c - a, cb = c - b;
  return from_rationals(ca, -(ca * b), cb, -(cb * a));
}

Mobius solve_triple(const Triple &src, const Triple &dst) {
  Mobius to_src = send_to_inf_zero_one(src[0], src[1], src[2]);
  Mobius to_dst = send_to_inf_zero_one(dst[0], dst[1], dst[2]);
  return to_dst.inverse().compose(to_src);
}

ExtRational cross_ratio(const ExtRational &a, const ExtRational &b,
                        const ExtRational &c, const ExtRational &d) {
  if (!a.is_finite() || !b.is_finite() || !c.is_finite() || !d.is_finite())
    throw std::invalid_argument("cross_ratio: entries must be finite");
  if (a == b || a == c || a == d || b == c || b == d || c == d)
    throw std::invalid_argument("cross_ratio: entries must be distinct");
  return ((a - b) * (c - d)) / ((b - c) * (a - d));
}

bool quadruple_related(const Quadruple &aq, const Quadruple &bq) {
  auto check = [](const Quadruple &q, const char *side) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (q[i] == q[j])
          throw std::invalid_argument(std::string("quadruple_related: ") + side +
                                      " quadruple has repeated entries");
  };
  check(aq, "first");
  check(bq, "second");
  Mobius t = solve_triple({aq[0], aq[1], aq[2]}, {bq[0], bq[1], bq[2]});
  return t.apply(aq[3]) == bq[3];
}

} // namespace xratio
