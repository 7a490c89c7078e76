#pragma once

#include "xratio/rational.hpp"

#include <array>
#include <tuple>

namespace xratio {

/// A projective transformation x -> (px+q)/(rx+s) of the extended line,
/// stored as an integer matrix in canonical form: entries coprime, first
/// nonzero entry (in p,q,r,s order) positive, determinant nonzero. One
/// representative per transformation, so equality is structural.
class Mobius {
public:
  Mobius() : p_(1), q_(0), r_(0), s_(1) {} // identity

  // Canonicalizes; throws std::invalid_argument on zero determinant.
  Mobius(BigInt p, BigInt q, BigInt r, BigInt s);

  static Mobius identity() { return Mobius(); }

  const BigInt &p() const { return p_; }
  const BigInt &q() const { return q_; }
  const BigInt &r() const { return r_; }
  const BigInt &s() const { return s_; }

  BigInt determinant() const { return p_ * s_ - q_ * r_; }

  // Total map on the extended line; the infinity cases are explicit.
  ExtRational apply(const ExtRational &x) const;

  // apply(a.compose(b), x) == a.apply(b.apply(x))
  Mobius compose(const Mobius &other) const;
  Mobius inverse() const;

  bool operator==(const Mobius &o) const {
    return p_ == o.p_ && q_ == o.q_ && r_ == o.r_ && s_ == o.s_;
  }
  bool operator!=(const Mobius &o) const { return !(*this == o); }
  bool operator<(const Mobius &o) const {
    return std::tie(p_, q_, r_, s_) < std::tie(o.p_, o.q_, o.r_, o.s_);
  }

  std::string str() const;

private:
  BigInt p_, q_, r_, s_;
};

using Triple = std::array<ExtRational, 3>;
using Quadruple = std::array<ExtRational, 4>;

/// The unique transformation carrying src (three distinct points) onto dst
/// (three distinct points), built by composing maps through (inf, 0, 1).
/// Throws std::invalid_argument on repeated entries.
Mobius solve_triple(const Triple &src, const Triple &dst);

/// The map sending (a,b,c) to (inf, 0, 1); building block of solve_triple,
/// exposed because tests pin its defining conditions directly.
Mobius send_to_inf_zero_one(const ExtRational &a, const ExtRational &b,
                            const ExtRational &c);

/// X(a,b,c,d) = (a-b)(c-d) / ((b-c)(a-d)) on four distinct finite points.
ExtRational cross_ratio(const ExtRational &a, const ExtRational &b,
                        const ExtRational &c, const ExtRational &d);

/// True iff some projective transformation carries aq onto bq entrywise.
/// Decided through solve_triple on the leading three coordinates, which is
/// deliberately a different code path from cross_ratio equality.
bool quadruple_related(const Quadruple &aq, const Quadruple &bq);

} // namespace xratio
