#pragma once

#include "xratio/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace xratio {

/// A finite set of distinct finite rationals, kept sorted. The input domain
/// of every image-set and energy computation.
class InputSet {
public:
  InputSet() = default;

  // Sorts and validates; duplicates and infinities are hard errors.
  static InputSet from_values(std::vector<ExtRational> values);
  static InputSet from_integers(std::initializer_list<long long> values);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const ExtRational &operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<ExtRational> &elements() const { return elems_; }

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool contains(const ExtRational &x) const;
  bool contains_zero() const { return contains(ExtRational(0)); }

  // True when every element is an integer with |x| <= bound; gates the
  // int64 enumeration fast path.
  bool all_small_integers(std::int64_t bound) const;

private:
  std::vector<ExtRational> elems_;
};

} // namespace xratio
