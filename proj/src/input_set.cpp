#include "xratio/input_set.hpp"

#include <algorithm>

namespace xratio {

InputSet InputSet::from_values(std::vector<ExtRational> values) {
  for (const auto &v : values)
    if (!v.is_finite())
      throw std::invalid_argument("InputSet: elements must be finite");
  std::sort(values.begin(), values.end());
  auto dup = std::adjacent_find(values.begin(), values.end());
  if (dup != values.end())
    throw std::invalid_argument("InputSet: duplicate element " + dup->str());
  InputSet s;
  s.elems_ = std::move(values);
  return s;
}

InputSet InputSet::from_integers(std::initializer_list<long long> values) {
  std::vector<ExtRational> v;
  v.reserve(values.size());
  for (long long x : values)
    v.emplace_back(x);
  return from_values(std::move(v));
}

bool InputSet::contains(const ExtRational &x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool InputSet::all_small_integers(std::int64_t bound) const {
  for (const auto &e : elems_) {
    if (!e.is_integer())
      return false;
    if (e.num() > bound || e.num() < -bound)
      return false;
  }
  return true;
}

} // namespace xratio
