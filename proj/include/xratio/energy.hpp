#pragma once

#include "xratio/input_set.hpp"

#include <array>
#include <cstdint>

namespace xratio {

// Default size caps per order. Direct counting is O(n^(order+2)); the dual
// method enumerates candidate transformations, O(n^6). 0 in the cap
// arguments below means "use the default"; larger explicit caps are the
// library equivalent of the CLI's --unsafe-cap.
inline constexpr std::array<std::size_t, 3> kEnergyDirectCaps = {64, 32, 16};
inline constexpr std::size_t kEnergyDualCap = 12;

/// E_order(A): the number of pairs of valid ordered tuples whose
/// cross-ratio expressions agree. Computed as the sum of squared
/// multiplicities of the exact value histogram.
/// Order 1: triples against X(0,a1,a2,a3); order 2: quadruples; order 3:
/// quintuples keyed by the value pair.
std::uint64_t energy_direct(int order, const InputSet &A, std::size_t cap = 0,
                            unsigned threads = 0);

/// The same quantity counted through the transformations that witness the
/// coincidences: enumerate candidate maps with solve_triple over tuple
/// pairs, tally N(t) = #{(a,b) : t(a) = b}, and sum the falling factorial
/// of length order+2 of N over distinct maps. Exact equality with
/// energy_direct is the cross-validation oracle for the whole pipeline.
std::uint64_t energy_dual(int order, const InputSet &A, std::size_t cap = 0);

struct CauchySchwarzReport {
  std::uint64_t tuple_count = 0;
  std::uint64_t image_count = 0;
  std::uint64_t energy = 0;
  std::uint64_t lower_bound = 0; // ceil(tuple_count^2 / energy)
};

/// tuple_count^2 <= image_count * energy, so the image is at least
/// ceil(tuple_count^2 / energy). Throws std::logic_error if the inequality
/// ever fails (it cannot, unless the two counting paths disagree).
CauchySchwarzReport cauchy_schwarz_report(int order, const InputSet &A,
                                          std::size_t cap = 0,
                                          unsigned threads = 0);

} // namespace xratio
