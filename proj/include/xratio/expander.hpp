#pragma once

#include "xratio/input_set.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace xratio {

/// Image-set size of one expander function on one input set. tuple_count is
/// the number of ordered tuples actually evaluated; skipped counts the
/// degenerate tuples (repeated entries, or a zero entry colliding with the
/// fixed 0 of f) that the cross ratio is not defined on.
struct ImageStats {
  std::uint64_t image_count = 0;
  std::uint64_t tuple_count = 0;
  std::uint64_t skipped = 0;
};

// Enumeration size caps, enforced by the experiments layer and the CLI
// (overridable there with --unsafe-cap); the library functions themselves
// accept any size.
inline constexpr std::size_t kCapF = 256;
inline constexpr std::size_t kCapG = 128;
inline constexpr std::size_t kCapH = 48;

// |{X(0,a,b,c)}|, |{X(a,b,c,d)}|, |{(X(a,b,c,d), X(a,b,c,e))}| over ordered
// tuples of distinct elements. threads = 0 picks the hardware count; the
// tuple space is partitioned by leading element and partial value sets are
// merged by set union, so the result is independent of the thread count.
ImageStats image_f(const InputSet &A, unsigned threads = 0);
ImageStats image_g(const InputSet &A, unsigned threads = 0);
ImageStats image_h(const InputSet &A, unsigned threads = 0);

// Full value sets, sorted; meant for small inputs and for the CLI's value
// dump. Always uses exact big-rational arithmetic.
std::vector<ExtRational> image_f_values(const InputSet &A);
std::vector<ExtRational> image_g_values(const InputSet &A);
std::vector<std::pair<ExtRational, ExtRational>> image_h_values(const InputSet &A);

} // namespace xratio
