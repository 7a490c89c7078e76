#pragma once

// Sorted-vector deduplication and histogram accumulators for the tuple
// enumeration loops. Values arrive in arbitrary order; chunks are sorted and
// merged so memory stays proportional to the number of distinct keys plus
// one chunk. Merging is associative and commutative, so any partition of the
// tuple space (and any thread count) yields the same result.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace xratio::detail {

template <class K> class DedupSet {
public:
  explicit DedupSet(std::size_t chunk_cap = std::size_t(1) << 22)
      : chunk_cap_(chunk_cap) {}

  void insert(K key) {
    chunk_.push_back(std::move(key));
    if (chunk_.size() >= chunk_cap_)
      flush();
  }

  std::vector<K> take() {
    flush();
    return std::move(base_);
  }

private:
  void flush() {
    if (chunk_.empty())
      return;
    std::sort(chunk_.begin(), chunk_.end());
    chunk_.erase(std::unique(chunk_.begin(), chunk_.end()), chunk_.end());
    std::size_t mid = base_.size();
    base_.insert(base_.end(), std::make_move_iterator(chunk_.begin()),
                 std::make_move_iterator(chunk_.end()));
    std::inplace_merge(base_.begin(), base_.begin() + mid, base_.end());
    base_.erase(std::unique(base_.begin(), base_.end()), base_.end());
    chunk_.clear();
  }

  std::vector<K> base_; // sorted, unique
  std::vector<K> chunk_;
  std::size_t chunk_cap_;
};

// Union of sorted unique vectors; consumes the inputs.
template <class K>
std::vector<K> merge_unique(std::vector<std::vector<K>> parts) {
  std::vector<K> out;
  for (auto &p : parts) {
    std::size_t mid = out.size();
    out.insert(out.end(), std::make_move_iterator(p.begin()),
               std::make_move_iterator(p.end()));
    p.clear();
    p.shrink_to_fit();
    std::inplace_merge(out.begin(), out.begin() + mid, out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

// Multiplicity histogram with the same chunked layout: base_ holds sorted
// (key, count) runs.
template <class K> class HistogramSet {
public:
  explicit HistogramSet(std::size_t chunk_cap = std::size_t(1) << 22)
      : chunk_cap_(chunk_cap) {}

  void insert(K key) {
    chunk_.push_back(std::move(key));
    if (chunk_.size() >= chunk_cap_)
      flush();
  }

  std::vector<std::pair<K, std::uint64_t>> take() {
    flush();
    return std::move(base_);
  }

private:
  void flush() {
    if (chunk_.empty())
      return;
    std::sort(chunk_.begin(), chunk_.end());
    std::vector<std::pair<K, std::uint64_t>> runs;
    for (std::size_t i = 0; i < chunk_.size();) {
      std::size_t j = i;
      while (j < chunk_.size() && chunk_[j] == chunk_[i])
        ++j;
      runs.emplace_back(std::move(chunk_[i]), j - i);
      i = j;
    }
    chunk_.clear();
    base_ = merge_runs(std::move(base_), std::move(runs));
  }

public:
  // Merge two sorted (key, count) run vectors, summing counts on equal keys.
  static std::vector<std::pair<K, std::uint64_t>>
  merge_runs(std::vector<std::pair<K, std::uint64_t>> a,
             std::vector<std::pair<K, std::uint64_t>> b) {
    if (a.empty())
      return b;
    if (b.empty())
      return a;
    std::vector<std::pair<K, std::uint64_t>> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i].first < b[j].first)
        out.push_back(std::move(a[i++]));
      else if (b[j].first < a[i].first)
        out.push_back(std::move(b[j++]));
      else {
        a[i].second += b[j].second;
        out.push_back(std::move(a[i]));
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i)
      out.push_back(std::move(a[i]));
    for (; j < b.size(); ++j)
      out.push_back(std::move(b[j]));
    return out;
  }

private:
  std::vector<std::pair<K, std::uint64_t>> base_;
  std::vector<K> chunk_;
  std::size_t chunk_cap_;
};

} // namespace xratio::detail
