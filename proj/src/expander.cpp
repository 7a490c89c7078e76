#include "xratio/expander.hpp"

#include "detail/dedup.hpp"
#include "detail/frac64.hpp"

#include <thread>

namespace xratio {

namespace {

struct SmallKern {
  using Elem = std::int64_t;
  using Key = detail::Frac64;
  using KeyPair = detail::Frac64Pair;

  static bool is_zero(Elem e) { return e == 0; }
  static Key cross(Elem a, Elem b, Elem c, Elem d) {
    return detail::cross_ratio64(a, b, c, d);
  }
  static Key cross0(Elem a, Elem b, Elem c) {
    return detail::cross_ratio64(0, a, b, c);
  }
  static KeyPair pair_key(Key x, Key y) { return {x, y}; }

  static std::vector<Elem> elems(const InputSet &A) {
    std::vector<Elem> v;
    v.reserve(A.size());
    for (const auto &e : A)
      v.push_back(e.num().convert_to<std::int64_t>());
    return v;
  }
};

struct BigKern {
  using Elem = ExtRational;
  using Key = std::pair<BigInt, BigInt>;
  using KeyPair = std::pair<Key, Key>;

  static bool is_zero(const Elem &e) { return e.is_zero(); }
  static Key cross(const Elem &a, const Elem &b, const Elem &c, const Elem &d) {
    ExtRational x = ((a - b) * (c - d)) / ((b - c) * (a - d));
    return {x.num(), x.den()};
  }
  static Key cross0(const Elem &a, const Elem &b, const Elem &c) {
    return cross(ExtRational(0), a, b, c);
  }
  static KeyPair pair_key(Key x, Key y) { return {std::move(x), std::move(y)}; }

  static std::vector<Elem> elems(const InputSet &A) { return A.elements(); }
};

unsigned resolve_threads(unsigned threads) {
  if (threads != 0)
    return threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Runs worker(t) for t in [0, T); workers own disjoint outer-index slices.
template <class Worker> void run_partitioned(unsigned T, Worker &&worker) {
  if (T <= 1) {
    worker(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(T);
  for (unsigned t = 0; t < T; ++t)
    pool.emplace_back(worker, t);
  for (auto &th : pool)
    th.join();
}

template <class Kern>
std::pair<std::vector<typename Kern::Key>, std::uint64_t>
enumerate_f(const std::vector<typename Kern::Elem> &v, unsigned T) {
  const std::size_t n = v.size();
  std::vector<std::vector<typename Kern::Key>> parts(T);
  std::vector<std::uint64_t> counts(T, 0);
  run_partitioned(T, [&](unsigned t) {
    detail::DedupSet<typename Kern::Key> dedup;
    std::uint64_t cnt = 0;
    for (std::size_t i = t; i < n; i += T) {
      if (Kern::is_zero(v[i]))
        continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || Kern::is_zero(v[j]))
          continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == i || k == j || Kern::is_zero(v[k]))
            continue;
          dedup.insert(Kern::cross0(v[i], v[j], v[k]));
          ++cnt;
        }
      }
    }
    parts[t] = dedup.take();
    counts[t] = cnt;
  });
  std::uint64_t total = 0;
  for (auto c : counts)
    total += c;
  return {detail::merge_unique(std::move(parts)), total};
}

template <class Kern>
std::pair<std::vector<typename Kern::Key>, std::uint64_t>
enumerate_g(const std::vector<typename Kern::Elem> &v, unsigned T) {
  const std::size_t n = v.size();
  std::vector<std::vector<typename Kern::Key>> parts(T);
  std::vector<std::uint64_t> counts(T, 0);
  run_partitioned(T, [&](unsigned t) {
    detail::DedupSet<typename Kern::Key> dedup;
    std::uint64_t cnt = 0;
    for (std::size_t i = t; i < n; i += T)
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i)
          continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == i || k == j)
            continue;
          for (std::size_t l = 0; l < n; ++l) {
            if (l == i || l == j || l == k)
              continue;
            dedup.insert(Kern::cross(v[i], v[j], v[k], v[l]));
            ++cnt;
          }
        }
      }
    parts[t] = dedup.take();
    counts[t] = cnt;
  });
  std::uint64_t total = 0;
  for (auto c : counts)
    total += c;
  return {detail::merge_unique(std::move(parts)), total};
}

template <class Kern>
std::pair<std::vector<typename Kern::KeyPair>, std::uint64_t>
enumerate_h(const std::vector<typename Kern::Elem> &v, unsigned T) {
  const std::size_t n = v.size();
  std::vector<std::vector<typename Kern::KeyPair>> parts(T);
  std::vector<std::uint64_t> counts(T, 0);
  run_partitioned(T, [&](unsigned t) {
    detail::DedupSet<typename Kern::KeyPair> dedup;
    std::uint64_t cnt = 0;
    // X(a,b,c,-) is shared by all (d,e) pairs for a fixed leading triple.
    std::vector<typename Kern::Key> xr(n);
    for (std::size_t i = t; i < n; i += T)
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i)
          continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == i || k == j)
            continue;
          for (std::size_t l = 0; l < n; ++l)
            if (l != i && l != j && l != k)
              xr[l] = Kern::cross(v[i], v[j], v[k], v[l]);
          for (std::size_t d = 0; d < n; ++d) {
            if (d == i || d == j || d == k)
              continue;
            for (std::size_t e = 0; e < n; ++e) {
              if (e == i || e == j || e == k || e == d)
                continue;
              dedup.insert(Kern::pair_key(xr[d], xr[e]));
              ++cnt;
            }
          }
        }
      }
    parts[t] = dedup.take();
    counts[t] = cnt;
  });
  std::uint64_t total = 0;
  for (auto c : counts)
    total += c;
  return {detail::merge_unique(std::move(parts)), total};
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  while (exp--)
    r *= base;
  return r;
}

template <auto SmallFn, auto BigFn>
ImageStats run_image(const InputSet &A, unsigned threads, int arity) {
  unsigned T = resolve_threads(threads);
  ImageStats st;
  if (A.all_small_integers(detail::kSmallIntBound)) {
    auto [keys, cnt] = SmallFn(SmallKern::elems(A), T);
    st.image_count = keys.size();
    st.tuple_count = cnt;
  } else {
    auto [keys, cnt] = BigFn(BigKern::elems(A), T);
    st.image_count = keys.size();
    st.tuple_count = cnt;
  }
  st.skipped = pow_u64(A.size(), arity) - st.tuple_count;
  return st;
}

} // namespace

ImageStats image_f(const InputSet &A, unsigned threads) {
  return run_image<enumerate_f<SmallKern>, enumerate_f<BigKern>>(A, threads, 3);
}

ImageStats image_g(const InputSet &A, unsigned threads) {
  return run_image<enumerate_g<SmallKern>, enumerate_g<BigKern>>(A, threads, 4);
}

ImageStats image_h(const InputSet &A, unsigned threads) {
  return run_image<enumerate_h<SmallKern>, enumerate_h<BigKern>>(A, threads, 5);
}

std::vector<ExtRational> image_f_values(const InputSet &A) {
  auto [keys, cnt] = enumerate_f<BigKern>(BigKern::elems(A), 1);
  (void)cnt;
  std::vector<ExtRational> out;
  out.reserve(keys.size());
  for (auto &k : keys)
    out.push_back(ExtRational::make(std::move(k.first), std::move(k.second)));
  return out;
}

std::vector<ExtRational> image_g_values(const InputSet &A) {
  auto [keys, cnt] = enumerate_g<BigKern>(BigKern::elems(A), 1);
  (void)cnt;
  std::vector<ExtRational> out;
  out.reserve(keys.size());
  for (auto &k : keys)
    out.push_back(ExtRational::make(std::move(k.first), std::move(k.second)));
  return out;
}

std::vector<std::pair<ExtRational, ExtRational>> image_h_values(const InputSet &A) {
  auto [keys, cnt] = enumerate_h<BigKern>(BigKern::elems(A), 1);
  (void)cnt;
  std::vector<std::pair<ExtRational, ExtRational>> out;
  out.reserve(keys.size());
  for (auto &k : keys)
    out.emplace_back(
        ExtRational::make(std::move(k.first.first), std::move(k.first.second)),
        ExtRational::make(std::move(k.second.first), std::move(k.second.second)));
  return out;
}

} // namespace xratio
