#include "xratio/energy.hpp"

#include "xratio/errors.hpp"
#include "xratio/mobius.hpp"

#include "detail/dedup.hpp"
#include "detail/frac64.hpp"

#include <set>
#include <thread>

namespace xratio {

namespace {

struct HistSummary {
  std::uint64_t tuple_count = 0;
  std::uint64_t image_count = 0;
  std::uint64_t energy = 0;
};

template <class K>
HistSummary summarize(const std::vector<std::pair<K, std::uint64_t>> &runs) {
  HistSummary s;
  s.image_count = runs.size();
  for (const auto &[key, count] : runs) {
    s.tuple_count += count;
    s.energy += count * count;
  }
  return s;
}

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

template <class K>
std::vector<std::pair<K, std::uint64_t>>
merge_all(std::vector<std::vector<std::pair<K, std::uint64_t>>> parts) {
  std::vector<std::pair<K, std::uint64_t>> out;
  for (auto &p : parts)
    out = detail::HistogramSet<K>::merge_runs(std::move(out), std::move(p));
  return out;
}

template <class Kern>
HistSummary hist_order1(const std::vector<typename Kern::Elem> &v, unsigned T) {
  const std::size_t n = v.size();
  using K = typename Kern::Key;
  std::vector<std::vector<std::pair<K, std::uint64_t>>> parts(T);
  run_partitioned(T, [&](unsigned t) {
    detail::HistogramSet<K> hist;
    for (std::size_t i = t; i < n; i += T) {
      if (Kern::is_zero(v[i]))
        continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || Kern::is_zero(v[j]))
          continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == i || k == j || Kern::is_zero(v[k]))
            continue;
          hist.insert(Kern::cross0(v[i], v[j], v[k]));
        }
      }
    }
    parts[t] = hist.take();
  });
  return summarize(merge_all(std::move(parts)));
}

template <class Kern>
HistSummary hist_order2(const std::vector<typename Kern::Elem> &v, unsigned T) {
  const std::size_t n = v.size();
  using K = typename Kern::Key;
  std::vector<std::vector<std::pair<K, std::uint64_t>>> parts(T);
  run_partitioned(T, [&](unsigned t) {
    detail::HistogramSet<K> hist;
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
            hist.insert(Kern::cross(v[i], v[j], v[k], v[l]));
          }
        }
      }
    parts[t] = hist.take();
  });
  return summarize(merge_all(std::move(parts)));
}

template <class Kern>
HistSummary hist_order3(const std::vector<typename Kern::Elem> &v, unsigned T) {
  const std::size_t n = v.size();
  using KP = typename Kern::KeyPair;
  std::vector<std::vector<std::pair<KP, std::uint64_t>>> parts(T);
  run_partitioned(T, [&](unsigned t) {
    detail::HistogramSet<KP> hist;
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
              hist.insert(Kern::pair_key(xr[d], xr[e]));
            }
          }
        }
      }
    parts[t] = hist.take();
  });
  return summarize(merge_all(std::move(parts)));
}

std::size_t effective_cap(int order, std::size_t cap, bool dual) {
  if (order < 1 || order > 3)
    throw std::invalid_argument("energy: order must be 1, 2 or 3");
  if (cap != 0)
    return cap;
  return dual ? kEnergyDualCap : kEnergyDirectCaps[std::size_t(order - 1)];
}

HistSummary direct_histogram(int order, const InputSet &A, std::size_t cap,
                             unsigned threads) {
  std::size_t eff = effective_cap(order, cap, /*dual=*/false);
  if (A.size() > eff)
    throw CapExceeded("energy_direct: |A| = " + std::to_string(A.size()) +
                      " exceeds cap " + std::to_string(eff));
  unsigned T = resolve_threads(threads);
  bool small = A.all_small_integers(detail::kSmallIntBound);
  switch (order) {
  case 1:
    return small ? hist_order1<SmallKern>(SmallKern::elems(A), T)
                 : hist_order1<BigKern>(BigKern::elems(A), T);
  case 2:
    return small ? hist_order2<SmallKern>(SmallKern::elems(A), T)
                 : hist_order2<BigKern>(BigKern::elems(A), T);
  default:
    return small ? hist_order3<SmallKern>(SmallKern::elems(A), T)
                 : hist_order3<BigKern>(BigKern::elems(A), T);
  }
}

std::uint64_t falling(std::uint64_t n, int len) {
  std::uint64_t r = 1;
  for (int i = 0; i < len; ++i) {
    if (n < std::uint64_t(i + 1))
      return 0;
    r *= n - std::uint64_t(i);
  }
  return r;
}

} // namespace

std::uint64_t energy_direct(int order, const InputSet &A, std::size_t cap,
                            unsigned threads) {
  return direct_histogram(order, A, cap, threads).energy;
}

std::uint64_t energy_dual(int order, const InputSet &A, std::size_t cap) {
  std::size_t eff = effective_cap(order, cap, /*dual=*/true);
  if (A.size() > eff)
    throw CapExceeded("energy_dual: |A| = " + std::to_string(A.size()) +
                      " exceeds cap " + std::to_string(eff));

  const ExtRational zero(0);
  std::set<Mobius> candidates;

  if (order == 1) {
    // Transformations fixing 0, generated by pairs of ordered pairs of
    // nonzero elements extended with 0 -> 0.
    std::vector<ExtRational> nz;
    for (const auto &e : A)
      if (!e.is_zero())
        nz.push_back(e);
    for (const auto &a1 : nz)
      for (const auto &a2 : nz) {
        if (a1 == a2)
          continue;
        for (const auto &b1 : nz)
          for (const auto &b2 : nz) {
            if (b1 == b2)
              continue;
            candidates.insert(solve_triple({zero, a1, a2}, {zero, b1, b2}));
          }
      }
    std::uint64_t e = 0;
    InputSet nzset = InputSet::from_values(nz);
    for (const auto &t : candidates) {
      std::uint64_t n_matched = 0;
      for (const auto &a : nz) {
        ExtRational img = t.apply(a);
        if (img.is_finite() && nzset.contains(img))
          ++n_matched;
      }
      e += falling(n_matched, 3);
    }
    return e;
  }

  // Orders 2 and 3 share the candidate family: every map matching at least
  // three pairs arises from a pair of ordered triples.
  std::vector<Triple> triples;
  const auto &v = A.elements();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j == i)
        continue;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (k == i || k == j)
          continue;
        triples.push_back({v[i], v[j], v[k]});
      }
    }
  for (const auto &src : triples)
    for (const auto &dst : triples)
      candidates.insert(solve_triple(src, dst));

  int len = (order == 2) ? 4 : 5;
  std::uint64_t e = 0;
  for (const auto &t : candidates) {
    std::uint64_t n_matched = 0;
    for (const auto &a : v) {
      ExtRational img = t.apply(a);
      if (img.is_finite() && A.contains(img))
        ++n_matched;
    }
    e += falling(n_matched, len);
  }
  return e;
}

CauchySchwarzReport cauchy_schwarz_report(int order, const InputSet &A,
                                          std::size_t cap, unsigned threads) {
  HistSummary h = direct_histogram(order, A, cap, threads);
  CauchySchwarzReport rep;
  rep.tuple_count = h.tuple_count;
  rep.image_count = h.image_count;
  rep.energy = h.energy;
  if (h.energy > 0) {
    BigInt lb = (BigInt(h.tuple_count) * h.tuple_count + h.energy - 1) / h.energy;
    rep.lower_bound = lb.convert_to<std::uint64_t>();
  }
  if (rep.image_count < rep.lower_bound)
    throw std::logic_error("cauchy_schwarz_report: pivot inequality violated");
  return rep;
}

} // namespace xratio
