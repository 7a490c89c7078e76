#include "xratio/dual_geometry.hpp"

#include "xratio/errors.hpp"

#include <algorithm>
#include <boost/multiprecision/integer.hpp>
#include <map>
#include <set>
#include <utility>

namespace xratio {

using boost::multiprecision::gcd;

namespace {

BigInt abs_big(const BigInt &x) { return x < 0 ? BigInt(-x) : x; }

// Coprime entries, first nonzero entry positive. Throws if all zero.
std::array<BigInt, 4> canonicalize4(std::array<BigInt, 4> c, const char *what) {
  BigInt g = 0;
  for (const auto &x : c)
    g = gcd(g, abs_big(x));
  if (g == 0)
    throw std::invalid_argument(std::string(what) + ": zero vector");
  for (auto &x : c)
    x /= g;
  for (const auto &x : c) {
    if (x == 0)
      continue;
    if (x < 0)
      for (auto &y : c)
        y = -y;
    break;
  }
  return c;
}

using RatRow = std::array<ExtRational, 4>;

// In-place reduced row echelon form over the rationals; returns the rank.
std::size_t rref(std::vector<RatRow> &rows) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < 4 && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col].is_zero())
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[r], rows[pivot]);
    ExtRational lead = rows[r][col];
    for (auto &x : rows[r])
      x = x / lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero())
        continue;
      ExtRational factor = rows[i][col];
      for (std::size_t j = 0; j < 4; ++j)
        rows[i][j] = rows[i][j] - factor * rows[r][j];
    }
    ++r;
  }
  return r;
}

RatRow to_rational_row(const std::array<BigInt, 4> &c) {
  RatRow row;
  for (std::size_t i = 0; i < 4; ++i)
    row[i] = ExtRational::make(c[i], 1);
  return row;
}

std::array<BigInt, 4> clear_denominators(const RatRow &row, const char *what) {
  BigInt d = 1;
  for (const auto &x : row)
    d *= x.den();
  std::array<BigInt, 4> out;
  for (std::size_t i = 0; i < 4; ++i)
    out[i] = row[i].num() * (d / row[i].den());
  return canonicalize4(std::move(out), what);
}

// Basis of the projective solution set of the (already independent) rows,
// as canonical integer vectors.
std::vector<std::array<BigInt, 4>> nullspace_basis(std::vector<RatRow> rows) {
  std::size_t rank = rref(rows);
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(4, false);
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (!rows[r][c].is_zero()) {
        pivot_col.push_back(c);
        is_pivot[c] = true;
        break;
      }
  std::vector<std::array<BigInt, 4>> basis;
  for (std::size_t j = 0; j < 4; ++j) {
    if (is_pivot[j])
      continue;
    RatRow v;
    v.fill(ExtRational(0));
    v[j] = ExtRational(1);
    for (std::size_t r = 0; r < rank; ++r)
      v[pivot_col[r]] = ExtRational(0) - rows[r][j];
    basis.push_back(clear_denominators(v, "nullspace_basis"));
  }
  return basis;
}

BigInt det3(const BigInt &a, const BigInt &b, const BigInt &c, const BigInt &d,
            const BigInt &e, const BigInt &f, const BigInt &g, const BigInt &h,
            const BigInt &i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

} // namespace

ProjPoint3::ProjPoint3(std::array<BigInt, 4> coords)
    : c_(canonicalize4(std::move(coords), "ProjPoint3")) {}

std::string ProjPoint3::str() const {
  return "[" + c_[0].str() + "," + c_[1].str() + "," + c_[2].str() + "," +
         c_[3].str() + "]";
}

DualPlane::DualPlane(ExtRational a, ExtRational b, std::array<BigInt, 4> coeffs)
    : a_(std::move(a)), b_(std::move(b)),
      coef_(canonicalize4(std::move(coeffs), "DualPlane")) {}

std::string DualPlane::str() const {
  return "pi(" + a_.str() + "," + b_.str() + ")=[" + coef_[0].str() + "," +
         coef_[1].str() + "," + coef_[2].str() + "," + coef_[3].str() + "]";
}

ProjPoint3 embed(const Mobius &t) {
  return ProjPoint3({t.p(), t.q(), t.r(), t.s()});
}

bool on_quadric(const ProjPoint3 &pt) {
  return pt[0] * pt[3] == pt[1] * pt[2];
}

DualPlane plane_for(const ExtRational &a, const ExtRational &b) {
  if (!a.is_finite() || !b.is_finite())
    throw std::invalid_argument("plane_for: labels must be finite");
  // [a, 1, -ab, -b] scaled by da*db.
  const BigInt &na = a.num(), &da = a.den();
  const BigInt &nb = b.num(), &db = b.den();
  return DualPlane(a, b, {na * db, da * db, -na * nb, -nb * da});
}

bool incident(const ProjPoint3 &pt, const DualPlane &pl) {
  BigInt dot = 0;
  for (std::size_t i = 0; i < 4; ++i)
    dot += pt[i] * pl.coeffs()[i];
  return dot == 0;
}

PlaneLine intersection_line(const DualPlane &p1, const DualPlane &p2) {
  if (p1 == p2)
    throw std::invalid_argument("intersection_line: planes must be distinct");
  std::vector<RatRow> rows = {to_rational_row(p1.coeffs()),
                              to_rational_row(p2.coeffs())};
  if (rref(rows) != 2)
    throw std::logic_error("intersection_line: distinct planes with rank < 2");
  return PlaneLine{clear_denominators(rows[0], "PlaneLine"),
                   clear_denominators(rows[1], "PlaneLine")};
}

bool line_in_quadric(const PlaneLine &line) {
  auto basis = nullspace_basis(
      {to_rational_row(line.row0), to_rational_row(line.row1)});
  if (basis.size() != 2)
    throw std::logic_error("line_in_quadric: expected a 2-dimensional span");
  auto quad = [](const std::array<BigInt, 4> &u) {
    return u[0] * u[3] - u[1] * u[2];
  };
  const auto &u = basis[0];
  const auto &v = basis[1];
  // The form vanishes on the whole span iff it vanishes on both basis
  // vectors and the associated bilinear form vanishes on the pair.
  BigInt mixed = u[0] * v[3] + v[0] * u[3] - u[1] * v[2] - v[1] * u[2];
  return quad(u) == 0 && quad(v) == 0 && mixed == 0;
}

TripleIntersection triple_intersection(const DualPlane &p1, const DualPlane &p2,
                                       const DualPlane &p3) {
  if (p1 == p2 || p1 == p3 || p2 == p3)
    throw std::invalid_argument("triple_intersection: planes must be distinct");
  const auto &r1 = p1.coeffs();
  const auto &r2 = p2.coeffs();
  const auto &r3 = p3.coeffs();
  // Generalized cross product: signed 3x3 minors give the null vector of
  // the 3x4 system when the rank is 3.
  std::array<BigInt, 4> v;
  v[0] = det3(r1[1], r1[2], r1[3], r2[1], r2[2], r2[3], r3[1], r3[2], r3[3]);
  v[1] = -det3(r1[0], r1[2], r1[3], r2[0], r2[2], r2[3], r3[0], r3[2], r3[3]);
  v[2] = det3(r1[0], r1[1], r1[3], r2[0], r2[1], r2[3], r3[0], r3[1], r3[3]);
  v[3] = -det3(r1[0], r1[1], r1[2], r2[0], r2[1], r2[2], r3[0], r3[1], r3[2]);
  if (v[0] != 0 || v[1] != 0 || v[2] != 0 || v[3] != 0)
    return {IntersectionType::Point, ProjPoint3(std::move(v))};
  std::vector<RatRow> rows = {to_rational_row(r1), to_rational_row(r2),
                              to_rational_row(r3)};
  std::size_t rank = rref(rows);
  if (rank == 2)
    return {IntersectionType::Line, std::nullopt};
  return {IntersectionType::Plane, std::nullopt};
}

PlanesLemmaReport verify_planes_lemma(const InputSet &A, std::size_t cap) {
  if (A.size() > cap)
    throw CapExceeded("verify_planes_lemma: |A| = " + std::to_string(A.size()) +
                      " exceeds cap " + std::to_string(cap));
  PlanesLemmaReport rep;
  rep.set_size = A.size();

  std::vector<DualPlane> planes;
  for (const auto &a : A)
    for (const auto &b : A)
      planes.push_back(plane_for(a, b));
  rep.plane_count = planes.size();

  // Property 2: distinct labels give distinct coefficient vectors.
  {
    std::set<std::array<BigInt, 4>> seen;
    for (const auto &pl : planes)
      seen.insert(pl.coeffs());
    rep.labels_injective = seen.size() == planes.size();
  }

  auto same_row = [&](std::size_t i, std::size_t j) {
    return planes[i].label_a() == planes[j].label_a();
  };
  auto same_col = [&](std::size_t i, std::size_t j) {
    return planes[i].label_b() == planes[j].label_b();
  };

  // Property 1 over all unordered triples, collecting candidate points.
  // A triple whose planes all share a source label (or all share a target
  // label) is degenerate: it must meet in a line contained in the quadric.
  // Every other triple must meet in a single point.
  rep.triples_are_points = true;
  rep.colinear_only_in_quadric = true;
  std::set<ProjPoint3> candidates;
  for (std::size_t i = 0; i < planes.size(); ++i)
    for (std::size_t j = i + 1; j < planes.size(); ++j)
      for (std::size_t k = j + 1; k < planes.size(); ++k) {
        auto ti = triple_intersection(planes[i], planes[j], planes[k]);
        ++rep.triples_checked;
        bool degenerate = (same_row(i, j) && same_row(i, k)) ||
                          (same_col(i, j) && same_col(i, k));
        if (degenerate) {
          ++rep.degenerate_triples;
          if (ti.type != IntersectionType::Line ||
              !line_in_quadric(intersection_line(planes[i], planes[j])))
            rep.colinear_only_in_quadric = false;
          continue;
        }
        if (ti.type != IntersectionType::Point) {
          rep.triples_are_points = false;
          continue;
        }
        candidates.insert(*ti.point);
      }

  // Property 3: pairwise intersection lines are distinct, except that all
  // pairs within one row share that row's in-quadric line (likewise per
  // column). Any repeated line must be exactly such a class.
  {
    std::map<PlaneLine, std::vector<std::pair<std::size_t, std::size_t>>>
        by_line;
    for (std::size_t i = 0; i < planes.size(); ++i)
      for (std::size_t j = i + 1; j < planes.size(); ++j) {
        by_line[intersection_line(planes[i], planes[j])].push_back({i, j});
        ++rep.lines_checked;
      }
    rep.lines_distinct = true;
    for (const auto &[line, pairs] : by_line) {
      if (pairs.size() == 1)
        continue;
      bool all_row = true, all_col = true;
      for (const auto &[i, j] : pairs) {
        all_row = all_row && same_row(i, j) && same_row(i, pairs[0].first);
        all_col = all_col && same_col(i, j) && same_col(i, pairs[0].first);
      }
      if (!(all_row || all_col) || !line_in_quadric(line))
        rep.lines_distinct = false;
    }
  }

  // Property 4: off-quadric candidate points see at most |A| planes.
  rep.degree_bounded = true;
  for (const auto &pt : candidates) {
    if (on_quadric(pt))
      continue;
    ++rep.points_checked;
    std::size_t deg = 0;
    for (const auto &pl : planes)
      if (incident(pt, pl))
        ++deg;
    rep.max_point_degree = std::max(rep.max_point_degree, deg);
    if (deg > A.size())
      rep.degree_bounded = false;
  }
  return rep;
}

IncidenceStats incidence_counts(const std::vector<ProjPoint3> &points,
                                const std::vector<DualPlane> &planes) {
  IncidenceStats st;
  st.degrees.reserve(points.size());
  for (const auto &pt : points) {
    std::size_t deg = 0;
    for (const auto &pl : planes)
      if (incident(pt, pl))
        ++deg;
    st.degrees.push_back(deg);
    st.total += deg;
  }
  std::size_t max_deg = 0;
  for (auto d : st.degrees)
    max_deg = std::max(max_deg, d);
  for (std::size_t k = 1; k <= max_deg; ++k) {
    std::size_t cnt = 0;
    for (auto d : st.degrees)
      if (d >= k)
        ++cnt;
    st.at_least[k] = cnt;
  }
  return st;
}

} // namespace xratio
