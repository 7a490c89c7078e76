#include "xratio/experiments.hpp"

#include "xratio/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

namespace xratio {

std::string family_kind_name(FamilyKind k) {
  switch (k) {
  case FamilyKind::Ap: return "ap";
  case FamilyKind::Gp: return "gp";
  case FamilyKind::RandomInt: return "random";
  case FamilyKind::Squares: return "squares";
  case FamilyKind::CustomFile: return "file";
  }
  return "?";
}

FamilyKind parse_family_kind(const std::string &name) {
  if (name == "ap") return FamilyKind::Ap;
  if (name == "gp") return FamilyKind::Gp;
  if (name == "random") return FamilyKind::RandomInt;
  if (name == "squares") return FamilyKind::Squares;
  if (name == "file") return FamilyKind::CustomFile;
  throw std::invalid_argument("unknown family kind '" + name + "'");
}

std::string FamilySpec::describe() const {
  std::ostringstream os;
  switch (kind) {
  case FamilyKind::Ap:
    os << "ap(start=" << start << ",step=" << step << ")";
    break;
  case FamilyKind::Gp:
    os << "gp(start=" << start << ",ratio=" << ratio << ")";
    break;
  case FamilyKind::RandomInt:
    os << "random(bound=" << bound << ",seed=" << seed << ")";
    break;
  case FamilyKind::Squares:
    os << "squares(start=" << start << ")";
    break;
  case FamilyKind::CustomFile:
    os << "file(" << path << ")";
    break;
  }
  return os.str();
}

InputSet generate(const FamilySpec &spec) {
  if (spec.kind == FamilyKind::CustomFile)
    return parse_set_file(spec.path);
  if (spec.n == 0)
    throw std::invalid_argument("generate: n must be at least 1");
  std::vector<ExtRational> v;
  v.reserve(spec.n);
  switch (spec.kind) {
  case FamilyKind::Ap: {
    if (spec.step == 0)
      throw std::invalid_argument("generate: ap step must be nonzero");
    BigInt x = spec.start;
    for (std::size_t i = 0; i < spec.n; ++i, x += spec.step)
      v.emplace_back(x);
    break;
  }
  case FamilyKind::Gp: {
    if (spec.ratio == 0 || spec.ratio == 1)
      throw std::invalid_argument("generate: gp ratio must not be 0 or 1");
    if (spec.start == 0)
      throw std::invalid_argument("generate: gp start must be nonzero");
    BigInt x = spec.start;
    for (std::size_t i = 0; i < spec.n; ++i, x *= spec.ratio)
      v.emplace_back(x);
    break;
  }
  case FamilyKind::RandomInt: {
    if (spec.bound < static_cast<long long>(spec.n))
      throw std::invalid_argument("generate: random bound smaller than n");
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<long long> dist(1, spec.bound);
    std::set<long long> drawn;
    while (drawn.size() < spec.n)
      drawn.insert(dist(rng));
    for (long long x : drawn)
      v.emplace_back(x);
    break;
  }
  case FamilyKind::Squares: {
    BigInt x = spec.start;
    for (std::size_t i = 0; i < spec.n; ++i, x += 1)
      v.emplace_back(x * x);
    break;
  }
  case FamilyKind::CustomFile:
    break; // handled above
  }
  return InputSet::from_values(std::move(v));
}

InputSet parse_set_stream(std::istream &in, const std::string &name) {
  std::vector<ExtRational> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    // trim
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
      continue;
    auto end = line.find_last_not_of(" \t\r");
    std::string token = line.substr(begin, end - begin + 1);
    ExtRational v;
    try {
      v = ExtRational::parse(token);
    } catch (const std::invalid_argument &e) {
      throw std::invalid_argument(name + ":" + std::to_string(lineno) + ": " +
                                  e.what());
    }
    if (!v.is_finite())
      throw std::invalid_argument(name + ":" + std::to_string(lineno) +
                                  ": infinity is not a set element");
    values.push_back(std::move(v));
  }
  try {
    return InputSet::from_values(std::move(values));
  } catch (const std::invalid_argument &e) {
    throw std::invalid_argument(name + ": " + e.what());
  }
}

InputSet parse_set_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open set file '" + path + "'");
  return parse_set_stream(in, path);
}

namespace {

std::size_t cap_for(char function) {
  switch (function) {
  case 'f': return kCapF;
  case 'g': return kCapG;
  case 'h': return kCapH;
  default:
    throw std::invalid_argument("scan: function must be f, g or h");
  }
}

ImageStats run_function(char function, const InputSet &A, unsigned threads) {
  switch (function) {
  case 'f': return image_f(A, threads);
  case 'g': return image_g(A, threads);
  default: return image_h(A, threads);
  }
}

} // namespace

std::vector<GrowthRecord> scan(char function, const FamilySpec &base,
                               const std::vector<std::size_t> &sizes,
                               bool unsafe_cap, unsigned threads) {
  std::size_t cap = cap_for(function);
  std::vector<GrowthRecord> out;
  for (std::size_t n : sizes) {
    if (!unsafe_cap && n > cap) {
      std::cerr << "scan: skipping n=" << n << " for function " << function
                << " (cap " << cap << "; use --unsafe-cap to override)\n";
      continue;
    }
    FamilySpec spec = base;
    spec.n = n;
    InputSet A = generate(spec);
    auto t0 = std::chrono::steady_clock::now();
    ImageStats st = run_function(function, A, threads);
    auto t1 = std::chrono::steady_clock::now();
    GrowthRecord rec;
    rec.family = spec.describe();
    rec.kind = family_kind_name(spec.kind);
    rec.n = A.size();
    rec.function = function;
    rec.image_count = st.image_count;
    rec.skipped = st.skipped;
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    out.push_back(std::move(rec));
  }
  return out;
}

ExponentFit fit_exponent(const std::vector<GrowthRecord> &records,
                         FitModel model) {
  std::vector<double> xs, ys;
  std::set<std::size_t> sizes;
  for (const auto &r : records) {
    if (r.image_count == 0)
      throw std::invalid_argument("fit_exponent: zero image count at n=" +
                                  std::to_string(r.n));
    sizes.insert(r.n);
    double x = std::log(double(r.n));
    double y = std::log(double(r.image_count));
    if (model == FitModel::PowerOverLog)
      y += std::log(x); // count = C n^e / ln n  =>  ln count + ln ln n linear
    xs.push_back(x);
    ys.push_back(y);
  }
  if (sizes.size() < 3)
    throw std::invalid_argument("fit_exponent: need at least 3 distinct sizes");

  double n = double(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  double intercept = (sy - slope * sx) / n;
  double max_resid = 0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    max_resid = std::max(max_resid,
                         std::abs(ys[i] - (slope * xs[i] + intercept)));
  ExponentFit fit;
  fit.delta = slope - 1.0;
  fit.constant = std::exp(intercept);
  fit.residual = max_resid;
  fit.model = model == FitModel::PurePower ? "pure_power" : "power_over_log";
  return fit;
}

std::string growth_csv_header() {
  return "family,kind,n,function,image_count,skipped,elapsed_ms";
}

std::string growth_csv_row(const GrowthRecord &rec) {
  std::ostringstream os;
  os << '"' << rec.family << "\"," << rec.kind << ',' << rec.n << ','
     << rec.function << ',' << rec.image_count << ',' << rec.skipped << ','
     << rec.elapsed_ms;
  return os.str();
}

} // namespace xratio
