#pragma once

#include "xratio/expander.hpp"
#include "xratio/input_set.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace xratio {

enum class FamilyKind { Ap, Gp, RandomInt, Squares, CustomFile };

std::string family_kind_name(FamilyKind k);
FamilyKind parse_family_kind(const std::string &name);

/// Deterministic recipe for one input set: an arithmetic or geometric
/// progression, seeded random integers, squares, or a file on disk.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Ap;
  std::size_t n = 0;
  long long start = 1;     // ap, gp, squares
  long long step = 1;      // ap
  long long ratio = 2;     // gp
  long long bound = 1000000; // random: draws from [1, bound]
  std::uint64_t seed = 1;  // random
  std::string path;        // custom_file

  // Human-readable parameter tag for records and CSV.
  std::string describe() const;
};

/// Builds the set; seeded and reproducible. Throws std::invalid_argument
/// on bad parameters (n = 0, gp ratio 0 or 1, bound < n, ...).
InputSet generate(const FamilySpec &spec);

/// One value per line, "p/q" or integer, '#' starts a comment, blank lines
/// ignored. Duplicates are a hard error so |A| is never misreported.
InputSet parse_set_file(const std::string &path);
InputSet parse_set_stream(std::istream &in, const std::string &name);

struct GrowthRecord {
  std::string family; // parameter tag from FamilySpec::describe()
  std::string kind;
  std::size_t n = 0;
  char function = 'f';
  std::uint64_t image_count = 0;
  std::uint64_t skipped = 0;
  double elapsed_ms = 0.0;
};

/// Runs image_f/g/h over one family at each size. Sizes beyond the
/// per-function cap are skipped with a note on stderr (not fatal) unless
/// unsafe_cap lifts the limit.
std::vector<GrowthRecord> scan(char function, const FamilySpec &base,
                               const std::vector<std::size_t> &sizes,
                               bool unsafe_cap = false, unsigned threads = 0);

enum class FitModel { PurePower, PowerOverLog };

/// Least-squares fit of log(count) against log(n); the PowerOverLog model
/// fits count = C * n^(1+delta) / ln n instead of a pure power law.
/// residual is the largest absolute log-space residual.
struct ExponentFit {
  double delta = 0.0;
  double constant = 0.0;
  double residual = 0.0;
  std::string model;
};

ExponentFit fit_exponent(const std::vector<GrowthRecord> &records,
                         FitModel model);

std::string growth_csv_header();
std::string growth_csv_row(const GrowthRecord &rec);

} // namespace xratio
