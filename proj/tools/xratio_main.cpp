// xratio: exact cross-ratio expander experiments.
//
// Subcommands: expand, energy, dual-check, scan, selftest.
// Exit codes: 0 success, 1 validation failure, 2 cap violation.

#include "xratio/dual_geometry.hpp"
#include "xratio/energy.hpp"
#include "xratio/errors.hpp"
#include "xratio/expander.hpp"
#include "xratio/experiments.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using json = nlohmann::json;
using namespace xratio;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

std::size_t image_cap(char fn) {
  return fn == 'f' ? kCapF : fn == 'g' ? kCapG : kCapH;
}

int run_expand(const std::string &set_file, char fn, bool as_json,
               bool with_values, bool unsafe_cap, unsigned threads) {
  InputSet A = parse_set_file(set_file);
  if (!unsafe_cap && A.size() > image_cap(fn))
    throw CapExceeded("expand: |A| = " + std::to_string(A.size()) +
                      " exceeds the cap " + std::to_string(image_cap(fn)) +
                      " for function " + std::string(1, fn) +
                      " (use --unsafe-cap to override)");
  auto t0 = std::chrono::steady_clock::now();
  ImageStats st = fn == 'f'   ? image_f(A, threads)
                  : fn == 'g' ? image_g(A, threads)
                              : image_h(A, threads);
  double elapsed = ms_since(t0);

  json values = json::array();
  if (with_values) {
    if (fn == 'f')
      for (const auto &v : image_f_values(A))
        values.push_back(v.str());
    else if (fn == 'g')
      for (const auto &v : image_g_values(A))
        values.push_back(v.str());
    else
      for (const auto &[x, y] : image_h_values(A))
        values.push_back({x.str(), y.str()});
  }

  if (as_json) {
    json out = {{"function", std::string(1, fn)},
                {"n", A.size()},
                {"image_count", st.image_count},
                {"tuple_count", st.tuple_count},
                {"skipped", st.skipped},
                {"elapsed_ms", elapsed}};
    if (with_values)
      out["values"] = values;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "|" << fn << "(A)| = " << st.image_count << "  (|A| = "
              << A.size() << ", tuples = " << st.tuple_count
              << ", skipped = " << st.skipped << ", " << elapsed << " ms)\n";
    if (with_values)
      for (const auto &v : values)
        std::cout << "  " << (v.is_array() ? v.dump() : v.get<std::string>())
                  << "\n";
  }
  return 0;
}

int run_energy(const std::string &set_file, int order,
               const std::string &method, std::size_t cap_override,
               unsigned threads) {
  InputSet A = parse_set_file(set_file);
  auto t0 = std::chrono::steady_clock::now();
  CauchySchwarzReport rep =
      cauchy_schwarz_report(order, A, cap_override, threads);
  std::uint64_t energy = rep.energy;
  if (method == "dual")
    energy = energy_dual(order, A, cap_override);
  double elapsed = ms_since(t0);
  json out = {{"order", order},
              {"method", method},
              {"size", A.size()},
              {"energy", energy},
              {"tuple_count", rep.tuple_count},
              {"image_count", rep.image_count},
              {"lower_bound", rep.lower_bound},
              {"elapsed_ms", elapsed},
              {"log_convention", "natural"}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_dual_check(const std::string &set_file, std::size_t cap, bool as_json) {
  InputSet A = parse_set_file(set_file);
  PlanesLemmaReport rep = verify_planes_lemma(A, cap);
  if (as_json) {
    json out = {{"set_size", rep.set_size},
                {"plane_count", rep.plane_count},
                {"triples_checked", rep.triples_checked},
                {"degenerate_triples", rep.degenerate_triples},
                {"lines_checked", rep.lines_checked},
                {"points_checked", rep.points_checked},
                {"max_point_degree", rep.max_point_degree},
                {"line_representation", rep.line_representation},
                {"properties",
                 {{"triples_are_points", rep.triples_are_points},
                  {"colinear_only_in_quadric", rep.colinear_only_in_quadric},
                  {"labels_injective", rep.labels_injective},
                  {"lines_distinct", rep.lines_distinct},
                  {"degree_bounded", rep.degree_bounded}}},
                {"pass", rep.all_pass()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "planes-lemma check on |A| = " << rep.set_size << " ("
              << rep.plane_count << " planes, " << rep.triples_checked
              << " triples)\n"
              << "  1 generic triples meet in points : "
              << (rep.triples_are_points ? "pass" : "FAIL") << "\n"
              << "    colinear triples stay in quadric: "
              << (rep.colinear_only_in_quadric ? "pass" : "FAIL") << " ("
              << rep.degenerate_triples << " same-row/column triples)\n"
              << "  2 labels -> planes injective  : "
              << (rep.labels_injective ? "pass" : "FAIL") << "\n"
              << "  3 pairwise lines distinct     : "
              << (rep.lines_distinct ? "pass" : "FAIL") << "\n"
              << "  4 point degree <= |A|         : "
              << (rep.degree_bounded ? "pass" : "FAIL") << " (max degree "
              << rep.max_point_degree << ")\n";
  }
  return rep.all_pass() ? 0 : 1;
}

int run_scan(const std::string &family, char fn,
             const std::vector<std::size_t> &sizes, const std::string &fit_name,
             const std::string &csv_path, FamilySpec spec, bool unsafe_cap,
             unsigned threads) {
  spec.kind = parse_family_kind(family);
  auto records = scan(fn, spec, sizes, unsafe_cap, threads);
  if (records.empty())
    throw std::invalid_argument("scan: no sizes were run");

  std::ostream *os = &std::cout;
  std::ofstream file;
  if (!csv_path.empty() && csv_path != "-") {
    file.open(csv_path);
    if (!file)
      throw std::invalid_argument("cannot open CSV output '" + csv_path + "'");
    os = &file;
  }
  *os << growth_csv_header() << "\n";
  for (const auto &r : records)
    *os << growth_csv_row(r) << "\n";

  if (!fit_name.empty()) {
    FitModel model;
    if (fit_name == "pure")
      model = FitModel::PurePower;
    else if (fit_name == "powerlog")
      model = FitModel::PowerOverLog;
    else
      throw std::invalid_argument("scan: --fit must be 'pure' or 'powerlog'");
    ExponentFit fit = fit_exponent(records, model);
    json out = {{"model", fit.model},
                {"function", std::string(1, fn)},
                {"family", records.front().family},
                {"exponent", 1.0 + fit.delta},
                {"delta", fit.delta},
                {"constant", fit.constant},
                {"max_residual", fit.residual},
                {"log_convention", "natural"}};
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int run_selftest() {
  int failures = 0;
  auto check = [&](const std::string &name, bool ok) {
    std::cout << (ok ? "pass" : "FAIL") << "  " << name << "\n";
    if (!ok)
      ++failures;
  };

  // Cross-method energy equivalence on small sets.
  {
    InputSet a = InputSet::from_integers({1, 2, 3, 5, 8});
    InputSet b = InputSet::from_integers({0, 1, 2, 4, 7});
    check("energy direct=dual, order 1",
          energy_direct(1, a) == energy_dual(1, a) &&
              energy_direct(1, b) == energy_dual(1, b));
    check("energy direct=dual, order 2",
          energy_direct(2, a) == energy_dual(2, a) &&
              energy_direct(2, b) == energy_dual(2, b));
    check("energy direct=dual, order 3",
          energy_direct(3, a) == energy_dual(3, a));
  }

  // Planes lemma on two small sets.
  for (const auto &vals : {std::vector<long long>{0, 1, 2, 3},
                           std::vector<long long>{-2, -1, 1, 4}}) {
    std::vector<ExtRational> v(vals.begin(), vals.end());
    auto rep = verify_planes_lemma(InputSet::from_values(v));
    check("planes lemma on " + std::to_string(vals.size()) + "-set",
          rep.all_pass());
  }

  // Exact small-case image values.
  {
    auto st = image_f(InputSet::from_integers({1, 2, 3}));
    check("|f({1,2,3})| = 6", st.image_count == 6);
    auto sg = image_g(InputSet::from_integers({0, 1, 2, 3}));
    check("|g({0,1,2,3})| = 6", sg.image_count == 6);
  }

  std::cout << (failures == 0 ? "selftest: all checks passed\n"
                              : "selftest: FAILURES\n");
  return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact cross-ratio expander toolkit"};
  app.require_subcommand(1);

  unsigned threads = 0;
  app.add_option("--threads", threads, "worker thread count (0 = hardware)");

  // expand
  auto *expand = app.add_subcommand("expand", "image set of f, g or h");
  std::string ex_file, ex_fn;
  bool ex_json = false, ex_values = false, ex_unsafe = false;
  expand->add_option("--set-file", ex_file, "input set file")->required();
  expand->add_option("--function", ex_fn, "f, g or h")
      ->required()
      ->check(CLI::IsMember({"f", "g", "h"}));
  expand->add_flag("--json", ex_json, "JSON output");
  expand->add_flag("--values", ex_values, "list the image values");
  expand->add_flag("--unsafe-cap", ex_unsafe, "ignore the size cap");

  // energy
  auto *energy = app.add_subcommand("energy", "cross-ratio energy E1/E2/E3");
  std::string en_file, en_method = "direct";
  int en_order = 1;
  std::size_t en_cap = 0;
  energy->add_option("--set-file", en_file, "input set file")->required();
  energy->add_option("--order", en_order, "1, 2 or 3")
      ->required()
      ->check(CLI::Range(1, 3));
  energy->add_option("--method", en_method, "direct or dual")
      ->check(CLI::IsMember({"direct", "dual"}));
  energy->add_option("--unsafe-cap", en_cap, "override the size cap");

  // dual-check
  auto *dual = app.add_subcommand("dual-check", "planes-lemma verification");
  std::string dc_file;
  std::size_t dc_cap = 6;
  bool dc_json = false;
  dual->add_option("--set-file", dc_file, "input set file")->required();
  dual->add_option("--cap", dc_cap, "max |A| for the exhaustive check");
  dual->add_flag("--json", dc_json, "JSON output");

  // scan
  auto *scan_cmd = app.add_subcommand("scan", "growth measurement over sizes");
  std::string sc_family, sc_fn, sc_fit, sc_csv;
  std::vector<std::size_t> sc_sizes;
  bool sc_unsafe = false;
  FamilySpec sc_spec;
  scan_cmd->add_option("--family", sc_family, "ap, gp, random or squares")
      ->required()
      ->check(CLI::IsMember({"ap", "gp", "random", "squares"}));
  scan_cmd->add_option("--sizes", sc_sizes, "comma-separated sizes")
      ->required()
      ->delimiter(',');
  scan_cmd->add_option("--function", sc_fn, "f, g or h")
      ->required()
      ->check(CLI::IsMember({"f", "g", "h"}));
  scan_cmd->add_option("--fit", sc_fit, "pure or powerlog");
  scan_cmd->add_option("--csv", sc_csv, "CSV output path ('-' for stdout)");
  scan_cmd->add_option("--start", sc_spec.start, "ap/gp/squares start");
  scan_cmd->add_option("--step", sc_spec.step, "ap step");
  scan_cmd->add_option("--ratio", sc_spec.ratio, "gp ratio");
  scan_cmd->add_option("--bound", sc_spec.bound, "random range bound");
  scan_cmd->add_option("--seed", sc_spec.seed, "random seed");
  scan_cmd->add_flag("--unsafe-cap", sc_unsafe, "ignore the size caps");

  // selftest
  app.add_subcommand("selftest", "cross-method and planes-lemma suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (expand->parsed())
      return run_expand(ex_file, ex_fn[0], ex_json, ex_values, ex_unsafe,
                        threads);
    if (energy->parsed())
      return run_energy(en_file, en_order, en_method, en_cap, threads);
    if (dual->parsed())
      return run_dual_check(dc_file, dc_cap, dc_json);
    if (scan_cmd->parsed())
      return run_scan(sc_family, sc_fn[0], sc_sizes, sc_fit, sc_csv, sc_spec,
                      sc_unsafe, threads);
    return run_selftest();
  } catch (const CapExceeded &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
