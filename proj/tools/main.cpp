#include <charconv>
#include <cstdint>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dyckbij/analytics.hpp"
#include "dyckbij/bijection.hpp"
#include "dyckbij/composition.hpp"
#include "dyckbij/errors.hpp"
#include "dyckbij/lco.hpp"
#include "dyckbij/orbit.hpp"
#include "dyckbij/path.hpp"
#include "dyckbij/series.hpp"

namespace {

using dyckbij::DyckPath;
using dyckbij::Int;
using nlohmann::json;

constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct Range {
  int lo = 0;
  int hi = 0;
};

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    dyckbij::fail(dyckbij::errc::bad_char,
                  std::string("bad ") + what + " \"" + std::string(text) + "\"");
  }
  return value;
}

// "5" or "3..13", inclusive on both ends.
Range parse_range(const std::string& text) {
  Range r;
  size_t dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text, "range");
  } else {
    r.lo = parse_int(std::string_view(text).substr(0, dots), "range");
    r.hi = parse_int(std::string_view(text).substr(dots + 2), "range");
  }
  if (r.lo > r.hi) dyckbij::fail(dyckbij::errc::out_of_range, "empty range " + text);
  return r;
}

std::string range_text(Range r) { return std::to_string(r.lo) + ".." + std::to_string(r.hi); }

json json_int(const Int& v) {
  static const Int lo = std::numeric_limits<int64_t>::min();
  static const Int hi = std::numeric_limits<int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<int64_t>();
  return v.str();
}

// ---------------------------------------------------------------- map

int run_map(const std::string& path_text, bool use_g, long iterations) {
  DyckPath p = DyckPath::parse(path_text);
  p = use_g ? dyckbij::inverse_iter(p, iterations) : dyckbij::forward_iter(p, iterations);
  std::cout << p.text() << "\n";
  return 0;
}

// ---------------------------------------------------------------- orbit

void print_path_orbits(const std::vector<std::vector<DyckPath>>& orbits) {
  bool first = true;
  for (const auto& orbit : orbits) {
    if (!first) std::cout << "\n";
    first = false;
    for (const auto& p : orbit) std::cout << p.text() << "\n";
    std::cout << "length=" << orbit.size() << "\n";
  }
}

int run_orbit(const std::optional<std::string>& path_text, const std::optional<int>& all_n,
              const std::optional<int>& cn_n, int cap) {
  int selectors = int(path_text.has_value()) + int(all_n.has_value()) + int(cn_n.has_value());
  if (selectors != 1) {
    std::cerr << "error: give exactly one of PATH, --all, --cn\n";
    return kExitInput;
  }
  if (path_text) {
    print_path_orbits({dyckbij::orbit_of(DyckPath::parse(*path_text))});
  } else if (all_n) {
    print_path_orbits(dyckbij::orbit_partition(*all_n, dyckbij::Universe::all, cap));
  } else {
    bool first = true;
    for (const auto& orbit : dyckbij::cn_orbit_partition(*cn_n, cap)) {
      if (!first) std::cout << "\n";
      first = false;
      for (const auto& c : orbit) std::cout << dyckbij::format_composition(c) << "\n";
      std::cout << "length=" << orbit.size() << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------- forest

int run_forest_encode(const std::string& path_text) {
  std::cout << dyckbij::forest_to_json(dyckbij::path_to_forest(DyckPath::parse(path_text)))
            << "\n";
  return 0;
}

int run_forest_decode() {
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  std::cout << dyckbij::forest_to_path(dyckbij::forest_from_json(buf.str())).text() << "\n";
  return 0;
}

// ---------------------------------------------------------------- verify

struct TargetReport {
  json entries = json::array();
  bool pass = true;
};

void record(TargetReport& report, json& entry, bool ok, const std::string& message) {
  if (!ok) {
    entry["pass"] = false;
    if (!entry.contains("message")) entry["message"] = message;
    report.pass = false;
  }
}

// Orbits of the composition shadow: uniform power-of-two length, uniform
// parity, both matching the closed schedule.
TargetReport run_theorem6(Range r, int cap) {
  TargetReport report;
  for (int n = r.lo; n <= r.hi; ++n) {
    json e{{"n", n}, {"pass", true}};
    try {
      dyckbij::Theorem6Report rep = dyckbij::verify_theorem6(n, cap);
      e["orbits"] = rep.orbit_count;
      e["orbit_length"] = rep.orbit_length;
      e["parity"] = rep.parity;
    } catch (const dyckbij::error& ex) {
      if (ex.code() != dyckbij::errc::theorem_violated) throw;
      record(report, e, false, ex.what());
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

// Same uniform-length check on the primitive DUU-avoiding paths themselves.
TargetReport run_cor7(Range r, int cap) {
  TargetReport report;
  for (int n = r.lo; n <= r.hi; ++n) {
    json e{{"n", n}, {"pass", true}};
    try {
      int power = dyckbij::verify_uniform_primitive_duu_orbits(n, cap);
      e["power"] = power;
      e["orbit_length"] = int64_t{1} << power;
    } catch (const dyckbij::error& ex) {
      if (ex.code() != dyckbij::errc::theorem_violated) throw;
      record(report, e, false, ex.what());
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

// Fixed paths = DUDD- and UU(+)DD-avoiding paths; counts recomputed from both
// forms of the orbit-length generating function, never from stored numbers.
TargetReport run_fixedpoints(Range r, int cap) {
  TargetReport report;
  dyckbij::Series system = dyckbij::series_fk(0, r.hi);
  dyckbij::Series closed = dyckbij::series_fk_closed(0, r.hi);
  for (int n = r.lo; n <= r.hi; ++n) {
    int64_t count = 0;
    bool avoidance_ok = true;
    std::string witness;
    dyckbij::for_each_path(
        n,
        [&](const DyckPath& p) {
          bool fixed = dyckbij::forward(p) == p;
          if (fixed) ++count;
          bool avoids = dyckbij::count_pattern(p, "DUDD") == 0 &&
                        dyckbij::count_pattern(p, "UU+DD") == 0;
          if (fixed != avoids && avoidance_ok) {
            avoidance_ok = false;
            witness = p.text();
          }
        },
        cap);
    json e{{"n", n}, {"count", count}, {"pass", true}};
    record(report, e, avoidance_ok, "avoidance mismatch at " + witness);
    record(report, e, dyckbij::Rat(count) == system.coeff(n), "system series mismatch");
    record(report, e, dyckbij::Rat(count) == closed.coeff(n), "closed form mismatch");
    report.entries.push_back(std::move(e));
  }
  return report;
}

// The map carries the DUD count to the DUDU + UU(+)DD + ends-UD count.
TargetReport run_prop12(Range r, int cap) {
  TargetReport report;
  for (int n = r.lo; n <= r.hi; ++n) {
    int64_t paths = 0;
    bool ok = true;
    std::string witness;
    dyckbij::for_each_path(
        n,
        [&](const DyckPath& p) {
          ++paths;
          if (ok && dyckbij::stat_y(dyckbij::forward(p)) != dyckbij::stat_x(p)) {
            ok = false;
            witness = p.text();
          }
        },
        cap);
    json e{{"n", n}, {"paths", paths}, {"pass", true}};
    record(report, e, ok, "statistic mismatch at " + witness);
    report.entries.push_back(std::move(e));
  }
  return report;
}

// Two path families of size n+1, both counted by the Motzkin numbers.
TargetReport run_prop11(Range r, int cap) {
  TargetReport report;
  for (int n = r.lo; n <= r.hi; ++n) {
    int64_t expected = dyckbij::motzkin(n).convert_to<int64_t>();
    int64_t windows = dyckbij::motzkin_path_count(n, cap);
    int64_t avoiders = dyckbij::dud_avoiding_count(n, cap);
    json e{{"n", n},
           {"expected", expected},
           {"window_count", windows},
           {"avoider_count", avoiders},
           {"pass", true}};
    record(report, e, windows == expected, "ending-DD family count mismatch");
    record(report, e, avoiders == expected, "DUD-avoider count mismatch");
    report.entries.push_back(std::move(e));
  }
  return report;
}

// Ground-valley DUU paths ending DD against the 4-fold Catalan convolution.
TargetReport run_lemma13(Range r, int cap) {
  TargetReport report;
  for (int n = r.lo; n <= r.hi; ++n) {
    int64_t count = dyckbij::lemma13_count(n, cap);
    Int predicted = n >= 3 ? dyckbij::gen_catalan(4, n - 3) : Int(0);
    json e{{"n", n}, {"count", count}, {"predicted", json_int(predicted)}, {"pass", true}};
    record(report, e, Int(count) == predicted, "convolution mismatch");
    report.entries.push_back(std::move(e));
  }
  return report;
}

// Catalan split along skeleton sizes; small sizes also get the per-size
// census cross-checked against the closed counts.
TargetReport run_prop14(Range r, int cap) {
  TargetReport report;
  for (int n = r.lo; n <= r.hi; ++n) {
    dyckbij::CatalanSplitReport rep = dyckbij::prop14_check(n);
    bool refine = n <= 11 && n + 1 <= cap;
    json e{{"n", n},
           {"catalan", json_int(rep.catalan_value)},
           {"split_sum", json_int(rep.split_sum)},
           {"refined", refine},
           {"pass", true}};
    record(report, e, rep.holds, "split sum disagrees with Catalan");
    if (refine) {
      std::map<int, int64_t> census = dyckbij::skeleton_size_census(n, cap);
      bool ok = true;
      for (int k = 1; k <= n + 2 && ok; ++k) {
        auto it = census.find(k);
        int64_t got = it == census.end() ? 0 : it->second;
        ok = Int(got) == dyckbij::skeleton_size_count(n, k);
      }
      record(report, e, ok, "skeleton size census mismatch");
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

// Leaf-count table rows: generating function expansion vs brute census for
// small sizes, plus the stored 8-row reference block.
TargetReport run_prop15(Range r, int cap) {
  static const std::vector<std::vector<int64_t>> kReferenceRows = {
      {1},
      {1, 1},
      {2, 2, 1},
      {4, 6, 3, 1},
      {8, 17, 12, 4, 1},
      {16, 46, 44, 20, 5, 1},
      {32, 120, 150, 90, 30, 6, 1},
      {64, 304, 482, 370, 160, 42, 7, 1},
  };
  TargetReport report;
  int max_n = std::min(std::max(r.hi, 8), 24);
  std::vector<std::vector<Int>> table = dyckbij::lco_leaf_table(max_n);
  for (int n = r.lo; n <= r.hi; ++n) {
    if (n < 1 || n > max_n) {
      dyckbij::fail(dyckbij::errc::out_of_range,
                    "table rows cover 1..24, got " + std::to_string(n));
    }
    const std::vector<Int>& row = table[static_cast<size_t>(n - 1)];
    json row_json = json::array();
    for (const Int& v : row) row_json.push_back(json_int(v));
    bool check_census = n <= 10 && n <= cap;
    json e{{"n", n},
           {"row", std::move(row_json)},
           {"census_checked", check_census},
           {"reference_checked", n <= 8},
           {"pass", true}};
    if (check_census) {
      std::vector<int64_t> census = dyckbij::leaf_census_row(n, cap);
      bool ok = census.size() == row.size();
      for (size_t k = 0; ok && k < row.size(); ++k) ok = Int(census[k]) == row[k];
      record(report, e, ok, "leaf census mismatch");
    }
    if (n <= 8) {
      const std::vector<int64_t>& ref = kReferenceRows[static_cast<size_t>(n - 1)];
      bool ok = ref.size() == row.size();
      for (size_t k = 0; ok && k < row.size(); ++k) ok = Int(ref[k]) == row[k];
      record(report, e, ok, "reference row mismatch");
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

// Mod-2 Pascal block row sums vanish except in the last row; range is over k.
TargetReport run_lemma4(Range r, int /*cap*/) {
  TargetReport report;
  for (int k = r.lo; k <= r.hi; ++k) {
    int64_t side = int64_t{1} << k;
    bool ok = true;
    int64_t bad = -1;
    for (int64_t i = 0; i < side && ok; ++i) {
      int expected = i == side - 1 ? 1 : 0;
      if (dyckbij::pascal_block_row_sum(k, i) != expected) {
        ok = false;
        bad = i;
      }
    }
    json e{{"k", k}, {"rows", side}, {"pass", true}};
    record(report, e, ok, "row " + std::to_string(bad) + " has the wrong sum");
    report.entries.push_back(std::move(e));
  }
  return report;
}

// Parity vectors of bumped orbits follow the prefix-sum identity, for both
// start operators on every orbit.
TargetReport run_lemma5(Range r, int cap) {
  using dyckbij::AugmentOp;
  TargetReport report;
  for (int n = r.lo; n <= r.hi; ++n) {
    int64_t orbits = 0;
    bool ok = true;
    std::string witness;
    for (const auto& orbit : dyckbij::cn_orbit_partition(n, cap)) {
      ++orbits;
      dyckbij::BitVector p = dyckbij::parity_vector(orbit);
      int m = p.size();
      dyckbij::BitVector base =
          dyckbij::bv_add(dyckbij::partial_sum(p), dyckbij::partial_sum(dyckbij::BitVector::ones(m)));
      for (AugmentOp op : {AugmentOp::prepend_one, AugmentOp::increment_first}) {
        dyckbij::BumpResult bumped = dyckbij::bump_orbit(orbit, op);
        dyckbij::BitVector expected =
            op == AugmentOp::increment_first ? dyckbij::bv_add(base, dyckbij::BitVector::ones(m))
                                             : base;
        if (ok && dyckbij::parity_vector(bumped.sequence) != expected) {
          ok = false;
          witness = dyckbij::format_composition(orbit.front());
        }
      }
    }
    json e{{"n", n}, {"orbits", orbits}, {"pass", true}};
    record(report, e, ok, "parity identity fails on the orbit of " + witness);
    report.entries.push_back(std::move(e));
  }
  return report;
}

struct TargetSpec {
  const char* name;
  Range def;
  TargetReport (*run)(Range, int);
};

const TargetSpec kTargets[] = {
    {"theorem6", {1, 14}, run_theorem6},
    {"cor7", {2, 14}, run_cor7},
    {"fixedpoints", {0, 12}, run_fixedpoints},
    {"prop12", {2, 12}, run_prop12},
    {"prop11", {1, 11}, run_prop11},
    {"lemma13", {3, 13}, run_lemma13},
    {"prop14", {2, 30}, run_prop14},
    {"prop15", {1, 10}, run_prop15},
    {"lemma4", {0, 10}, run_lemma4},
    {"lemma5", {1, 12}, run_lemma5},
};

json run_one_target(const TargetSpec& spec, Range r, int cap, bool& pass) {
  TargetReport report = spec.run(r, cap);
  pass = pass && report.pass;
  return json{{"target", spec.name},
              {"range", range_text(r)},
              {"results", std::move(report.entries)},
              {"pass", report.pass}};
}

int run_verify(const std::string& target, const std::optional<std::string>& range_arg, int cap) {
  bool pass = true;
  json out;
  if (target == "all") {
    if (range_arg) {
      std::cerr << "error: \"all\" runs every check on its default range; drop the range\n";
      return kExitInput;
    }
    json targets = json::array();
    for (const TargetSpec& spec : kTargets) targets.push_back(run_one_target(spec, spec.def, cap, pass));
    out = json{{"targets", std::move(targets)}, {"pass", pass}};
  } else {
    const TargetSpec* spec = nullptr;
    for (const TargetSpec& s : kTargets) {
      if (target == s.name) spec = &s;
    }
    if (spec == nullptr) {
      std::cerr << "error: unknown check \"" << target << "\"\n";
      return kExitInput;
    }
    Range r = range_arg ? parse_range(*range_arg) : spec->def;
    out = run_one_target(*spec, r, cap, pass);
  }
  std::cout << out.dump(2) << "\n";
  return pass ? 0 : kExitVerify;
}

// ---------------------------------------------------------------- table

void print_rows(const std::vector<std::vector<std::string>>& rows, bool csv) {
  if (csv) {
    for (const auto& row : rows) {
      for (size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
      std::cout << "\n";
    }
    return;
  }
  std::vector<size_t> width;
  for (const auto& row : rows) {
    if (row.size() > width.size()) width.resize(row.size(), 0);
    for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += std::string(width[i] - row[i].size(), ' ');
      line += row[i];
    }
    std::cout << line << "\n";
  }
}

int run_table_fk(int k, int order, bool csv) {
  std::vector<Int> coeffs = dyckbij::integer_coefficients(dyckbij::series_fk(k, order));
  std::vector<std::vector<std::string>> rows{{"n", "count"}};
  for (int n = 0; n <= order; ++n) {
    rows.push_back({std::to_string(n), coeffs[static_cast<size_t>(n)].str()});
  }
  print_rows(rows, csv);
  return 0;
}

int run_table_leaf(int max_n, bool csv) {
  std::vector<std::vector<Int>> table = dyckbij::lco_leaf_table(max_n);
  if (csv) {
    std::vector<std::vector<std::string>> rows{{"n", "k", "count"}};
    for (int n = 1; n <= max_n; ++n) {
      const auto& row = table[static_cast<size_t>(n - 1)];
      for (size_t k = 0; k < row.size(); ++k) {
        rows.push_back({std::to_string(n), std::to_string(k + 1), row[k].str()});
      }
    }
    print_rows(rows, true);
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"n"};
  for (int k = 1; k <= max_n; ++k) header.push_back(std::to_string(k));
  rows.push_back(std::move(header));
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::string> line{std::to_string(n)};
    for (const Int& v : table[static_cast<size_t>(n - 1)]) line.push_back(v.str());
    rows.push_back(std::move(line));
  }
  print_rows(rows, false);
  return 0;
}

int run_table_census(int n, bool csv, int cap) {
  std::map<int64_t, int64_t> hist = dyckbij::orbit_length_histogram(n, cap);
  std::vector<std::vector<std::string>> rows{{"n", "length", "count"}};
  for (const auto& [length, count] : hist) {
    rows.push_back({std::to_string(n), std::to_string(length), std::to_string(count)});
  }
  print_rows(rows, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dyck path bijection toolkit"};
  app.require_subcommand(1);

  int max_size = dyckbij::kDefaultEnumerationCap;
  app.add_option("--max-size", max_size, "enumeration size cap")->capture_default_str();

  auto* map_cmd = app.add_subcommand("map", "apply the bijection to a path");
  std::string map_path;
  bool map_f = false;
  bool map_g = false;
  long iterations = 1;
  map_cmd->add_flag("--f", map_f, "apply the forward direction");
  map_cmd->add_flag("--g", map_g, "apply the inverse direction");
  map_cmd->add_option("--iterations", iterations, "number of applications")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  map_cmd->add_option("PATH", map_path, "path as U/D text")->required();

  auto* orbit_cmd = app.add_subcommand("orbit", "list a forward-orbit, or all of them");
  std::optional<std::string> orbit_path;
  std::optional<int> orbit_all;
  std::optional<int> orbit_cn;
  orbit_cmd->add_option("PATH", orbit_path, "path as U/D text");
  orbit_cmd->add_option("--all", orbit_all, "every orbit of the paths of this size");
  orbit_cmd->add_option("--cn", orbit_cn,
                        "every orbit of the end-in-1 compositions of this size");

  auto* forest_cmd = app.add_subcommand("forest", "convert between paths and labeled forests");
  forest_cmd->require_subcommand(1);
  auto* encode_cmd = forest_cmd->add_subcommand("encode", "path text to forest JSON");
  std::string encode_path;
  encode_cmd->add_option("PATH", encode_path, "path as U/D text")->required();
  auto* decode_cmd = forest_cmd->add_subcommand("decode", "forest JSON on stdin to path text");

  auto* verify_cmd = app.add_subcommand("verify", "re-check a structural claim over a range");
  std::string verify_target;
  std::optional<std::string> verify_range;
  verify_cmd
      ->add_option("TARGET", verify_target,
                   "theorem6|cor7|fixedpoints|prop12|prop11|lemma13|prop14|prop15|lemma4|lemma5|all")
      ->required();
  verify_cmd->add_option("RANGE", verify_range, "size range, e.g. 2..12 or a single size");

  auto* table_cmd = app.add_subcommand("table", "print a counting table");
  table_cmd->require_subcommand(1);
  std::string fk_format = "csv";
  std::string leaf_format = "csv";
  std::string census_format = "csv";
  auto* fk_cmd = table_cmd->add_subcommand("fk-series", "orbit-length generating function");
  int fk_k = 0;
  int fk_order = 12;
  fk_cmd->add_option("--k", fk_k, "orbit length bound 2^k")->required();
  fk_cmd->add_option("--order", fk_order, "highest size")->capture_default_str();
  fk_cmd->add_option("--format", fk_format, "csv or text")
      ->check(CLI::IsMember({"csv", "text"}));
  auto* leaf_cmd = table_cmd->add_subcommand("leaf-table", "forest leaf counts by size");
  int leaf_max_n = 8;
  leaf_cmd->add_option("--max-n", leaf_max_n, "last row")->capture_default_str();
  leaf_cmd->add_option("--format", leaf_format, "csv or text")
      ->check(CLI::IsMember({"csv", "text"}));
  auto* census_cmd = table_cmd->add_subcommand("orbit-census", "paths by orbit length");
  std::optional<int> census_n;
  census_cmd->add_option("--n", census_n, "path size")->required();
  census_cmd->add_option("--format", census_format, "csv or text")
      ->check(CLI::IsMember({"csv", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (map_cmd->parsed()) {
      if (map_f == map_g) {
        std::cerr << "error: give exactly one of --f, --g\n";
        return kExitInput;
      }
      return run_map(map_path, map_g, iterations);
    }
    if (orbit_cmd->parsed()) return run_orbit(orbit_path, orbit_all, orbit_cn, max_size);
    if (forest_cmd->parsed()) {
      return encode_cmd->parsed() ? run_forest_encode(encode_path) : run_forest_decode();
    }
    if (verify_cmd->parsed()) return run_verify(verify_target, verify_range, max_size);
    if (table_cmd->parsed()) {
      if (fk_cmd->parsed()) return run_table_fk(fk_k, fk_order, fk_format == "csv");
      if (leaf_cmd->parsed()) return run_table_leaf(leaf_max_n, leaf_format == "csv");
      return run_table_census(*census_n, census_format == "csv", max_size);
    }
  } catch (const dyckbij::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == dyckbij::errc::cap_exceeded ? kExitCap : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
