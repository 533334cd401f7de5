// Command-line front end for the hp0 shared library. Everything math goes
// through the C API in hp0/hp0.h; this file only parses arguments, reads
// files, and formats output.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hp0/hp0.h"

namespace {

enum ExitCode { EXIT_MATCH = 0, EXIT_MISMATCH = 1, EXIT_INVALID = 2, EXIT_REFUSED = 3 };

int status_exit(hp0_status st) { return int(st); }

[[noreturn]] void die(hp0_status st) {
  std::cerr << "hp0: " << hp0_last_error() << "\n";
  std::exit(status_exit(st));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "hp0: cannot read " << path << "\n";
    std::exit(EXIT_INVALID);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct SeriesGuard {
  hp0_series* s = nullptr;
  ~SeriesGuard() { hp0_series_free(s); }
};
struct SurfaceGuard {
  hp0_surface* s = nullptr;
  ~SurfaceGuard() { hp0_surface_free(s); }
};
struct GroupGuard {
  hp0_group* g = nullptr;
  ~GroupGuard() { hp0_group_free(g); }
};
struct StrataGuard {
  hp0_strata* s = nullptr;
  ~StrataGuard() { hp0_strata_free(s); }
};

void print_series(const hp0_series* s, bool structured) {
  int64_t start = hp0_series_start(s);
  int64_t len = hp0_series_length(s);
  for (int64_t i = 0; i < len; ++i) {
    int64_t m = start + i;
    if (structured)
      std::cout << "{\"m\":" << m << ",\"value\":" << hp0_series_coeff(s, m) << "}\n";
    else
      std::cout << m << "\t" << hp0_series_coeff(s, m) << "\n";
  }
}

int print_comparison(const hp0_series* brute, const hp0_series* formula,
                     bool structured) {
  int64_t n = std::max(hp0_series_length(brute), hp0_series_length(formula));
  int64_t mismatch = -1;
  if (!structured) std::cout << "m\tbrute\tformula\tmatch\n";
  for (int64_t m = 0; m < n; ++m) {
    int64_t a = hp0_series_coeff(brute, m);
    int64_t b = hp0_series_coeff(formula, m);
    bool eq = a == b;
    if (!eq && mismatch < 0) mismatch = m;
    if (structured)
      std::cout << "{\"m\":" << m << ",\"brute\":" << a << ",\"formula\":" << b
                << ",\"match\":" << (eq ? "true" : "false") << "}\n";
    else
      std::cout << m << "\t" << a << "\t" << b << "\t" << (eq ? 1 : 0) << "\n";
  }
  if (mismatch >= 0) {
    std::cout << "# first_mismatch=" << mismatch << "\n";
    return EXIT_MISMATCH;
  }
  std::cout << "# first_mismatch=none\n";
  return EXIT_MATCH;
}

hp0_surface* load_surface(const std::string& spec_path, const std::string& preset) {
  hp0_surface* s = nullptr;
  hp0_status st;
  if (!preset.empty())
    st = hp0_surface_preset(preset.c_str(), &s);
  else
    st = hp0_surface_from_json(read_file(spec_path).c_str(), &s);
  if (st != HP0_OK) die(st);
  st = hp0_surface_validate(s);
  if (st != HP0_OK) {
    hp0_surface_free(s);
    die(st);
  }
  return s;
}

std::vector<int64_t> parse_int_list(const std::string& text) {
  std::vector<int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t used = 0;
    int64_t value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size())
      throw std::invalid_argument("not an integer list entry: " + item);
    out.push_back(value);
  }
  return out;
}

int run(int argc, char** argv);

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "hp0: " << e.what() << "\n";
    return EXIT_INVALID;
  }
}

namespace {

int run(int argc, char** argv) {
  CLI::App app{"Hilbert series of zeroth Poisson homology over prime fields: "
               "brute-force and closed-form computations, cross-checked"};
  app.require_subcommand(1);
  app.fallthrough();
  bool structured = false;
  app.add_flag("--structured", structured, "JSON-lines output instead of TSV");

  // ---- surface ----
  std::string spec_path, preset_label;
  int64_t p = 0, max_deg = -1;
  std::string mode = "brute";
  auto* surface = app.add_subcommand("surface", "quasihomogeneous surface from a spec file");
  surface->add_option("--spec", spec_path, "surface spec file (JSON)");
  surface->add_option("--preset", preset_label, "built-in ADE preset label");
  surface->add_option("--p", p, "prime characteristic")->required();
  surface->add_option("--max-deg", max_deg, "top degree (default: past the tail start)");
  surface->add_option("--mode", mode, "brute | formula | compare")
      ->check(CLI::IsMember({"brute", "formula", "compare"}));

  // ---- kleinian ----
  std::string ade_label;
  auto* kleinian = app.add_subcommand("kleinian", "ADE singularities by label");
  kleinian->add_option("--type", ade_label, "A1.., D4.., E6, E7, E8")->required();
  kleinian->add_option("--p", p, "prime characteristic")->required();
  kleinian->add_option("--max-deg", max_deg, "top degree");
  kleinian->add_option("--mode", mode, "formula | compare")
      ->check(CLI::IsMember({"formula", "compare"}));

  // ---- curve ----
  int64_t curve_d = 3;
  auto* curve = app.add_subcommand("curve", "cone over a smooth plane curve of degree d");
  curve->add_option("--d", curve_d, "curve degree (>= 3)")->required();
  curve->add_option("--p", p, "prime characteristic")->required();
  curve->add_option("--max-deg", max_deg, "top degree");
  curve->add_option("--mode", mode, "formula | compare (compare uses the Fermat curve)")
      ->check(CLI::IsMember({"formula", "compare"}));

  // ---- quotient ----
  std::string group_path, group_label, strata_path;
  int64_t sympower_d = 0, sympower_n = 0;
  bool b_mod_ab = false;
  auto* quotient = app.add_subcommand("quotient", "symplectic quotient brute force");
  quotient->add_option("--spec", group_path, "group action file (JSON)");
  quotient->add_option("--group", group_label, "built-in group: Z<n>, trivial, S2");
  quotient->add_option("--p", p, "prime characteristic")->required();
  quotient->add_option("--max-deg", max_deg, "top degree")->required();
  quotient->add_flag("--b-mod-ab", b_mod_ab, "compute B/{A,B} instead of A/{A,A}");
  quotient->add_option("--strata", strata_path, "compare against stratum-data formula");
  quotient->add_option("--sympower-d", sympower_d, "compare against sympower half-dim");
  quotient->add_option("--sympower-n", sympower_n, "compare against sympower power");

  // ---- quotient-formula ----
  std::string kleinian_strata_label;
  auto* qformula = app.add_subcommand("quotient-formula", "stratum-data closed form");
  qformula->add_option("--strata", strata_path, "stratum data file (JSON)");
  qformula->add_option("--kleinian", kleinian_strata_label, "built-in Kleinian strata by label");
  qformula->add_option("--p", p, "prime characteristic")->required();
  qformula->add_option("--max-deg", max_deg, "top degree")->required();

  // ---- sympower ----
  auto* sympower = app.add_subcommand("sympower", "symmetric powers of a symplectic space");
  sympower->add_option("--d", sympower_d, "half the dimension of L")->required();
  sympower->add_option("--n", sympower_n, "symmetric power")->required();
  sympower->add_option("--p", p, "prime characteristic")->required();
  sympower->add_option("--max-deg", max_deg, "top degree")->required();

  // ---- sym-kleinian ----
  auto* symk = app.add_subcommand("sym-kleinian", "symmetric powers of a Kleinian singularity");
  symk->add_option("--type", ade_label, "ADE label")->required();
  symk->add_option("--n", sympower_n, "symmetric power")->required();
  symk->add_option("--p", p, "prime characteristic")->required();
  symk->add_option("--max-deg", max_deg, "top degree")->required();

  // ---- series ----
  std::string series_op, weights_text;
  int64_t series_d = 0, from_deg = 1, to_deg = 10;
  auto* series = app.add_subcommand("series", "coefficient windows of the basic series");
  series->add_option("--op", series_op, "hilb | f | u | s")->required();
  series->add_option("--weights", weights_text, "comma-separated a,b,c")->required();
  series->add_option("--d", series_d, "weighted degree of Q")->required();
  series->add_option("--from", from_deg, "window start");
  series->add_option("--to", to_deg, "window end")->required();

  // ---- sweep ----
  std::string primes_text;
  int64_t opt_h = 0, opt_D = 0;
  auto* sweep = app.add_subcommand("sweep", "per-prime comparison with threshold annotations");
  sweep->add_option("--spec", spec_path, "surface spec file (JSON)");
  sweep->add_option("--preset", preset_label, "built-in ADE preset label");
  sweep->add_option("--primes", primes_text, "comma-separated primes")->required();
  sweep->add_option("--max-deg", max_deg, "fixed top degree (default: per-prime)");
  sweep->add_option("--coxeter-h", opt_h, "annotate the p > h threshold");
  sweep->add_option("--top-degree-D", opt_D, "annotate the p > D/2 + 1 threshold");

  // ---- preset ----
  std::string dump_label;
  auto* preset_cmd = app.add_subcommand("preset", "list or dump built-in presets");
  preset_cmd->add_option("--dump", dump_label, "emit the spec file for a label");

  // ---- accept ----
  auto* accept = app.add_subcommand("accept", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : EXIT_INVALID;
  }

  if (surface->parsed()) {
    if (spec_path.empty() && preset_label.empty()) {
      std::cerr << "hp0: surface needs --spec or --preset\n";
      return EXIT_INVALID;
    }
    SurfaceGuard spec{load_surface(spec_path, preset_label)};
    if (mode == "compare") {
      SeriesGuard brute, formula;
      int64_t mismatch = -1;
      hp0_status st =
          hp0_compare_surface(spec.s, p, max_deg, &brute.s, &formula.s, &mismatch);
      if (st == HP0_INVALID || st == HP0_REFUSED) die(st);
      return print_comparison(brute.s, formula.s, structured);
    }
    SeriesGuard out;
    hp0_status st = (mode == "brute")
                        ? hp0_surface_brute(spec.s, p, max_deg < 0 ? 0 : max_deg, &out.s)
                        : hp0_surface_formula(spec.s, p, max_deg, &out.s);
    if (st != HP0_OK) die(st);
    print_series(out.s, structured);
    return EXIT_MATCH;
  }

  if (kleinian->parsed()) {
    if (mode == "compare") {
      SurfaceGuard spec;
      hp0_status st = hp0_surface_preset(ade_label.c_str(), &spec.s);
      if (st != HP0_OK) die(st);
      SeriesGuard brute, formula;
      int64_t mismatch = -1;
      st = hp0_compare_surface(spec.s, p, max_deg, &brute.s, &formula.s, &mismatch);
      if (st == HP0_INVALID || st == HP0_REFUSED) die(st);
      SeriesGuard klein;
      int64_t n = hp0_series_length(brute.s);
      hp0_status st2 = hp0_kleinian_formula(ade_label.c_str(), p, n - 1, &klein.s);
      if (st2 != HP0_OK) die(st2);
      int rc = print_comparison(brute.s, klein.s, structured);
      return (st == HP0_MISMATCH) ? EXIT_MISMATCH : rc;
    }
    SeriesGuard out;
    hp0_status st = hp0_kleinian_formula(ade_label.c_str(), p, max_deg, &out.s);
    if (st != HP0_OK) die(st);
    print_series(out.s, structured);
    return EXIT_MATCH;
  }

  if (curve->parsed()) {
    if (mode == "compare") {
      // Fermat representative x^d + y^d + z^d
      std::ostringstream q;
      q << "{\"name\":\"fermat" << curve_d << "\",\"weights\":[1,1,1],\"Q\":["
        << "{\"c\":1,\"e\":[" << curve_d << ",0,0]},"
        << "{\"c\":1,\"e\":[0," << curve_d << ",0]},"
        << "{\"c\":1,\"e\":[0,0," << curve_d << "]}]}";
      SurfaceGuard spec;
      hp0_status st = hp0_surface_from_json(q.str().c_str(), &spec.s);
      if (st != HP0_OK) die(st);
      int64_t N = max_deg > 0 ? max_deg : 3 * p + curve_d;
      SeriesGuard brute;
      st = hp0_surface_brute(spec.s, p, N, &brute.s);
      if (st != HP0_OK) die(st);
      SeriesGuard formula;
      st = hp0_curve_formula(curve_d, p, N, &formula.s);
      if (st != HP0_OK) die(st);
      return print_comparison(brute.s, formula.s, structured);
    }
    SeriesGuard out;
    if (max_deg < 0) max_deg = 3 * p + curve_d;
    hp0_status st = hp0_curve_formula(curve_d, p, max_deg, &out.s);
    if (st != HP0_OK) die(st);
    print_series(out.s, structured);
    return EXIT_MATCH;
  }

  if (quotient->parsed()) {
    GroupGuard g;
    hp0_status st;
    if (!group_label.empty())
      st = hp0_group_builtin(group_label.c_str(), &g.g);
    else if (!group_path.empty())
      st = hp0_group_from_json(read_file(group_path).c_str(), &g.g);
    else {
      std::cerr << "hp0: quotient needs --spec or --group\n";
      return EXIT_INVALID;
    }
    if (st != HP0_OK) die(st);
    SeriesGuard brute;
    st = b_mod_ab ? hp0_quotient_brute_b(g.g, p, max_deg, &brute.s)
                  : hp0_quotient_brute(g.g, p, max_deg, &brute.s);
    if (st != HP0_OK) die(st);
    SeriesGuard formula;
    if (!strata_path.empty()) {
      StrataGuard strata;
      st = hp0_strata_from_json(read_file(strata_path).c_str(), &strata.s);
      if (st != HP0_OK) die(st);
      st = hp0_quotient_formula(strata.s, p, max_deg, &formula.s);
      if (st != HP0_OK) die(st);
      return print_comparison(brute.s, formula.s, structured);
    }
    if (sympower_d > 0 && sympower_n > 0) {
      st = hp0_sympower_formula(sympower_d, sympower_n, p, max_deg, &formula.s);
      if (st != HP0_OK) die(st);
      return print_comparison(brute.s, formula.s, structured);
    }
    print_series(brute.s, structured);
    return EXIT_MATCH;
  }

  if (qformula->parsed()) {
    StrataGuard strata;
    hp0_status st;
    if (!kleinian_strata_label.empty())
      st = hp0_strata_kleinian(kleinian_strata_label.c_str(), &strata.s);
    else if (!strata_path.empty())
      st = hp0_strata_from_json(read_file(strata_path).c_str(), &strata.s);
    else {
      std::cerr << "hp0: quotient-formula needs --strata or --kleinian\n";
      return EXIT_INVALID;
    }
    if (st != HP0_OK) die(st);
    SeriesGuard out;
    st = hp0_quotient_formula(strata.s, p, max_deg, &out.s);
    if (st != HP0_OK) die(st);
    print_series(out.s, structured);
    return EXIT_MATCH;
  }

  if (sympower->parsed()) {
    SeriesGuard out;
    hp0_status st = hp0_sympower_formula(sympower_d, sympower_n, p, max_deg, &out.s);
    if (st != HP0_OK) die(st);
    print_series(out.s, structured);
    return EXIT_MATCH;
  }

  if (symk->parsed()) {
    SeriesGuard out;
    hp0_status st =
        hp0_sym_kleinian_formula(ade_label.c_str(), sympower_n, p, max_deg, &out.s);
    if (st != HP0_OK) die(st);
    print_series(out.s, structured);
    return EXIT_MATCH;
  }

  if (series->parsed()) {
    auto ws = parse_int_list(weights_text);
    if (ws.size() != 3) {
      std::cerr << "hp0: --weights needs exactly three entries\n";
      return EXIT_INVALID;
    }
    SeriesGuard out;
    hp0_status st = hp0_series_op(series_op.c_str(), ws.data(), series_d, from_deg,
                                  to_deg, &out.s);
    if (st != HP0_OK) die(st);
    print_series(out.s, structured);
    return EXIT_MATCH;
  }

  if (sweep->parsed()) {
    if (spec_path.empty() && preset_label.empty()) {
      std::cerr << "hp0: sweep needs --spec or --preset\n";
      return EXIT_INVALID;
    }
    SurfaceGuard spec{load_surface(spec_path, preset_label)};
    auto primes = parse_int_list(primes_text);
    char* report = nullptr;
    hp0_status st = hp0_sweep_surface(spec.s, primes.data(), int64_t(primes.size()),
                                      max_deg, opt_h, opt_D, structured ? 1 : 0, &report);
    if (report) {
      std::cout << report;
      hp0_string_free(report);
    }
    if (st == HP0_INVALID || st == HP0_REFUSED) die(st);
    return status_exit(st);
  }

  if (preset_cmd->parsed()) {
    if (!dump_label.empty()) {
      SurfaceGuard spec;
      hp0_status st = hp0_surface_preset(dump_label.c_str(), &spec.s);
      if (st != HP0_OK) die(st);
      char* text = nullptr;
      st = hp0_surface_to_json(spec.s, &text);
      if (st != HP0_OK) die(st);
      std::cout << text;
      hp0_string_free(text);
      return EXIT_MATCH;
    }
    std::cout << "A<n> (n >= 1), D<n> (n >= 4), E6, E7, E8\n";
    return EXIT_MATCH;
  }

  if (accept->parsed()) {
    char* report = nullptr;
    hp0_status st = hp0_run_acceptance(&report);
    if (report) {
      std::cout << report;
      hp0_string_free(report);
    }
    return status_exit(st);
  }

  return EXIT_INVALID;
}

}  // namespace
