// Command line front end.
//
// Exit codes: 0 success, 2 argument or shape-file errors, 3 domain not
// strictly star-shaped about the chosen center, 4 output not writable,
// 1 anything else.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "infsup/bounds.hpp"
#include "infsup/shapefile.hpp"
#include "infsup/shapes.hpp"
#include "infsup/svg.hpp"

namespace {

using namespace infsup;

struct WriteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliOptions {
  std::optional<int> grid;
  std::optional<double> tol;
};

// Defaults, then shape-file "options", then environment, then flags.
Options resolve_options(const std::string* shape_text, const CliOptions& cli) {
  Options opt;
  if (shape_text) opt = options_from_text(*shape_text, opt);
  if (const char* g = std::getenv("INFSUP_GRID"); g && *g) {
    char* end = nullptr;
    const long v = std::strtol(g, &end, 10);
    if (*end != '\0' || v < 8)
      throw ArgumentError("INFSUP_GRID: expected an integer >= 8");
    opt.grid_n = static_cast<int>(v);
  }
  if (const char* t = std::getenv("INFSUP_TOL"); t && *t) {
    char* end = nullptr;
    const double v = std::strtod(t, &end);
    if (*end != '\0' || !(v > 0.0) || !(v < 1.0))
      throw ArgumentError("INFSUP_TOL: expected a number in (0, 1)");
    opt.tol = v;
  }
  if (cli.grid) {
    if (*cli.grid < 8) throw ArgumentError("--grid: expected an integer >= 8");
    opt.grid_n = *cli.grid;
  }
  if (cli.tol) {
    if (!(*cli.tol > 0.0) || !(*cli.tol < 1.0))
      throw ArgumentError("--tol: expected a number in (0, 1)");
    opt.tol = *cli.tol;
  }
  return opt;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructureError("shape file: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw WriteError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw WriteError("failed while writing '" + path + "'");
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

std::string provenance_tag(const BoundReport& rep, const std::string& key) {
  for (const auto& [k, tag] : rep.provenance)
    if (k == key) return tag;
  return "";
}

std::string report_table(const std::string& kind, const BoundReport& rep) {
  std::string out;
  char line[160];
  auto row = [&](const char* name, const std::string& value,
                 const std::string& note) {
    snprintf(line, sizeof(line), "%-24s %-26s %s\n", name, value.c_str(),
             note.c_str());
    out += line;
  };
  row("kind", kind, "");
  row("normalization_scale", format_full(rep.normalization_scale), "");
  row("rho_max", format_full(rep.rho_max), "normalized");
  row("r_min", format_full(rep.r_min), "normalized");
  if (!rep.degenerate) {
    row("omega_hp", format_full(rep.omega_hp), "rad");
    row("tau", format_full(rep.tau), "rad");
    row("psi", format_full(rep.psi), "rad");
  }
  row("m", format_full(rep.m), provenance_tag(rep, "m"));
  row("M", format_full(rep.M), provenance_tag(rep, "M"));
  row("alpha_star", format_full(rep.alpha_star),
      provenance_tag(rep, "alpha_star"));
  if (!rep.degenerate) row("m_tau", format_full(rep.m_tau), "");
  row("gamma_upper_proven", format_full(rep.gamma_upper_proven),
      provenance_tag(rep, "gamma_upper_proven"));
  row("c_upper_proven", format_full(rep.c_upper_proven),
      provenance_tag(rep, "c_upper_proven"));
  row("k_upper_smooth_only", format_full(rep.k_upper_smooth_only),
      provenance_tag(rep, "k_upper_smooth_only"));
  row("beta_lower_proven", format_full(rep.beta_lower_proven),
      provenance_tag(rep, "beta_lower_proven"));
  if (!rep.degenerate) {
    row("beta_lower_radii", format_full(rep.beta_lower_radii),
        provenance_tag(rep, "beta_lower_radii"));
    row("beta_lower_hp_claimed", format_full(rep.beta_lower_hp_claimed),
        provenance_tag(rep, "beta_lower_hp_claimed"));
  }
  if (rep.beta_upper)
    row("beta_upper", format_full(*rep.beta_upper),
        provenance_tag(rep, "beta_upper"));
  return out;
}

struct Range {
  double lo = 0.0, hi = 0.0;
  int steps = 1;
};

Range parse_range(const std::string& text) {
  Range r;
  char extra;
  if (sscanf(text.c_str(), "%lf:%lf:%d%c", &r.lo, &r.hi, &r.steps, &extra) != 3)
    throw ArgumentError("range: expected lo:hi:steps, got '" + text + "'");
  if (!(r.lo > 0.0) || !(r.hi >= r.lo))
    throw ArgumentError("range: need 0 < lo <= hi");
  if (r.steps < 1) throw ArgumentError("range: need steps >= 1");
  return r;
}

double range_at(const Range& r, int k) {
  if (r.steps == 1) return r.lo;
  return r.lo + (r.hi - r.lo) * k / (r.steps - 1);
}

int run_bounds(const std::string& path, const CliOptions& cli, bool as_json) {
  const std::string text = slurp(path);
  const ShapeSpec spec = parse_shape_text(text);
  const Options opt = resolve_options(&text, cli);
  const BoundReport rep = compute_report_for(spec, opt);
  if (as_json) {
    json out;
    out["kind"] = kind_name(spec);
    out["options"] = {{"grid", opt.grid_n}, {"tol", opt.tol}};
    out["report"] = report_to_json(rep);
    if (auto rc = reference_constants(spec)) {
      json r = json::object();
      if (rc->gamma_exact) r["gamma_exact"] = *rc->gamma_exact;
      if (rc->beta_exact) r["beta_exact"] = *rc->beta_exact;
      if (rc->c_lower) r["c_lower"] = *rc->c_lower;
      if (rc->c_conjectured) r["c_conjectured"] = *rc->c_conjectured;
      out["reference"] = r;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << report_table(kind_name(spec), rep);
    if (auto rc = reference_constants(spec)) {
      if (rc->gamma_exact)
        std::cout << "reference: exact Friedrichs constant "
                  << format_full(*rc->gamma_exact) << "\n";
      if (rc->c_lower)
        std::cout << "reference: proven lower bound for C "
                  << format_full(*rc->c_lower) << "\n";
    }
  }
  return 0;
}

int run_counterexample(const std::string& family_name_arg, double parameter,
                       const CliOptions& cli, bool with_threshold,
                       const std::string& sweep_range) {
  const auto fam = family_from_name(family_name_arg);
  if (!fam)
    throw ArgumentError("unknown family '" + family_name_arg +
                        "' (expected cupid, stadium or octagon)");
  const Options opt = resolve_options(nullptr, cli);
  if (!sweep_range.empty()) {
    const Range r = parse_range(sweep_range);
    std::cout << "parameter,omega,claimed_beta_sq,proven_beta_sq_upper,margin,"
                 "verdict\n";
    for (int k = 0; k < r.steps; ++k) {
      const RefutationReport rep =
          hp_refutation_report(*fam, range_at(r, k), opt);
      std::cout << format_full(rep.parameter) << "," << format_full(rep.omega)
                << "," << format_full(rep.claimed_beta_sq) << ","
                << format_full(rep.proven_beta_sq_upper) << ","
                << format_full(rep.margin) << ","
                << (rep.refuted ? "refuted" : "consistent") << "\n";
    }
  } else {
    const RefutationReport rep = hp_refutation_report(*fam, parameter, opt);
    char line[160];
    auto row = [&](const char* name, const std::string& value) {
      snprintf(line, sizeof(line), "%-22s %s\n", name, value.c_str());
      std::cout << line;
    };
    row("family", family_name(*fam));
    row("parameter", format_full(rep.parameter));
    row("omega", format_full(rep.omega));
    row("claimed_beta_sq", format_full(rep.claimed_beta_sq));
    row("proven_beta_sq_upper", format_full(rep.proven_beta_sq_upper));
    row("margin", format_full(rep.margin));
    row("verdict", rep.refuted ? "REFUTED" : "consistent");
  }
  if (with_threshold) {
    const Threshold th = refutation_threshold(*fam, opt);
    std::cout << "threshold: claimed bound fails for parameters "
              << (th.refutes_above ? "above " : "below ")
              << format_full(th.value) << "\n";
  }
  return 0;
}

int run_check_star(const std::string& path, const CliOptions& cli) {
  const std::string text = slurp(path);
  const ShapeSpec spec = parse_shape_text(text);
  const Options opt = resolve_options(&text, cli);
  const PolarBoundary b = build(spec);
  const double scale = b.normalization_scale();
  const Extremum rho = rho_max(b, opt);
  char line[160];
  auto row = [&](const char* name, const std::string& value) {
    snprintf(line, sizeof(line), "%-10s %s\n", name, value.c_str());
    std::cout << line;
  };
  row("kind", kind_name(spec));
  row("rho_max", format_full(rho.value * scale));
  row("r_min", format_full(scale));
  if (rho.value > 0.0) {
    const RadiiRatio rr = radii_ratio_bounds(rho.value * scale, scale);
    row("ratio", format_full(rr.rho / rr.R));
    row("tau", format_full(rr.tau));
    row("psi", format_full(rr.psi));
    std::cout << "star-shaped: yes\n";
    return 0;
  }
  std::cout << "star-shaped: no (boundary tangent to a ray near theta = "
            << format_full(wrap_angle(rho.theta)) << ")\n";
  return 3;
}

int run_plot(const std::string& path, const std::string& out_path,
             const CliOptions& cli) {
  const std::string text = slurp(path);
  const ShapeSpec spec = parse_shape_text(text);
  const Options opt = resolve_options(&text, cli);
  const PolarBoundary b = build(spec);
  emit(render_svg(b, opt), out_path);
  return 0;
}

int run_sweep(const std::string& family_name_arg, const std::string& range_text,
              const std::string& out_path, const CliOptions& cli) {
  const auto fam = family_from_name(family_name_arg);
  if (!fam)
    throw ArgumentError("unknown family '" + family_name_arg +
                        "' (expected cupid, stadium or octagon)");
  const Options opt = resolve_options(nullptr, cli);
  const Range r = parse_range(range_text);
  std::ostringstream csv;
  csv << "parameter,omega,m,M,beta_lower_proven,beta_lower_hp_claimed,"
         "beta_upper,verdict\n";
  for (int k = 0; k < r.steps; ++k) {
    const double p = range_at(r, k);
    const ShapeSpec spec = make_family(*fam, p);
    const BoundReport rep = compute_report_for(spec, opt);
    const double upper = rep.beta_upper.value_or(inf);
    csv << format_full(p) << "," << format_full(rep.omega_hp) << ","
        << format_full(rep.m) << "," << format_full(rep.M) << ","
        << format_full(rep.beta_lower_proven) << ","
        << format_full(rep.beta_lower_hp_claimed) << "," << format_full(upper)
        << ","
        << (rep.beta_lower_hp_claimed > upper ? "refuted" : "consistent")
        << "\n";
  }
  emit(csv.str(), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Certified bounds for the inf-sup constant of star-shaped plane "
      "domains"};
  app.require_subcommand(1);
  CliOptions cli;

  std::string shape_path, out_path, family_arg, range_arg;
  double parameter = 0.0;
  bool as_json = false, with_threshold = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--grid", cli.grid,
                    "boundary samples per full turn (default 4096)");
    cmd->add_option("--tol", cli.tol,
                    "relative tolerance for searches (default 1e-10)");
  };

  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "compute all bounds for a shape file");
  bounds_cmd->add_option("shape", shape_path, "JSON shape file")->required();
  bounds_cmd->add_flag("--json", as_json, "emit JSON instead of a table");
  add_common(bounds_cmd);

  CLI::App* ce_cmd = app.add_subcommand(
      "counterexample", "claimed-versus-proven report for a family member");
  ce_cmd->add_option("family", family_arg, "cupid, stadium or octagon")
      ->required();
  ce_cmd->add_option("parameter", parameter, "family parameter");
  ce_cmd->add_flag("--threshold", with_threshold,
                   "also bisect the parameter where refutation starts");
  ce_cmd->add_option("--sweep", range_arg, "lo:hi:steps sweep (CSV output)");
  add_common(ce_cmd);

  CLI::App* star_cmd = app.add_subcommand(
      "check-star", "verify strict star-shapedness, report radii");
  star_cmd->add_option("shape", shape_path, "JSON shape file")->required();
  add_common(star_cmd);

  CLI::App* plot_cmd =
      app.add_subcommand("plot", "render the boundary as a standalone SVG");
  plot_cmd->add_option("shape", shape_path, "JSON shape file")->required();
  plot_cmd->add_option("-o,--output", out_path, "output file (default stdout)");
  add_common(plot_cmd);

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "full bound pipeline over a family parameter range (CSV)");
  sweep_cmd->add_option("family", family_arg, "cupid, stadium or octagon")
      ->required();
  sweep_cmd->add_option("range", range_arg, "lo:hi:steps")->required();
  sweep_cmd->add_option("-o,--output", out_path, "output file (default stdout)");
  add_common(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bounds_cmd->parsed()) return run_bounds(shape_path, cli, as_json);
    if (ce_cmd->parsed()) {
      if (range_arg.empty() && ce_cmd->count("parameter") == 0)
        throw ArgumentError("counterexample: give a parameter or --sweep");
      return run_counterexample(family_arg, parameter, cli, with_threshold,
                                range_arg);
    }
    if (star_cmd->parsed()) return run_check_star(shape_path, cli);
    if (plot_cmd->parsed()) return run_plot(shape_path, out_path, cli);
    if (sweep_cmd->parsed())
      return run_sweep(family_arg, range_arg, out_path, cli);
  } catch (const StarShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const WriteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const StructureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
