#include "cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "icsolve/decompose.hpp"
#include "icsolve/json_io.hpp"
#include "icsolve/oracle.hpp"
#include "icsolve/parser.hpp"
#include "icsolve/trace.hpp"

namespace icsolve::cli {
namespace {

std::string display_path(const std::string& path) { return path.empty() ? "root" : path; }

nlohmann::json stats_json(const SolveReport& r) {
  return {{"emitted", r.atomic_boxes.size()},
          {"pruned", r.pruned_count},
          {"contractor_applications", r.stats.contractor_applications},
          {"max_depth", r.stats.max_depth}};
}

// Oracle cross-check: every grid solution inside an enclosure, none inside a
// pruned box. Returns the number of violations.
std::size_t check_against_grid(const Csp& csp, const SolveReport& report, std::size_t n,
                               std::ostream& out, std::ostream& err) {
  const Box user_box = project(csp.initial_box(), csp.user_vars());
  std::vector<oracle::Point> points;
  try {
    points = oracle::grid_solutions(csp.source_equations(), user_box, {n, 1e-7});
  } catch (const std::exception& e) {
    err << "grid check skipped: " << e.what() << "\n";
    return 0;
  }
  auto inside = [](const Box& b, const oracle::Point& p) {
    if (b.is_empty()) return false;
    for (const auto& [v, x] : p) {
      if (!b.at(v).contains(x)) return false;
    }
    return true;
  };
  std::size_t missed = 0;
  std::size_t in_pruned = 0;
  for (const auto& p : points) {
    bool covered = false;
    for (const auto& a : report.atomic_boxes) covered = covered || inside(a.box, p);
    if (!covered && !report.budget_exceeded) ++missed;
    for (const auto& b : report.pruned_boxes) {
      if (inside(b, p)) ++in_pruned;
    }
  }
  out << "# grid check: " << points.size() << " oracle points, " << missed
      << " outside enclosures, " << in_pruned << " inside pruned boxes\n";
  return missed + in_pruned;
}

int run_propagate_only(const Csp& csp, const CliConfig& config, std::ostream& out) {
  const auto vars = shown_vars(csp, config.show_aux);
  const PropagationOutcome res = propagate(csp, csp.initial_box(), config.order, config.trace);
  const bool empty = res.status == PropagationStatus::kProvedEmpty;
  if (config.format == Format::kJson) {
    nlohmann::json j;
    j["status"] = std::string(status_name(res.status));
    j["fixpoint"] = to_json(res.fixpoint, vars);
    j["stats"] = {{"steps", res.steps}, {"effective_steps", res.effective_steps}};
    if (config.trace) {
      j["trace"] = nlohmann::json::array();
      for (const auto& rec : res.trace) j["trace"].push_back(nlohmann::json::parse(to_json_line(rec)));
    }
    out << j.dump() << "\n";
  } else {
    for (const auto& rec : res.trace) out << "trace " << to_text_line(rec) << "\n";
    if (empty) {
      out << "infeasible (propagation)\n";
    } else {
      out << "fixpoint: " << to_string(res.fixpoint, vars) << "\n";
    }
    out << "# " << res.steps << " contractor applications, " << res.effective_steps
        << " effective\n";
  }
  return empty ? kExitInfeasible : kExitEnclosures;
}

int solve_and_report(const Csp& csp, const CliConfig& config, std::ostream& out,
                     std::ostream& err) {
  SolveOptions options;
  options.eps = config.eps;
  options.max_boxes = config.max_boxes;
  options.order = config.order;
  options.record_pruned = config.check_grid.has_value();
  nlohmann::json trace_json = nlohmann::json::array();
  if (config.trace) {
    options.on_trace = [&](const std::string& path, const TraceRecord& rec) {
      if (config.format == Format::kJson) {
        auto j = nlohmann::json::parse(to_json_line(rec));
        j["path"] = path;
        trace_json.push_back(std::move(j));
      } else {
        out << "trace " << display_path(path) << " " << to_text_line(rec) << "\n";
      }
    };
  }
  const SolveReport report = solve(csp, options);

  if (config.format == Format::kJson && config.trace) {
    auto j = nlohmann::json::parse(render_report(report, csp, config.format, config.show_aux));
    j["trace"] = std::move(trace_json);
    out << j.dump() << "\n";
  } else {
    out << render_report(report, csp, config.format, config.show_aux);
  }

  if (report.budget_exceeded) {
    err << "box budget of " << config.max_boxes << " exceeded; results are incomplete\n";
  } else if (report.status == SolveStatus::kInfeasible) {
    err << "proved infeasible\n";
  }
  if (config.check_grid && check_against_grid(csp, report, *config.check_grid, out, err) > 0) {
    err << "grid check failed\n";
    return kExitOracleMismatch;
  }
  if (report.budget_exceeded) return kExitBudget;
  return report.status == SolveStatus::kInfeasible ? kExitInfeasible : kExitEnclosures;
}

}  // namespace

std::vector<VarName> shown_vars(const Csp& csp, bool show_aux) {
  if (show_aux) return csp.initial_box().vars();
  return {csp.user_vars().begin(), csp.user_vars().end()};
}

std::string render_report(const SolveReport& report, const Csp& csp, Format format,
                          bool show_aux) {
  const auto vars = shown_vars(csp, show_aux);
  if (format == Format::kJson) {
    nlohmann::json j;
    j["status"] = report.status == SolveStatus::kInfeasible ? "infeasible" : "enclosures";
    j["complete"] = !report.budget_exceeded;
    j["boxes"] = nlohmann::json::array();
    for (const auto& a : report.atomic_boxes) {
      j["boxes"].push_back({{"path", a.path}, {"bindings", to_json(a.box, vars)}});
    }
    j["stats"] = stats_json(report);
    return j.dump() + "\n";
  }
  std::ostringstream os;
  if (report.status == SolveStatus::kInfeasible && !report.budget_exceeded) {
    os << "infeasible (pruned " << report.pruned_count << " subboxes)\n";
    return os.str();
  }
  for (const auto& a : report.atomic_boxes) {
    os << "box " << display_path(a.path) << ": " << to_string(a.box, vars) << "\n";
  }
  if (report.budget_exceeded) os << "incomplete: box budget exceeded\n";
  os << "# " << report.atomic_boxes.size() << " boxes emitted, " << report.pruned_count
     << " boxes pruned, " << report.stats.contractor_applications << " contractor applications\n";
  return os.str();
}

std::optional<CliConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code) {
  CliConfig config;
  std::string order = "worklist";
  std::string format = "text";
  std::size_t grid = 0;

  CLI::App app{"Interval constraint solver: encloses every real solution of a system of "
               "polynomial equations inside a box, or proves there is none."};
  app.add_option("input", config.input, "Problem file")->required();
  app.add_option("--eps", config.eps, "Largest width of a reported box per user variable")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-boxes", config.max_boxes, "Stop after this many boxes")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  app.add_option("--order", order, "Propagation order: roundrobin, worklist or random:<seed>");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--trace", config.trace, "Print every contractor application");
  app.add_option("--check-grid", grid, "Cross-check the result on an n-per-axis grid")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
  app.add_flag("--propagate-only", config.propagate_only, "Propagate once, without splitting");
  app.add_flag("--show-aux", config.show_aux, "Include auxiliary variables in output");
  app.add_flag("--echo", config.echo, "Print the canonical problem and its decomposition");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e, out, err) == 0 ? 0 : kExitUsage;
    return std::nullopt;
  }
  const auto parsed = PropagationOrder::parse(order);
  if (!parsed) {
    err << "--order: expected roundrobin, worklist or random:<seed>, got '" << order << "'\n";
    exit_code = kExitUsage;
    return std::nullopt;
  }
  config.order = *parsed;
  config.format = format == "json" ? Format::kJson : Format::kText;
  if (grid > 0) config.check_grid = grid;
  return config;
}

int run_text(const std::string& text, const CliConfig& config, std::ostream& out,
             std::ostream& err) {
  Csp csp;
  try {
    csp = load_problem(text);
  } catch (const ParseError& e) {
    err << config.input << ":" << e.line() << ":" << e.column() << ": error: " << e.message()
        << "\n";
    return kExitUsage;
  }

  if (config.echo) {
    out << canonical_text(csp);
    for (const auto& c : csp.constraints()) out << "# " << to_string(c) << "\n";
    return kExitEnclosures;
  }
  try {
    if (config.propagate_only) return run_propagate_only(csp, config, out);
    return solve_and_report(csp, config, out, err);
  } catch (const PropagationDiverged& e) {
    err << config.input << ": " << e.what() << "; no fixpoint reached\n";
    return kExitDiverged;
  }
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  std::ifstream in(config.input, std::ios::binary);
  if (!in) {
    err << config.input << ": cannot open file\n";
    return kExitUsage;
  }
  std::ostringstream text;
  text << in.rdbuf();
  return run_text(text.str(), config, out, err);
}

}  // namespace icsolve::cli
