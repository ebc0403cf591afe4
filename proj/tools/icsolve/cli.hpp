// Command-line driver for the solver.

#ifndef ICSOLVE_TOOLS_CLI_HPP_
#define ICSOLVE_TOOLS_CLI_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "icsolve/csp.hpp"
#include "icsolve/propagation.hpp"
#include "icsolve/search.hpp"

namespace icsolve::cli {

enum class Format { kText, kJson };

// Process exit codes.
inline constexpr int kExitEnclosures = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitOracleMismatch = 4;
inline constexpr int kExitDiverged = 5;  // propagation hit its round limit

struct CliConfig {
  std::string input;
  double eps = 1e-10;
  std::size_t max_boxes = 4096;
  PropagationOrder order{};
  Format format = Format::kText;
  bool trace = false;
  std::optional<std::size_t> check_grid;
  bool propagate_only = false;
  bool show_aux = false;
  bool echo = false;
};

/// Parses argv. On --help or a usage error returns nullopt and stores the
/// exit code (0 or 2) in `exit_code`, having written to `out` / `err`.
std::optional<CliConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code);

/// Solves the problem file named in `config`, writing results to `out` and
/// diagnostics to `err`. Returns the process exit code.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Same as run, with the problem text supplied directly.
int run_text(const std::string& text, const CliConfig& config, std::ostream& out,
             std::ostream& err);

/// Text: one `box <path>: {...}` line per enclosure and a stats footer, or
/// `infeasible (pruned N subboxes)`. JSON: a single object
/// {status, complete, boxes: [{path, bindings}], stats}.
std::string render_report(const SolveReport& report, const Csp& csp, Format format,
                          bool show_aux = false);

/// Variables shown in reports: user variables, plus auxiliaries if asked.
std::vector<VarName> shown_vars(const Csp& csp, bool show_aux);

}  // namespace icsolve::cli

#endif  // ICSOLVE_TOOLS_CLI_HPP_
