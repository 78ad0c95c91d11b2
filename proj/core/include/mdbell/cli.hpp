#pragma once

#include "mdbell/bound_search.hpp"
#include "mdbell/inequalities.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mdbell {

enum class Command { Eval, Tables, Bounds, Quantum, Search, Complete };
enum class OutputFormat { Text, Json, Csv };

std::string to_string(Command command);
Command parse_command(std::string_view text);
std::string to_string(OutputFormat format);
OutputFormat parse_format(std::string_view text);

// Inclusive arithmetic progression lo, lo+step, ... capped at hi, written
// "lo:hi:step" with exact rationals.
struct GridSpec {
    Rational lo = 0;
    Rational hi = 0;
    Rational step = 1;

    std::vector<Rational> values() const;
    static GridSpec parse(std::string_view text);
};

// "M1=1/2" -> (M1, 1/2).
std::pair<MeasureId, Rational> parse_budget(std::string_view text);

struct RunConfig {
    Command command = Command::Eval;
    std::vector<std::string> inputs;  // model or strategy files
    std::string output_path;          // empty: write to the out stream
    OutputFormat format = OutputFormat::Text;
    NumericMode mode = NumericMode::Exact;
    std::optional<InequalityKind> inequality;
    std::optional<RelaxationScenario> scenario;
    std::vector<std::pair<MeasureId, Rational>> budgets;
    std::optional<GridSpec> grid; // budget grid (bounds) or parameter grid (tables)
    int l_cap = 2;
    bool tie_pair_blocks = true;
};

// Executes one command, writing the report to out (or config.output_path)
// and diagnostics to err.  Returns 0 when every check passes, 1 on failed
// checks or data errors, 2 on configuration errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace mdbell
