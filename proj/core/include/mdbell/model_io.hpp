#pragma once

#include "mdbell/scenario.hpp"

#include <filesystem>
#include <string>

namespace mdbell {

// Parse failure with position; what() reads "source:line:column: message".
class ParseError : public Error {
public:
    ParseError(const std::string& source, int line, int column, const std::string& message);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_ = 0;
    int column_ = 0;
};

// Plain-text model format, one model per file:
//
//   # comment lines and blank lines are ignored
//   label: model IV
//   pairing: FullyLocal
//   lambda A0 A1 B0 B1 C0 C1 | x'yz xy'z xyz' x'y'z'
//   1 +1 +1 +1 +1 +1 +1 | 1 7/8 1 7/8
//   2 -1 +1 +1 -1 +1 +1 | 0 1/8 0 1/8
//
// The label line is optional.  Response columns follow the pairing's
// layout; context columns use primed setting notation and hold exact
// rationals.  A file without the "|" section carries a bare strategy.
// Writing a model and reading it back reproduces the bytes exactly.
std::string write_model(const Model& model);
Model read_model(const std::string& text, const std::string& source_name = "<string>");
Model load_model(const std::filesystem::path& path);
void save_model(const Model& model, const std::filesystem::path& path);

std::string write_strategy(const ResponseTable& strategy);
ResponseTable read_strategy(const std::string& text,
                            const std::string& source_name = "<string>");
ResponseTable load_strategy(const std::filesystem::path& path);

} // namespace mdbell
