#pragma once

#include <map>
#include <optional>
#include <string>

#include "gencliff/clifford.hpp"

namespace gencliff {

/// Parsed key = value input file. Recognized keys: ring, vars, m, d, mode,
/// f[l] for the forms, psi[i][j] for bilinear-form entries. Blank lines and
/// lines starting with '#' are ignored.
struct InputFile {
    RingHandle ring;
    Alphabet xvars;
    int m = 1;
    int d = 1;
    XMode mode = XMode::Ordered;
    std::map<int, std::string> forms;                     // l -> polynomial text
    std::map<std::pair<int, int>, std::string> bilinear;  // (i, j) 1-based -> scalar text
};

InputFile parse_input_text(const std::string& text);
InputFile read_input_file(const std::string& path);

CliffordInput to_clifford_input(const InputFile& file, std::optional<XMode> mode_override = std::nullopt);
std::vector<std::vector<Scalar>> to_bilinear_matrix(const InputFile& file);

std::string format_presentation(const Presentation& p);
std::string format_comparison(const ComparisonReport& report);
std::string format_dimensions(const DimensionCounts& counts);

}  // namespace gencliff
