#pragma once

#include <istream>
#include <string>
#include <vector>

#include "svt/sample.hpp"

namespace svt {

// Reads one numeric value per line. Lines beginning with '#' and blank lines
// are ignored. A single leading header line is tolerated: if the first
// non-ignored line fails to parse as a number it is skipped. Decimal point
// '.', no thousands separators. Throws ParseError with a one-based line
// number on any other malformed line.
std::vector<double> read_value_lines(std::istream& in);

// Loads a whole file through read_value_lines and validates it as a Sample.
// The label defaults to the file's stem.
Sample load_sample_file(const std::string& path, bool allow_negative = false,
                        std::string label = {});

} // namespace svt
