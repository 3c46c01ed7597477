#include "svt/csv.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "svt/errors.hpp"

namespace svt {
namespace {

bool parse_number(const std::string& text, double& out) {
    const char* begin = text.c_str();
    char* end = nullptr;
    errno = 0;
    const double value = std::strtod(begin, &end);
    if (end == begin || errno == ERANGE) return false;
    // Trailing whitespace only; anything else (e.g. "1,234" or "12 cats") fails.
    for (const char* p = end; *p != '\0'; ++p) {
        if (!std::isspace(static_cast<unsigned char>(*p))) return false;
    }
    out = value;
    return true;
}

std::string trim(const std::string& line) {
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = line.find_last_not_of(" \t\r\n");
    return line.substr(first, last - first + 1);
}

} // namespace

std::vector<double> read_value_lines(std::istream& in) {
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    std::size_t content_lines = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        ++content_lines;

        double value = 0.0;
        if (parse_number(body, value)) {
            values.push_back(value);
            continue;
        }
        if (content_lines == 1) {
            // Single optional header: the first content line failed numeric parse.
            continue;
        }
        throw ParseError("cannot parse '" + body + "' as a number", line_no);
    }
    return values;
}

Sample load_sample_file(const std::string& path, bool allow_negative, std::string label) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    if (label.empty()) label = std::filesystem::path(path).stem().string();
    std::vector<double> values;
    try {
        values = read_value_lines(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.line());
    }
    if (values.empty()) throw EmptyInputError(path + ": no values found");
    return Sample(std::move(values), std::move(label), allow_negative);
}

} // namespace svt
