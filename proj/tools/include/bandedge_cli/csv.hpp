#pragma once

#include <string>
#include <vector>

namespace bandedge::cli {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

// One value, 12 significant digits, locale-independent.
std::string format_number(double value);

// UTF-8, comma-separated, one header row, '\n' line endings. Stable down
// to the byte for identical input.
std::string to_csv(const Table& table);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace bandedge::cli
