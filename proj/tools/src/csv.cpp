#include "bandedge_cli/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace bandedge::cli {

std::string format_number(double value) {
    if (value == 0.0) {
        value = 0.0;  // flush -0.0
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i > 0) out += ',';
        out += table.header[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += ',';
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream stream(path, std::ios::binary);
    if (!stream) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    stream << content;
    if (!stream) {
        throw std::runtime_error("write failed: " + path);
    }
}

}  // namespace bandedge::cli
