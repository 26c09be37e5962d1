#include "bandedge_cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace bandedge::cli {
namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 780.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 460.0;

const std::array<const char*, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
};

}  // namespace

std::string to_svg(const Table& table, const std::string& title) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
        << kWidth << ' ' << kHeight << "\">\n";
    out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << kWidth / 2
        << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << title
        << "</text>\n";

    if (table.rows.empty() || table.header.size() < 2) {
        out << "</svg>\n";
        return out.str();
    }

    double x_min = table.rows.front()[0];
    double x_max = x_min;
    double y_min = 0.0;
    double y_max = 0.0;
    bool have_y = false;
    for (const auto& row : table.rows) {
        x_min = std::min(x_min, row[0]);
        x_max = std::max(x_max, row[0]);
        for (std::size_t c = 1; c < row.size(); ++c) {
            if (!std::isfinite(row[c])) continue;
            if (!have_y) {
                y_min = y_max = row[c];
                have_y = true;
            } else {
                y_min = std::min(y_min, row[c]);
                y_max = std::max(y_max, row[c]);
            }
        }
    }
    if (x_max == x_min) x_max = x_min + 1.0;
    if (y_max == y_min) y_max = y_min + 1.0;

    const auto sx = [&](double x) {
        return kLeft + (x - x_min) / (x_max - x_min) * (kRight - kLeft);
    };
    const auto sy = [&](double y) {
        return kBottom - (y - y_min) / (y_max - y_min) * (kBottom - kTop);
    };

    out << "<line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\""
        << kRight << "\" y2=\"" << kBottom
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\""
        << kLeft << "\" y2=\"" << kTop
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << kLeft << "\" y=\"" << kBottom + 18
        << "\" font-size=\"12\">" << format_number(x_min) << "</text>\n";
    out << "<text x=\"" << kRight << "\" y=\"" << kBottom + 18
        << "\" text-anchor=\"end\" font-size=\"12\">" << format_number(x_max)
        << "</text>\n";
    out << "<text x=\"" << kLeft - 6 << "\" y=\"" << kBottom
        << "\" text-anchor=\"end\" font-size=\"12\">" << format_number(y_min)
        << "</text>\n";
    out << "<text x=\"" << kLeft - 6 << "\" y=\"" << kTop + 4
        << "\" text-anchor=\"end\" font-size=\"12\">" << format_number(y_max)
        << "</text>\n";
    out << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kBottom + 34
        << "\" text-anchor=\"middle\" font-size=\"12\">" << table.header[0]
        << "</text>\n";

    for (std::size_t c = 1; c < table.header.size(); ++c) {
        const char* color = kPalette[(c - 1) % kPalette.size()];
        out << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& row : table.rows) {
            if (c >= row.size() || !std::isfinite(row[c])) continue;
            out << sx(row[0]) << ',' << sy(row[c]) << ' ';
        }
        out << "\"/>\n";
        const double ly = kTop + 16.0 * static_cast<double>(c - 1);
        out << "<line x1=\"" << kRight - 150 << "\" y1=\"" << ly << "\" x2=\""
            << kRight - 130 << "\" y2=\"" << ly << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << kRight - 124 << "\" y=\"" << ly + 4
            << "\" font-size=\"12\">" << table.header[c] << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace bandedge::cli
