#include "hivebr/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace hivebr {

namespace {

std::string pad_to(const std::string& s, std::size_t w) {
    return std::string(w - std::min(w, s.size()), ' ') + s;
}

// Centered triangular layout, widest row at the bottom, one row per line.
std::string triangle_ascii(const std::vector<std::vector<Int>>& rows_top_down) {
    std::size_t width = 1;
    for (const auto& row : rows_top_down)
        for (Int v : row) width = std::max(width, std::to_string(v).size());
    std::size_t max_len = 0;
    for (const auto& row : rows_top_down) max_len = std::max(max_len, row.size());
    std::ostringstream os;
    for (const auto& row : rows_top_down) {
        os << std::string((max_len - row.size()) * (width + 1) / 2, ' ');
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << ' ';
            os << pad_to(std::to_string(row[j]), width);
        }
        os << '\n';
    }
    return os.str();
}

std::string triangle_latex(const std::vector<std::vector<Int>>& rows_top_down) {
    std::size_t height = rows_top_down.size();
    std::ostringstream os;
    os << "\\begin{tikzpicture}\n";
    os << std::fixed << std::setprecision(3);
    for (std::size_t i = 0; i < height; ++i) {
        double y = 0.866 * static_cast<double>(height - 1 - i);
        double x0 = 0.5 * static_cast<double>(height - rows_top_down[i].size());
        for (std::size_t j = 0; j < rows_top_down[i].size(); ++j)
            os << "  \\node at (" << x0 + static_cast<double>(j) << "," << y << ") {$"
               << rows_top_down[i][j] << "$};\n";
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

} // namespace

std::string render(const SkewTableau& t, RenderFormat format) {
    if (format == RenderFormat::ascii) {
        std::size_t width = 1;
        for (const auto& row : t.rows())
            for (int v : row) width = std::max(width, std::to_string(v).size());
        std::ostringstream os;
        for (std::size_t i = 0; i < t.row_count(); ++i) {
            for (Int c = 0; c < t.outer().part(i); ++c) {
                if (c) os << ' ';
                if (c < t.inner().part(i))
                    os << pad_to(".", width);
                else
                    os << pad_to(std::to_string(
                                     t.rows()[i][static_cast<std::size_t>(c - t.inner().part(i))]),
                                 width);
            }
            os << '\n';
        }
        return os.str();
    }
    // LaTeX skew macro: inner cells rendered as 0 entries.
    std::ostringstream os;
    os << "\\Skew(";
    for (std::size_t i = 0; i < t.row_count(); ++i) {
        if (i) os << '|';
        os << "0: ";
        for (Int c = 0; c < t.outer().part(i); ++c) {
            if (c) os << ',';
            if (c < t.inner().part(i))
                os << '0';
            else
                os << t.rows()[i][static_cast<std::size_t>(c - t.inner().part(i))];
        }
    }
    os << ")";
    return os.str();
}

std::string render(const GTPattern& p, RenderFormat format) {
    return format == RenderFormat::ascii ? triangle_ascii(p.rows()) : triangle_latex(p.rows());
}

std::string render(const Hive& h, RenderFormat format) {
    // Apex on top: reverse the stored bottom-up rows.
    std::vector<std::vector<Int>> rows(h.rows().rbegin(), h.rows().rend());
    return format == RenderFormat::ascii ? triangle_ascii(rows) : triangle_latex(rows);
}

} // namespace hivebr
