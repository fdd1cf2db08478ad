#include "mlab/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

namespace mlab {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, sep)) out.push_back(field);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

std::string fmt(double v, int digits = 2) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string fmt_sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Map a value in [0,1] onto a blue-to-red ramp.
std::string ramp_color(double x) {
    x = std::clamp(x, 0.0, 1.0);
    const int r = static_cast<int>(std::lround(40 + 215 * x));
    const int g = static_cast<int>(std::lround(40 + 40 * (1.0 - std::abs(2 * x - 1))));
    const int b = static_cast<int>(std::lround(40 + 215 * (1.0 - x)));
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
}

std::string class_color(const std::string& cls) {
    if (cls == "stable") return "#c62828";
    if (cls == "unstable") return "#fdd835";
    if (cls == "forbidden") return "#ffffff";
    if (cls == "unbounded") return "#90a4ae";
    if (cls == "1") return "#2e7d32";
    if (cls == "0") return "#90a4ae";
    throw ParseError("render: unknown class value '" + cls + "'");
}

struct Row {
    double c1, c2;
    std::string label;  // class column or bounded flag
    double scalar = 0.0;
    bool has_scalar = false;
};

}  // namespace

std::string render_heatmap(const std::string& csv_text, const std::string& scalar_column) {
    std::istringstream in(csv_text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("render: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string> header = split(line, ',');
    if (header.size() < 3) throw ParseError("render: header needs at least 3 columns");

    int class_col = -1, scalar_col = -1;
    for (size_t i = 2; i < header.size(); ++i) {
        if (header[i] == "class" || header[i] == "bounded") class_col = static_cast<int>(i);
        if (!scalar_column.empty() && header[i] == scalar_column)
            scalar_col = static_cast<int>(i);
    }
    if (!scalar_column.empty()) {
        if (scalar_col < 0)
            throw ParseError("render: no column named '" + scalar_column + "'");
        class_col = -1;
    } else if (class_col < 0) {
        scalar_col = 2;
    }

    std::vector<Row> rows;
    std::vector<double> axis1, axis2;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> f = split(line, ',');
        if (f.size() != header.size())
            throw ParseError("render: line " + std::to_string(lineno) + ": field count mismatch");
        Row r;
        try {
            r.c1 = std::stod(f[0]);
            r.c2 = std::stod(f[1]);
            if (class_col >= 0) {
                r.label = f[class_col];
            } else if (!f[scalar_col].empty()) {
                r.scalar = std::stod(f[scalar_col]);
                r.has_scalar = true;
            }
        } catch (const std::exception&) {
            throw ParseError("render: line " + std::to_string(lineno) + ": bad number");
        }
        axis1.push_back(r.c1);
        axis2.push_back(r.c2);
        rows.push_back(std::move(r));
    }
    if (rows.empty()) throw ParseError("render: no data rows");

    const auto uniq = [](std::vector<double>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    uniq(axis1);
    uniq(axis2);
    const int n1 = static_cast<int>(axis1.size());
    const int n2 = static_cast<int>(axis2.size());
    const auto index_of = [](const std::vector<double>& v, double x) {
        return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
    };

    constexpr double plot = 600.0, margin = 40.0, legend_h = 60.0;
    const double cw = plot / n1, ch = plot / n2;

    double lo = 0.0, hi = 1.0;
    if (class_col < 0) {
        lo = 1e300;
        hi = -1e300;
        for (const Row& r : rows)
            if (r.has_scalar) {
                lo = std::min(lo, r.scalar);
                hi = std::max(hi, r.scalar);
            }
        if (lo > hi) throw ParseError("render: scalar column has no values");
        if (lo == hi) hi = lo + 1.0;
    }

    std::ostringstream svg;
    const double width = plot + 2 * margin;
    const double height = plot + 2 * margin + legend_h;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << fmt(width) << "\" height=\"" << fmt(height) << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\" fill=\"#fafafa\"/>\n";

    for (const Row& r : rows) {
        const int i = index_of(axis1, r.c1);
        const int j = index_of(axis2, r.c2);
        const double x = margin + i * cw;
        const double y = margin + plot - (j + 1) * ch;  // axis2 increases upward
        std::string color;
        if (class_col >= 0)
            color = class_color(r.label);
        else if (r.has_scalar)
            color = ramp_color((r.scalar - lo) / (hi - lo));
        else
            color = "#ffffff";
        svg << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\""
            << fmt(cw) << "\" height=\"" << fmt(ch) << "\" fill=\"" << color << "\"/>\n";
    }

    // legend
    const double ly = margin + plot + 25.0;
    if (class_col >= 0) {
        const bool bounded_map = header[class_col] == "bounded";
        const std::vector<std::pair<std::string, std::string>> swatches =
            bounded_map
                ? std::vector<std::pair<std::string, std::string>>{
                      {"bounded", class_color("1")}, {"unbounded", class_color("0")}}
                : std::vector<std::pair<std::string, std::string>>{
                      {"stable", class_color("stable")},
                      {"unstable", class_color("unstable")},
                      {"forbidden", class_color("forbidden")},
                      {"unbounded", class_color("unbounded")}};
        double x = margin;
        for (const auto& [label, color] : swatches) {
            svg << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(ly) << "\" width=\"16.00\""
                << " height=\"16.00\" fill=\"" << color
                << "\" stroke=\"#000000\" stroke-width=\"0.50\"/>\n";
            svg << "<text x=\"" << fmt(x + 22.0) << "\" y=\"" << fmt(ly + 13.0)
                << "\" font-family=\"monospace\" font-size=\"13\">" << label << "</text>\n";
            x += 140.0;
        }
    } else {
        constexpr int steps = 32;
        const double bar_w = 300.0 / steps;
        for (int i = 0; i < steps; ++i)
            svg << "<rect x=\"" << fmt(margin + i * bar_w) << "\" y=\"" << fmt(ly)
                << "\" width=\"" << fmt(bar_w + 0.5) << "\" height=\"16.00\" fill=\""
                << ramp_color((i + 0.5) / steps) << "\"/>\n";
        svg << "<text x=\"" << fmt(margin) << "\" y=\"" << fmt(ly + 32.0)
            << "\" font-family=\"monospace\" font-size=\"13\">min=" << fmt_sci(lo)
            << "</text>\n";
        svg << "<text x=\"" << fmt(margin + 180.0) << "\" y=\"" << fmt(ly + 32.0)
            << "\" font-family=\"monospace\" font-size=\"13\">max=" << fmt_sci(hi)
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace mlab
