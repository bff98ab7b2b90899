#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "schumult/tableaux.hpp"

namespace schumult {

namespace detail {

struct Bounds {
    int xmin = 0, xmax = 0, ymin = 0, ymax = 0;

    void add(LatticePoint p) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
};

inline Bounds family_bounds(const FamilySpec& spec, const PathFamily& family) {
    Bounds b;
    bool first = true;
    auto add = [&](LatticePoint p) {
        if (first) {
            b = Bounds{p.x, p.x, p.y, p.y};
            first = false;
        } else {
            b.add(p);
        }
    };
    for (LatticePoint p : spec.starts) add(p);
    for (LatticePoint p : spec.ends) add(p);
    for (const MonotonePath& path : family.paths)
        for (LatticePoint v : path_vertices(spec.system, path)) add(v);
    return b;
}

} // namespace detail

/// Character drawing of one family: lattice dots, path edges as -/| with +
/// at path vertices, 'o' at start points and '*' at end points, with y and
/// x rulers along the left and bottom edges. One unit is 4 columns by 2 rows.
inline std::string render_ascii(const FamilySpec& spec, const PathFamily& family) {
    detail::Bounds b = detail::family_bounds(spec, family);
    int ylabel = 0;
    for (int y = b.ymin; y <= b.ymax; ++y)
        ylabel = std::max(ylabel, static_cast<int>(std::to_string(y).size()));
    const int margin = ylabel + 1;
    const int width = margin + (b.xmax - b.xmin) * 4 + 1;
    const int rows = (b.ymax - b.ymin) * 2 + 1;
    std::vector<std::string> canvas(static_cast<std::size_t>(rows), std::string(static_cast<std::size_t>(width), ' '));

    auto col = [&](int x) { return margin + (x - b.xmin) * 4; };
    auto row = [&](int y) { return (b.ymax - y) * 2; };
    auto put = [&](int r, int c, char ch) { canvas[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = ch; };

    for (int y = b.ymin; y <= b.ymax; ++y) {
        std::string label = std::to_string(y);
        for (std::size_t k = 0; k < label.size(); ++k)
            put(row(y), static_cast<int>(ylabel - label.size() + k), label[k]);
        for (int x = b.xmin; x <= b.xmax; ++x) put(row(y), col(x), '.');
    }
    for (const MonotonePath& path : family.paths) {
        std::vector<LatticePoint> vs = path_vertices(spec.system, path);
        for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
            LatticePoint a = vs[k], c = vs[k + 1];
            if (a.y == c.y) {
                for (int t = 1; t <= 3; ++t) put(row(a.y), col(std::min(a.x, c.x)) + t, '-');
            } else {
                put(row(std::max(a.y, c.y)) + 1, col(a.x), '|');
            }
        }
        for (LatticePoint v : vs) put(row(v.y), col(v.x), '+');
    }
    for (LatticePoint e : spec.ends) put(row(e.y), col(e.x), '*');
    for (LatticePoint s : spec.starts) put(row(s.y), col(s.x), 'o');

    std::string out;
    for (const std::string& line : canvas) {
        std::size_t end = line.find_last_not_of(' ');
        out += line.substr(0, end == std::string::npos ? 0 : end + 1);
        out += '\n';
    }
    std::string ruler(static_cast<std::size_t>(width), ' ');
    for (int x = b.xmin; x <= b.xmax; ++x) {
        std::string label = std::to_string(x);
        for (std::size_t k = 0; k < label.size() && col(x) + static_cast<int>(k) < width; ++k)
            ruler[static_cast<std::size_t>(col(x)) + k] = label[k];
    }
    std::size_t end = ruler.find_last_not_of(' ');
    out += ruler.substr(0, end == std::string::npos ? 0 : end + 1);
    out += '\n';
    return out;
}

namespace detail {

inline const char* path_color(std::size_t index) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
    return palette[index % 8];
}

} // namespace detail

/// SVG drawing of one family, one lattice unit = 24 pixels. Lattice points
/// are small dots, paths heavy polylines, start points circles for the
/// R-model (filled dots otherwise), end points filled dots, with numeric
/// rulers along the left and bottom edges. Byte-deterministic.
inline std::string render_svg(const FamilySpec& spec, const PathFamily& family) {
    constexpr int unit = 24;
    constexpr int margin = 36;
    detail::Bounds b = detail::family_bounds(spec, family);
    const int width = (b.xmax - b.xmin) * unit + 2 * margin;
    const int height = (b.ymax - b.ymin) * unit + 2 * margin;
    auto px = [&](int x) { return margin + (x - b.xmin) * unit; };
    auto py = [&](int y) { return margin + (b.ymax - y) * unit; };

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
                      "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
                      std::to_string(width) + " " + std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axis rulers
    for (int x = b.xmin; x <= b.xmax; ++x)
        svg += "<text x=\"" + std::to_string(px(x)) + "\" y=\"" + std::to_string(height - margin / 3) +
               "\" font-size=\"10\" text-anchor=\"middle\" fill=\"#555555\">" + std::to_string(x) +
               "</text>\n";
    for (int y = b.ymin; y <= b.ymax; ++y)
        svg += "<text x=\"" + std::to_string(margin / 3) + "\" y=\"" + std::to_string(py(y) + 3) +
               "\" font-size=\"10\" text-anchor=\"middle\" fill=\"#555555\">" + std::to_string(y) +
               "</text>\n";
    if (b.xmin <= 0 && 0 <= b.xmax)
        svg += "<line x1=\"" + std::to_string(px(0)) + "\" y1=\"" + std::to_string(py(b.ymax)) +
               "\" x2=\"" + std::to_string(px(0)) + "\" y2=\"" + std::to_string(py(b.ymin)) +
               "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    if (b.ymin <= 0 && 0 <= b.ymax)
        svg += "<line x1=\"" + std::to_string(px(b.xmin)) + "\" y1=\"" + std::to_string(py(0)) +
               "\" x2=\"" + std::to_string(px(b.xmax)) + "\" y2=\"" + std::to_string(py(0)) +
               "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    for (int x = b.xmin; x <= b.xmax; ++x)
        for (int y = b.ymin; y <= b.ymax; ++y)
            svg += "<circle cx=\"" + std::to_string(px(x)) + "\" cy=\"" + std::to_string(py(y)) +
                   "\" r=\"2\" fill=\"#aaaaaa\"/>\n";
    for (std::size_t k = 0; k < family.paths.size(); ++k) {
        std::vector<LatticePoint> vs = path_vertices(spec.system, family.paths[k]);
        if (vs.size() < 2) continue;
        std::string points;
        for (LatticePoint v : vs) {
            if (!points.empty()) points += ' ';
            points += std::to_string(px(v.x)) + "," + std::to_string(py(v.y));
        }
        svg += "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"" +
               detail::path_color(k) + "\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n";
    }
    for (LatticePoint e : spec.ends)
        svg += "<circle cx=\"" + std::to_string(px(e.x)) + "\" cy=\"" + std::to_string(py(e.y)) +
               "\" r=\"4\" fill=\"#222222\"/>\n";
    for (LatticePoint s : spec.starts) {
        if (spec.model == FamilyModel::r)
            svg += "<circle cx=\"" + std::to_string(px(s.x)) + "\" cy=\"" + std::to_string(py(s.y)) +
                   "\" r=\"6\" fill=\"none\" stroke=\"#222222\" stroke-width=\"2\"/>\n";
        else
            svg += "<circle cx=\"" + std::to_string(px(s.x)) + "\" cy=\"" + std::to_string(py(s.y)) +
                   "\" r=\"4\" fill=\"#222222\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

/// Aligned text rendering of an array with the caps printed below a rule,
/// gaps left blank.
inline std::string render_array_ascii(const UnusualShape& shape, const UnusualArray& a) {
    const std::size_t ncols = shape.heights.size();
    if (ncols == 0) return "(empty array)\n";
    int maxh = 0;
    std::size_t cell = 1;
    for (std::size_t c = 0; c < ncols; ++c) {
        maxh = std::max(maxh, shape.heights[c]);
        cell = std::max(cell, std::to_string(shape.caps[c]).size());
        for (int v : a.columns[c]) cell = std::max(cell, std::to_string(v).size());
    }
    auto pad = [&](const std::string& s) {
        return std::string(cell - s.size(), ' ') + s;
    };
    std::string out;
    for (int t = 1; t <= maxh; ++t) {
        std::string line;
        for (std::size_t c = 0; c < ncols; ++c) {
            line += ' ';
            line += t <= shape.heights[c] ? pad(std::to_string(a.columns[c][static_cast<std::size_t>(t - 1)]))
                                          : std::string(cell, ' ');
        }
        std::size_t end = line.find_last_not_of(' ');
        out += line.substr(0, end == std::string::npos ? 0 : end + 1);
        out += '\n';
    }
    out += std::string(ncols * (cell + 1), '-') + "\n";
    std::string caps;
    for (std::size_t c = 0; c < ncols; ++c) {
        caps += ' ';
        caps += pad(std::to_string(shape.caps[c]));
    }
    out += caps + "\n";
    return out;
}

/// SVG rendering of an array as a grid of 24 px boxes; the appended caps
/// row is drawn dashed.
inline std::string render_array_svg(const UnusualShape& shape, const UnusualArray& a) {
    constexpr int unit = 24;
    const std::size_t ncols = shape.heights.size();
    int maxh = 0;
    for (int h : shape.heights) maxh = std::max(maxh, h);
    const int width = static_cast<int>(ncols) * unit + 2 * unit;
    const int height = (maxh + 1) * unit + 2 * unit;
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
                      "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
                      std::to_string(width) + " " + std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    auto box = [&](std::size_t c, int t, const std::string& text, bool dashed) {
        int x = unit + static_cast<int>(c) * unit;
        int y = unit + (t - 1) * unit;
        svg += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" +
               std::to_string(unit) + "\" height=\"" + std::to_string(unit) +
               "\" fill=\"none\" stroke=\"#222222\"" +
               (dashed ? " stroke-dasharray=\"4,3\"" : "") + "/>\n";
        svg += "<text x=\"" + std::to_string(x + unit / 2) + "\" y=\"" + std::to_string(y + unit / 2 + 4) +
               "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#222222\">" + text + "</text>\n";
    };
    for (std::size_t c = 0; c < ncols; ++c) {
        for (int t = 1; t <= shape.heights[c]; ++t)
            box(c, t, std::to_string(a.columns[c][static_cast<std::size_t>(t - 1)]), false);
        box(c, shape.heights[c] + 1, std::to_string(shape.caps[c]), true);
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace schumult
