#include "tsmark/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "tsmark/errors.hpp"

namespace tsmark {

namespace {

constexpr double kCanvas = 560.0;
constexpr double kMargin = 60.0;
constexpr double kScale = kCanvas - 2.0 * kMargin;

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string escape_text(const std::string& text) {
    std::string out;
    for (char ch : text) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += ch;
        }
    }
    return out;
}

// Simplex coordinates (y1, y2) to pixel space, y up.
double map_x(double x) { return kMargin + x * kScale; }
double map_y(double y) { return kCanvas - kMargin - y * kScale; }

void check_dimension(int dimension) {
    if (dimension != 3) {
        throw DataError("plotting supports N = 3 only, got N = " + std::to_string(dimension));
    }
}

void open_svg(std::ostringstream& out, const AnalysisConfig& config) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\""
        << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n";
    out << "<!--\n" << config_to_text(config) << "-->\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void draw_line(std::ostringstream& out, double x1, double y1, double x2, double y2,
               const std::string& style) {
    out << "<line x1=\"" << px(map_x(x1)) << "\" y1=\"" << px(map_y(y1)) << "\" x2=\""
        << px(map_x(x2)) << "\" y2=\"" << px(map_y(y2)) << "\" " << style << "/>\n";
}

void draw_text(std::ostringstream& out, double x, double y, double dx, double dy,
               const std::string& text, const std::string& style = "font-size=\"11\"") {
    out << "<text x=\"" << px(map_x(x) + dx) << "\" y=\"" << px(map_y(y) + dy) << "\" " << style
        << " font-family=\"sans-serif\">" << escape_text(text) << "</text>\n";
}

void draw_circle(std::ostringstream& out, double x, double y, double r,
                 const std::string& style) {
    out << "<circle cx=\"" << px(map_x(x)) << "\" cy=\"" << px(map_y(y)) << "\" r=\"" << r
        << "\" " << style << "/>\n";
}

// Triangle V1=(1,0), V2=(0,1), V3=(0,0); centroid; the region boundaries run
// from the centroid to the three edge midpoints (the loci where the two
// largest barycentric coordinates tie).
void draw_frame(std::ostringstream& out, const std::vector<std::string>& vertex_labels) {
    const std::string frame = "stroke=\"black\" stroke-width=\"1.5\" fill=\"none\"";
    out << "<polygon points=\"" << px(map_x(1.0)) << "," << px(map_y(0.0)) << " "
        << px(map_x(0.0)) << "," << px(map_y(1.0)) << " " << px(map_x(0.0)) << ","
        << px(map_y(0.0)) << "\" " << frame << "/>\n";

    const double g = 1.0 / 3.0;
    const std::string dashed = "stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"5,4\"";
    draw_line(out, g, g, 0.5, 0.5, dashed);
    draw_line(out, g, g, 0.0, 0.5, dashed);
    draw_line(out, g, g, 0.5, 0.0, dashed);

    draw_circle(out, g, g, 3.0, "fill=\"black\"");
    draw_text(out, g, g, 6.0, -6.0, "G", "font-size=\"12\" font-style=\"italic\"");

    const std::string v1 = vertex_labels.size() > 0 ? vertex_labels[0] : "1";
    const std::string v2 = vertex_labels.size() > 1 ? vertex_labels[1] : "2";
    const std::string v3 = vertex_labels.size() > 2 ? vertex_labels[2] : "3";
    draw_text(out, 1.0, 0.0, 8.0, 4.0, v1, "font-size=\"12\" font-weight=\"bold\"");
    draw_text(out, 0.0, 1.0, -4.0, -8.0, v2, "font-size=\"12\" font-weight=\"bold\"");
    draw_text(out, 0.0, 0.0, -16.0, 14.0, v3, "font-size=\"12\" font-weight=\"bold\"");
}

}  // namespace

std::string simplex_scatter_svg(const std::vector<InfluenceMapEntry>& entries,
                                const std::vector<std::string>& vertex_labels,
                                const AnalysisConfig& config) {
    for (const InfluenceMapEntry& entry : entries) {
        check_dimension(entry.point.dimension);
    }
    std::ostringstream out;
    open_svg(out, config);
    draw_frame(out, vertex_labels);
    for (const InfluenceMapEntry& entry : entries) {
        const double x = entry.point.coords[0];
        const double y = entry.point.coords[1];
        draw_circle(out, x, y, 3.0, "fill=\"steelblue\" stroke=\"none\"");
        draw_text(out, x, y, 5.0, -5.0, entry.entity_id, "font-size=\"9\" fill=\"dimgray\"");
    }
    out << "</svg>\n";
    return out.str();
}

std::string walk_svg(const std::string& entity_id, const EntropyWalk& walk,
                     const Trend& trend, const std::optional<SimplexPoint>& holdout,
                     const std::optional<AttributionVerdict>& verdict,
                     const std::vector<std::string>& vertex_labels,
                     const AnalysisConfig& config) {
    for (const SimplexPoint& p : walk.points) {
        check_dimension(p.dimension);
    }
    if (holdout) {
        check_dimension(holdout->dimension);
    }

    std::ostringstream out;
    open_svg(out, config);
    draw_frame(out, vertex_labels);
    draw_text(out, 0.0, 1.0, 40.0, -8.0, "walk: " + entity_id,
              "font-size=\"13\" font-weight=\"bold\"");

    out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
    for (const SimplexPoint& p : walk.points) {
        out << px(map_x(p.coords[0])) << "," << px(map_y(p.coords[1])) << " ";
    }
    out << "\"/>\n";
    for (std::size_t i = 0; i < walk.points.size(); ++i) {
        const SimplexPoint& p = walk.points[i];
        draw_circle(out, p.coords[0], p.coords[1], 3.0, "fill=\"steelblue\"");
        draw_text(out, p.coords[0], p.coords[1], 5.0, 10.0, std::to_string(i + 1),
                  "font-size=\"9\" fill=\"steelblue\"");
    }

    // Trend arrow from the walk centroid, scaled to the walk's own spread.
    double spread = 0.0;
    for (const SimplexPoint& p : walk.points) {
        double along = 0.0;
        for (std::size_t i = 0; i < 2; ++i) {
            along += (p.coords[i] - trend.line_point[i]) * trend.direction[i];
        }
        spread = std::max(spread, std::abs(along));
    }
    const double arrow_len = std::max(0.05, 1.25 * spread);
    const double x0 = trend.line_point[0];
    const double y0 = trend.line_point[1];
    const double x1 = x0 + arrow_len * trend.direction[0];
    const double y1 = y0 + arrow_len * trend.direction[1];
    const std::string arrow_style = "stroke=\"firebrick\" stroke-width=\"2\"";
    draw_line(out, x0, y0, x1, y1, arrow_style);
    const double head = 0.02;
    const double hx = trend.direction[0];
    const double hy = trend.direction[1];
    draw_line(out, x1, y1, x1 - head * (hx * 0.866 - hy * 0.5),
              y1 - head * (hy * 0.866 + hx * 0.5), arrow_style);
    draw_line(out, x1, y1, x1 - head * (hx * 0.866 + hy * 0.5),
              y1 - head * (hy * 0.866 - hx * 0.5), arrow_style);

    if (holdout) {
        const double qx = holdout->coords[0];
        const double qy = holdout->coords[1];
        out << "<rect x=\"" << px(map_x(qx) - 4.0) << "\" y=\"" << px(map_y(qy) - 4.0)
            << "\" width=\"8\" height=\"8\" fill=\"darkorange\"/>\n";
        std::string label = "Q";
        if (verdict) {
            label += " (";
            label += to_string(verdict->status);
            label += ")";
        }
        draw_text(out, qx, qy, 7.0, -7.0, label, "font-size=\"10\" fill=\"darkorange\"");
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace tsmark
