#include "johnsimplex/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "johnsimplex/io.hpp"

namespace johnsimplex {
namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

}  // namespace

template <Scalar S>
StyledPolygon styled_polygon(const Simplex<S>& simplex, PolygonStyle style) {
    if (simplex.dim() != 2) throw DimensionMismatch("only triangles can be drawn");
    StyledPolygon poly;
    for (const auto& v : simplex.vertices()) poly.vertices.push_back({to_double(v[0]), to_double(v[1])});
    poly.style = std::move(style);
    return poly;
}

template <Scalar S>
std::string render_scene_2d(const PointSet<S>& points, const std::vector<StyledPolygon>& polygons,
                            const SceneOptions& options) {
    if (points.dim() != 2) throw DimensionMismatch("scenes can only be rendered in the plane");

    double xmin = std::numeric_limits<double>::infinity(), ymin = xmin;
    double xmax = -xmin, ymax = -xmin;
    auto extend = [&](double x, double y) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    };
    for (const auto& p : points) extend(to_double(p[0]), to_double(p[1]));
    for (const auto& poly : polygons) {
        for (const auto& v : poly.vertices) extend(v[0], v[1]);
    }
    if (!(xmin <= xmax)) xmin = xmax = ymin = ymax = 0.0;

    double extent = std::max(xmax - xmin, ymax - ymin);
    if (extent == 0.0) extent = 1.0;
    const double pad = options.margin * extent;
    const double vx = xmin - pad, vw = (xmax - xmin) + 2 * pad;
    const double vh = (ymax - ymin) + 2 * pad;
    // y is flipped so the scene appears with the usual orientation
    const double vy = -(ymax + pad);
    const double w = vw > 0 ? vw : 1.0, h = vh > 0 ? vh : 1.0;
    const double px_height = options.width * h / w;
    const double unit = w / options.width;  // scene units per pixel

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(options.width) + "\" height=\"" +
           num(px_height) + "\" viewBox=\"" + num(vx) + " " + num(vy) + " " + num(w) + " " + num(h) + "\">\n";
    for (const auto& poly : polygons) {
        out += "  <polygon points=\"";
        for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
            if (i) out += ' ';
            out += num(poly.vertices[i][0]) + "," + num(-poly.vertices[i][1]);
        }
        out += "\" fill=\"" + escape(poly.style.fill) + "\" stroke=\"" + escape(poly.style.stroke) +
               "\" stroke-width=\"" + num(poly.style.stroke_width * unit) + "\">";
        if (!poly.style.label.empty()) out += "<title>" + escape(poly.style.label) + "</title>";
        out += "</polygon>\n";
    }
    for (const auto& p : points) {
        out += "  <circle cx=\"" + num(to_double(p[0])) + "\" cy=\"" + num(-to_double(p[1])) + "\" r=\"" +
               num(options.point_radius * unit) + "\" fill=\"" + escape(options.point_color) + "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

template <Scalar S>
void render_scene_2d(const PointSet<S>& points, const std::vector<StyledPolygon>& polygons,
                     const std::filesystem::path& path, const SceneOptions& options) {
    write_text_file(path, render_scene_2d(points, polygons, options));
}

template StyledPolygon styled_polygon(const Simplex<double>&, PolygonStyle);
template StyledPolygon styled_polygon(const Simplex<Rational>&, PolygonStyle);
template std::string render_scene_2d(const PointSet<double>&, const std::vector<StyledPolygon>&, const SceneOptions&);
template std::string render_scene_2d(const PointSet<Rational>&, const std::vector<StyledPolygon>&,
                                     const SceneOptions&);
template void render_scene_2d(const PointSet<double>&, const std::vector<StyledPolygon>&,
                              const std::filesystem::path&, const SceneOptions&);
template void render_scene_2d(const PointSet<Rational>&, const std::vector<StyledPolygon>&,
                              const std::filesystem::path&, const SceneOptions&);

}  // namespace johnsimplex
