#pragma once

// Minimal standalone SVG output for planar scenes.

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "johnsimplex/geometry.hpp"

namespace johnsimplex {

struct PolygonStyle {
    std::string stroke = "#d62728";
    std::string fill = "none";
    double stroke_width = 1.5;  // in pixels, independent of the viewBox scale
    std::string label;          // emitted as <title>
};

struct StyledPolygon {
    std::vector<std::array<double, 2>> vertices;
    PolygonStyle style;
};

template <Scalar S>
StyledPolygon styled_polygon(const Simplex<S>& simplex, PolygonStyle style);

struct SceneOptions {
    double width = 600;          // pixel width; height follows the aspect ratio
    double margin = 0.05;        // fraction of the larger extent added on each side
    double point_radius = 3.0;   // pixels
    std::string point_color = "#1f1f1f";
};

/// One <circle> per point and one <polygon> per entry of `polygons`. The
/// viewBox covers every point and vertex. Throws DimensionMismatch unless
/// the point set is planar.
template <Scalar S>
std::string render_scene_2d(const PointSet<S>& points, const std::vector<StyledPolygon>& polygons,
                            const SceneOptions& options = {});

template <Scalar S>
void render_scene_2d(const PointSet<S>& points, const std::vector<StyledPolygon>& polygons,
                     const std::filesystem::path& path, const SceneOptions& options = {});

extern template StyledPolygon styled_polygon(const Simplex<double>&, PolygonStyle);
extern template StyledPolygon styled_polygon(const Simplex<Rational>&, PolygonStyle);
extern template std::string render_scene_2d(const PointSet<double>&, const std::vector<StyledPolygon>&,
                                            const SceneOptions&);
extern template std::string render_scene_2d(const PointSet<Rational>&, const std::vector<StyledPolygon>&,
                                            const SceneOptions&);
extern template void render_scene_2d(const PointSet<double>&, const std::vector<StyledPolygon>&,
                                     const std::filesystem::path&, const SceneOptions&);
extern template void render_scene_2d(const PointSet<Rational>&, const std::vector<StyledPolygon>&,
                                     const std::filesystem::path&, const SceneOptions&);

}  // namespace johnsimplex
