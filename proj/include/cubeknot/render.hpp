// SVG rendering of grid diagrams and cube projections, under-strand broken
// at every crossing.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubeknot/cube_diagram.hpp"
#include "cubeknot/grid_diagram.hpp"

namespace cubeknot {

struct SceneSegment {
    // endpoints in cell units, centers at +0.5
    double u1, v1, u2, v2;
    bool over;                       // column (second-axis) segments are over
    std::vector<double> gaps;        // crossing positions along the segment
};

struct SceneGlyph {
    double u, v;
    std::string label;
};

struct RenderScene {
    int n = 0;
    std::vector<SceneSegment> segments;
    std::vector<SceneGlyph> glyphs;
    long long crossing_count() const;
};

RenderScene build_scene(const GridDiagram& g);
RenderScene build_scene(const CubeDiagram& d, Plane plane);

std::string render_svg(const RenderScene& scene);
std::string render_svg(const GridDiagram& g);
std::string render_svg(const CubeDiagram& d, Plane plane);

}  // namespace cubeknot
