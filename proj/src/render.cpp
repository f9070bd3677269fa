#include "cubeknot/render.hpp"

#include <algorithm>
#include <sstream>

namespace cubeknot {

long long RenderScene::crossing_count() const {
    long long total = 0;
    for (const auto& s : segments) total += (long long)s.gaps.size();
    return total;
}

namespace {

RenderScene scene_from_grid(const GridDiagram& g, const char* x_label, const char* o_label) {
    require_valid(g);
    RenderScene scene;
    scene.n = g.n;
    auto crossings = grid_crossings(g);

    for (int r = 0; r < g.n; ++r) {
        SceneSegment seg;
        seg.u1 = g.opos[r] + 0.5;
        seg.u2 = g.xpos[r] + 0.5;
        seg.v1 = seg.v2 = r + 0.5;
        seg.over = false;
        for (const auto& cr : crossings)
            if (cr.row == r) seg.gaps.push_back(cr.col + 0.5);
        std::sort(seg.gaps.begin(), seg.gaps.end());
        scene.segments.push_back(std::move(seg));
    }
    for (int c = 0; c < g.n; ++c) {
        int rx = -1, ro = -1;
        for (int r = 0; r < g.n; ++r) {
            if (g.xpos[r] == c) rx = r;
            if (g.opos[r] == c) ro = r;
        }
        SceneSegment seg;
        seg.u1 = seg.u2 = c + 0.5;
        seg.v1 = rx + 0.5;
        seg.v2 = ro + 0.5;
        seg.over = true;
        scene.segments.push_back(std::move(seg));
    }
    for (int r = 0; r < g.n; ++r) {
        scene.glyphs.push_back({g.xpos[r] + 0.5, r + 0.5, x_label});
        scene.glyphs.push_back({g.opos[r] + 0.5, r + 0.5, o_label});
    }
    return scene;
}

}  // namespace

RenderScene build_scene(const GridDiagram& g) { return scene_from_grid(g, "X", "O"); }

RenderScene build_scene(const CubeDiagram& d, Plane plane) {
    GridDiagram g = project_cube(d, plane);
    switch (plane) {
        case Plane::xy: return scene_from_grid(g, "Z", "XY");
        case Plane::yz: return scene_from_grid(g, "X", "YZ");
        case Plane::zx: return scene_from_grid(g, "Y", "ZX");
    }
    return scene_from_grid(g, "X", "O");
}

std::string render_svg(const RenderScene& scene) {
    const int cell = 32;
    const int margin = 16;
    const int size = scene.n * cell + 2 * margin;
    const double gap_half = 0.22;  // half-width of the break around a crossing

    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(1);
    auto px = [&](double u) { return margin + u * cell; };
    auto py = [&](double v) { return margin + (scene.n - v) * cell; };  // rows grow upward

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    out << "<g stroke=\"#ccc\" stroke-width=\"1\">\n";
    for (int i = 0; i <= scene.n; ++i) {
        out << "<line x1=\"" << px(i) << "\" y1=\"" << py(0) << "\" x2=\"" << px(i) << "\" y2=\""
            << py(scene.n) << "\"/>\n";
        out << "<line x1=\"" << px(0) << "\" y1=\"" << py(i) << "\" x2=\"" << px(scene.n)
            << "\" y2=\"" << py(i) << "\"/>\n";
    }
    out << "</g>\n<g stroke=\"#000\" stroke-width=\"2\">\n";
    for (const auto& s : scene.segments) {
        // split the under strand at its crossings
        std::vector<std::pair<double, double>> pieces;
        if (s.u1 != s.u2) {
            double lo = std::min(s.u1, s.u2), hi = std::max(s.u1, s.u2);
            double at = lo;
            for (double gpos : s.gaps) {
                pieces.push_back({at, gpos - gap_half});
                at = gpos + gap_half;
            }
            pieces.push_back({at, hi});
            for (auto [a, b] : pieces)
                out << "<line class=\"" << (s.over ? "seg-over" : "seg-under") << "\" x1=\""
                    << px(a) << "\" y1=\"" << py(s.v1) << "\" x2=\"" << px(b) << "\" y2=\""
                    << py(s.v1) << "\"/>\n";
        } else {
            double lo = std::min(s.v1, s.v2), hi = std::max(s.v1, s.v2);
            double at = lo;
            for (double gpos : s.gaps) {
                pieces.push_back({at, gpos - gap_half});
                at = gpos + gap_half;
            }
            pieces.push_back({at, hi});
            for (auto [a, b] : pieces)
                out << "<line class=\"" << (s.over ? "seg-over" : "seg-under") << "\" x1=\""
                    << px(s.u1) << "\" y1=\"" << py(a) << "\" x2=\"" << px(s.u1) << "\" y2=\""
                    << py(b) << "\"/>\n";
        }
    }
    out << "</g>\n<g font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">\n";
    for (const auto& g : scene.glyphs)
        out << "<text x=\"" << px(g.u) << "\" y=\"" << py(g.v) - 6 << "\">" << g.label
            << "</text>\n";
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string render_svg(const GridDiagram& g) { return render_svg(build_scene(g)); }

std::string render_svg(const CubeDiagram& d, Plane plane) {
    return render_svg(build_scene(d, plane));
}

}  // namespace cubeknot
