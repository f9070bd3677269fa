#include "cubeknot/lattice.hpp"

namespace cubeknot {

std::string to_string(HalfGrading g) {
    if (g.twice % 2 == 0) return std::to_string(g.twice / 2);
    return std::to_string(g.twice) + "/2";
}

long long i_pair(const std::vector<Point3>& a, const std::vector<Point3>& b, Plane p) {
    auto [c1, c2] = plane_coords(p);
    long long count = 0;
    for (const auto& pa : a)
        for (const auto& pb : b)
            if (pa[c1] < pb[c1] && pa[c2] < pb[c2]) ++count;
    return count;
}

long long i_pair2(const std::vector<Point2>& a, const std::vector<Point2>& b) {
    long long count = 0;
    for (const auto& pa : a)
        for (const auto& pb : b)
            if (pa[0] < pb[0] && pa[1] < pb[1]) ++count;
    return count;
}

Rat j_pair(const FormalPointSum& a, const FormalPointSum& b, Plane p) {
    auto [c1, c2] = plane_coords(p);
    Rat total;
    for (const auto& [pa, ca] : a.terms)
        for (const auto& [pb, cb] : b.terms) {
            int forward = (pa[c1] < pb[c1] && pa[c2] < pb[c2]) ? 1 : 0;
            int backward = (pb[c1] < pa[c1] && pb[c2] < pa[c2]) ? 1 : 0;
            if (forward + backward)
                total = total + ca * cb * Rat(forward + backward, 2);
        }
    return total;
}

Rat j_pair2(const std::vector<std::pair<Point2, Rat>>& a,
            const std::vector<std::pair<Point2, Rat>>& b) {
    Rat total;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) {
            int forward = (pa[0] < pb[0] && pa[1] < pb[1]) ? 1 : 0;
            int backward = (pb[0] < pa[0] && pb[1] < pa[1]) ? 1 : 0;
            if (forward + backward)
                total = total + ca * cb * Rat(forward + backward, 2);
        }
    return total;
}

Point2 project_point(const Point3& pt, Plane p) {
    auto [c1, c2] = plane_coords(p);
    return {pt[c1], pt[c2]};
}

std::vector<Point2> project_points(const std::vector<Point3>& pts, Plane p) {
    std::vector<Point2> out;
    out.reserve(pts.size());
    for (const auto& pt : pts) out.push_back(project_point(pt, p));
    return out;
}

}  // namespace cubeknot
