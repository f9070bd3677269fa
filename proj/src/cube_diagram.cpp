#include "cubeknot/cube_diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace cubeknot {

namespace {

int coord(const Cell3& c, Axis a) {
    switch (a) { case Axis::x: return c.x; case Axis::y: return c.y; case Axis::z: return c.z; }
    return 0;
}

int& coord_ref(Cell3& c, Axis a) {
    switch (a) { case Axis::x: return c.x; case Axis::y: return c.y; default: return c.z; }
}

std::string cell_str(const Cell3& c) {
    std::ostringstream out;
    out << "(" << c.x << "," << c.y << "," << c.z << ")";
    return out.str();
}

// Index of the unique family member in slab (axis == k), or -1.
int find_in_slab(const std::vector<Cell3>& fam, Axis a, int k) {
    int found = -1;
    for (int i = 0; i < (int)fam.size(); ++i)
        if (coord(fam[i], a) == k) {
            if (found >= 0) return -2;
            found = i;
        }
    return found;
}

}  // namespace

bool CubeReport::only_crossing_violations() const {
    for (const auto& v : violations)
        if (!v.crossing_condition) return false;
    return !violations.empty();
}

std::string CubeReport::text() const {
    std::ostringstream out;
    for (const auto& v : violations) out << v.message << "\n";
    return out.str();
}

CubeReport validate_cube(const CubeDiagram& d) {
    CubeReport report;
    auto fail = [&](const std::string& m, bool crossing = false) {
        report.violations.push_back({m, crossing});
    };

    if (d.n < 2) fail("size must be at least 2, got " + std::to_string(d.n));
    for (MarkFamily f : {MarkFamily::X, MarkFamily::Y, MarkFamily::Z})
        if ((int)d.family(f).size() != d.n)
            fail(std::string(to_string(f)) + " marking list has wrong length");
    if (!report.ok()) return report;

    for (MarkFamily f : {MarkFamily::X, MarkFamily::Y, MarkFamily::Z})
        for (const auto& c : d.family(f))
            if (c.x < 0 || c.x >= d.n || c.y < 0 || c.y >= d.n || c.z < 0 || c.z >= d.n)
                fail(std::string(to_string(f)) + " marking out of range at " + cell_str(c));
    if (!report.ok()) return report;

    // Flat condition: each slab of each axis holds exactly one of each family.
    for (Axis a : {Axis::x, Axis::y, Axis::z})
        for (MarkFamily f : {MarkFamily::X, MarkFamily::Y, MarkFamily::Z}) {
            std::vector<int> count(d.n, 0);
            for (const auto& c : d.family(f)) ++count[coord(c, a)];
            for (int k = 0; k < d.n; ++k)
                if (count[k] != 1)
                    fail(std::string(to_string(a)) + "-flat " + std::to_string(k) + " contains " +
                         std::to_string(count[k]) + " " + to_string(f) + " markings");
        }
    if (!report.ok()) return report;

    // Right-angle condition per flat; the vertex family matches the flat axis.
    for (int k = 0; k < d.n; ++k) {
        const Cell3& x = d.X[find_in_slab(d.X, Axis::x, k)];
        const Cell3& y = d.Y[find_in_slab(d.Y, Axis::x, k)];
        const Cell3& z = d.Z[find_in_slab(d.Z, Axis::x, k)];
        if (y.y != x.y || y.z == x.z)
            fail("x-flat " + std::to_string(k) + ": Y " + cell_str(y) +
                 " is not z-aligned with vertex X " + cell_str(x));
        if (z.z != x.z || z.y == x.y)
            fail("x-flat " + std::to_string(k) + ": Z " + cell_str(z) +
                 " is not y-aligned with vertex X " + cell_str(x));
    }
    for (int k = 0; k < d.n; ++k) {
        const Cell3& x = d.X[find_in_slab(d.X, Axis::y, k)];
        const Cell3& y = d.Y[find_in_slab(d.Y, Axis::y, k)];
        const Cell3& z = d.Z[find_in_slab(d.Z, Axis::y, k)];
        if (x.x != y.x || x.z == y.z)
            fail("y-flat " + std::to_string(k) + ": X " + cell_str(x) +
                 " is not z-aligned with vertex Y " + cell_str(y));
        if (z.z != y.z || z.x == y.x)
            fail("y-flat " + std::to_string(k) + ": Z " + cell_str(z) +
                 " is not x-aligned with vertex Y " + cell_str(y));
    }
    for (int k = 0; k < d.n; ++k) {
        const Cell3& x = d.X[find_in_slab(d.X, Axis::z, k)];
        const Cell3& y = d.Y[find_in_slab(d.Y, Axis::z, k)];
        const Cell3& z = d.Z[find_in_slab(d.Z, Axis::z, k)];
        if (y.y != z.y || y.x == z.x)
            fail("z-flat " + std::to_string(k) + ": Y " + cell_str(y) +
                 " is not x-aligned with vertex Z " + cell_str(z));
        if (x.x != z.x || x.y == z.y)
            fail("z-flat " + std::to_string(k) + ": X " + cell_str(x) +
                 " is not y-aligned with vertex Z " + cell_str(z));
    }
    if (!report.ok()) return report;

    // Crossing conditions in the three projections.  In the (a,b)-projection
    // the a-parallel strand must pass under (smaller third coordinate).
    auto segments = link_segments(d);
    struct Proj { Plane plane; Axis a, b, w; SegmentFamily apar, bpar; };
    const Proj projections[3] = {
        {Plane::xy, Axis::x, Axis::y, Axis::z, SegmentFamily::YZ, SegmentFamily::ZX},
        {Plane::yz, Axis::y, Axis::z, Axis::x, SegmentFamily::ZX, SegmentFamily::XY},
        {Plane::zx, Axis::z, Axis::x, Axis::y, SegmentFamily::XY, SegmentFamily::YZ},
    };
    for (const auto& pr : projections) {
        for (const auto& su : segments) {
            if (su.family != pr.apar) continue;
            int alo = std::min(coord(su.from, pr.a), coord(su.to, pr.a));
            int ahi = std::max(coord(su.from, pr.a), coord(su.to, pr.a));
            int b0 = coord(su.from, pr.b);
            int wu = coord(su.from, pr.w);
            for (const auto& so : segments) {
                if (so.family != pr.bpar) continue;
                int blo = std::min(coord(so.from, pr.b), coord(so.to, pr.b));
                int bhi = std::max(coord(so.from, pr.b), coord(so.to, pr.b));
                int a0 = coord(so.from, pr.a);
                int wo = coord(so.from, pr.w);
                if (alo < a0 && a0 < ahi && blo < b0 && b0 < bhi && wu > wo)
                    fail(std::string("(") + to_string(pr.plane) + ")-projection crossing condition: " +
                             to_string(pr.a) + "-parallel segment " + cell_str(su.from) + "->" +
                             cell_str(su.to) + " passes over " + to_string(pr.b) +
                             "-parallel segment " + cell_str(so.from) + "->" + cell_str(so.to),
                         true);
            }
        }
    }
    return report;
}

void require_valid(const CubeDiagram& d) {
    auto report = validate_cube(d);
    if (!report.ok()) throw ValidationError("invalid cube diagram", report.text());
}

std::vector<Segment> link_segments(const CubeDiagram& d) {
    std::vector<Segment> out;
    out.reserve(3 * d.n);
    for (const auto& x : d.X) {
        const Cell3& y = d.Y[find_in_slab(d.Y, Axis::x, x.x)];
        out.push_back({SegmentFamily::XY, x, y});
    }
    for (const auto& y : d.Y) {
        const Cell3& z = d.Z[find_in_slab(d.Z, Axis::y, y.y)];
        out.push_back({SegmentFamily::YZ, y, z});
    }
    for (const auto& z : d.Z) {
        const Cell3& x = d.X[find_in_slab(d.X, Axis::z, z.z)];
        out.push_back({SegmentFamily::ZX, z, x});
    }
    return out;
}

std::vector<std::vector<MarkingRef>> traverse_link(const CubeDiagram& d) {
    require_valid(d);
    std::vector<bool> used(d.n, false);
    std::vector<int> starts;
    for (int i = 0; i < d.n; ++i) starts.push_back(i);
    std::sort(starts.begin(), starts.end(),
              [&](int a, int b) { return d.X[a] < d.X[b]; });

    std::vector<std::vector<MarkingRef>> components;
    for (int s : starts) {
        if (used[s]) continue;
        std::vector<MarkingRef> comp;
        int xi = s;
        do {
            used[xi] = true;
            const Cell3& x = d.X[xi];
            int yi = find_in_slab(d.Y, Axis::x, x.x);
            const Cell3& y = d.Y[yi];
            int zi = find_in_slab(d.Z, Axis::y, y.y);
            const Cell3& z = d.Z[zi];
            comp.push_back({MarkFamily::X, x});
            comp.push_back({MarkFamily::Y, y});
            comp.push_back({MarkFamily::Z, z});
            xi = find_in_slab(d.X, Axis::z, z.z);
        } while (xi != s);
        components.push_back(std::move(comp));
    }
    return components;
}

CubeDiagram canonicalize(const CubeDiagram& d) {
    auto components = traverse_link(d);
    CubeDiagram out;
    out.n = d.n;
    for (const auto& comp : components)
        for (const auto& m : comp) out.family(m.family).push_back(m.cell);
    return out;
}

GridDiagram project_cube(const CubeDiagram& d, Plane plane) {
    return project_cube_with_maps(d, plane).grid;
}

GridProjection project_cube_with_maps(const CubeDiagram& d, Plane plane) {
    require_valid(d);
    CubeDiagram canon = canonicalize(d);

    GridProjection out;
    out.grid.n = d.n;
    out.grid.orientation = plane;
    out.grid.xpos.assign(d.n, -1);
    out.grid.opos.assign(d.n, -1);
    out.o_row_to_marking.assign(d.n, -1);
    out.x_row_to_marking.assign(d.n, -1);

    // Grid X markings come from the family whose projection is injective on
    // cells: Z for xy, X for yz, Y for zx.  The paired families land on O.
    switch (plane) {
        case Plane::xy:
            for (int i = 0; i < d.n; ++i) {
                const Cell3& z = canon.Z[i];
                out.grid.xpos[z.y] = z.x;
                out.x_row_to_marking[z.y] = i;
            }
            for (int i = 0; i < d.n; ++i) {
                const Cell3& x = canon.X[i];
                out.grid.opos[x.y] = x.x;
                out.o_row_to_marking[x.y] = i;  // variable family X
            }
            break;
        case Plane::yz:
            for (int i = 0; i < d.n; ++i) {
                const Cell3& x = canon.X[i];
                out.grid.xpos[x.z] = x.y;
                out.x_row_to_marking[x.z] = i;
            }
            for (int i = 0; i < d.n; ++i) {
                const Cell3& y = canon.Y[i];
                out.grid.opos[y.z] = y.y;
                out.o_row_to_marking[y.z] = i;  // variable family Y
            }
            break;
        case Plane::zx:
            for (int i = 0; i < d.n; ++i) {
                const Cell3& y = canon.Y[i];
                out.grid.xpos[y.x] = y.z;
                out.x_row_to_marking[y.x] = i;
            }
            for (int i = 0; i < d.n; ++i) {
                const Cell3& z = canon.Z[i];
                out.grid.opos[z.x] = z.z;
                out.o_row_to_marking[z.x] = i;  // variable family Z
            }
            break;
    }
    require_valid(out.grid);
    return out;
}

bool interleaved(const CubeDiagram& d, FlatRef f1, FlatRef f2) {
    if (f1.axis != f2.axis) throw InvalidInput("interleaving is defined for flats of one axis");
    require_valid(d);

    auto spans = [&](int k) -> std::array<std::pair<int, int>, 2> {
        const Cell3& x = d.X[find_in_slab(d.X, f1.axis, k)];
        const Cell3& y = d.Y[find_in_slab(d.Y, f1.axis, k)];
        const Cell3& z = d.Z[find_in_slab(d.Z, f1.axis, k)];
        auto mk = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
        switch (f1.axis) {
            case Axis::x: return {mk(z.y, x.y), mk(x.z, y.z)};  // y-parallel, z-parallel
            case Axis::y: return {mk(x.z, y.z), mk(y.x, z.x)};  // z-parallel, x-parallel
            default:      return {mk(y.x, z.x), mk(z.y, x.y)};  // x-parallel, y-parallel
        }
    };
    auto s1 = spans(f1.index), s2 = spans(f2.index);
    auto alternate = [](std::pair<int, int> a, std::pair<int, int> b) {
        if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second)
            return false;  // endpoints must be distinct
        return (a.first < b.first && b.first < a.second && a.second < b.second) ||
               (b.first < a.first && a.first < b.second && b.second < a.second);
    };
    return alternate(s1[0], s2[0]) || alternate(s1[1], s2[1]);
}

// ---- moves ------------------------------------------------------------

CubeDiagram rotate(const CubeDiagram& d) {
    auto rho = [](const Cell3& c) { return Cell3{c.y, c.z, c.x}; };
    CubeDiagram out;
    out.n = d.n;
    for (const auto& c : d.Y) out.X.push_back(rho(c));
    for (const auto& c : d.Z) out.Y.push_back(rho(c));
    for (const auto& c : d.X) out.Z.push_back(rho(c));
    return out;
}

CubeDiagram rotate_back(const CubeDiagram& d) { return rotate(rotate(d)); }

namespace {

CubeDiagram commute_flats(const CubeDiagram& d, FlatRef flat) {
    if (flat.index < 0 || flat.index + 1 >= d.n)
        throw IllegalMove(IllegalMove::Reason::bad_parameters, "commutation flat index out of range");
    if (interleaved(d, flat, {flat.axis, flat.index + 1}))
        throw IllegalMove(IllegalMove::Reason::interleaved,
                          std::string(to_string(flat.axis)) + "-flats " + std::to_string(flat.index) +
                              "," + std::to_string(flat.index + 1) +
                              " interleave; interchanging them is not an isotopy");
    CubeDiagram out = d;
    for (MarkFamily f : {MarkFamily::X, MarkFamily::Y, MarkFamily::Z})
        for (auto& c : out.family(f)) {
            int& v = coord_ref(c, flat.axis);
            if (v == flat.index) v = flat.index + 1;
            else if (v == flat.index + 1) v = flat.index;
        }
    auto report = validate_cube(out);
    if (!report.ok())
        throw IllegalMove(IllegalMove::Reason::crossing_broken,
                          "interchanging the flats breaks the crossing conditions:\n" + report.text());
    return out;
}

// The stabilization pattern for the XY variant: the z-parallel segment out
// of X_i is replaced by a unit detour through three new markings that all
// live in the new z-flat.  Other variants are conjugates by `rotate`.
CubeDiagram stabilize_xy(const CubeDiagram& d, int site) {
    CubeDiagram cur = canonicalize(d);
    if (site < 0 || site >= d.n)
        throw IllegalMove(IllegalMove::Reason::bad_parameters, "stabilization site out of range");

    int xi = site;
    int yi = find_in_slab(cur.Y, Axis::x, cur.X[xi].x);       // successor Y_i
    int zp = find_in_slab(cur.Z, Axis::z, cur.X[xi].z);       // predecessor Z_{i-1}
    int zs = find_in_slab(cur.Z, Axis::y, cur.Y[yi].y);       // successor Z_i

    const Cell3 X = cur.X[xi], Y = cur.Y[yi], Zp = cur.Z[zp], Zs = cur.Z[zs];
    const int gx = (Zs.x > X.x) ? X.x + 1 : X.x;  // between X_i and Z_i, adjacent to X_i
    const int gy = (Zp.y < Y.y) ? Y.y + 1 : Y.y;  // adjacent to Y_i, away from Z_{i-1}
    const int gz = (Y.z > X.z) ? X.z + 1 : X.z;   // between X_i and Y_i, adjacent to X_i

    CubeDiagram next;
    next.n = d.n + 1;
    for (MarkFamily f : {MarkFamily::X, MarkFamily::Y, MarkFamily::Z})
        for (Cell3 c : cur.family(f)) {
            c.x += (c.x >= gx);
            c.y += (c.y >= gy);
            c.z += (c.z >= gz);
            next.family(f).push_back(c);
        }
    next.Y[yi].x = gx;
    next.Y[yi].y = gy;
    next.Z[zs].y = gy;

    // Find, per family, which slabs of the new diagram are missing a marking;
    // candidate cells for the three new markings live in the new z-flat.
    auto missing = [&](MarkFamily f, Axis a) {
        std::vector<bool> seen(next.n, false);
        for (const auto& c : next.family(f)) seen[coord(c, a)] = true;
        std::vector<int> out;
        for (int k = 0; k < next.n; ++k)
            if (!seen[k]) out.push_back(k);
        return out;
    };
    std::vector<Cell3> cand[3];
    MarkFamily fams[3] = {MarkFamily::X, MarkFamily::Y, MarkFamily::Z};
    for (int f = 0; f < 3; ++f) {
        auto mx = missing(fams[f], Axis::x);
        auto my = missing(fams[f], Axis::y);
        for (int cx : mx)
            for (int cy : my) cand[f].push_back({cx, cy, gz});
    }

    CubeDiagram result;
    int valid_placements = 0;
    for (const auto& cx : cand[0])
        for (const auto& cy : cand[1])
            for (const auto& cz : cand[2]) {
                CubeDiagram trial = next;
                trial.X.push_back(cx);
                trial.Y.push_back(cy);
                trial.Z.push_back(cz);
                if (validate_cube(trial).ok()) {
                    ++valid_placements;
                    result = trial;
                }
            }
    if (valid_placements != 1)
        throw InternalError("cube stabilization expected a unique marking placement, found " +
                            std::to_string(valid_placements));
    return canonicalize(result);
}

CubeDiagram destabilize_xy(const CubeDiagram& d, int zflat) {
    CubeDiagram cur = canonicalize(d);
    if (zflat < 0 || zflat >= d.n)
        throw IllegalMove(IllegalMove::Reason::bad_parameters, "destabilization flat out of range");
    if (d.n <= 2)
        throw IllegalMove(IllegalMove::Reason::pattern_absent, "cannot destabilize below size 2");

    int xf = find_in_slab(cur.X, Axis::z, zflat);
    int yf = find_in_slab(cur.Y, Axis::z, zflat);
    int zf = find_in_slab(cur.Z, Axis::z, zflat);
    const Cell3 Xf = cur.X[xf], Yf = cur.Y[yf], Zf = cur.Z[zf];
    if (std::abs(Yf.x - Zf.x) != 1 || std::abs(Zf.y - Xf.y) != 1)
        throw IllegalMove(IllegalMove::Reason::pattern_absent,
                          "z-flat " + std::to_string(zflat) + " does not carry a unit stabilization detour");
    int xi = find_in_slab(cur.X, Axis::x, Yf.x);  // the X feeding the detour
    if (std::abs(cur.X[xi].z - zflat) != 1)
        throw IllegalMove(IllegalMove::Reason::pattern_absent,
                          "the segment into the detour is not a unit step");

    int yj = find_in_slab(cur.Y, Axis::x, Xf.x);           // Y displaced by the stabilization
    int zj = find_in_slab(cur.Z, Axis::y, cur.Y[yj].y);    // its successor Z

    CubeDiagram low;
    low.n = d.n - 1;
    const int gx = Xf.x, gy = Xf.y;
    Cell3 xi_cell = cur.X[xi];
    {
        CubeDiagram moved = cur;
        moved.Y[yj].x = Yf.x;
        moved.Y[yj].y = Yf.y;
        moved.Z[zj].y = Yf.y;
        moved.X.erase(moved.X.begin() + xf);
        moved.Y.erase(moved.Y.begin() + yf);
        moved.Z.erase(moved.Z.begin() + zf);
        for (MarkFamily f : {MarkFamily::X, MarkFamily::Y, MarkFamily::Z})
            for (Cell3 c : moved.family(f)) {
                c.x -= (c.x > gx);
                c.y -= (c.y > gy);
                c.z -= (c.z > zflat);
                low.family(f).push_back(c);
            }
    }
    auto report = validate_cube(low);
    if (!report.ok())
        throw IllegalMove(IllegalMove::Reason::pattern_absent,
                          "removing the detour does not leave a cube diagram:\n" + report.text());

    // Round-trip: re-stabilizing at the same site must restore the input.
    low = canonicalize(low);
    Cell3 back{xi_cell.x - (xi_cell.x > gx), xi_cell.y - (xi_cell.y > gy),
               xi_cell.z - (xi_cell.z > zflat)};
    int back_site = -1;
    for (int i = 0; i < low.n; ++i)
        if (low.X[i] == back) back_site = i;
    if (back_site < 0 || stabilize_xy(low, back_site) != canonicalize(cur))
        throw IllegalMove(IllegalMove::Reason::pattern_absent,
                          "z-flat pattern is not the image of a stabilization");
    return low;
}

// Translate a stabilization site through `rotate`: the start marking of the
// segment family becomes an X marking of the rotated diagram.
int rotated_x_site(const CubeDiagram& rotated, const Cell3& cell_before_rotation) {
    Cell3 rho{cell_before_rotation.y, cell_before_rotation.z, cell_before_rotation.x};
    CubeDiagram canon = canonicalize(rotated);
    for (int i = 0; i < canon.n; ++i)
        if (canon.X[i] == rho) return i;
    throw InternalError("lost track of a marking under rotation");
}

}  // namespace

CubeDiagram apply_cube_move(const CubeDiagram& d, const CubeMove& m) {
    require_valid(d);
    switch (m.kind) {
        case CubeMove::Kind::commute:
            return commute_flats(d, m.flat);
        case CubeMove::Kind::stabilize: {
            CubeDiagram canon = canonicalize(d);
            if (m.site < 0 || m.site >= d.n)
                throw IllegalMove(IllegalMove::Reason::bad_parameters, "stabilization site out of range");
            switch (m.family) {
                case SegmentFamily::XY:
                    return stabilize_xy(canon, m.site);
                case SegmentFamily::YZ: {
                    CubeDiagram r = rotate(canon);
                    return rotate_back(stabilize_xy(r, rotated_x_site(r, canon.Y[m.site])));
                }
                case SegmentFamily::ZX: {
                    CubeDiagram r = rotate_back(canon);
                    Cell3 z = canon.Z[m.site];
                    Cell3 rho2{z.z, z.x, z.y};
                    CubeDiagram rc = canonicalize(r);
                    int site = -1;
                    for (int i = 0; i < rc.n; ++i)
                        if (rc.X[i] == rho2) site = i;
                    if (site < 0) throw InternalError("lost track of a marking under rotation");
                    return rotate(stabilize_xy(rc, site));
                }
            }
            break;
        }
        case CubeMove::Kind::destabilize:
            switch (m.family) {
                case SegmentFamily::XY:
                    return destabilize_xy(d, m.site);
                case SegmentFamily::YZ:
                    return rotate_back(destabilize_xy(rotate(d), m.site));
                case SegmentFamily::ZX:
                    return rotate(destabilize_xy(rotate_back(d), m.site));
            }
            break;
    }
    throw IllegalMove(IllegalMove::Reason::bad_parameters, "unknown move kind");
}

CubeDiagram direct_sum(const CubeDiagram& a, const CubeDiagram& b) {
    CubeDiagram out;
    out.n = a.n + b.n;
    for (MarkFamily f : {MarkFamily::X, MarkFamily::Y, MarkFamily::Z}) {
        for (const auto& c : a.family(f)) out.family(f).push_back(c);
        for (const auto& c : b.family(f))
            out.family(f).push_back({c.x + a.n, c.y + a.n, c.z + a.n});
    }
    return out;
}

std::vector<CubeDiagram> enumerate_cube_diagrams(int n) {
    // Within each x-flat the X sits at the right-angle vertex, so a candidate
    // is determined by four permutations: X.y, X.z per slab, plus the Y's z
    // and the Z's y.  Everything else is filtered by the validator.
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p = base;
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    std::vector<CubeDiagram> out;
    for (const auto& alpha : perms)
        for (const auto& beta : perms)
            for (const auto& gamma : perms)
                for (const auto& delta : perms) {
                    CubeDiagram d;
                    d.n = n;
                    bool degenerate = false;
                    for (int k = 0; k < n; ++k) {
                        if (gamma[k] == beta[k] || delta[k] == alpha[k]) degenerate = true;
                        d.X.push_back({k, alpha[k], beta[k]});
                        d.Y.push_back({k, alpha[k], gamma[k]});
                        d.Z.push_back({k, delta[k], beta[k]});
                    }
                    if (degenerate) continue;
                    if (validate_cube(d).ok()) out.push_back(canonicalize(d));
                }
    return out;
}

}  // namespace cubeknot
