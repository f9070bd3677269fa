#include "cubeknot/homology.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "cubeknot/util.hpp"

namespace cubeknot {

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Lexicographic rank of a permutation.
long long perm_rank(const std::vector<int>& p) {
    int n = (int)p.size();
    long long rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i]) ++smaller;
        rank += smaller * factorial(n - 1 - i);
    }
    return rank;
}

std::vector<int> perm_unrank(int n, long long rank) {
    std::vector<int> pool(n), out;
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = n - 1; i >= 0; --i) {
        long long f = factorial(i);
        int idx = (int)(rank / f);
        rank %= f;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + idx);
    }
    return out;
}

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

// ---- states -----------------------------------------------------------

std::vector<GridState> enumerate_grid_states(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<GridState> out;
    do out.push_back({p});
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<CubeState> enumerate_cube_states(int n) {
    auto perms = enumerate_grid_states(n);
    std::vector<CubeState> out;
    out.reserve(perms.size() * perms.size());
    for (const auto& a : perms)
        for (const auto& b : perms) out.push_back({a.row, b.row});
    return out;
}

long long cube_state_id(const CubeState& s) {
    return perm_rank(s.y) * factorial((int)s.y.size()) + perm_rank(s.z);
}

CubeState cube_state_from_id(int n, long long id) {
    long long f = factorial(n);
    return {perm_unrank(n, id / f), perm_unrank(n, id % f)};
}

GridState project_state(const CubeState& s, Plane plane) {
    int n = (int)s.y.size();
    GridState out;
    out.row.assign(n, -1);
    switch (plane) {
        case Plane::xy:
            for (int x = 0; x < n; ++x) out.row[x] = s.y[x];
            break;
        case Plane::yz:
            for (int x = 0; x < n; ++x) out.row[s.y[x]] = s.z[x];
            break;
        case Plane::zx:
            for (int x = 0; x < n; ++x) out.row[s.z[x]] = x;
            break;
    }
    return out;
}

std::pair<Plane, Plane> axis_planes(Axis axis) {
    switch (axis) {
        case Axis::y: return {Plane::xy, Plane::yz};
        case Axis::z: return {Plane::yz, Plane::zx};
        case Axis::x: return {Plane::zx, Plane::xy};
    }
    return {Plane::xy, Plane::yz};
}

CubeState psi(const GridState& s_first, const GridState& s_second, Axis axis) {
    int n = (int)s_first.row.size();
    CubeState out;
    out.y.assign(n, -1);
    out.z.assign(n, -1);
    switch (axis) {
        case Axis::y:
            for (int x = 0; x < n; ++x) {
                out.y[x] = s_first.row[x];
                out.z[x] = s_second.row[out.y[x]];
            }
            break;
        case Axis::z:
            for (int y = 0; y < n; ++y) {
                int z = s_first.row[y];
                int x = s_second.row[z];
                out.y[x] = y;
                out.z[x] = z;
            }
            break;
        case Axis::x:
            for (int z = 0; z < n; ++z) {
                int x = s_first.row[z];
                out.y[x] = s_second.row[x];
                out.z[x] = z;
            }
            break;
    }
    return out;
}

// ---- gradings ----------------------------------------------------------

namespace {

// Doubled-coordinate planar points for a grid: states at 2p, markings at 2c+1.
std::vector<std::pair<Point2, Rat>> grid_state_points(const GridState& s, Rat coeff) {
    std::vector<std::pair<Point2, Rat>> out;
    for (int c = 0; c < (int)s.row.size(); ++c)
        out.push_back({{2 * c, 2 * s.row[c]}, coeff});
    return out;
}

std::vector<std::pair<Point2, Rat>> grid_marking_points(const std::vector<int>& pos, Rat coeff) {
    std::vector<std::pair<Point2, Rat>> out;
    for (int r = 0; r < (int)pos.size(); ++r)
        out.push_back({{2 * pos[r] + 1, 2 * r + 1}, coeff});
    return out;
}

std::vector<std::pair<Point2, Rat>> concat(std::vector<std::pair<Point2, Rat>> a,
                                           const std::vector<std::pair<Point2, Rat>>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

FormalPointSum cube_state_sum(const CubeState& s, Rat coeff) {
    FormalPointSum out;
    for (int x = 0; x < (int)s.y.size(); ++x)
        out.terms.push_back({{2 * x, 2 * s.y[x], 2 * s.z[x]}, coeff});
    return out;
}

FormalPointSum marking_sum(const std::vector<Cell3>& cells, Rat coeff) {
    FormalPointSum out;
    for (const auto& c : cells)
        out.terms.push_back({{2 * c.x + 1, 2 * c.y + 1, 2 * c.z + 1}, coeff});
    return out;
}

// M_P(s) = J_P(s - F, s - F) + 1 with F the vertex family of the plane's
// grid-X source: X for xy, Y for yz, Z for zx.
HalfGrading cube_maslov(const CubeDiagram& canon, const CubeState& s, Plane p) {
    const std::vector<Cell3>& f = p == Plane::xy   ? canon.X
                                  : p == Plane::yz ? canon.Y
                                                   : canon.Z;
    FormalPointSum diff = cube_state_sum(s, Rat(1));
    for (const auto& c : f) diff.terms.push_back({{2 * c.x + 1, 2 * c.y + 1, 2 * c.z + 1}, Rat(-1)});
    Rat m = j_pair(diff, diff, p) + Rat(1);
    return m.as_half();
}

// A_P(s) = J_P(s - (G + F)/2, G - F) +- (n-1)/2 where (F, G) are the
// families projecting to (O, grid X): xy -> (X, Z), yz -> (Y, X), zx -> (Z, Y).
HalfGrading cube_alexander(const CubeDiagram& canon, const CubeState& s, Plane p, bool normalize) {
    const std::vector<Cell3>*F, *G;
    switch (p) {
        case Plane::xy: F = &canon.X; G = &canon.Z; break;
        case Plane::yz: F = &canon.Y; G = &canon.X; break;
        default:        F = &canon.Z; G = &canon.Y; break;
    }
    FormalPointSum left = cube_state_sum(s, Rat(1));
    for (const auto& c : *G) left.terms.push_back({{2 * c.x + 1, 2 * c.y + 1, 2 * c.z + 1}, Rat(-1, 2)});
    for (const auto& c : *F) left.terms.push_back({{2 * c.x + 1, 2 * c.y + 1, 2 * c.z + 1}, Rat(-1, 2)});
    FormalPointSum right = marking_sum(*G, Rat(1));
    for (const auto& c : *F) right.terms.push_back({{2 * c.x + 1, 2 * c.y + 1, 2 * c.z + 1}, Rat(-1)});
    Rat a = j_pair(left, right, p) + Rat(normalize ? -(canon.n - 1) : canon.n - 1, 2);
    return a.as_half();
}

}  // namespace

GridGradings grid_gradings(const GridDiagram& g, const GridState& s, bool normalize) {
    auto spts = grid_state_points(s, Rat(1));
    auto xpts = grid_marking_points(g.xpos, Rat(1));
    auto opts = grid_marking_points(g.opos, Rat(1));

    auto s_minus_o = concat(spts, grid_marking_points(g.opos, Rat(-1)));
    Rat m = j_pair2(s_minus_o, s_minus_o) + Rat(1);

    auto left = concat(concat(spts, grid_marking_points(g.xpos, Rat(-1, 2))),
                       grid_marking_points(g.opos, Rat(-1, 2)));
    auto right = concat(xpts, grid_marking_points(g.opos, Rat(-1)));
    Rat a = j_pair2(left, right) + Rat(normalize ? -(g.n - 1) : g.n - 1, 2);
    return {m.as_half(), a.as_half()};
}

CubeGradings cube_gradings(const CubeDiagram& d, const CubeState& s, Axis axis, bool normalize) {
    CubeDiagram canon = canonicalize(d);
    auto [p1, p2] = axis_planes(axis);
    CubeGradings out;
    out.first = p1;
    out.second = p2;
    out.M_first = cube_maslov(canon, s, p1);
    out.M_second = cube_maslov(canon, s, p2);
    out.A_first = cube_alexander(canon, s, p1, normalize);
    out.A_second = cube_alexander(canon, s, p2, normalize);
    out.M = out.M_first + out.M_second;
    out.A = out.A_first + out.A_second;
    return out;
}

// ---- rectangles ----------------------------------------------------------

std::vector<GridRect> rectangles_from(const GridDiagram& g, const GridState& s) {
    const int n = g.n;
    std::vector<GridRect> out;
    for (int c0 = 0; c0 < n; ++c0) {
        for (int w = 1; w < n; ++w) {
            int c2 = mod(c0 + w, n);
            int r0 = s.row[c0], r2 = s.row[c2];
            int h = mod(r2 - r0, n);

            bool empty = true;
            for (int c = 0; c < n && empty; ++c) {
                if (c == c0 || c == c2) continue;
                if (mod(c - c0, n) < w && mod(s.row[c] - r0, n) < h) {
                    // interior test: corners were excluded above, boundary
                    // columns/rows cannot occur for other state points
                    empty = false;
                }
            }
            if (!empty) continue;

            GridRect r;
            r.c0 = c0; r.r0 = r0; r.w = w; r.h = h;
            r.o_count.assign(n, 0);
            r.x_count.assign(n, 0);
            for (int i = 0; i < n; ++i) {
                if (mod(g.opos[i] - c0, n) < w && mod(i - r0, n) < h) r.o_count[i] = 1;
                if (mod(g.xpos[i] - c0, n) < w && mod(i - r0, n) < h) r.x_count[i] = 1;
            }
            r.target = s;
            std::swap(r.target.row[c0], r.target.row[c2]);
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<GridRect> empty_rectangles(const GridDiagram& g, const GridState& s,
                                       const GridState& t) {
    std::vector<GridRect> out;
    for (auto& r : rectangles_from(g, s))
        if (r.target == t) out.push_back(std::move(r));
    return out;
}

// ---- cylinders -----------------------------------------------------------

namespace {

struct PlaneView {
    // Coordinate slots of the plane in (first axis, second axis) order and
    // the slot whose coordinate gets exchanged between the two states.
    int u_axis, v_axis;  // 0=x 1=y 2=z
    bool swap_u;
};

PlaneView plane_view(Plane p, Axis axis) {
    int u, v;
    switch (p) {
        case Plane::xy: u = 0; v = 1; break;
        case Plane::yz: u = 1; v = 2; break;
        default:        u = 2; v = 0; break;
    }
    int ax = axis == Axis::x ? 0 : axis == Axis::y ? 1 : 2;
    if (u != ax && v != ax) throw InvalidInput("cylinder plane does not contain the axis");
    return {u, v, u != ax};
}

int state_coord(const CubeState& s, int i, int axis) {
    return axis == 0 ? i : axis == 1 ? s.y[i] : s.z[i];
}

}  // namespace

std::vector<Cylinder> cylinders_from(const CubeDiagram& d, const CubeState& s, Plane plane,
                                     Axis axis) {
    const int n = d.n;
    CubeDiagram canon = canonicalize(d);
    PlaneView pv = plane_view(plane, axis);

    // point index (by x-coordinate) for each u value
    std::vector<int> point_at_u(n, -1);
    for (int i = 0; i < n; ++i) point_at_u[state_coord(s, i, pv.u_axis)] = i;

    std::vector<Cylinder> out;
    for (int u0 = 0; u0 < n; ++u0) {
        for (int du = 1; du < n; ++du) {
            int u2 = mod(u0 + du, n);
            int p = point_at_u[u0], q = point_at_u[u2];
            int v0 = state_coord(s, p, pv.v_axis);
            int v2 = state_coord(s, q, pv.v_axis);
            int dv = mod(v2 - v0, n);

            bool empty = true;
            for (int i = 0; i < n && empty; ++i) {
                if (i == p || i == q) continue;
                if (mod(state_coord(s, i, pv.u_axis) - u0, n) < du &&
                    mod(state_coord(s, i, pv.v_axis) - v0, n) < dv)
                    empty = false;
            }
            if (!empty) continue;

            Cylinder c;
            c.plane = plane;
            c.u0 = u0; c.v0 = v0; c.du = du; c.dv = dv;
            auto census = [&](const std::vector<Cell3>& fam, std::vector<uint8_t>& slot) {
                slot.assign(n, 0);
                for (int i = 0; i < n; ++i) {
                    const Cell3& cell = fam[i];
                    int cu = pv.u_axis == 0 ? cell.x : pv.u_axis == 1 ? cell.y : cell.z;
                    int cv = pv.v_axis == 0 ? cell.x : pv.v_axis == 1 ? cell.y : cell.z;
                    if (mod(cu - u0, n) < du && mod(cv - v0, n) < dv) slot[i] = 1;
                }
            };
            census(canon.X, c.x_count);
            census(canon.Y, c.y_count);
            census(canon.Z, c.z_count);

            c.target = s;
            if (pv.swap_u) {
                // exchange the u-coordinates of the two moving points
                if (pv.u_axis == 0) {
                    // u = x: the points swap their (y,z) payloads
                    std::swap(c.target.y[p], c.target.y[q]);
                    std::swap(c.target.z[p], c.target.z[q]);
                } else if (pv.u_axis == 1) {
                    std::swap(c.target.y[p], c.target.y[q]);
                } else {
                    std::swap(c.target.z[p], c.target.z[q]);
                }
            } else {
                if (pv.v_axis == 0) {
                    std::swap(c.target.y[p], c.target.y[q]);
                    std::swap(c.target.z[p], c.target.z[q]);
                } else if (pv.v_axis == 1) {
                    std::swap(c.target.y[p], c.target.y[q]);
                } else {
                    std::swap(c.target.z[p], c.target.z[q]);
                }
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<Cylinder> empty_cylinders(const CubeDiagram& d, const CubeState& s,
                                      const CubeState& t, Plane plane, Axis axis) {
    std::vector<Cylinder> out;
    for (auto& c : cylinders_from(d, s, plane, axis))
        if (c.target == t) out.push_back(std::move(c));
    return out;
}

// ---- differentials -------------------------------------------------------

const char* to_string(Variant v) {
    switch (v) {
        case Variant::minus: return "minus";
        case Variant::tilde: return "tilde";
        case Variant::filtered_hat: return "filtered-hat";
    }
    return "?";
}

Variant variant_from_string(const std::string& s) {
    if (s == "minus") return Variant::minus;
    if (s == "tilde") return Variant::tilde;
    if (s == "filtered-hat") return Variant::filtered_hat;
    throw InvalidInput("unknown variant: " + s);
}

void toggle(GridChain& chain, GridTerm term) {
    auto it = chain.find(term);
    if (it == chain.end()) chain.insert(std::move(term));
    else chain.erase(it);
}

void toggle(CubeChain& chain, CubeTerm term) {
    auto it = chain.find(term);
    if (it == chain.end()) chain.insert(std::move(term));
    else chain.erase(it);
}

GridChain grid_differential(const GridDiagram& g, const GridState& s, Variant v) {
    GridChain out;
    for (const auto& r : rectangles_from(g, s)) {
        bool has_o = std::any_of(r.o_count.begin(), r.o_count.end(), [](uint8_t c) { return c; });
        bool has_x = std::any_of(r.x_count.begin(), r.x_count.end(), [](uint8_t c) { return c; });
        if (v == Variant::tilde && (has_o || has_x)) continue;
        if (v == Variant::filtered_hat && has_o) continue;
        GridTerm term;
        term.expo.assign(g.n, 0);
        if (v == Variant::minus) term.expo = std::vector<uint8_t>(r.o_count.begin(), r.o_count.end());
        term.state = r.target;
        toggle(out, std::move(term));
    }
    return out;
}

namespace {

// Family whose markings index the variables of a plane's cylinders: the
// start marking of the segment pair projecting to the grid O.
int variable_family_offset(Plane p) {
    switch (p) { case Plane::xy: return 0; case Plane::yz: return 1; default: return 2; }
}

void add_cylinder_terms(CubeChain& out, const CubeDiagram& d, const CubeState& s, Plane plane,
                        Axis axis, Variant v, int n) {
    for (const auto& c : cylinders_from(d, s, plane, axis)) {
        auto nonzero = [](const std::vector<uint8_t>& cs) {
            return std::any_of(cs.begin(), cs.end(), [](uint8_t b) { return b; });
        };
        const std::vector<uint8_t>& var_census = variable_family_offset(plane) == 0 ? c.x_count
                                               : variable_family_offset(plane) == 1 ? c.y_count
                                                                                    : c.z_count;
        if (v == Variant::tilde && (nonzero(c.x_count) || nonzero(c.y_count) || nonzero(c.z_count)))
            continue;
        if (v == Variant::filtered_hat && nonzero(var_census)) continue;
        CubeTerm term;
        term.expo.assign(3 * n, 0);
        if (v == Variant::minus) {
            int off = variable_family_offset(plane) * n;
            for (int i = 0; i < n; ++i) term.expo[off + i] = var_census[i];
        }
        term.state = c.target;
        toggle(out, std::move(term));
    }
}

}  // namespace

CubeChain differential(const CubeDiagram& d, const CubeState& s, Axis axis, Variant v) {
    auto [p1, p2] = axis_planes(axis);
    CubeChain out;
    add_cylinder_terms(out, d, s, p1, axis, v, d.n);
    add_cylinder_terms(out, d, s, p2, axis, v, d.n);
    return out;
}

GridChain grid_differential_squared(const GridDiagram& g, const GridState& s, Variant v) {
    GridChain out;
    for (const auto& t1 : grid_differential(g, s, v))
        for (const auto& t2 : grid_differential(g, t1.state, v)) {
            GridTerm prod;
            prod.expo.resize(g.n);
            for (int i = 0; i < g.n; ++i) prod.expo[i] = t1.expo[i] + t2.expo[i];
            prod.state = t2.state;
            toggle(out, std::move(prod));
        }
    return out;
}

CubeChain differential_squared(const CubeDiagram& d, const CubeState& s, Axis axis, Variant v) {
    CubeChain out;
    for (const auto& t1 : differential(d, s, axis, v))
        for (const auto& t2 : differential(d, t1.state, axis, v)) {
            CubeTerm prod;
            prod.expo.resize(3 * d.n);
            for (int i = 0; i < 3 * d.n; ++i) prod.expo[i] = t1.expo[i] + t2.expo[i];
            prod.state = t2.state;
            toggle(out, std::move(prod));
        }
    return out;
}

bool check_tensor_iso(const CubeDiagram& d, Axis axis, Variant v) {
    require_valid(d);
    const int n = d.n;
    auto [p1, p2] = axis_planes(axis);
    GridProjection proj1 = project_cube_with_maps(d, p1);
    GridProjection proj2 = project_cube_with_maps(d, p2);
    int off1 = variable_family_offset(p1) * n;
    int off2 = variable_family_offset(p2) * n;

    auto states = enumerate_grid_states(n);
    for (const auto& s : states) {
        auto ds = grid_differential(proj1.grid, s, v);
        for (const auto& t : states) {
            CubeChain lhs = differential(d, psi(s, t, axis), axis, v);

            CubeChain rhs;
            for (const auto& term : ds) {
                CubeTerm ct;
                ct.expo.assign(3 * n, 0);
                for (int r = 0; r < n; ++r)
                    if (term.expo[r]) ct.expo[off1 + proj1.o_row_to_marking[r]] = term.expo[r];
                ct.state = psi(term.state, t, axis);
                toggle(rhs, std::move(ct));
            }
            for (const auto& term : grid_differential(proj2.grid, t, v)) {
                CubeTerm ct;
                ct.expo.assign(3 * n, 0);
                for (int r = 0; r < n; ++r)
                    if (term.expo[r]) ct.expo[off2 + proj2.o_row_to_marking[r]] = term.expo[r];
                ct.state = psi(s, term.state, axis);
                toggle(rhs, std::move(ct));
            }
            if (lhs != rhs) return false;
        }
    }
    return true;
}

// ---- GF(2) rank and tables -------------------------------------------------

void SparseF2Matrix::add_row(const std::vector<int>& support) {
    std::vector<uint64_t> row((cols + 63) / 64, 0);
    for (int c : support) row[c / 64] ^= (uint64_t(1) << (c % 64));
    rows.push_back(std::move(row));
}

int f2_rank(SparseF2Matrix m) {
    int rank = 0;
    std::vector<std::vector<uint64_t>> pivots;
    std::vector<int> pivot_idx;
    for (auto& row : m.rows) {
        for (size_t k = 0; k < pivots.size(); ++k) {
            int pi = pivot_idx[k];
            if (row[pi / 64] & (uint64_t(1) << (pi % 64)))
                for (size_t w = 0; w < row.size(); ++w) row[w] ^= pivots[k][w];
        }
        int lead = -1;
        for (size_t w = 0; w < row.size() && lead < 0; ++w)
            if (row[w]) {
                for (int b = 0; b < 64; ++b)
                    if (row[w] & (uint64_t(1) << b)) { lead = int(w) * 64 + b; break; }
            }
        if (lead >= 0) {
            pivots.push_back(row);
            pivot_idx.push_back(lead);
            ++rank;
        }
    }
    return rank;
}

long long DimTable::total() const {
    long long t = 0;
    for (const auto& [k, v] : dims) t += v;
    return t;
}

DimTable table_product(const DimTable& a, const DimTable& b) {
    DimTable out;
    out.bigraded = a.bigraded && b.bigraded;
    for (const auto& [ka, va] : a.dims)
        for (const auto& [kb, vb] : b.dims) {
            auto key = std::make_pair(ka.first + kb.first, ka.second + kb.second);
            out.dims[key] += va * vb;
        }
    return out;
}

namespace {

// Shared block-rank scaffolding for both engines: generators keyed by
// grading, boundary maps evaluated per generator, dimensions per block.
struct Block {
    std::vector<long long> members;            // generator ids
    std::map<long long, int> position;         // id -> column index
};

DimTable table_from_blocks(std::map<std::pair<int, int>, Block>& blocks,
                           const std::function<std::vector<long long>(long long)>& boundary,
                           const std::function<std::pair<int, int>(std::pair<int, int>)>& target_key) {
    std::map<std::pair<int, int>, int> rank_out;
    for (auto& [key, block] : blocks) {
        auto tkey = target_key(key);
        auto it = blocks.find(tkey);
        if (it == blocks.end()) {
            // boundary must vanish out of this block
            for (long long id : block.members)
                if (!boundary(id).empty())
                    throw InternalError("boundary leaves the graded block structure");
            rank_out[key] = 0;
            continue;
        }
        SparseF2Matrix m;
        m.cols = (int)it->second.members.size();
        for (long long id : block.members) {
            std::vector<int> support;
            for (long long tid : boundary(id)) {
                auto pos = it->second.position.find(tid);
                if (pos == it->second.position.end())
                    throw InternalError("boundary leaves the graded block structure");
                support.push_back(pos->second);
            }
            m.add_row(support);
        }
        rank_out[key] = f2_rank(std::move(m));
    }

    DimTable out;
    for (auto& [key, block] : blocks) {
        long long dim = (long long)block.members.size() - rank_out[key];
        // subtract the rank of the boundary arriving from the block above
        for (auto& [src, r] : rank_out)
            if (target_key(src) == key) dim -= r;
        if (dim < 0) throw InternalError("negative homology dimension");
        if (dim > 0) out.dims[key] = dim;
    }
    return out;
}

}  // namespace

DimTable homology_table(const CubeDiagram& d, Axis axis, Variant v, bool normalize) {
    if (v == Variant::minus)
        throw InvalidInput("homology tables are computed for the tilde and filtered-hat variants");
    require_valid(d);
    CubeDiagram canon = canonicalize(d);
    const int n = d.n;
    const long long count = factorial(n) * factorial(n);

    std::vector<std::pair<int, int>> keys(count);
    std::vector<std::vector<long long>> bnd(count);
    parallel_for(count, [&](long long id) {
        CubeState s = cube_state_from_id(n, id);
        CubeGradings gr = cube_gradings(canon, s, axis, normalize);
        keys[id] = {gr.M.twice, gr.A.twice};
        for (const auto& term : differential(canon, s, axis, v))
            bnd[id].push_back(cube_state_id(term.state));
        std::sort(bnd[id].begin(), bnd[id].end());
    });

    std::map<std::pair<int, int>, Block> blocks;
    for (long long id = 0; id < count; ++id) {
        auto key = v == Variant::filtered_hat ? std::make_pair(keys[id].first, 0) : keys[id];
        auto& b = blocks[key];
        b.position[id] = (int)b.members.size();
        b.members.push_back(id);
    }
    auto table = table_from_blocks(
        blocks, [&](long long id) { return bnd[id]; },
        [&](std::pair<int, int> key) { return std::make_pair(key.first - 2, key.second); });
    table.bigraded = (v == Variant::tilde);
    return table;
}

DimTable grid_homology_table(const GridDiagram& g, Variant v, bool normalize) {
    if (v == Variant::minus)
        throw InvalidInput("homology tables are computed for the tilde and filtered-hat variants");
    require_valid(g);
    auto states = enumerate_grid_states(g.n);
    std::map<GridState, long long> index;
    for (long long i = 0; i < (long long)states.size(); ++i) index[states[i]] = i;

    const long long count = (long long)states.size();
    std::vector<std::pair<int, int>> keys(count);
    std::vector<std::vector<long long>> bnd(count);
    parallel_for(count, [&](long long id) {
        GridGradings gr = grid_gradings(g, states[id], normalize);
        keys[id] = {gr.M.twice, gr.A.twice};
        for (const auto& term : grid_differential(g, states[id], v))
            bnd[id].push_back(index.at(term.state));
        std::sort(bnd[id].begin(), bnd[id].end());
    });

    std::map<std::pair<int, int>, Block> blocks;
    for (long long id = 0; id < count; ++id) {
        auto key = v == Variant::filtered_hat ? std::make_pair(keys[id].first, 0) : keys[id];
        auto& b = blocks[key];
        b.position[id] = (int)b.members.size();
        b.members.push_back(id);
    }
    auto table = table_from_blocks(
        blocks, [&](long long id) { return bnd[id]; },
        [&](std::pair<int, int> key) { return std::make_pair(key.first - 2, key.second); });
    table.bigraded = (v == Variant::tilde);
    return table;
}

std::string poincare_text(const DimTable& table, Variant v, const std::string& axis,
                          bool normalize, const std::string& diagram_hash) {
    std::ostringstream out;
    out << "# cubeknot poincare v1 variant=" << to_string(v) << " axis=" << axis
        << " normalize=" << (normalize ? 1 : 0) << " diagram=" << diagram_hash << "\n";
    // sorted by (M, A) descending
    for (auto it = table.dims.rbegin(); it != table.dims.rend(); ++it) {
        out << "M=" << to_string(HalfGrading(it->first.first));
        if (table.bigraded) out << " A=" << to_string(HalfGrading(it->first.second));
        out << " dim=" << it->second << "\n";
    }
    out << "total=" << table.total() << "\n";
    return out.str();
}

}  // namespace cubeknot
