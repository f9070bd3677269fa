#include "cubeknot/lifting.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace cubeknot {

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

StackPlan plan_stack(const GridDiagram& g) {
    require_valid(g);
    StackPlan plan;
    auto bends = classify_bends(g, VertexType::X);
    for (const auto& [b, cls] : bends) plan.classes.push_back(cls);

    // crossing (col c, row r): the bend owning column c passes over bend r
    std::vector<int> bend_of_col(g.n);
    for (int r = 0; r < g.n; ++r) bend_of_col[g.xpos[r]] = r;
    for (const auto& cr : grid_crossings(g))
        plan.constraints.push_back({cr.row, bend_of_col[cr.col]});

    // Kahn topological order; ties broken under < neutral < over, then by
    // input order, which stacks untwisted diagrams in class layers.
    auto rank = [&](int b) {
        switch (plan.classes[b]) {
            case BendClass::under: return 0;
            case BendClass::neutral: return 1;
            case BendClass::over: return 2;
            case BendClass::twisted: return 1;
        }
        return 1;
    };
    std::vector<int> indegree(g.n, 0);
    std::vector<std::vector<int>> out_edges(g.n);
    for (auto [lo, hi] : plan.constraints) {
        ++indegree[hi];
        out_edges[lo].push_back(hi);
    }
    std::vector<int> order;
    std::vector<bool> placed(g.n, false);
    for (int step = 0; step < g.n; ++step) {
        int pick = -1;
        for (int b = 0; b < g.n; ++b) {
            if (placed[b] || indegree[b] > 0) continue;
            if (pick < 0 || rank(b) < rank(pick)) pick = b;
        }
        if (pick < 0)
            throw ConstraintCycle(
                "over/under constraints admit no stacking; twisted bends obstruct the lift");
        placed[pick] = true;
        order.push_back(pick);
        for (int next : out_edges[pick]) --indegree[next];
    }
    plan.levels.assign(g.n, 0);
    for (int level = 0; level < g.n; ++level) plan.levels[order[level]] = level;
    return plan;
}

CubeDiagram stacked_cube(const GridDiagram& g, const std::vector<int>& levels) {
    require_valid(g);
    if ((int)levels.size() != g.n) throw InvalidInput("level assignment has wrong length");
    std::vector<int> xinv(g.n, -1);
    for (int r = 0; r < g.n; ++r) xinv[g.xpos[r]] = r;

    CubeDiagram d;
    d.n = g.n;
    for (int r = 0; r < g.n; ++r) {
        d.X.push_back({g.opos[r], r, levels[xinv[g.opos[r]]]});
        d.Y.push_back({g.opos[r], r, levels[r]});
        d.Z.push_back({g.xpos[r], r, levels[r]});
    }
    return d;
}

std::vector<CrossingViolation> crossing_violations(const CubeDiagram& d) {
    auto segments = link_segments(d);
    struct Proj { Plane plane; int a, b, w; SegmentFamily apar, bpar; };
    const Proj projections[3] = {
        {Plane::xy, 0, 1, 2, SegmentFamily::YZ, SegmentFamily::ZX},
        {Plane::yz, 1, 2, 0, SegmentFamily::ZX, SegmentFamily::XY},
        {Plane::zx, 2, 0, 1, SegmentFamily::XY, SegmentFamily::YZ},
    };
    auto get = [](const Cell3& c, int axis) { return axis == 0 ? c.x : axis == 1 ? c.y : c.z; };

    std::vector<CrossingViolation> out;
    for (const auto& pr : projections)
        for (const auto& su : segments) {
            if (su.family != pr.apar) continue;
            int alo = std::min(get(su.from, pr.a), get(su.to, pr.a));
            int ahi = std::max(get(su.from, pr.a), get(su.to, pr.a));
            int b0 = get(su.from, pr.b), wu = get(su.from, pr.w);
            for (const auto& so : segments) {
                if (so.family != pr.bpar) continue;
                int blo = std::min(get(so.from, pr.b), get(so.to, pr.b));
                int bhi = std::max(get(so.from, pr.b), get(so.to, pr.b));
                int a0 = get(so.from, pr.a), wo = get(so.from, pr.w);
                if (alo < a0 && a0 < ahi && blo < b0 && b0 < bhi && wu > wo)
                    out.push_back({pr.plane, su, so});
            }
        }
    return out;
}

namespace {

long long crossing_count(const CubeDiagram& d, Plane plane) {
    auto segments = link_segments(d);
    struct Proj { int a, b; SegmentFamily apar, bpar; };
    Proj pr = plane == Plane::xy ? Proj{0, 1, SegmentFamily::YZ, SegmentFamily::ZX}
              : plane == Plane::yz ? Proj{1, 2, SegmentFamily::ZX, SegmentFamily::XY}
                                   : Proj{2, 0, SegmentFamily::XY, SegmentFamily::YZ};
    auto get = [](const Cell3& c, int axis) { return axis == 0 ? c.x : axis == 1 ? c.y : c.z; };
    long long count = 0;
    for (const auto& su : segments) {
        if (su.family != pr.apar) continue;
        int alo = std::min(get(su.from, pr.a), get(su.to, pr.a));
        int ahi = std::max(get(su.from, pr.a), get(su.to, pr.a));
        int b0 = get(su.from, pr.b);
        for (const auto& so : segments) {
            if (so.family != pr.bpar) continue;
            int blo = std::min(get(so.from, pr.b), get(so.to, pr.b));
            int bhi = std::max(get(so.from, pr.b), get(so.to, pr.b));
            int a0 = get(so.from, pr.a);
            if (alo < a0 && a0 < ahi && blo < b0 && b0 < bhi) ++count;
        }
    }
    return count;
}

void insert_slab(CubeDiagram& d, Axis axis, int gap, std::vector<int*> tracked) {
    for (MarkFamily f : {MarkFamily::X, MarkFamily::Y, MarkFamily::Z})
        for (auto& c : d.family(f)) {
            int& v = axis == Axis::x ? c.x : axis == Axis::y ? c.y : c.z;
            if (v >= gap) ++v;
        }
    for (int* t : tracked)
        if (*t >= gap) ++*t;
}

long long plane_violation_count(const std::vector<CrossingViolation>& vs, Plane p) {
    return std::count_if(vs.begin(), vs.end(),
                         [&](const CrossingViolation& v) { return v.plane == p; });
}

// Surgery in the (y,z)-projection: the y-parallel segment Z_a -> X_b passes
// over the z-parallel segment at (x1, y1); reroute the part of it past y1
// through a dip at a new x-slab left of x1.
CubeDiagram surgery_yz(const CubeDiagram& d, const CrossingViolation& site) {
    const Segment& under = site.first_axis_segment;  // ZX family, wrongly over
    const Segment& over = site.second_axis_segment;  // XY family
    if (under.family != SegmentFamily::ZX || over.family != SegmentFamily::XY)
        throw InvalidInput("surgery site segments do not match the (y,z)-projection");

    const int x0 = under.from.x, z0 = under.from.z;
    const int ya = under.from.y, yb = under.to.y;
    const int x1 = over.from.x, y1 = over.from.y;
    const int zc_lo = std::min(over.from.z, over.to.z), zc_hi = std::max(over.from.z, over.to.z);
    if (!(std::min(ya, yb) < y1 && y1 < std::max(ya, yb) && zc_lo < z0 && z0 < zc_hi && x0 > x1))
        throw InvalidInput("cited (y,z) crossing violation is not present in the diagram");

    auto base_violations = crossing_violations(d);
    long long base_xy = crossing_count(d, Plane::xy);
    long long base_zx = crossing_count(d, Plane::zx);

    for (int xi0 = 0; xi0 <= x1; ++xi0) {
        for (int xprime_side = 0; xprime_side < 2; ++xprime_side) {
            for (int zside = 0; zside < 2; ++zside) {
                CubeDiagram trial = d;
                int tx0 = x0, tz0 = z0, tya = ya, tyb = yb, ty1 = y1;
                // two x-slabs: one left of the obstruction, one next to x0
                const int xi = xi0;
                insert_slab(trial, Axis::x, xi0, {&tx0});
                const int xip = (xprime_side == 0) ? tx0 : tx0 + 1;
                insert_slab(trial, Axis::x, xip, {&tx0});
                // tight y straddle of the obstruction
                insert_slab(trial, Axis::y, ty1 + 1, {&tya, &tyb});
                insert_slab(trial, Axis::y, ty1, {&tya, &tyb});
                const int s_low = ty1, s_high = ty1 + 2;
                // dip and approach z-levels, both fresh slabs next to z0
                int zeta, zetap;
                if (zside == 0) {
                    insert_slab(trial, Axis::z, tz0 + 1, {});
                    insert_slab(trial, Axis::z, tz0 + 1, {});
                    zeta = tz0 + 1;
                    zetap = tz0 + 2;
                } else {
                    insert_slab(trial, Axis::z, tz0, {});
                    insert_slab(trial, Axis::z, tz0, {});
                    tz0 += 2;
                    zeta = tz0 - 1;
                    zetap = tz0 - 2;
                }
                trial.n = d.n + 2;

                // move the X_b end (and its paired Y) onto the new slabs
                int ixb = -1, iyb = -1;
                for (int i = 0; i < (int)trial.X.size(); ++i)
                    if (trial.X[i].x == tx0 && trial.X[i].y == tyb && trial.X[i].z == tz0) ixb = i;
                for (int i = 0; i < (int)trial.Y.size(); ++i)
                    if (trial.Y[i].x == tx0 && trial.Y[i].y == tyb) iyb = i;
                if (ixb < 0 || iyb < 0)
                    throw InternalError("surgery lost track of the segment endpoint");
                trial.X[ixb].x = xip;
                trial.X[ixb].z = zetap;
                trial.Y[iyb].x = xip;

                const int s_first = (tya < tyb) ? s_low : s_high;
                const int s_second = (tya < tyb) ? s_high : s_low;
                trial.X.push_back({tx0, s_first, tz0});
                trial.Y.push_back({tx0, s_first, zeta});
                trial.Z.push_back({xi, s_first, zeta});
                trial.X.push_back({xi, s_second, zeta});
                trial.Y.push_back({xi, s_second, zetap});
                trial.Z.push_back({xip, s_second, zetap});

                // Accept when exactly the cited projection loses exactly one
                // violation and the other projections keep their censuses.
                auto report = validate_cube(trial);
                if (!report.ok() && !report.only_crossing_violations()) continue;
                auto now = crossing_violations(trial);
                if (plane_violation_count(now, Plane::yz) !=
                    plane_violation_count(base_violations, Plane::yz) - 1)
                    continue;
                if (plane_violation_count(now, Plane::zx) !=
                    plane_violation_count(base_violations, Plane::zx))
                    continue;
                if (plane_violation_count(now, Plane::xy) !=
                    plane_violation_count(base_violations, Plane::xy))
                    continue;
                if (crossing_count(trial, Plane::xy) != base_xy) continue;
                if (crossing_count(trial, Plane::zx) != base_zx) continue;
                return trial;
            }
        }
    }
    throw SurgeryFailed("no local reroute of the cited crossing validates");
}

CrossingViolation rotate_violation(const CrossingViolation& v) {
    auto rho = [](const Cell3& c) { return Cell3{c.y, c.z, c.x}; };
    auto rot_family = [](SegmentFamily f) {
        switch (f) {
            case SegmentFamily::XY: return SegmentFamily::ZX;
            case SegmentFamily::YZ: return SegmentFamily::XY;
            case SegmentFamily::ZX: return SegmentFamily::YZ;
        }
        return SegmentFamily::XY;
    };
    CrossingViolation out;
    out.plane = Plane::yz;
    out.first_axis_segment = {rot_family(v.first_axis_segment.family), rho(v.first_axis_segment.from),
                              rho(v.first_axis_segment.to)};
    out.second_axis_segment = {rot_family(v.second_axis_segment.family),
                               rho(v.second_axis_segment.from), rho(v.second_axis_segment.to)};
    return out;
}

}  // namespace

CubeDiagram crossing_surgery(const CubeDiagram& d, const CrossingViolation& site) {
    switch (site.plane) {
        case Plane::yz:
            return surgery_yz(d, site);
        case Plane::zx:
            // a (z,x)-violation becomes a (y,z)-violation after one rotation
            return rotate_back(surgery_yz(rotate(d), rotate_violation(site)));
        case Plane::xy:
            throw InvalidInput("(x,y)-projection violations do not occur in stacked lifts");
    }
    throw InvalidInput("unknown projection");
}

std::string LiftReport::text() const {
    std::ostringstream out;
    out << "final size: " << final_size << "\n";
    out << "untwist stabilizations: " << untwist_stabilizations << "\n";
    out << "orderings searched: " << orderings_searched << "\n";
    out << "surgeries applied: " << surgeries << "\n";
    if (residual_violations.empty()) {
        out << "residual violations: none\n";
    } else {
        out << "residual violations: " << residual_violations.size() << "\n";
        for (const auto& v : residual_violations) out << "  " << v << "\n";
    }
    return out.str();
}

std::pair<CubeDiagram, LiftReport> lift_grid(const GridDiagram& g, LiftOptions opts) {
    require_valid(g);
    LiftReport report;

    GridDiagram base = untwist(g, VertexType::X);
    report.untwist_stabilizations = base.n - g.n;
    StackPlan plan = plan_stack(base);

    const int n = base.n;
    long long budget = opts.budget;
    if (budget < 0) budget = (n <= 6) ? factorial(n) : 10000;

    auto satisfies = [&](const std::vector<int>& levels) {
        for (auto [under, over] : plan.constraints)
            if (levels[over] <= levels[under]) return false;
        return true;
    };

    CubeDiagram best;
    long long best_violations = -1;
    auto consider = [&](const std::vector<int>& levels) -> bool {
        ++report.orderings_searched;
        if (!satisfies(levels)) return false;
        CubeDiagram d = stacked_cube(base, levels);
        auto violations = crossing_violations(d);
        if ((long long)violations.size() < best_violations || best_violations < 0) {
            best_violations = (long long)violations.size();
            best = d;
        }
        return violations.empty();
    };

    bool found = false;
    if (budget >= factorial(n)) {
        std::vector<int> levels(n);
        std::iota(levels.begin(), levels.end(), 0);
        do {
            if (consider(levels)) { found = true; break; }
        } while (std::next_permutation(levels.begin(), levels.end()));
    } else {
        std::mt19937_64 rng(0xc0b3d1a6u);
        std::vector<int> levels(n);
        std::iota(levels.begin(), levels.end(), 0);
        for (long long i = 0; i < budget && !found; ++i) {
            std::shuffle(levels.begin(), levels.end(), rng);
            found = consider(levels);
        }
    }

    CubeDiagram result;
    if (found) {
        result = best;
    } else {
        if (!opts.allow_surgery)
            throw BudgetExhausted((int)best_violations,
                                  "no stacking without crossing violations in " +
                                      std::to_string(report.orderings_searched) +
                                      " orderings; best has " + std::to_string(best_violations) +
                                      " violations and surgery is disabled");
        if (best_violations < 0)
            throw BudgetExhausted(-1, "no constraint-consistent stacking examined within budget");
        result = best;
        long long guard = best_violations * 3 + 8;
        for (;;) {
            auto violations = crossing_violations(result);
            if (violations.empty()) break;
            if (--guard < 0) throw SurgeryFailed("surgery loop failed to converge");
            result = crossing_surgery(result, violations.front());
            ++report.surgeries;
        }
    }

    // orient so the projection of the requested plane reproduces the input
    switch (g.orientation) {
        case Plane::xy: break;
        case Plane::yz: result = rotate_back(result); break;
        case Plane::zx: result = rotate(result); break;
    }
    require_valid(result);
    report.final_size = result.n;
    return {canonicalize(result), report};
}

}  // namespace cubeknot
