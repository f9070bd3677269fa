#include "cubeknot/selftest.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "cubeknot/homology.hpp"
#include "cubeknot/io.hpp"
#include "cubeknot/lifting.hpp"
#include "cubeknot/render.hpp"
#include "cubeknot/samples.hpp"

namespace cubeknot {

namespace {

struct Failure {
    std::string message;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

std::vector<Point3> random_points(std::mt19937_64& rng, int count, int doubled_range) {
    std::uniform_int_distribution<int> dist(0, doubled_range);
    std::vector<Point3> pts;
    for (int i = 0; i < count; ++i) pts.push_back({dist(rng), dist(rng), dist(rng)});
    return pts;
}

void check_lattice(std::mt19937_64& rng) {
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_points(rng, 5, 12), b = random_points(rng, 5, 12);
        for (Plane p : {Plane::xy, Plane::yz, Plane::zx}) {
            long long fwd = i_pair(a, b, p), bwd = i_pair(b, a, p);
            expect(fwd + bwd <= 25, "pair count exceeds |A||B|");
            auto [c1, c2] = plane_coords(p);
            bool ties = false;
            for (const auto& pa : a)
                for (const auto& pb : b)
                    if (pa[c1] == pb[c1] || pa[c2] == pb[c2]) ties = true;
            expect((fwd + bwd == 25) == !ties, "pair-count equality must match tie-freeness");

            FormalPointSum A(a), B(b), C(random_points(rng, 4, 12));
            expect(j_pair(A, B, p) == j_pair(B, A, p), "J must be symmetric");
            Rat lhs = j_pair(A - C, B, p);
            Rat rhs = j_pair(A, B, p) - j_pair(C, B, p);
            expect(lhs == rhs, "J must be bilinear");

            // projection compatibility
            std::vector<std::pair<Point2, Rat>> a2, b2;
            for (const auto& pt : a) a2.push_back({project_point(pt, p), Rat(1)});
            for (const auto& pt : b) b2.push_back({project_point(pt, p), Rat(1)});
            expect(j_pair(A, B, p) == j_pair2(a2, b2), "J must commute with projection");
        }
    }
    // distinct-coordinate sets have integral self-pairing
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4;
        std::vector<int> px(n), py(n), pz(n);
        for (auto* v : {&px, &py, &pz}) {
            std::iota(v->begin(), v->end(), 0);
            std::shuffle(v->begin(), v->end(), rng);
        }
        std::vector<Point3> pts;
        for (int i = 0; i < n; ++i) pts.push_back({2 * px[i], 2 * py[i], 2 * pz[i]});
        FormalPointSum S(pts);
        for (Plane p : {Plane::xy, Plane::yz, Plane::zx})
            expect(j_pair(S, S, p).is_integer(), "self-pairing of a state must be an integer");
    }
}

void check_grid_moves(std::mt19937_64& rng) {
    for (const GridDiagram& g : {samples::unknot_grid_2(), samples::trefoil_grid_5(),
                                 samples::twisted_bend_grid_6()}) {
        expect(validate_grid(g).ok(), "sample grid must validate");
        // stabilize/destabilize round trip, all four variants
        for (StabSide side : {StabSide::at_x, StabSide::at_o})
            for (StabOrder order : {StabOrder::x_low, StabOrder::x_high})
                for (int r = 0; r < g.n; ++r) {
                    GridMove m{GridMove::Kind::stabilize, r, 0, side, order};
                    GridDiagram s = apply_grid_move(g, m);
                    int cx = g.xpos[r], co = g.opos[r];
                    int pc = side == StabSide::at_x ? (cx < co ? cx + 1 : cx)
                                                    : (cx < co ? co : co + 1);
                    GridMove d{GridMove::Kind::destabilize, pc, 0, side, order};
                    expect(apply_grid_move(s, d).xpos == g.xpos &&
                               apply_grid_move(s, d).opos == g.opos,
                           "destabilization must invert stabilization");
                }
        // commutation is an involution where legal
        for (int r = 0; r + 1 < g.n; ++r) {
            try {
                GridDiagram c = apply_grid_move(g, {GridMove::Kind::commute_rows, r});
                GridDiagram cc = apply_grid_move(c, {GridMove::Kind::commute_rows, r});
                expect(cc.xpos == g.xpos && cc.opos == g.opos, "row commutation must be an involution");
            } catch (const IllegalMove&) {
            }
        }
        // cyclic permutation composes to the identity
        GridDiagram c = apply_grid_move(g, {GridMove::Kind::cyclic_rows, 0, 1});
        GridDiagram cc = apply_grid_move(c, {GridMove::Kind::cyclic_rows, 0, g.n - 1});
        expect(cc.xpos == g.xpos && cc.opos == g.opos, "cyclic permutations must compose to identity");
    }

    // a bend is twisted exactly when both of its segments carry a crossing
    for (const GridDiagram& g : {samples::trefoil_grid_5(), samples::twisted_bend_grid_6(),
                                 samples::constraint_cycle_grid_6()})
        for (auto& [b, cls] : classify_bends(g, VertexType::X)) {
            bool both = b.under_count > 0 && b.over_count > 0;
            expect(both == (cls == BendClass::twisted), "twisted iff both segments crossed");
        }

    GridDiagram tw = samples::twisted_bend_grid_6();
    auto bends = classify_bends(tw, VertexType::X);
    expect(std::any_of(bends.begin(), bends.end(),
                       [](auto& bc) { return bc.second == BendClass::twisted; }),
           "twisted sample must have a twisted bend");
    GridDiagram untw = untwist(tw, VertexType::X);
    for (auto& [b, cls] : classify_bends(untw, VertexType::X))
        expect(cls != BendClass::twisted, "untwist must remove twisted bends");
    expect(untwist(untw, VertexType::X).n == untw.n, "untwist must be idempotent");
    (void)rng;
}

void check_cube_basics() {
    CubeDiagram u2 = samples::unknot_cube_2();
    expect(validate_cube(u2).ok(), "unknot cube must validate");
    for (Plane p : {Plane::xy, Plane::yz, Plane::zx}) {
        GridDiagram g = project_cube(u2, p);
        expect(validate_grid(g).ok(), "projection must be a valid grid");
        expect(g.n == u2.n, "projection must preserve size");
    }
    expect(traverse_link(u2).size() == 1, "unknot cube must have one component");
    expect(traverse_link(direct_sum(u2, u2)).size() == 2, "direct sum must have two components");

    for (const CubeDiagram& d : enumerate_cube_diagrams(2))
        for (Plane p : {Plane::xy, Plane::yz, Plane::zx})
            expect(validate_grid(project_cube(d, p)).ok(), "every projection must validate");

    // stabilize/destabilize round trip in all three variants
    for (SegmentFamily f : {SegmentFamily::XY, SegmentFamily::YZ, SegmentFamily::ZX}) {
        CubeMove stab{CubeMove::Kind::stabilize, f, 0, {}};
        CubeDiagram s = apply_cube_move(u2, stab);
        expect(s.n == 3, "stabilization must grow the size by one");
        bool undone = false;
        for (int k = 0; k < s.n && !undone; ++k) {
            try {
                CubeMove destab{CubeMove::Kind::destabilize, f, k, {}};
                if (apply_cube_move(s, destab) == canonicalize(u2)) undone = true;
            } catch (const IllegalMove&) {
            }
        }
        expect(undone, "destabilization must invert stabilization");
    }

    // commutation is an involution where legal
    CubeDiagram c = apply_cube_move(u2, {CubeMove::Kind::commute, SegmentFamily::XY, 0, {Axis::x, 0}});
    CubeDiagram cc = apply_cube_move(c, {CubeMove::Kind::commute, SegmentFamily::XY, 0, {Axis::x, 0}});
    expect(canonicalize(cc) == canonicalize(u2), "flat commutation must be an involution");
}

void check_lift(bool quick) {
    auto [cube, report] = lift_grid(samples::unknot_grid_2());
    expect(report.success() && report.surgeries == 0, "unknot lift must succeed by stacking");
    GridDiagram back = project_cube(cube, Plane::xy);
    expect(back.xpos == samples::unknot_grid_2().xpos && back.opos == samples::unknot_grid_2().opos,
           "lift must project back to its input");

    try {
        plan_stack(samples::constraint_cycle_grid_6());
        expect(false, "cyclic constraints must be detected");
    } catch (const ConstraintCycle&) {
    }

    if (!quick) {
        LiftOptions opts;
        opts.budget = 120;
        opts.allow_surgery = false;
        auto [tre, trep] = lift_grid(samples::trefoil_grid_5(), opts);
        expect(trep.success() && trep.untwist_stabilizations == 0 && tre.n == 5,
               "trefoil sample must lift by stacking alone");
    }

    // surgery: force the known bad stacking of the split-link sample
    GridDiagram surg = samples::split_link_grid_4();
    std::vector<int> levels = {0, 1, 2, 3};
    CubeDiagram bad = stacked_cube(surg, levels);
    auto violations = crossing_violations(bad);
    expect(violations.size() == 1 && violations[0].plane == Plane::yz,
           "surgery sample must have exactly one (y,z) violation");
    CubeDiagram fixed = crossing_surgery(bad, violations[0]);
    expect(validate_cube(fixed).ok() && fixed.n == surg.n + 2,
           "surgery must produce a valid diagram two sizes up");
    try {
        crossing_surgery(fixed, violations[0]);
        expect(false, "surgery on a clean diagram must be rejected");
    } catch (const InvalidInput&) {
    }
}

void check_homology(std::mt19937_64& rng, bool quick) {
    CubeDiagram u2 = samples::unknot_cube_2();
    expect((int)enumerate_cube_states(2).size() == 4, "(2!)^2 cube states");
    expect((int)enumerate_cube_states(3).size() == 36, "(3!)^2 cube states");

    // frozen gradings of the unknot cube
    CubeState sa{{0, 1}, {0, 1}};
    CubeState sb{{0, 1}, {1, 0}};
    auto ga = cube_gradings(u2, sa, Axis::y, false);
    auto gb = cube_gradings(u2, sb, Axis::y, false);
    expect(ga.M.twice == -2 && ga.A.twice == 2, "gradings of the diagonal state");
    expect(gb.M.twice == -4 && gb.A.twice == 0, "gradings of the split state");

    // differential bookkeeping on every cube state of the samples
    std::vector<CubeDiagram> fixtures = {u2};
    if (!quick) fixtures.push_back(apply_cube_move(u2, {CubeMove::Kind::stabilize, SegmentFamily::XY, 0, {}}));
    for (const auto& d : fixtures)
        for (Axis axis : {Axis::x, Axis::y, Axis::z})
            for (const auto& s : enumerate_cube_states(d.n)) {
                expect(differential_squared(d, s, axis, Variant::minus).empty(),
                       "minus differential must square to zero");
                auto gs = cube_gradings(d, s, axis, false);
                for (const auto& term : differential(d, s, axis, Variant::minus)) {
                    auto gt = cube_gradings(d, term.state, axis, false);
                    int degree = 0;
                    for (auto e : term.expo) degree += e;
                    expect(gs.M.twice - gt.M.twice - 4 * degree == 2,
                           "Maslov drop must be one after monomial correction");
                    expect(gs.A.twice >= gt.A.twice, "Alexander level must not increase");
                }
                for (const auto& term : differential(d, s, axis, Variant::tilde)) {
                    auto gt = cube_gradings(d, term.state, axis, false);
                    expect(gs.M.twice - gt.M.twice == 2 && gs.A.twice == gt.A.twice,
                           "tilde differential must be bigraded");
                }
            }

    // projection consistency, psi and the tensor identity
    for (const auto& s : enumerate_cube_states(2)) {
        auto g = cube_gradings(u2, s, Axis::y, false);
        auto gxy = grid_gradings(project_cube(u2, Plane::xy), project_state(s, Plane::xy), false);
        auto gyz = grid_gradings(project_cube(u2, Plane::yz), project_state(s, Plane::yz), false);
        expect(g.M_first == gxy.M && g.A_first == gxy.A, "xy constituents must match the grid");
        expect(g.M_second == gyz.M && g.A_second == gyz.A, "yz constituents must match the grid");
        expect(psi(project_state(s, Plane::xy), project_state(s, Plane::yz), Axis::y) == s,
               "psi must invert the projections");
    }
    for (Variant v : {Variant::minus, Variant::tilde, Variant::filtered_hat})
        expect(check_tensor_iso(u2, Axis::y, v), "tensor identity on the unknot cube");

    // homology tables
    DimTable u2_table = homology_table(u2, Axis::y, Variant::tilde, true);
    DimTable expected;
    expected.dims[{0, 0}] = 1;
    expected.dims[{-2, -2}] = 2;
    expected.dims[{-4, -4}] = 1;
    expect(u2_table == expected, "normalized unknot cube table");
    expect(homology_table(u2, Axis::x, Variant::tilde, true) == u2_table &&
               homology_table(u2, Axis::z, Variant::tilde, true) == u2_table,
           "axis symmetry on the unknot cube");

    // rank routine
    SparseF2Matrix m;
    m.cols = 3;
    m.add_row({0, 1});
    m.add_row({1, 2});
    m.add_row({0, 2});
    expect(f2_rank(m) == 2, "GF(2) rank of the 3-cycle matrix");

    if (!quick) {
        auto [tre, rep] = lift_grid(samples::trefoil_grid_5(), {});
        std::uniform_int_distribution<long long> dist(0, 14399);
        for (int i = 0; i < 40; ++i) {
            CubeState s = cube_state_from_id(5, dist(rng));
            expect(differential_squared(tre, s, Axis::y, Variant::minus).empty(),
                   "minus differential must square to zero on the trefoil cube");
        }
        expect(check_tensor_iso(tre, Axis::y, Variant::tilde),
               "tensor identity on the trefoil cube");
    }
}

void check_toolkit() {
    // serialization round trips
    GridDiagram g = samples::trefoil_grid_5();
    expect(serialize(parse_grid(serialize(g))) == serialize(g), "grid serialization round trip");
    CubeDiagram u2 = samples::unknot_cube_2();
    expect(serialize(parse_cube(serialize(u2))) == serialize(u2), "cube serialization round trip");

    // render gap census equals the crossing census
    RenderScene scene = build_scene(g);
    expect(scene.crossing_count() == (long long)grid_crossings(g).size(),
           "render gaps must match the crossing census");
    std::string svg = render_svg(scene);
    expect(svg.rfind("<svg", 0) == 0 && svg.find("</svg>") != std::string::npos,
           "render must emit a complete SVG document");
    expect(render_svg(scene) == svg, "rendering must be deterministic");
}

}  // namespace

bool selftest(bool quick, std::ostream& log) {
    std::mt19937_64 rng(0x5e1f7e57u);
    struct Section {
        const char* name;
        std::function<void()> run;
    };
    std::vector<Section> sections = {
        {"lattice", [&] { check_lattice(rng); }},
        {"grid moves", [&] { check_grid_moves(rng); }},
        {"cube diagrams", [&] { check_cube_basics(); }},
        {"lifting", [&] { check_lift(quick); }},
        {"homology", [&] { check_homology(rng, quick); }},
        {"toolkit", [&] { check_toolkit(); }},
    };
    for (auto& section : sections) {
        try {
            section.run();
            log << "ok " << section.name << "\n";
        } catch (const Failure& f) {
            log << "FAIL " << section.name << ": " << f.message << "\n";
            return false;
        } catch (const std::exception& e) {
            log << "FAIL " << section.name << ": unexpected error: " << e.what() << "\n";
            return false;
        }
    }
    log << "all sections passed\n";
    return true;
}

}  // namespace cubeknot
