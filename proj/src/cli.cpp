#include "cubeknot/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cubeknot/homology.hpp"
#include "cubeknot/io.hpp"
#include "cubeknot/lifting.hpp"
#include "cubeknot/render.hpp"
#include "cubeknot/selftest.hpp"

namespace cubeknot::cli {

namespace {

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

Plane plane_arg(const std::string& s) {
    if (s == "xy") return Plane::xy;
    if (s == "yz") return Plane::yz;
    if (s == "zx") return Plane::zx;
    throw InvalidInput("unknown plane '" + s + "' (expected xy, yz or zx)");
}

Axis axis_arg(const std::string& s) {
    if (s == "x") return Axis::x;
    if (s == "y") return Axis::y;
    if (s == "z") return Axis::z;
    throw InvalidInput("unknown axis '" + s + "' (expected x, y or z)");
}

SegmentFamily family_arg(const std::string& s) {
    if (s == "XY") return SegmentFamily::XY;
    if (s == "YZ") return SegmentFamily::YZ;
    if (s == "ZX") return SegmentFamily::ZX;
    throw InvalidInput("unknown segment family '" + s + "' (expected XY, YZ or ZX)");
}

int int_arg(const std::string& s) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InvalidInput("expected an integer, got '" + s + "'");
    }
}

int run_validate(const std::string& path) {
    Diagram d = parse_diagram(read_file(path));
    std::string report;
    if (auto* g = std::get_if<GridDiagram>(&d))
        report = validate_grid(*g).text();
    else
        report = validate_cube(std::get<CubeDiagram>(d)).text();
    if (report.empty()) {
        std::cout << "valid\n";
        return 0;
    }
    std::cout << report;
    return 1;
}

int run_move(const std::string& path, const std::vector<std::string>& stab,
             const std::vector<std::string>& destab, const std::vector<std::string>& commute,
             const std::vector<std::string>& cyclic, const std::string& out_path) {
    int given = !stab.empty() + !destab.empty() + !commute.empty() + !cyclic.empty();
    if (given != 1)
        throw InvalidInput("exactly one of --stabilize/--destabilize/--commute/--cyclic");

    Diagram d = load_diagram(path);
    if (auto* g = std::get_if<GridDiagram>(&d)) {
        GridMove m;
        if (!stab.empty()) {
            if (stab.size() != 2)
                throw InvalidInput("--stabilize <row> <xlow|xhigh|olow|ohigh> for grid files");
            m.kind = GridMove::Kind::stabilize;
            m.index = int_arg(stab[0]);
            const std::string& v = stab[1];
            if (v == "xlow") { m.side = StabSide::at_x; m.order = StabOrder::x_low; }
            else if (v == "xhigh") { m.side = StabSide::at_x; m.order = StabOrder::x_high; }
            else if (v == "olow") { m.side = StabSide::at_o; m.order = StabOrder::x_low; }
            else if (v == "ohigh") { m.side = StabSide::at_o; m.order = StabOrder::x_high; }
            else throw InvalidInput("unknown stabilization variant '" + v + "'");
        } else if (!destab.empty()) {
            if (destab.size() != 1) throw InvalidInput("--destabilize <column> for grid files");
            m.kind = GridMove::Kind::destabilize;
            m.index = int_arg(destab[0]);
        } else if (!commute.empty()) {
            if (commute.size() != 2 || (commute[0] != "rows" && commute[0] != "cols"))
                throw InvalidInput("--commute <rows|cols> <index> for grid files");
            m.kind = commute[0] == "rows" ? GridMove::Kind::commute_rows
                                          : GridMove::Kind::commute_cols;
            m.index = int_arg(commute[1]);
        } else {
            if (cyclic.size() != 2 || (cyclic[0] != "rows" && cyclic[0] != "cols"))
                throw InvalidInput("--cyclic <rows|cols> <shift> for grid files");
            m.kind = cyclic[0] == "rows" ? GridMove::Kind::cyclic_rows
                                         : GridMove::Kind::cyclic_cols;
            m.shift = int_arg(cyclic[1]);
        }
        emit(out_path, serialize(apply_grid_move(*g, m)));
        return 0;
    }

    const CubeDiagram& c = std::get<CubeDiagram>(d);
    CubeMove m;
    if (!stab.empty()) {
        if (stab.size() != 2) throw InvalidInput("--stabilize <XY|YZ|ZX> <site> for cube files");
        m.kind = CubeMove::Kind::stabilize;
        m.family = family_arg(stab[0]);
        m.site = int_arg(stab[1]);
    } else if (!destab.empty()) {
        if (destab.size() != 2) throw InvalidInput("--destabilize <XY|YZ|ZX> <flat> for cube files");
        m.kind = CubeMove::Kind::destabilize;
        m.family = family_arg(destab[0]);
        m.site = int_arg(destab[1]);
    } else if (!commute.empty()) {
        if (commute.size() != 2) throw InvalidInput("--commute <x|y|z> <flat> for cube files");
        m.kind = CubeMove::Kind::commute;
        m.flat = {axis_arg(commute[0]), int_arg(commute[1])};
    } else {
        throw InvalidInput("--cyclic applies to grid files only");
    }
    emit(out_path, serialize(apply_cube_move(c, m)));
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"cube diagram toolkit"};
    app.require_subcommand(1);

    std::string in_path, out_path, plane_s = "xy", axis_s = "y", variant_s = "tilde";
    bool normalize = false, no_surgery = false, quick = false;
    long long budget = -1;
    std::vector<std::string> stab, destab, commute, cyclic;

    auto* validate = app.add_subcommand("validate", "check a diagram file, report violations");
    validate->add_option("file", in_path)->required();

    auto* project = app.add_subcommand("project", "project a cube diagram to a grid diagram");
    project->add_option("file", in_path)->required();
    project->add_option("--plane", plane_s, "xy, yz or zx");
    project->add_option("-o,--output", out_path);

    auto* lift = app.add_subcommand("lift", "lift a grid diagram to a cube diagram");
    lift->add_option("file", in_path)->required();
    lift->add_option("--budget", budget, "orderings to search");
    lift->add_flag("--no-surgery", no_surgery);
    lift->add_option("-o,--output", out_path);

    auto* move = app.add_subcommand("move", "apply a move to a diagram");
    move->add_option("file", in_path)->required();
    move->add_option("--stabilize", stab)->expected(-1);
    move->add_option("--destabilize", destab)->expected(-1);
    move->add_option("--commute", commute)->expected(-1);
    move->add_option("--cyclic", cyclic)->expected(-1);
    move->add_option("-o,--output", out_path);

    auto* homology = app.add_subcommand("homology", "cube homology dimension table");
    homology->add_option("file", in_path)->required();
    homology->add_option("--axis", axis_s, "x, y or z");
    homology->add_option("--variant", variant_s, "tilde or filtered-hat");
    homology->add_flag("--normalize", normalize);
    homology->add_option("-o,--output", out_path);

    auto* gridhomology = app.add_subcommand("gridhomology", "grid homology dimension table");
    gridhomology->add_option("file", in_path)->required();
    gridhomology->add_option("--variant", variant_s, "tilde or filtered-hat");
    gridhomology->add_flag("--normalize", normalize);
    gridhomology->add_option("-o,--output", out_path);

    auto* render = app.add_subcommand("render", "render a diagram as SVG");
    render->add_option("file", in_path)->required();
    render->add_option("--plane", plane_s, "projection plane for cube files");
    render->add_option("-o,--output", out_path)->required();

    auto* selftest_cmd = app.add_subcommand("selftest", "run the built-in property suite");
    selftest_cmd->add_flag("--quick", quick, "skip the larger fixtures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (validate->parsed()) return run_validate(in_path);

        if (project->parsed()) {
            Diagram d = load_diagram(in_path);
            auto* c = std::get_if<CubeDiagram>(&d);
            if (!c) throw InvalidInput("project expects a cube diagram file");
            emit(out_path, serialize(project_cube(*c, plane_arg(plane_s))));
            return 0;
        }

        if (lift->parsed()) {
            Diagram d = load_diagram(in_path);
            auto* g = std::get_if<GridDiagram>(&d);
            if (!g) throw InvalidInput("lift expects a grid diagram file");
            LiftOptions opts;
            opts.budget = budget;
            opts.allow_surgery = !no_surgery;
            auto [cube, report] = lift_grid(*g, opts);
            if (out_path.empty()) {
                std::cout << serialize(cube);
                std::cerr << report.text();
            } else {
                write_file(out_path, serialize(cube));
                std::cout << report.text();
            }
            return 0;
        }

        if (move->parsed()) return run_move(in_path, stab, destab, commute, cyclic, out_path);

        if (homology->parsed()) {
            Diagram d = load_diagram(in_path);
            auto* c = std::get_if<CubeDiagram>(&d);
            if (!c) throw InvalidInput("homology expects a cube diagram file");
            auto table = homology_table(*c, axis_arg(axis_s), variant_from_string(variant_s),
                                        normalize);
            emit(out_path, poincare_text(table, variant_from_string(variant_s), axis_s, normalize,
                                         diagram_hash(*c)));
            return 0;
        }

        if (gridhomology->parsed()) {
            Diagram d = load_diagram(in_path);
            auto* g = std::get_if<GridDiagram>(&d);
            if (!g) throw InvalidInput("gridhomology expects a grid diagram file");
            auto table = grid_homology_table(*g, variant_from_string(variant_s), normalize);
            emit(out_path, poincare_text(table, variant_from_string(variant_s), "-", normalize,
                                         diagram_hash(*g)));
            return 0;
        }

        if (render->parsed()) {
            Diagram d = load_diagram(in_path);
            std::string svg;
            if (auto* g = std::get_if<GridDiagram>(&d))
                svg = render_svg(*g);
            else
                svg = render_svg(std::get<CubeDiagram>(d), plane_arg(plane_s));
            emit(out_path, svg);
            return 0;
        }

        if (selftest_cmd->parsed()) return selftest(quick, std::cout) ? 0 : 4;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n" << e.report;
        return 1;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const IllegalMove& e) {
        std::cerr << "illegal move: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const SurgeryFailed& e) {
        std::cerr << "surgery failed: " << e.what() << "\n";
        return 3;
    } catch (const ConstraintCycle& e) {
        std::cerr << "constraint cycle: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}

}  // namespace cubeknot::cli
