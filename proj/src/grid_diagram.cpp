#include "cubeknot/grid_diagram.hpp"

#include <algorithm>
#include <sstream>

namespace cubeknot {

std::string GridReport::text() const {
    std::ostringstream out;
    for (const auto& v : violations) out << v.message << "\n";
    return out.str();
}

GridReport validate_grid(const GridDiagram& g) {
    GridReport report;
    auto fail = [&](const std::string& m) { report.violations.push_back({m}); };

    if (g.n < 2) fail("size must be at least 2, got " + std::to_string(g.n));
    if ((int)g.xpos.size() != g.n) fail("X column list has wrong length");
    if ((int)g.opos.size() != g.n) fail("O column list has wrong length");
    if (!report.ok()) return report;

    for (int r = 0; r < g.n; ++r) {
        if (g.xpos[r] < 0 || g.xpos[r] >= g.n)
            fail("X column out of range in row " + std::to_string(r));
        if (g.opos[r] < 0 || g.opos[r] >= g.n)
            fail("O column out of range in row " + std::to_string(r));
    }
    if (!report.ok()) return report;

    std::vector<int> xcount(g.n, 0), ocount(g.n, 0);
    for (int r = 0; r < g.n; ++r) {
        ++xcount[g.xpos[r]];
        ++ocount[g.opos[r]];
    }
    for (int c = 0; c < g.n; ++c) {
        if (xcount[c] != 1)
            fail("row/column multiplicity: column " + std::to_string(c) + " holds " +
                 std::to_string(xcount[c]) + " X markings");
        if (ocount[c] != 1)
            fail("row/column multiplicity: column " + std::to_string(c) + " holds " +
                 std::to_string(ocount[c]) + " O markings");
    }
    for (int r = 0; r < g.n; ++r)
        if (g.xpos[r] == g.opos[r])
            fail("X and O share the cell (" + std::to_string(g.xpos[r]) + "," +
                 std::to_string(r) + ")");
    return report;
}

void require_valid(const GridDiagram& g) {
    auto report = validate_grid(g);
    if (!report.ok()) throw ValidationError("invalid grid diagram", report.text());
}

std::pair<int, int> row_span(const GridDiagram& g, int r) {
    return {std::min(g.xpos[r], g.opos[r]), std::max(g.xpos[r], g.opos[r])};
}

std::pair<int, int> col_span(const GridDiagram& g, int c) {
    int rx = -1, ro = -1;
    for (int r = 0; r < g.n; ++r) {
        if (g.xpos[r] == c) rx = r;
        if (g.opos[r] == c) ro = r;
    }
    return {std::min(rx, ro), std::max(rx, ro)};
}

std::vector<GridCrossing> grid_crossings(const GridDiagram& g) {
    std::vector<GridCrossing> out;
    for (int c = 0; c < g.n; ++c) {
        auto [clo, chi] = col_span(g, c);
        for (int r = clo + 1; r < chi; ++r) {
            auto [rlo, rhi] = row_span(g, r);
            if (rlo < c && c < rhi) out.push_back({c, r});
        }
    }
    return out;
}

// ---- moves ------------------------------------------------------------

namespace {

GridDiagram stabilize(const GridDiagram& g, int r, StabSide side, StabOrder order) {
    if (r < 0 || r >= g.n)
        throw IllegalMove(IllegalMove::Reason::bad_parameters, "stabilization row out of range");
    const int cx = g.xpos[r], co = g.opos[r];

    // Column gap: adjacent to the chosen marking, strictly between the two.
    int pc;
    if (side == StabSide::at_x)
        pc = (cx < co) ? cx + 1 : cx;
    else
        pc = (cx < co) ? co : co + 1;

    GridDiagram out;
    out.n = g.n + 1;
    out.orientation = g.orientation;
    auto shift_col = [&](int c) { return c >= pc ? c + 1 : c; };

    for (int i = 0; i < g.n; ++i) {
        if (i == r) {
            // Row r splits; X_1 shares the row of O_i, O_1 the row of X_i.
            int xlow, olow, xhigh, ohigh;
            if (order == StabOrder::x_low) {
                xlow = shift_col(cx); olow = pc;
                xhigh = pc; ohigh = shift_col(co);
            } else {
                xlow = pc; olow = shift_col(co);
                xhigh = shift_col(cx); ohigh = pc;
            }
            out.xpos.push_back(xlow);
            out.opos.push_back(olow);
            out.xpos.push_back(xhigh);
            out.opos.push_back(ohigh);
        } else {
            out.xpos.push_back(shift_col(g.xpos[i]));
            out.opos.push_back(shift_col(g.opos[i]));
        }
    }
    require_valid(out);
    return out;
}

GridDiagram destabilize(const GridDiagram& g, int c) {
    if (c < 0 || c >= g.n)
        throw IllegalMove(IllegalMove::Reason::bad_parameters, "destabilization column out of range");
    if (g.n <= 2)
        throw IllegalMove(IllegalMove::Reason::pattern_absent, "cannot destabilize below size 2");
    auto [lo, hi] = col_span(g, c);
    if (hi != lo + 1)
        throw IllegalMove(IllegalMove::Reason::pattern_absent,
                          "column " + std::to_string(c) + " markings are not in adjacent rows");
    // The other markings of the two rows; one of them must sit right next to
    // the column for this to be the footprint of a stabilization.
    int other_lo = (g.xpos[lo] == c) ? g.opos[lo] : g.xpos[lo];
    int other_hi = (g.xpos[hi] == c) ? g.opos[hi] : g.xpos[hi];
    if (other_lo == other_hi)
        throw IllegalMove(IllegalMove::Reason::pattern_absent,
                          "rows would merge two markings into one cell");
    if (std::abs(other_lo - c) != 1 && std::abs(other_hi - c) != 1)
        throw IllegalMove(IllegalMove::Reason::pattern_absent,
                          "no marking adjacent to the stabilized column");

    GridDiagram out;
    out.n = g.n - 1;
    out.orientation = g.orientation;
    auto unshift = [&](int col) { return col > c ? col - 1 : col; };
    for (int r = 0; r < g.n; ++r) {
        if (r == hi) continue;
        if (r == lo) {
            int xr = (g.xpos[lo] == c) ? g.xpos[hi] : g.xpos[lo];
            int orr = (g.opos[lo] == c) ? g.opos[hi] : g.opos[lo];
            out.xpos.push_back(unshift(xr));
            out.opos.push_back(unshift(orr));
        } else {
            out.xpos.push_back(unshift(g.xpos[r]));
            out.opos.push_back(unshift(g.opos[r]));
        }
    }
    require_valid(out);
    return out;
}

bool spans_commutable(std::pair<int, int> a, std::pair<int, int> b) {
    int lo = std::max(a.first, b.first);
    int hi = std::min(a.second, b.second);
    if (lo > hi) return true;   // disjoint
    if (lo == hi) return true;  // share exactly one point
    // one projection entirely contained in the other
    return (a.first >= b.first && a.second <= b.second) ||
           (b.first >= a.first && b.second <= a.second);
}

GridDiagram commute_rows(const GridDiagram& g, int r) {
    if (r < 0 || r + 1 >= g.n)
        throw IllegalMove(IllegalMove::Reason::bad_parameters, "commutation row out of range");
    if (!spans_commutable(row_span(g, r), row_span(g, r + 1)))
        throw IllegalMove(IllegalMove::Reason::interleaved,
                          "row segments " + std::to_string(r) + "," + std::to_string(r + 1) +
                              " interleave: projections overlap in more than a point and neither contains the other");
    GridDiagram out = g;
    std::swap(out.xpos[r], out.xpos[r + 1]);
    std::swap(out.opos[r], out.opos[r + 1]);
    return out;
}

GridDiagram commute_cols(const GridDiagram& g, int c) {
    if (c < 0 || c + 1 >= g.n)
        throw IllegalMove(IllegalMove::Reason::bad_parameters, "commutation column out of range");
    if (!spans_commutable(col_span(g, c), col_span(g, c + 1)))
        throw IllegalMove(IllegalMove::Reason::interleaved,
                          "column segments " + std::to_string(c) + "," + std::to_string(c + 1) +
                              " interleave: projections overlap in more than a point and neither contains the other");
    GridDiagram out = g;
    for (int r = 0; r < g.n; ++r) {
        if (out.xpos[r] == c) out.xpos[r] = c + 1;
        else if (out.xpos[r] == c + 1) out.xpos[r] = c;
        if (out.opos[r] == c) out.opos[r] = c + 1;
        else if (out.opos[r] == c + 1) out.opos[r] = c;
    }
    return out;
}

GridDiagram cyclic_rows(const GridDiagram& g, int shift) {
    GridDiagram out = g;
    int s = ((shift % g.n) + g.n) % g.n;
    for (int r = 0; r < g.n; ++r) {
        out.xpos[r] = g.xpos[(r + s) % g.n];
        out.opos[r] = g.opos[(r + s) % g.n];
    }
    return out;
}

GridDiagram cyclic_cols(const GridDiagram& g, int shift) {
    GridDiagram out = g;
    int s = ((shift % g.n) + g.n) % g.n;
    for (int r = 0; r < g.n; ++r) {
        out.xpos[r] = ((g.xpos[r] - s) % g.n + g.n) % g.n;
        out.opos[r] = ((g.opos[r] - s) % g.n + g.n) % g.n;
    }
    return out;
}

}  // namespace

GridDiagram apply_grid_move(const GridDiagram& g, const GridMove& m) {
    require_valid(g);
    switch (m.kind) {
        case GridMove::Kind::stabilize: return stabilize(g, m.index, m.side, m.order);
        case GridMove::Kind::destabilize: return destabilize(g, m.index);
        case GridMove::Kind::commute_rows: return commute_rows(g, m.index);
        case GridMove::Kind::commute_cols: return commute_cols(g, m.index);
        case GridMove::Kind::cyclic_rows: return cyclic_rows(g, m.shift);
        case GridMove::Kind::cyclic_cols: return cyclic_cols(g, m.shift);
    }
    throw IllegalMove(IllegalMove::Reason::bad_parameters, "unknown move kind");
}

// ---- bends ------------------------------------------------------------

std::vector<std::pair<Bend, BendClass>> classify_bends(const GridDiagram& g, VertexType vt) {
    require_valid(g);
    auto crossings = grid_crossings(g);
    std::vector<int> col_of_bend(g.n);  // bend of row r owns this column segment
    for (int r = 0; r < g.n; ++r)
        col_of_bend[r] = (vt == VertexType::X) ? g.xpos[r] : g.opos[r];

    std::vector<std::pair<Bend, BendClass>> out;
    for (int r = 0; r < g.n; ++r) {
        Bend b;
        b.row = r;
        b.col = col_of_bend[r];
        b.vertex = {b.col, r};
        b.row_seg = row_span(g, r);
        b.col_seg = col_span(g, b.col);
        for (const auto& cr : crossings) {
            if (cr.row == r) ++b.under_count;       // row segment passes under
            if (cr.col == b.col) ++b.over_count;    // column segment passes over
        }
        BendClass cls;
        if (b.under_count && b.over_count) cls = BendClass::twisted;
        else if (b.over_count) cls = BendClass::over;
        else if (b.under_count) cls = BendClass::under;
        else cls = BendClass::neutral;
        out.push_back({b, cls});
    }
    return out;
}

GridDiagram untwist(const GridDiagram& g, VertexType vt) {
    require_valid(g);
    GridDiagram cur = g;
    int initial_twisted = 0;
    for (const auto& [b, cls] : classify_bends(cur, vt))
        if (cls == BendClass::twisted) ++initial_twisted;

    int steps = 0;
    for (;;) {
        auto bends = classify_bends(cur, vt);
        auto it = std::find_if(bends.begin(), bends.end(),
                               [](const auto& bc) { return bc.second == BendClass::twisted; });
        if (it == bends.end()) break;
        GridMove m;
        m.kind = GridMove::Kind::stabilize;
        m.index = it->first.row;
        m.side = (vt == VertexType::X) ? StabSide::at_x : StabSide::at_o;
        m.order = StabOrder::x_low;
        cur = apply_grid_move(cur, m);
        if (++steps > initial_twisted)
            throw InternalError("untwist did not converge in one stabilization per twisted bend");
    }
    if (cur.n != g.n + initial_twisted)
        throw InternalError("untwist size bookkeeping failed");
    return cur;
}

}  // namespace cubeknot
