// Oriented grid diagrams: validation, the move calculus (stabilization,
// destabilization, commutation, cyclic permutation) and bend analysis.
//
// Rows are indexed bottom-to-top by the second axis of the orientation,
// columns left-to-right by the first axis.  Row segments run from the O to
// the X of the row; column segments from the X to the O.  At a transverse
// crossing the column segment (parallel to the second axis) is on top.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubeknot/errors.hpp"
#include "cubeknot/lattice.hpp"

namespace cubeknot {

struct GridDiagram {
    int n = 0;
    Plane orientation = Plane::xy;
    std::vector<int> xpos;  // xpos[r] = column of the X marking in row r
    std::vector<int> opos;  // opos[r] = column of the O marking in row r
};

struct GridViolation {
    std::string message;
};

struct GridReport {
    std::vector<GridViolation> violations;
    bool ok() const { return violations.empty(); }
    std::string text() const;
};

GridReport validate_grid(const GridDiagram& g);
void require_valid(const GridDiagram& g);  // throws ValidationError

// Transverse crossing between the column segment of `col` and the row
// segment of `row`; the column segment is the overcrossing strand.
struct GridCrossing {
    int col = 0;
    int row = 0;
};

// Closed span helpers, in cell indices.
std::pair<int, int> row_span(const GridDiagram& g, int r);
std::pair<int, int> col_span(const GridDiagram& g, int c);
std::vector<GridCrossing> grid_crossings(const GridDiagram& g);

// ---- moves ------------------------------------------------------------

enum class StabSide { at_x, at_o };       // new column adjacent to which marking
enum class StabOrder { x_low, x_high };   // X_i kept in the lower or upper new row

struct GridMove {
    enum class Kind { stabilize, destabilize, commute_rows, commute_cols, cyclic_rows, cyclic_cols };
    Kind kind = Kind::stabilize;
    int index = 0;   // stabilize: row; destabilize: column; commute: lower row / left column
    int shift = 0;   // cyclic permutation amount
    StabSide side = StabSide::at_x;
    StabOrder order = StabOrder::x_low;
};

GridDiagram apply_grid_move(const GridDiagram& g, const GridMove& m);

// ---- bends ------------------------------------------------------------

enum class VertexType { X, O };
enum class BendClass { over, neutral, under, twisted };

inline const char* to_string(BendClass b) {
    switch (b) {
        case BendClass::over: return "over";
        case BendClass::neutral: return "neutral";
        case BendClass::under: return "under";
        case BendClass::twisted: return "twisted";
    }
    return "?";
}

// Two link segments meeting at the vertex marking of one row/column pair.
struct Bend {
    int row = 0;                    // row of the bend's row segment
    int col = 0;                    // column of the bend's column segment
    Point2 vertex{0, 0};            // (col,row) cell of the vertex marking
    std::pair<int, int> row_seg;    // column span of the row segment
    std::pair<int, int> col_seg;    // row span of the column segment
    int under_count = 0;            // crossings where this bend passes under
    int over_count = 0;             // crossings where this bend passes over
};

std::vector<std::pair<Bend, BendClass>> classify_bends(const GridDiagram& g, VertexType vt);

// Stabilize at the vertex of each twisted bend until none remain.  The size
// grows by exactly the number of twisted bends present at entry.
GridDiagram untwist(const GridDiagram& g, VertexType vt);

}  // namespace cubeknot
