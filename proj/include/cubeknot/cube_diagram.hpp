// Cube diagrams: validation of the marking / right-angle / crossing
// conditions, link traversal with canonical marking indices, projections to
// the three oriented grid diagrams, and the cube move calculus.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "cubeknot/errors.hpp"
#include "cubeknot/grid_diagram.hpp"
#include "cubeknot/lattice.hpp"

namespace cubeknot {

enum class MarkFamily { X, Y, Z };
enum class Axis { x, y, z };

inline const char* to_string(MarkFamily f) {
    switch (f) { case MarkFamily::X: return "X"; case MarkFamily::Y: return "Y"; case MarkFamily::Z: return "Z"; }
    return "?";
}
inline const char* to_string(Axis a) {
    switch (a) { case Axis::x: return "x"; case Axis::y: return "y"; case Axis::z: return "z"; }
    return "?";
}

struct CubeDiagram {
    int n = 0;
    std::vector<Cell3> X, Y, Z;

    const std::vector<Cell3>& family(MarkFamily f) const {
        return f == MarkFamily::X ? X : f == MarkFamily::Y ? Y : Z;
    }
    std::vector<Cell3>& family(MarkFamily f) {
        return f == MarkFamily::X ? X : f == MarkFamily::Y ? Y : Z;
    }
    friend bool operator==(const CubeDiagram&, const CubeDiagram&) = default;
};

struct CubeViolation {
    std::string message;
    bool crossing_condition = false;
};

struct CubeReport {
    std::vector<CubeViolation> violations;
    bool ok() const { return violations.empty(); }
    bool only_crossing_violations() const;
    std::string text() const;
};

CubeReport validate_cube(const CubeDiagram& d);
void require_valid(const CubeDiagram& d);  // throws ValidationError

// An n x n x 1 slab, named by its thin axis.
struct FlatRef {
    Axis axis = Axis::x;
    int index = 0;
};

// Oriented link segment between two markings sharing two coordinates.
enum class SegmentFamily { XY, YZ, ZX };  // travel axis z / x / y respectively

inline const char* to_string(SegmentFamily f) {
    switch (f) { case SegmentFamily::XY: return "XY"; case SegmentFamily::YZ: return "YZ"; case SegmentFamily::ZX: return "ZX"; }
    return "?";
}

struct Segment {
    SegmentFamily family = SegmentFamily::XY;
    Cell3 from, to;
    Axis travel_axis() const {
        return family == SegmentFamily::XY ? Axis::z
             : family == SegmentFamily::YZ ? Axis::x
                                           : Axis::y;
    }
};

// All 3n oriented segments of a valid diagram.
std::vector<Segment> link_segments(const CubeDiagram& d);

// One marking visited by the traversal.
struct MarkingRef {
    MarkFamily family = MarkFamily::X;
    Cell3 cell;
};

// Components ordered by lexicographically smallest X cell; each component
// starts at that X and follows the X -> Y -> Z -> X orientation.
std::vector<std::vector<MarkingRef>> traverse_link(const CubeDiagram& d);

// Same diagram with X/Y/Z arrays rewritten in canonical traversal order.
CubeDiagram canonicalize(const CubeDiagram& d);

// Projection to the oriented grid diagram of `plane`, together with the map
// from grid rows to canonical cube marking indices (used for variable
// renaming in the homology engines).
struct GridProjection {
    GridDiagram grid;
    // For row r of the grid: canonical index of the cube marking of the
    // plane's variable family (X for xy, Y for yz, Z for zx) sitting over
    // the O / X cell of that row.
    std::vector<int> o_row_to_marking;
    std::vector<int> x_row_to_marking;
};

GridDiagram project_cube(const CubeDiagram& d, Plane plane);
GridProjection project_cube_with_maps(const CubeDiagram& d, Plane plane);

// True when either pair of like-parallel link segments of the two flats has
// distinct, alternating projected endpoints.
bool interleaved(const CubeDiagram& d, FlatRef f1, FlatRef f2);

struct CubeMove {
    enum class Kind { stabilize, destabilize, commute };
    Kind kind = Kind::commute;
    SegmentFamily family = SegmentFamily::XY;  // stabilize/destabilize variant
    int site = 0;   // stabilize: canonical index of the segment's start marking
                    // destabilize: slab index along the segment's travel axis
    FlatRef flat;   // commute: swaps flats (axis, index) and (axis, index+1)
};

CubeDiagram apply_cube_move(const CubeDiagram& d, const CubeMove& m);

// Cyclic coordinate rotation (x,y,z) -> (y,z,x) with the matching marking
// relabeling; maps cube diagrams to cube diagrams.  rotate_back is its
// inverse (rotate applied twice).
CubeDiagram rotate(const CubeDiagram& d);
CubeDiagram rotate_back(const CubeDiagram& d);

// Disjoint union with the second diagram offset diagonally.
CubeDiagram direct_sum(const CubeDiagram& a, const CubeDiagram& b);

// All valid cube diagrams of a given size, deterministic order.  Sizes
// beyond 3 get expensive; meant for exhaustive small-case checks.
std::vector<CubeDiagram> enumerate_cube_diagrams(int n);

}  // namespace cubeknot
