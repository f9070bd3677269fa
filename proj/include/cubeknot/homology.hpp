// The homology engines.  Grid states and cube states, Maslov/Alexander
// gradings through the J pair-counting function, empty rectangles and
// full-height cylinders, the three differential variants, the splice map
// between grid-state pairs and cube states, GF(2) rank, and bigraded
// dimension tables.
//
// Marking variables are indexed by canonical traversal order.  Monomial
// exponent vectors for the cube complexes have length 3n and are laid out
// [X_0..X_{n-1} | Y_0.. | Z_0..]; grid monomials have length n with U_i
// attached to the O marking of row i.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cubeknot/cube_diagram.hpp"
#include "cubeknot/grid_diagram.hpp"

namespace cubeknot {

// ---- states -----------------------------------------------------------

// Permutation state on the toroidal grid: point (c, row[c]) per column.
struct GridState {
    std::vector<int> row;
    friend auto operator<=>(const GridState&, const GridState&) = default;
};

// n lattice points (i, y[i], z[i]) with pairwise-distinct coordinates on
// every axis.
struct CubeState {
    std::vector<int> y, z;
    friend auto operator<=>(const CubeState&, const CubeState&) = default;
};

std::vector<GridState> enumerate_grid_states(int n);
std::vector<CubeState> enumerate_cube_states(int n);
long long cube_state_id(const CubeState& s);
CubeState cube_state_from_id(int n, long long id);

GridState project_state(const CubeState& s, Plane plane);

// Splice two grid states of the axis's projection pair into the cube state
// projecting to both.
CubeState psi(const GridState& s_first, const GridState& s_second, Axis axis = Axis::y);

// The ordered pair of projections sharing `axis`.
std::pair<Plane, Plane> axis_planes(Axis axis);

// ---- gradings ----------------------------------------------------------

struct GridGradings {
    HalfGrading M, A;
};

struct CubeGradings {
    HalfGrading M, A;                     // sums over the axis's two planes
    HalfGrading M_first, M_second;        // per-plane constituents
    HalfGrading A_first, A_second;
    Plane first, second;
};

// `normalize` flips the Alexander constant (n-1)/2 to -(n-1)/2.
GridGradings grid_gradings(const GridDiagram& g, const GridState& s, bool normalize = false);
CubeGradings cube_gradings(const CubeDiagram& d, const CubeState& s, Axis axis,
                           bool normalize = false);

// ---- rectangles and cylinders ------------------------------------------

// Torus rectangle with SW corner on `s`; censuses are indexed by grid row.
struct GridRect {
    int c0 = 0, r0 = 0, w = 0, h = 0;
    std::vector<uint8_t> o_count, x_count;
    GridState target;
};

std::vector<GridRect> rectangles_from(const GridDiagram& g, const GridState& s);
std::vector<GridRect> empty_rectangles(const GridDiagram& g, const GridState& s,
                                       const GridState& t);

// Full-height cuboid over a torus rectangle in `plane`, connecting two cube
// states that agree in the axis's other projection.  Censuses are indexed
// by canonical marking index.
struct Cylinder {
    Plane plane = Plane::xy;
    int u0 = 0, v0 = 0, du = 0, dv = 0;
    std::vector<uint8_t> x_count, y_count, z_count;
    CubeState target;
};

std::vector<Cylinder> cylinders_from(const CubeDiagram& d, const CubeState& s, Plane plane,
                                     Axis axis);
std::vector<Cylinder> empty_cylinders(const CubeDiagram& d, const CubeState& s,
                                      const CubeState& t, Plane plane, Axis axis = Axis::y);

// ---- differentials -------------------------------------------------------

enum class Variant { minus, tilde, filtered_hat };

const char* to_string(Variant v);
Variant variant_from_string(const std::string& s);

struct GridTerm {
    std::vector<uint8_t> expo;  // U exponents, length n
    GridState state;
    friend auto operator<=>(const GridTerm&, const GridTerm&) = default;
};
using GridChain = std::set<GridTerm>;

struct CubeTerm {
    std::vector<uint8_t> expo;  // X|Y|Z exponents, length 3n
    CubeState state;
    friend auto operator<=>(const CubeTerm&, const CubeTerm&) = default;
};
using CubeChain = std::set<CubeTerm>;

void toggle(GridChain& chain, GridTerm term);  // GF(2) insert
void toggle(CubeChain& chain, CubeTerm term);

GridChain grid_differential(const GridDiagram& g, const GridState& s, Variant v);
CubeChain differential(const CubeDiagram& d, const CubeState& s, Axis axis, Variant v);

// Symbolic d(d(s)); empty for the minus differential of a cube diagram.
GridChain grid_differential_squared(const GridDiagram& g, const GridState& s, Variant v);
CubeChain differential_squared(const CubeDiagram& d, const CubeState& s, Axis axis, Variant v);

// Term-for-term chain-map identity between the cube complex of `axis` and
// the tensor of its two grid complexes, under the variable renaming
// U_i(first) -> first family, U_i(second) -> second family.
bool check_tensor_iso(const CubeDiagram& d, Axis axis, Variant v);

// ---- GF(2) rank and dimension tables -------------------------------------

struct SparseF2Matrix {
    int cols = 0;
    std::vector<std::vector<uint64_t>> rows;  // packed bit rows
    void add_row(const std::vector<int>& support);
};

int f2_rank(SparseF2Matrix m);

struct DimTable {
    bool bigraded = true;                          // false: per-M only (filtered-hat)
    std::map<std::pair<int, int>, long long> dims; // (twice_M, twice_A) -> dim
    long long total() const;
    friend bool operator==(const DimTable&, const DimTable&) = default;
};

// Bigraded product (convolution) of two tables.
DimTable table_product(const DimTable& a, const DimTable& b);

DimTable homology_table(const CubeDiagram& d, Axis axis, Variant v, bool normalize);
DimTable grid_homology_table(const GridDiagram& g, Variant v, bool normalize);

std::string poincare_text(const DimTable& table, Variant v, const std::string& axis,
                          bool normalize, const std::string& diagram_hash);

}  // namespace cubeknot
