// Built-in example diagrams used by the self-test harness and the test
// suites.
#pragma once

#include "cubeknot/cube_diagram.hpp"
#include "cubeknot/grid_diagram.hpp"

namespace cubeknot::samples {

// Size-2 unknot grid.
inline GridDiagram unknot_grid_2() {
    return {2, Plane::xy, {1, 0}, {0, 1}};
}

// Size-2 unknot cube; projects onto unknot_grid_2 in the (x,y)-plane.
inline CubeDiagram unknot_cube_2() {
    CubeDiagram d;
    d.n = 2;
    d.X = {{0, 0, 0}, {1, 1, 1}};
    d.Y = {{0, 0, 1}, {1, 1, 0}};
    d.Z = {{1, 0, 1}, {0, 1, 0}};
    return d;
}

// Size-5 trefoil grid whose X-vertex bends are untwisted, so it lifts to a
// cube diagram by stacking alone.  (The usual diagonal torus-grid trefoil
// does not lift at size 5: its over/under constraints form a cycle.)
GridDiagram trefoil_grid_5();

// Size-6 grid with exactly one twisted X-vertex bend, at row 2.
inline GridDiagram twisted_bend_grid_6() {
    return {6, Plane::xy, {1, 0, 3, 4, 5, 2}, {5, 4, 0, 1, 2, 3}};
}

// Size-6 grid whose two twisted bends need to sit both above and below each
// other; the stacking constraints form a cycle.
inline GridDiagram constraint_cycle_grid_6() {
    return {6, Plane::xy, {1, 2, 0, 4, 3, 5}, {4, 5, 3, 1, 2, 0}};
}

// Size-4 two-component split link whose rows interleave the components; the
// identity stacking produces exactly one (y,z) crossing violation, the
// standard surgery fixture.
inline GridDiagram split_link_grid_4() {
    return {4, Plane::xy, {1, 3, 0, 2}, {0, 2, 1, 3}};
}

}  // namespace cubeknot::samples
