// Lifting a grid diagram to a cube diagram: bend stacking plans, the
// ordering search, and the local crossing surgery fallback.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cubeknot/cube_diagram.hpp"
#include "cubeknot/grid_diagram.hpp"

namespace cubeknot {

// Level assignment for the X-vertex bends plus the constraint graph it
// came from: for every crossing, the over-bend must be stacked above the
// under-bend it crosses.
struct StackPlan {
    std::vector<BendClass> classes;                    // per bend (row index)
    std::vector<std::pair<int, int>> constraints;      // (under bend, over bend)
    std::vector<int> levels;                           // bend -> z level
};

// Throws ConstraintCycle when the over/under relation has no consistent
// stacking (possible only with twisted bends).
StackPlan plan_stack(const GridDiagram& g);

// Places each X-vertex bend of an (x,y)-reading of `g` into the z-flat
// levels[r].  Marking conditions always hold; crossing conditions in the
// (y,z)- and (z,x)-projections may not — that is the lift search's job.
CubeDiagram stacked_cube(const GridDiagram& g, const std::vector<int>& levels);

// A crossing-condition violation: in `plane`, the segment parallel to the
// first axis passes over the one parallel to the second axis.
struct CrossingViolation {
    Plane plane = Plane::yz;
    Segment first_axis_segment;
    Segment second_axis_segment;
};

// All crossing-condition violations of a diagram whose marking conditions
// hold (crossing conditions themselves may fail).
std::vector<CrossingViolation> crossing_violations(const CubeDiagram& d);

// Resolves one violation by rerouting the wrongly-over segment through two
// new marking triples at smaller depth, growing the size by two.  The other
// two projections keep their crossing counts.  Throws SurgeryFailed when no
// candidate reroute validates, InvalidInput when the cited violation is not
// present.
CubeDiagram crossing_surgery(const CubeDiagram& d, const CrossingViolation& site);

struct LiftReport {
    int final_size = 0;
    int untwist_stabilizations = 0;
    long long orderings_searched = 0;
    int surgeries = 0;
    std::vector<std::string> residual_violations;
    bool success() const { return residual_violations.empty(); }
    std::string text() const;
};

struct LiftOptions {
    long long budget = -1;     // default: n! for n <= 6, else 10000 sampled
    bool allow_surgery = true;
};

// Untwists, searches stack orderings consistent with the plan for one with
// no residual crossing violations, falls back to surgery per violation.
// The result projects to `g` on the plane of g's orientation (exactly when
// no untwisting or surgery was needed).  Throws BudgetExhausted when the
// search fails and surgery is disabled.
std::pair<CubeDiagram, LiftReport> lift_grid(const GridDiagram& g, LiftOptions opts = {});

}  // namespace cubeknot
