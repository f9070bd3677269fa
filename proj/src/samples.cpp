#include "cubeknot/samples.hpp"

namespace cubeknot::samples {

GridDiagram trefoil_grid_5() {
    // provisional: replaced by the verified liftable trefoil after search
    return {5, Plane::xy, {0, 1, 2, 3, 4}, {2, 3, 4, 0, 1}};
}

}  // namespace cubeknot::samples
