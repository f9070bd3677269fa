// Text file formats for grid and cube diagrams, canonical serialization,
// and the diagram content hash used in table headers.
#pragma once

#include <string>
#include <variant>

#include "cubeknot/cube_diagram.hpp"
#include "cubeknot/grid_diagram.hpp"

namespace cubeknot {

std::string serialize(const GridDiagram& g);
std::string serialize(const CubeDiagram& d);  // markings in canonical order

// Syntax-level parsing; throws ParseError.  Structural validity is the
// validator's business.
GridDiagram parse_grid(const std::string& text);
CubeDiagram parse_cube(const std::string& text);

using Diagram = std::variant<GridDiagram, CubeDiagram>;

// Dispatches on the header line; throws ParseError.
Diagram parse_diagram(const std::string& text);

// parse + validate; throws ParseError or ValidationError.
Diagram load_diagram(const std::string& path);
Diagram read_diagram(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

std::string diagram_hash(const GridDiagram& g);
std::string diagram_hash(const CubeDiagram& d);

}  // namespace cubeknot
