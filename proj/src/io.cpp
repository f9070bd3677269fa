#include "cubeknot/io.hpp"

#include <fstream>
#include <sstream>

#include "cubeknot/util.hpp"

namespace cubeknot {

namespace {

struct LineReader {
    std::istringstream in;
    int lineno = 0;
    explicit LineReader(const std::string& text) : in(text) {}

    // next non-empty line, tokenized
    std::vector<std::string> next() {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream ls(line);
            std::vector<std::string> tokens;
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            if (!tokens.empty()) return tokens;
        }
        return {};
    }
};

int parse_int(const std::string& tok, int lineno) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + tok + "'", lineno);
    }
}

Plane parse_plane(const std::string& tok, int lineno) {
    if (tok == "xy") return Plane::xy;
    if (tok == "yz") return Plane::yz;
    if (tok == "zx") return Plane::zx;
    throw ParseError("expected orientation xy, yz or zx, got '" + tok + "'", lineno);
}

}  // namespace

std::string serialize(const GridDiagram& g) {
    std::ostringstream out;
    out << "gridknot v1\n";
    out << "n " << g.n << "\n";
    out << "orient " << to_string(g.orientation) << "\n";
    out << "X";
    for (int c : g.xpos) out << " " << c;
    out << "\nO";
    for (int c : g.opos) out << " " << c;
    out << "\n";
    return out.str();
}

std::string serialize(const CubeDiagram& d) {
    CubeDiagram canon = validate_cube(d).ok() ? canonicalize(d) : d;
    std::ostringstream out;
    out << "cubeknot v1\n";
    out << "n " << canon.n << "\n";
    for (MarkFamily f : {MarkFamily::X, MarkFamily::Y, MarkFamily::Z})
        for (const auto& c : canon.family(f))
            out << to_string(f) << " " << c.x << " " << c.y << " " << c.z << "\n";
    return out.str();
}

GridDiagram parse_grid(const std::string& text) {
    LineReader r(text);
    auto header = r.next();
    if (header.size() != 2 || header[0] != "gridknot" || header[1] != "v1")
        throw ParseError("expected header 'gridknot v1'", r.lineno);
    auto nline = r.next();
    if (nline.size() != 2 || nline[0] != "n")
        throw ParseError("expected 'n <N>'", r.lineno);
    GridDiagram g;
    g.n = parse_int(nline[1], r.lineno);
    if (g.n < 1 || g.n > 64) throw ParseError("unreasonable size " + nline[1], r.lineno);
    auto oline = r.next();
    if (oline.size() != 2 || oline[0] != "orient")
        throw ParseError("expected 'orient <xy|yz|zx>'", r.lineno);
    g.orientation = parse_plane(oline[1], r.lineno);
    for (const char* tag : {"X", "O"}) {
        auto mline = r.next();
        if ((int)mline.size() != g.n + 1 || mline[0] != tag)
            throw ParseError(std::string("expected '") + tag + "' followed by " +
                                 std::to_string(g.n) + " columns",
                             r.lineno);
        auto& dst = (tag[0] == 'X') ? g.xpos : g.opos;
        for (int i = 1; i <= g.n; ++i) {
            int c = parse_int(mline[i], r.lineno);
            if (c < 0 || c >= g.n)
                throw ParseError("column " + std::to_string(c) + " out of range", r.lineno);
            dst.push_back(c);
        }
    }
    if (!r.next().empty()) throw ParseError("trailing content", r.lineno);
    return g;
}

CubeDiagram parse_cube(const std::string& text) {
    LineReader r(text);
    auto header = r.next();
    if (header.size() != 2 || header[0] != "cubeknot" || header[1] != "v1")
        throw ParseError("expected header 'cubeknot v1'", r.lineno);
    auto nline = r.next();
    if (nline.size() != 2 || nline[0] != "n")
        throw ParseError("expected 'n <N>'", r.lineno);
    CubeDiagram d;
    d.n = parse_int(nline[1], r.lineno);
    if (d.n < 1 || d.n > 64) throw ParseError("unreasonable size " + nline[1], r.lineno);
    for (MarkFamily f : {MarkFamily::X, MarkFamily::Y, MarkFamily::Z}) {
        for (int i = 0; i < d.n; ++i) {
            auto mline = r.next();
            if (mline.size() != 4 || mline[0] != to_string(f))
                throw ParseError(std::string("expected '") + to_string(f) + " <x y z>'", r.lineno);
            Cell3 c{parse_int(mline[1], r.lineno), parse_int(mline[2], r.lineno),
                    parse_int(mline[3], r.lineno)};
            if (c.x < 0 || c.x >= d.n || c.y < 0 || c.y >= d.n || c.z < 0 || c.z >= d.n)
                throw ParseError("cell out of range", r.lineno);
            d.family(f).push_back(c);
        }
    }
    if (!r.next().empty()) throw ParseError("trailing content", r.lineno);
    return d;
}

Diagram parse_diagram(const std::string& text) {
    LineReader r(text);
    auto header = r.next();
    if (header.empty()) throw ParseError("empty file", 1);
    if (header[0] == "gridknot") return parse_grid(text);
    if (header[0] == "cubeknot") return parse_cube(text);
    throw ParseError("unknown header '" + header[0] + "'", r.lineno);
}

Diagram read_diagram(const std::string& text) {
    Diagram d = parse_diagram(text);
    if (auto* g = std::get_if<GridDiagram>(&d)) {
        auto report = validate_grid(*g);
        if (!report.ok()) throw ValidationError("invalid grid diagram", report.text());
    } else {
        auto report = validate_cube(std::get<CubeDiagram>(d));
        if (!report.ok()) throw ValidationError("invalid cube diagram", report.text());
    }
    return d;
}

Diagram load_diagram(const std::string& path) { return read_diagram(read_file(path)); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot write " + path);
    out << content;
}

std::string diagram_hash(const GridDiagram& g) { return fnv1a_hex(serialize(g)); }
std::string diagram_hash(const CubeDiagram& d) { return fnv1a_hex(serialize(d)); }

}  // namespace cubeknot
