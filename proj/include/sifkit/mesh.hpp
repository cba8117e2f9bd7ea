/**
 * @file mesh.hpp
 * Crack-conforming triangulations with duplicated crack-face nodes.
 *
 * File format (plain text, whitespace separated, '#' starts a comment):
 *   sifmesh 1
 *   curve <description>          (optional; see make_curve)
 *   nodes N        then N lines:  x y
 *   triangles M    then M lines:  i j k tag
 *   edges E        then E lines:  i j marker
 *   tip i
 *   pairs P        then P lines:  i_upper i_lower
 */
#pragma once

#include "sifkit/crack_geometry.hpp"
#include "sifkit/quadrature.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace sifkit {

enum class EdgeMarker { OuterLeft, OuterRight, OuterTop, OuterBottom, Symmetry, CrackUpper, CrackLower };

std::string to_string(EdgeMarker m);
EdgeMarker marker_from_string(const std::string& s);
inline bool is_crack(EdgeMarker m) { return m == EdgeMarker::CrackUpper || m == EdgeMarker::CrackLower; }
inline Side side_of(EdgeMarker m) {
    return m == EdgeMarker::CrackUpper ? Side::Upper : m == EdgeMarker::CrackLower ? Side::Lower : Side::None;
}

struct MarkedEdge {
    int a = -1, b = -1;
    EdgeMarker marker = EdgeMarker::OuterLeft;
};

struct CrackMesh {
    std::vector<Vec2> nodes;
    std::vector<std::array<int, 3>> triangles;
    std::vector<int> tags;
    std::vector<MarkedEdge> edges;
    int tip = -1;
    std::vector<std::pair<int, int>> pairs;
    CrackPathPtr curve;

    // Largest element diameter.
    double h() const;
    // Side of the crack each element sits on (None away from the faces).
    std::vector<Side> element_sides() const;
    // Triangle owning each marked edge and the local edge index within it.
    std::vector<std::pair<int, int>> edge_owners() const;
};

struct MeshError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Violation {
    enum class Kind { Node, Triangle, Edge, Pair, Tip, Global } kind;
    int index = -1;
    std::string message;
};

std::vector<Violation> check_mesh(const CrackMesh& mesh);
void validate(const CrackMesh& mesh);

CrackMesh read_mesh(std::istream& in, const std::string& name = "<stream>");
void write_mesh(const CrackMesh& mesh, std::ostream& out);
CrackMesh load_mesh(const std::string& path);
void save_mesh(const CrackMesh& mesh, const std::string& path);

// Red refinement with crack-face midpoints snapped to the exact curve.
CrackMesh refine(const CrackMesh& mesh);
CrackMesh refine(const CrackMesh& mesh, int levels);

// Structured mesh of [-1,1]^2 with a straight crack from (-1,0) to the tip (0,0);
// 2n cells per side.
CrackMesh straight_crack_mesh(int n);

// Quadrature points of element e; elements touching the tip use `tip_rule`
// collapsed onto the tip vertex.
std::vector<PhysicalPoint> element_points(const CrackMesh& m, int e, const QuadratureRule& regular,
                                          const QuadratureRule& tip_rule);

// Path of a shipped template ("power" or "arc").
std::string template_path(const std::string& name);

}  // namespace sifkit
