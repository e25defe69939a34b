#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symcomp/types.hpp"

namespace symcomp {

struct BoundaryEdge {
  int a = 0;  // vertex indices, oriented so the domain lies on the left
  int b = 0;
  int marker = 0;
  Vec2 normal = Vec2::Zero();  // outward unit normal
};

// Circle that boundary edge midpoints are projected onto during refinement.
struct BoundarySnap {
  Vec2 center = Vec2::Zero();
  Real radius = 1.0;
};

// Conforming planar triangulation with marked boundary edges.
// Immutable after construction; generators guarantee counterclockwise
// triangles and outward boundary normals.
struct TriMesh {
  Eigen::Matrix2Xd vertices;   // one column per vertex
  Eigen::Matrix3Xi triangles;  // one column per triangle, counterclockwise
  std::vector<BoundaryEdge> boundary_edges;
  std::map<int, std::string> marker_table;
  std::optional<BoundarySnap> snap;

  Index vertex_count() const { return vertices.cols(); }
  Index triangle_count() const { return triangles.cols(); }
  Vec2 vertex(int i) const { return vertices.col(i); }
};

Real triangle_area(const TriMesh& mesh, Index t);
Real max_edge_length(const TriMesh& mesh);
std::vector<int> boundary_vertices(const TriMesh& mesh);

struct RectangleSpec {
  Real width = 1.0;
  Real height = 1.0;
};

struct DiskSpec {
  Real radius = 1.0;
  int boundary_segments = 64;
};

struct PolygonSpec {
  std::vector<Vec2> vertices;  // simple, counterclockwise
};

// Boundary pieces: rectangle = bottom, right, top, left; disk = one piece;
// polygon = one piece per side. Default markers are 1..piece_count
// (marker 0 stays reserved as the whole-boundary key of coefficient rules).
struct ShapeSpec {
  std::variant<RectangleSpec, DiskSpec, PolygonSpec> shape;
  std::vector<int> piece_markers;  // empty = defaults
  Real target_h = 0.1;             // generators may deviate by a factor <= 2
};

TriMesh triangulate(const ShapeSpec& spec);

// Splits every triangle into 4 congruent children; boundary markers are
// inherited and, when a snap circle is present, new boundary midpoints are
// projected onto it.
TriMesh refine_uniform(const TriMesh& mesh);

struct MeshMeasures {
  Real area = 0.0;
  Real boundary_length = 0.0;
  std::map<int, Real> boundary_length_per_marker;
};

MeshMeasures mesh_measures(const TriMesh& mesh);

struct MeshDiagnostics {
  int orientation_violations = 0;     // triangles with non-positive signed area
  int boundary_tiling_violations = 0; // marked edges not matching the edge-use count
  int normal_violations = 0;          // boundary normals not pointing outward
  int obtuse_triangles = 0;
  bool ok() const {
    return orientation_violations == 0 && boundary_tiling_violations == 0 &&
           normal_violations == 0;
  }
};

MeshDiagnostics validate_mesh(const TriMesh& mesh);

// Text format: line 1 "V T E", then V lines "x y", then T lines "i j k",
// then E lines "i j marker". 0-based indices, 17 significant digits.
void write_mesh(std::ostream& os, const TriMesh& mesh);
void write_mesh_file(const std::string& path, const TriMesh& mesh);
TriMesh read_mesh(std::istream& is);
TriMesh read_mesh_file(const std::string& path);

}  // namespace symcomp
