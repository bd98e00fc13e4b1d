#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace torquad {

// Vertices of C_n x C_k are the pairs (i,j), i in [0,n), j in [0,k),
// encoded globally as i*k + j. Every module (groups, realizations,
// certificates) refers to the same indices.
using VertexId = int;

inline VertexId encode_vertex(int i, int j, int k) { return i * k + j; }
inline std::pair<int, int> decode_vertex(VertexId v, int k) {
  return {v / k, v % k};
}

// Unordered vertex pair, stored with first < second.
using Edge = std::pair<VertexId, VertexId>;

Edge make_edge(VertexId a, VertexId b);

// Simple undirected graph: no loops, no duplicate edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n_vertices);

  int vertex_count() const { return n_vertices_; }
  std::size_t edge_count() const { return edges_.size(); }

  // No-op if the edge is already present; loops are rejected.
  void add_edge(VertexId a, VertexId b);

  bool adjacent(VertexId a, VertexId b) const;
  const std::vector<VertexId>& neighbors(VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

  // Sorted, each pair normalized with first < second.
  std::vector<Edge> edges() const;

  bool connected() const;

  bool operator==(const Graph& other) const;

 private:
  int n_vertices_ = 0;
  std::vector<std::vector<VertexId>> adj_;  // sorted neighbor lists
  std::vector<Edge> edges_;                 // kept sorted
};

// A 2-cell, stored as the canonical representative of its boundary cycle
// (lexicographically least over all rotations and the two orientations).
struct Face {
  std::vector<VertexId> boundary;

  std::size_t size() const { return boundary.size(); }
  auto operator<=>(const Face&) const = default;
};

// Canonicalizes a boundary cycle. Throws std::invalid_argument on repeated
// vertices or fewer than 3 of them. Idempotent.
Face canonical_face(const std::vector<VertexId>& cycle);

// Abstract 2- or 3-complex. `faces` is sorted and duplicate-free; `cells3`
// (used only for duoprism boundaries) lists each 3-cell as a sorted set of
// indices into `faces`.
struct CellComplex {
  Graph graph;
  std::vector<Face> faces;
  std::vector<std::vector<std::size_t>> cells3;
  int n = 0;  // construction parameters, 0 when not applicable
  int k = 0;

  bool has_face(const Face& f) const;
  std::optional<std::size_t> face_index(const Face& f) const;
};

// Incident triple (vertex, edge, face); `face` indexes into complex.faces.
struct Flag {
  VertexId vertex;
  Edge edge;
  std::size_t face;

  auto operator<=>(const Flag&) const = default;
};

// Plain cycle C_n on vertices 0..n-1. Needs n >= 3.
Graph cycle_graph(int n);

// The Cartesian product C_n x C_k on nk vertices: (i,j) ~ (i+-1,j) and
// (i,j) ~ (i,j+-1), indices mod n and mod k. 2nk edges, 4-regular.
Graph build_cycle_product_graph(int n, int k);

// Q_{n,k}: the product graph plus the nk quadrilateral faces
// (i,j),(i+1,j),(i+1,j+1),(i,j+1). A quadrangulation of the 2-torus.
CellComplex build_torus_quadrangulation(int n, int k);

// Boundary complex of the n,k-duoprism: the same 1-skeleton, nk + n + k
// two-faces (the Q_{n,k} quads plus n k-gons and k n-gons), and n + k
// three-cells (prisms). Every 2-face lies on exactly two 3-cells.
CellComplex build_duoprism_boundary(int n, int k);

// All flags of the complex, sorted. Q_{n,k} has exactly 8nk of them.
std::vector<Flag> flags(const CellComplex& c);

// Structural checks; throw std::runtime_error with a description on failure.
//
// validate_complex: every face boundary walks along graph edges, faces are
// canonical and distinct, 3-cells reference existing faces.
// validate_closed_surface: additionally each edge lies on exactly 2 faces,
// the graph is connected, Euler characteristic is 0 (torus), and the
// closures of any two faces meet in nothing, a vertex, or an edge.
void validate_complex(const CellComplex& c);
void validate_closed_surface(const CellComplex& c);

int euler_characteristic(const CellComplex& c);

}  // namespace torquad
