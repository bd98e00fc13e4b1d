#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "torquad/complex.hpp"

namespace torquad {

// A permutation of vertex ids 0..degree-1, stored as the array of images.
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> images) : img(std::move(images)) {}

  static Perm identity(int n);

  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int v) const { return img[v]; }

  Perm inverse() const;
  bool is_identity() const;

  auto operator<=>(const Perm&) const = default;
};

// (a * b)(v) = a(b(v)): apply b first.
Perm compose(const Perm& a, const Perm& b);

Edge apply(const Perm& p, const Edge& e);
Face apply(const Perm& p, const Face& f);

// A finite permutation group, fully enumerated. `elements` is sorted
// lexicographically on the image arrays; `generators` is a (small)
// generating subset.
struct PermGroup {
  int degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> elements;

  long order() const { return static_cast<long>(elements.size()); }
  bool contains(const Perm& p) const;
};

// Breadth-first closure of the generators under composition. Throws on
// degree mismatch. The identity group has degree taken from the generators;
// an empty generator list is rejected.
PermGroup group_closure(const std::vector<Perm>& generators);

// Wraps an already-closed element set as a PermGroup, extracting a small
// generating subset.
PermGroup group_from_elements(std::vector<Perm> elements);

// All edge-preserving bijections V(a) -> V(b), by backtracking over a
// breadth-first vertex order with adjacency-consistency pruning. Empty
// result when the graphs are not isomorphic. Throws when either graph
// exceeds vertex_cap.
std::vector<Perm> graph_isomorphisms(const Graph& a, const Graph& b,
                                     int vertex_cap = 100);

// Full automorphism group of a graph (brute force).
PermGroup graph_automorphisms(const Graph& g, int vertex_cap = 100);

// Graph automorphisms whose induced action maps every face to a face.
PermGroup cellular_automorphisms(const CellComplex& c, int vertex_cap = 100);

// Vertex bijections a -> b preserving edges and mapping the face set of a
// onto the face set of b.
std::vector<Perm> complex_isomorphisms(const CellComplex& a,
                                       const CellComplex& b,
                                       int vertex_cap = 100);

// Explicit generators of Aut(Q_{n,k}) on the standard vertex encoding:
// rotation/reflection of each factor, plus the factor swap (i,j) -> (j,i)
// when n = k. Dihedral convention: r(i) = i+1 mod n, s(i) = -i mod n.
std::vector<Perm> structured_generators(int n, int k);

// Subgroup of g fixing vertex v.
PermGroup vertex_stabilizer(const PermGroup& g, VertexId v);

// Orbit of v under g.
std::vector<VertexId> orbit(const PermGroup& g, VertexId v);

struct TransitivityReport {
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool face_transitive = false;
  bool flag_transitive = false;
  std::size_t vertex_orbits = 0;
  std::size_t edge_orbits = 0;
  std::size_t face_orbits = 0;
  std::size_t flag_orbits = 0;

  bool operator==(const TransitivityReport&) const = default;
};

// Orbit counts of the induced action on vertices, edges, faces and flags.
// Throws if some generator fails to act on c as a cellular automorphism.
TransitivityReport transitivity_report(const PermGroup& g,
                                       const CellComplex& c);

}  // namespace torquad
