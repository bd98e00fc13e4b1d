#include "torquad/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace torquad {

namespace {

void require_nk(int n, int k) {
  if (n < 3 || k < 3)
    throw std::invalid_argument("cycle lengths must be at least 3, got n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
}

}  // namespace

Edge make_edge(VertexId a, VertexId b) {
  if (a == b) throw std::invalid_argument("loop edge " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n_vertices) : n_vertices_(n_vertices), adj_(n_vertices) {
  if (n_vertices < 0) throw std::invalid_argument("negative vertex count");
}

void Graph::add_edge(VertexId a, VertexId b) {
  if (a < 0 || b < 0 || a >= n_vertices_ || b >= n_vertices_)
    throw std::invalid_argument("edge endpoint out of range");
  Edge e = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return;
  edges_.insert(it, e);
  auto& na = adj_[a];
  na.insert(std::lower_bound(na.begin(), na.end(), b), b);
  auto& nb = adj_[b];
  nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
}

bool Graph::adjacent(VertexId a, VertexId b) const {
  if (a == b) return false;
  const auto& na = adj_[a];
  return std::binary_search(na.begin(), na.end(), b);
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
  return adj_.at(v);
}

std::vector<Edge> Graph::edges() const { return edges_; }

bool Graph::connected() const {
  if (n_vertices_ == 0) return true;
  std::vector<bool> seen(n_vertices_, false);
  std::vector<VertexId> stack = {0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_vertices_;
}

bool Graph::operator==(const Graph& other) const {
  return n_vertices_ == other.n_vertices_ && edges_ == other.edges_;
}

Face canonical_face(const std::vector<VertexId>& cycle) {
  if (cycle.size() < 3)
    throw std::invalid_argument("face boundary needs at least 3 vertices");
  std::set<VertexId> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != cycle.size())
    throw std::invalid_argument("face boundary has repeated vertices");

  const std::size_t m = cycle.size();
  std::vector<VertexId> reversed(cycle.rbegin(), cycle.rend());
  std::vector<VertexId> best;
  std::vector<VertexId> candidate(m);
  for (const auto& seq : {cycle, reversed}) {
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t p = 0; p < m; ++p) candidate[p] = seq[(r + p) % m];
      if (best.empty() || candidate < best) best = candidate;
    }
  }
  return Face{best};
}

bool CellComplex::has_face(const Face& f) const {
  return std::binary_search(faces.begin(), faces.end(), f);
}

std::optional<std::size_t> CellComplex::face_index(const Face& f) const {
  auto it = std::lower_bound(faces.begin(), faces.end(), f);
  if (it == faces.end() || !(*it == f)) return std::nullopt;
  return static_cast<std::size_t>(it - faces.begin());
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle length must be at least 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph build_cycle_product_graph(int n, int k) {
  require_nk(n, k);
  Graph g(n * k);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) {
      g.add_edge(encode_vertex(i, j, k), encode_vertex((i + 1) % n, j, k));
      g.add_edge(encode_vertex(i, j, k), encode_vertex(i, (j + 1) % k, k));
    }
  }
  return g;
}

namespace {

Face quad_face(int i, int j, int n, int k) {
  return canonical_face({encode_vertex(i, j, k),
                         encode_vertex((i + 1) % n, j, k),
                         encode_vertex((i + 1) % n, (j + 1) % k, k),
                         encode_vertex(i, (j + 1) % k, k)});
}

// The n-gon {(0,j),...,(n-1,j)}.
Face parallel_face(int j, int n, int k) {
  std::vector<VertexId> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = encode_vertex(i, j, k);
  return canonical_face(cyc);
}

// The k-gon {(i,0),...,(i,k-1)}.
Face meridian_face(int i, int k) {
  std::vector<VertexId> cyc(k);
  for (int j = 0; j < k; ++j) cyc[j] = encode_vertex(i, j, k);
  return canonical_face(cyc);
}

}  // namespace

CellComplex build_torus_quadrangulation(int n, int k) {
  require_nk(n, k);
  CellComplex c;
  c.n = n;
  c.k = k;
  c.graph = build_cycle_product_graph(n, k);
  c.faces.reserve(static_cast<std::size_t>(n) * k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) c.faces.push_back(quad_face(i, j, n, k));
  std::sort(c.faces.begin(), c.faces.end());
  return c;
}

CellComplex build_duoprism_boundary(int n, int k) {
  require_nk(n, k);
  CellComplex c;
  c.n = n;
  c.k = k;
  c.graph = build_cycle_product_graph(n, k);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) c.faces.push_back(quad_face(i, j, n, k));
  for (int j = 0; j < k; ++j) c.faces.push_back(parallel_face(j, n, k));
  for (int i = 0; i < n; ++i) c.faces.push_back(meridian_face(i, k));
  std::sort(c.faces.begin(), c.faces.end());

  auto idx = [&](const Face& f) { return *c.face_index(f); };

  // k prisms P^2_n x (edge j,j+1 of C_k): two n-gons and n quads each.
  for (int j = 0; j < k; ++j) {
    std::vector<std::size_t> cell;
    cell.push_back(idx(parallel_face(j, n, k)));
    cell.push_back(idx(parallel_face((j + 1) % k, n, k)));
    for (int i = 0; i < n; ++i) cell.push_back(idx(quad_face(i, j, n, k)));
    std::sort(cell.begin(), cell.end());
    c.cells3.push_back(std::move(cell));
  }
  // n prisms (edge i,i+1 of C_n) x P^2_k.
  for (int i = 0; i < n; ++i) {
    std::vector<std::size_t> cell;
    cell.push_back(idx(meridian_face(i, k)));
    cell.push_back(idx(meridian_face((i + 1) % n, k)));
    for (int j = 0; j < k; ++j) cell.push_back(idx(quad_face(i, j, n, k)));
    std::sort(cell.begin(), cell.end());
    c.cells3.push_back(std::move(cell));
  }
  std::sort(c.cells3.begin(), c.cells3.end());
  return c;
}

std::vector<Flag> flags(const CellComplex& c) {
  std::vector<Flag> out;
  for (std::size_t fi = 0; fi < c.faces.size(); ++fi) {
    const auto& b = c.faces[fi].boundary;
    const std::size_t m = b.size();
    for (std::size_t p = 0; p < m; ++p) {
      VertexId v = b[p];
      out.push_back({v, make_edge(v, b[(p + 1) % m]), fi});
      out.push_back({v, make_edge(v, b[(p + m - 1) % m]), fi});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int euler_characteristic(const CellComplex& c) {
  return c.graph.vertex_count() - static_cast<int>(c.graph.edge_count()) +
         static_cast<int>(c.faces.size());
}

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("complex validation failed: " + what);
}

}  // namespace

void validate_complex(const CellComplex& c) {
  for (std::size_t fi = 0; fi < c.faces.size(); ++fi) {
    const Face& f = c.faces[fi];
    if (f != canonical_face(f.boundary)) fail("face not canonical");
    const auto& b = f.boundary;
    for (std::size_t p = 0; p < b.size(); ++p) {
      if (b[p] < 0 || b[p] >= c.graph.vertex_count())
        fail("face vertex out of range");
      if (!c.graph.adjacent(b[p], b[(p + 1) % b.size()]))
        fail("face boundary step is not a graph edge");
    }
    if (fi > 0 && !(c.faces[fi - 1] < f)) fail("faces not sorted/unique");
  }
  for (const auto& cell : c.cells3) {
    if (cell.empty()) fail("empty 3-cell");
    for (std::size_t p = 0; p < cell.size(); ++p) {
      if (cell[p] >= c.faces.size()) fail("3-cell face index out of range");
      if (p > 0 && cell[p - 1] >= cell[p]) fail("3-cell not sorted/unique");
    }
  }
}

void validate_closed_surface(const CellComplex& c) {
  validate_complex(c);
  if (!c.graph.connected()) fail("graph not connected");
  if (euler_characteristic(c) != 0) fail("Euler characteristic not 0");

  std::map<Edge, int> edge_faces;
  for (const Face& f : c.faces) {
    const auto& b = f.boundary;
    for (std::size_t p = 0; p < b.size(); ++p)
      ++edge_faces[make_edge(b[p], b[(p + 1) % b.size()])];
  }
  if (edge_faces.size() != c.graph.edge_count())
    fail("some graph edge lies on no face");
  for (const auto& [e, cnt] : edge_faces)
    if (cnt != 2) fail("edge not on exactly 2 faces");

  // Closures of two faces may share nothing, one vertex, or one full edge.
  for (std::size_t a = 0; a < c.faces.size(); ++a) {
    for (std::size_t b = a + 1; b < c.faces.size(); ++b) {
      std::vector<VertexId> va = c.faces[a].boundary;
      std::vector<VertexId> vb = c.faces[b].boundary;
      std::sort(va.begin(), va.end());
      std::sort(vb.begin(), vb.end());
      std::vector<VertexId> shared;
      std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                            std::back_inserter(shared));
      if (shared.size() > 2) fail("two faces share more than one edge");
      if (shared.size() == 2) {
        Edge e = make_edge(shared[0], shared[1]);
        auto on_boundary = [&](const Face& f) {
          const auto& bd = f.boundary;
          for (std::size_t p = 0; p < bd.size(); ++p)
            if (make_edge(bd[p], bd[(p + 1) % bd.size()]) == e) return true;
          return false;
        };
        if (!on_boundary(c.faces[a]) || !on_boundary(c.faces[b]))
          fail("two faces share two vertices but no common edge");
      }
    }
  }
}

}  // namespace torquad
