#include "torquad/autgroup.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace torquad {

Perm Perm::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> inv(img.size());
  for (int v = 0; v < degree(); ++v) inv[img[v]] = v;
  return Perm(std::move(inv));
}

bool Perm::is_identity() const {
  for (int v = 0; v < degree(); ++v)
    if (img[v] != v) return false;
  return true;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("permutation degree mismatch");
  std::vector<int> img(a.img.size());
  for (int v = 0; v < a.degree(); ++v) img[v] = a.img[b.img[v]];
  return Perm(std::move(img));
}

Edge apply(const Perm& p, const Edge& e) {
  return make_edge(p(e.first), p(e.second));
}

Face apply(const Perm& p, const Face& f) {
  std::vector<VertexId> mapped(f.boundary.size());
  for (std::size_t i = 0; i < mapped.size(); ++i) mapped[i] = p(f.boundary[i]);
  return canonical_face(mapped);
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

PermGroup group_closure(const std::vector<Perm>& generators) {
  if (generators.empty())
    throw std::invalid_argument("closure needs at least one generator");
  const int degree = generators.front().degree();
  for (const Perm& g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
    std::vector<bool> hit(degree, false);
    for (int v : g.img) {
      if (v < 0 || v >= degree || hit[v])
        throw std::invalid_argument("generator is not a permutation");
      hit[v] = true;
    }
  }

  std::set<Perm> elements;
  std::queue<Perm> frontier;
  Perm id = Perm::identity(degree);
  elements.insert(id);
  frontier.push(id);
  while (!frontier.empty()) {
    Perm p = std::move(frontier.front());
    frontier.pop();
    for (const Perm& g : generators) {
      Perm q = compose(g, p);
      if (elements.insert(q).second) frontier.push(std::move(q));
    }
  }

  PermGroup group;
  group.degree = degree;
  group.generators = generators;
  group.elements.assign(elements.begin(), elements.end());
  return group;
}

PermGroup group_from_elements(std::vector<Perm> elements) {
  if (elements.empty())
    throw std::invalid_argument("group needs at least the identity");
  std::sort(elements.begin(), elements.end());
  const int degree = elements.front().degree();

  // Greedy generating subset: grow a closure until it reaches everything.
  std::vector<Perm> gens;
  std::set<Perm> span = {Perm::identity(degree)};
  for (const Perm& e : elements) {
    if (span.count(e)) continue;
    gens.push_back(e);
    // re-close from scratch over the enlarged generator set
    std::set<Perm> closure = {Perm::identity(degree)};
    std::queue<Perm> work;
    work.push(Perm::identity(degree));
    while (!work.empty()) {
      Perm p = std::move(work.front());
      work.pop();
      for (const Perm& g : gens) {
        Perm q = compose(g, p);
        if (closure.insert(q).second) work.push(std::move(q));
      }
    }
    span = std::move(closure);
    if (span.size() == elements.size()) break;
  }
  if (gens.empty()) gens.push_back(Perm::identity(degree));

  PermGroup group;
  group.degree = degree;
  group.generators = std::move(gens);
  group.elements = std::move(elements);
  return group;
}

namespace {

constexpr int kMaxVertices = 128;
using Bits = std::bitset<kMaxVertices>;

std::vector<Bits> adjacency_rows(const Graph& g) {
  std::vector<Bits> rows(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    for (VertexId w : g.neighbors(v)) rows[v].set(w);
  return rows;
}

// Breadth-first vertex order; disconnected leftovers appended per component.
std::vector<int> bfs_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order;
  order.reserve(n);
  std::vector<bool> seen(n, false);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::queue<int> q;
    q.push(root);
    seen[root] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      order.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
      }
    }
  }
  return order;
}

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  std::vector<Bits> adj_b;
  std::vector<int> order;
  std::vector<int> img;
  std::vector<bool> used;
  Bits image_b;
  std::vector<Perm> found;

  void run() {
    img.assign(a.vertex_count(), -1);
    used.assign(b.vertex_count(), false);
    extend(0);
  }

  void extend(std::size_t pos) {
    if (pos == order.size()) {
      found.emplace_back(img);
      return;
    }
    const int v = order[pos];
    // Images of v's already-mapped neighbors; a candidate w must be
    // adjacent in b to exactly these among the mapped image set.
    Bits required;
    for (int u : a.neighbors(v))
      if (img[u] >= 0) required.set(img[u]);

    auto try_candidate = [&](int w) {
      if (used[w]) return;
      if (b.degree(w) != a.degree(v)) return;
      if ((adj_b[w] & image_b) != required) return;
      img[v] = w;
      used[w] = true;
      image_b.set(w);
      extend(pos + 1);
      image_b.reset(w);
      used[w] = false;
      img[v] = -1;
    };

    if (required.any()) {
      // Restrict to neighbors of one mapped image.
      int anchor = -1;
      for (int u : a.neighbors(v))
        if (img[u] >= 0) {
          anchor = img[u];
          break;
        }
      for (int w : b.neighbors(anchor)) try_candidate(w);
    } else {
      for (int w = 0; w < b.vertex_count(); ++w) try_candidate(w);
    }
  }
};

}  // namespace

std::vector<Perm> graph_isomorphisms(const Graph& a, const Graph& b,
                                     int vertex_cap) {
  if (vertex_cap > kMaxVertices) vertex_cap = kMaxVertices;
  if (a.vertex_count() > vertex_cap || b.vertex_count() > vertex_cap)
    throw std::runtime_error("graph exceeds the vertex cap of " +
                             std::to_string(vertex_cap));
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return {};

  IsoSearch search{a, b, adjacency_rows(b), bfs_order(a), {}, {}, {}, {}};
  search.run();
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

PermGroup graph_automorphisms(const Graph& g, int vertex_cap) {
  return group_from_elements(graph_isomorphisms(g, g, vertex_cap));
}

namespace {

bool preserves_faces(const Perm& p, const CellComplex& from,
                     const CellComplex& onto) {
  for (const Face& f : from.faces)
    if (!onto.has_face(apply(p, f))) return false;
  return true;
}

}  // namespace

PermGroup cellular_automorphisms(const CellComplex& c, int vertex_cap) {
  std::vector<Perm> graph_auts = graph_isomorphisms(c.graph, c.graph, vertex_cap);
  std::vector<Perm> cellular;
  for (Perm& p : graph_auts)
    if (preserves_faces(p, c, c)) cellular.push_back(std::move(p));
  return group_from_elements(std::move(cellular));
}

std::vector<Perm> complex_isomorphisms(const CellComplex& a,
                                       const CellComplex& b, int vertex_cap) {
  if (a.faces.size() != b.faces.size()) return {};
  std::vector<Perm> graph_isos = graph_isomorphisms(a.graph, b.graph, vertex_cap);
  std::vector<Perm> cellular;
  for (Perm& p : graph_isos)
    if (preserves_faces(p, a, b)) cellular.push_back(std::move(p));
  return cellular;
}

std::vector<Perm> structured_generators(int n, int k) {
  if (n < 3 || k < 3)
    throw std::invalid_argument("cycle lengths must be at least 3");
  const int nk = n * k;
  auto build = [&](auto&& vertex_map) {
    std::vector<int> img(nk);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j)
        img[encode_vertex(i, j, k)] = vertex_map(i, j);
    return Perm(std::move(img));
  };

  std::vector<Perm> gens;
  // r(i) = i+1 mod n and s(i) = -i mod n on each factor.
  gens.push_back(build([&](int i, int j) {
    return encode_vertex((i + 1) % n, j, k);
  }));
  gens.push_back(build([&](int i, int j) {
    return encode_vertex((n - i) % n, j, k);
  }));
  gens.push_back(build([&](int i, int j) {
    return encode_vertex(i, (j + 1) % k, k);
  }));
  gens.push_back(build([&](int i, int j) {
    return encode_vertex(i, (k - j) % k, k);
  }));
  if (n == k)
    gens.push_back(build([&](int i, int j) { return encode_vertex(j, i, k); }));
  return gens;
}

PermGroup vertex_stabilizer(const PermGroup& g, VertexId v) {
  if (v < 0 || v >= g.degree)
    throw std::invalid_argument("stabilizer vertex out of range");
  std::vector<Perm> fixing;
  for (const Perm& p : g.elements)
    if (p(v) == v) fixing.push_back(p);
  return group_from_elements(std::move(fixing));
}

std::vector<VertexId> orbit(const PermGroup& g, VertexId v) {
  if (v < 0 || v >= g.degree)
    throw std::invalid_argument("orbit vertex out of range");
  std::set<VertexId> seen = {v};
  std::queue<VertexId> work;
  work.push(v);
  while (!work.empty()) {
    VertexId u = work.front();
    work.pop();
    for (const Perm& p : g.generators) {
      VertexId w = p(u);
      if (seen.insert(w).second) work.push(w);
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

// Orbit count of the action v -> images[g][v] on 0..m-1.
std::size_t orbit_count(const std::vector<std::vector<std::size_t>>& images,
                        std::size_t m) {
  std::vector<bool> seen(m, false);
  std::size_t orbits = 0;
  for (std::size_t start = 0; start < m; ++start) {
    if (seen[start]) continue;
    ++orbits;
    std::queue<std::size_t> work;
    work.push(start);
    seen[start] = true;
    while (!work.empty()) {
      std::size_t x = work.front();
      work.pop();
      for (const auto& gi : images) {
        std::size_t y = gi[x];
        if (!seen[y]) {
          seen[y] = true;
          work.push(y);
        }
      }
    }
  }
  return orbits;
}

}  // namespace

TransitivityReport transitivity_report(const PermGroup& g,
                                       const CellComplex& c) {
  if (g.degree != c.graph.vertex_count())
    throw std::invalid_argument("group degree does not match the complex");

  const std::vector<Edge> edge_list = c.graph.edges();
  std::map<Edge, std::size_t> edge_idx;
  for (std::size_t i = 0; i < edge_list.size(); ++i)
    edge_idx[edge_list[i]] = i;

  const std::vector<Flag> flag_list = flags(c);
  std::map<Flag, std::size_t> flag_idx;
  for (std::size_t i = 0; i < flag_list.size(); ++i)
    flag_idx[flag_list[i]] = i;

  // Index images of each generator on vertices, edges, faces and flags;
  // a generator that does not preserve the complex is rejected here.
  std::vector<std::vector<std::size_t>> vert_images, edge_images, face_images,
      flag_images;
  for (const Perm& p : g.generators) {
    std::vector<std::size_t> vi(g.degree);
    for (int v = 0; v < g.degree; ++v) vi[v] = static_cast<std::size_t>(p(v));
    vert_images.push_back(std::move(vi));

    std::vector<std::size_t> ei(edge_list.size());
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
      auto it = edge_idx.find(apply(p, edge_list[i]));
      if (it == edge_idx.end())
        throw std::invalid_argument("group action does not preserve edges");
      ei[i] = it->second;
    }
    edge_images.push_back(std::move(ei));

    std::vector<std::size_t> fi(c.faces.size());
    for (std::size_t i = 0; i < c.faces.size(); ++i) {
      auto idx = c.face_index(apply(p, c.faces[i]));
      if (!idx)
        throw std::invalid_argument("group action does not preserve faces");
      fi[i] = *idx;
    }
    face_images.push_back(std::move(fi));

    std::vector<std::size_t> gi(flag_list.size());
    for (std::size_t i = 0; i < flag_list.size(); ++i) {
      const Flag& fl = flag_list[i];
      Flag image{p(fl.vertex), apply(p, fl.edge),
                 *c.face_index(apply(p, c.faces[fl.face]))};
      gi[i] = flag_idx.at(image);
    }
    flag_images.push_back(std::move(gi));
  }

  TransitivityReport rep;
  rep.vertex_orbits = orbit_count(vert_images, g.degree);
  rep.edge_orbits = orbit_count(edge_images, edge_list.size());
  rep.face_orbits = orbit_count(face_images, c.faces.size());
  rep.flag_orbits = orbit_count(flag_images, flag_list.size());
  rep.vertex_transitive = rep.vertex_orbits == 1;
  rep.edge_transitive = rep.edge_orbits == 1;
  rep.face_transitive = rep.face_orbits == 1;
  rep.flag_transitive = rep.flag_orbits == 1;
  return rep;
}

}  // namespace torquad
