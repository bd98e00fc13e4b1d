#include "torquad/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace torquad {

namespace {

long expected_graph_order(int n, int k) {
  if (n != k) return 4L * n * k;
  if (n == 4) return 384;
  return 8L * n * n;
}

long expected_cellular_order(int n, int k) {
  return n != k ? 4L * n * k : 8L * n * n;
}

bool preserves_complex(const Perm& p, const CellComplex& c) {
  for (const Edge& e : c.graph.edges())
    if (!c.graph.adjacent(p(e.first), p(e.second))) return false;
  for (const Face& f : c.faces)
    if (!c.has_face(apply(p, f))) return false;
  return true;
}

}  // namespace

Lemma2Report check_lemma2(const PermGroup& ambient_group,
                          const CellComplex& sub, int ambient_vertex_count,
                          long aut_order) {
  if (ambient_group.degree != sub.graph.vertex_count())
    throw std::invalid_argument(
        "ambient group degree does not match the subcomplex");

  Lemma2Report rep;
  rep.cond_i = true;
  for (const Perm& p : ambient_group.elements) {
    if (!preserves_complex(p, sub)) {
      rep.cond_i = false;
      break;
    }
  }
  rep.cond_ii = ambient_vertex_count == sub.graph.vertex_count();
  rep.cond_iii = ambient_group.order() == aut_order;
  rep.conclusion = rep.cond_i && rep.cond_ii && rep.cond_iii;
  return rep;
}

namespace {

// Max over v of the distance from A·M_v to the nearest realization point:
// certifies that the witness matrix maps the vertex set onto itself.
double point_matching_error(const Realization& r, const Matrix4& a) {
  double worst = 0.0;
  for (const Point4& p : r.points) {
    Point4 image = a * p;
    double best = std::numeric_limits<double>::infinity();
    for (const Point4& q : r.points)
      best = std::min(best, (image - q).norm());
    worst = std::max(worst, best);
  }
  return worst;
}

bool buckets_match(const std::vector<double>& measured,
                   std::vector<double> expected, double tol) {
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end(),
                             [tol](double a, double b) {
                               return std::abs(a - b) <= tol;
                             }),
                 expected.end());
  if (measured.size() != expected.size()) return false;
  for (std::size_t i = 0; i < measured.size(); ++i)
    if (std::abs(measured[i] - expected[i]) > tol) return false;
  return true;
}

}  // namespace

Certificate verify_realization(const Realization& r, double tol,
                               int vertex_cap) {
  const int n = r.n;
  const int k = r.k;
  if (n < 3 || k < 3)
    throw std::invalid_argument("realization must carry n, k >= 3");
  if (r.points.size() != static_cast<std::size_t>(n) * k)
    throw std::invalid_argument("realization has the wrong number of points");

  Certificate cert;
  cert.n = n;
  cert.k = k;
  cert.tolerance = tol;

  const CellComplex quad = build_torus_quadrangulation(n, k);
  const CellComplex duoprism = build_duoprism_boundary(n, k);

  cert.complex_valid_ok = true;
  try {
    validate_closed_surface(quad);
    validate_complex(duoprism);
  } catch (const std::runtime_error&) {
    cert.complex_valid_ok = false;
  }

  const PermGroup graph_group = graph_automorphisms(quad.graph, vertex_cap);
  const PermGroup cell_group = cellular_automorphisms(quad, vertex_cap);
  cert.group_order_graph = graph_group.order();
  cert.group_order_cellular = cell_group.order();
  cert.graph_order_formula_ok = graph_group.order() == expected_graph_order(n, k);
  cert.cellular_order_formula_ok = cell_group.order() == expected_cellular_order(n, k);

  cert.cellular_subset_ok = true;
  for (const Perm& p : cell_group.elements)
    if (!graph_group.contains(p)) cert.cellular_subset_ok = false;

  const PermGroup structured = group_closure(structured_generators(n, k));
  cert.structured_ok = structured.elements == cell_group.elements;

  const std::size_t flag_count = flags(quad).size();
  cert.flag_count_ok = flag_count == static_cast<std::size_t>(8) * n * k;
  if (n == k)
    cert.flag_count_ok =
        cert.flag_count_ok &&
        static_cast<long>(flag_count) == cell_group.order();

  cert.clifford_ok = clifford_check(r, 1e-12);
  cert.centroid_ok = centroid_norm(r) < 1e-12;

  // Extend the whole graph group; the cellular subset supplies the
  // certificate witnesses. The extendable permutations form Sym(B(P^4)),
  // understood combinatorially.
  std::vector<Perm> extendable;
  std::vector<Perm> extendable_cellular;
  cert.witness_bijection_ok = true;
  cert.witness_det_ok = true;
  for (const Perm& p : graph_group.elements) {
    IsometryWitness w = extend_to_isometry(r, p, tol);
    cert.graph_max_fit_residual =
        std::max(cert.graph_max_fit_residual, w.fit_residual);
    cert.graph_max_orth_residual =
        std::max(cert.graph_max_orth_residual, w.orthogonality_residual);
    const bool extends = w.valid(tol);
    if (extends) extendable.push_back(p);
    if (cell_group.contains(p)) {
      cert.max_fit_residual = std::max(cert.max_fit_residual, w.fit_residual);
      cert.max_orth_residual =
          std::max(cert.max_orth_residual, w.orthogonality_residual);
      if (point_matching_error(r, w.matrix) >= tol)
        cert.witness_bijection_ok = false;
      if (std::abs(std::abs(w.det) - 1.0) >= tol) cert.witness_det_ok = false;
      if (extends) extendable_cellular.push_back(p);
      cert.witnesses.push_back(std::move(w));
    }
  }
  cert.witnesses_ok =
      cert.max_fit_residual < tol && cert.max_orth_residual < tol &&
      cert.witnesses.size() == static_cast<std::size_t>(cell_group.order());
  cert.graph_extends_ok = extendable.size() ==
                          static_cast<std::size_t>(graph_group.order());

  // Inheritance conditions, twice: the extendable graph automorphisms (the
  // duoprism symmetries, understood as permutations) cover the 1-skeleton,
  // and their face-preserving subgroup covers the quadrangulation.
  CellComplex skeleton;
  skeleton.graph = quad.graph;
  skeleton.n = n;
  skeleton.k = k;
  if (!extendable.empty()) {
    cert.lemma2_skeleton =
        check_lemma2(group_from_elements(extendable), skeleton,
                     duoprism.graph.vertex_count(), graph_group.order());
  }
  if (!extendable_cellular.empty()) {
    cert.lemma2_quad =
        check_lemma2(group_from_elements(extendable_cellular), quad,
                     duoprism.graph.vertex_count(), cell_group.order());
  }

  cert.transitivity = transitivity_report(cell_group, quad);
  const bool expect_flag_transitive = (n == k);
  cert.transitivity_ok =
      cert.transitivity.vertex_transitive &&
      cert.transitivity.face_transitive &&
      cert.transitivity.flag_transitive == expect_flag_transitive &&
      cert.transitivity.edge_orbits == (n == k ? 1u : 2u);
  cert.classification = cert.transitivity.flag_transitive ? "regular" : "noble";

  cert.metric = metric_report(r, quad, tol);
  const double pi = std::numbers::pi;
  const bool edges_ok = buckets_match(
      cert.metric.edge_length_orbits,
      {2.0 * std::sin(pi / n), 2.0 * std::sin(pi / k)}, tol);
  const bool dihedrals_ok = buckets_match(
      cert.metric.dihedral_angle_classes,
      {pi - 2.0 * pi / n, pi - 2.0 * pi / k}, tol);
  cert.metric_ok = edges_ok && dihedrals_ok &&
                   cert.metric.faces_are_planar_rectangles &&
                   cert.metric.face_congruence_classes == 1 &&
                   cert.metric.vertex_figure_classes == 1;

  cert.pass = cert.graph_order_formula_ok && cert.cellular_order_formula_ok &&
              cert.cellular_subset_ok && cert.structured_ok &&
              cert.complex_valid_ok && cert.flag_count_ok &&
              cert.clifford_ok && cert.centroid_ok && cert.witnesses_ok &&
              cert.witness_bijection_ok && cert.witness_det_ok &&
              cert.graph_extends_ok && cert.lemma2_skeleton.conclusion &&
              cert.lemma2_quad.conclusion && cert.transitivity_ok &&
              cert.metric_ok && cert.max_fit_residual < tol &&
              cert.max_orth_residual < tol;
  return cert;
}

Certificate verify_no_hidden_symmetries(int n, int k, double tol,
                                        int vertex_cap) {
  return verify_realization(duoprism_vertices(n, k), tol, vertex_cap);
}

namespace {

struct CoverSearch {
  const std::vector<std::vector<int>>& face_edges;  // 4 edge ids per face
  std::vector<int> count;       // per-edge coverage so far
  std::vector<int> available;   // faces not yet decided that contain the edge
  std::vector<std::size_t> chosen;
  std::vector<std::vector<std::size_t>> results;

  void run() { decide(0); }

  void decide(std::size_t fi) {
    if (fi == face_edges.size()) {
      for (int c : count)
        if (c != 2) return;
      results.push_back(chosen);
      return;
    }
    const auto& es = face_edges[fi];
    for (int e : es) --available[e];

    // Exclude fi, unless some of its edges can no longer reach coverage 2.
    bool feasible = true;
    for (int e : es)
      if (count[e] + available[e] < 2) feasible = false;
    if (feasible) decide(fi + 1);

    // Include fi, unless some edge would exceed coverage 2.
    feasible = true;
    for (int e : es)
      if (count[e] + 1 > 2) feasible = false;
    if (feasible) {
      for (int e : es) ++count[e];
      chosen.push_back(fi);
      decide(fi + 1);
      chosen.pop_back();
      for (int e : es) --count[e];
    }

    for (int e : es) ++available[e];
  }
};

}  // namespace

HypercubeEnumeration enumerate_q44_in_hypercube() {
  const CellComplex cube = build_duoprism_boundary(4, 4);
  const CellComplex q44 = build_torus_quadrangulation(4, 4);

  const std::vector<Edge> edges = cube.graph.edges();
  std::map<Edge, int> edge_idx;
  for (std::size_t i = 0; i < edges.size(); ++i)
    edge_idx[edges[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> face_edges(cube.faces.size());
  for (std::size_t fi = 0; fi < cube.faces.size(); ++fi) {
    const auto& b = cube.faces[fi].boundary;
    for (std::size_t p = 0; p < b.size(); ++p)
      face_edges[fi].push_back(
          edge_idx.at(make_edge(b[p], b[(p + 1) % b.size()])));
  }
  std::vector<int> available(edges.size(), 0);
  for (const auto& es : face_edges)
    for (int e : es) ++available[e];

  CoverSearch search{face_edges, std::vector<int>(edges.size(), 0), available,
                     {}, {}};
  search.run();
  std::sort(search.results.begin(), search.results.end());

  HypercubeEnumeration result;
  result.double_covers = search.results;

  const PermGroup graph_group = graph_automorphisms(cube.graph);
  const PermGroup cell_group = cellular_automorphisms(q44);
  result.group_order_ratio =
      static_cast<int>(graph_group.order() / cell_group.order());

  // A double cover is a copy of Q_{4,4} when it is surface-connected and
  // some skeleton automorphism carries the Q_{4,4} face set onto it.
  auto face_set_of = [&](const std::vector<std::size_t>& cover) {
    std::set<Face> fs;
    for (std::size_t fi : cover) fs.insert(cube.faces[fi]);
    return fs;
  };
  auto surface_connected = [&](const std::vector<std::size_t>& cover) {
    // faces adjacent when sharing an edge
    std::map<Edge, std::vector<int>> by_edge;
    for (std::size_t ci = 0; ci < cover.size(); ++ci)
      for (int e : face_edges[cover[ci]])
        by_edge[edges[e]].push_back(static_cast<int>(ci));
    std::vector<std::vector<int>> adj(cover.size());
    for (const auto& [e, fs] : by_edge)
      for (std::size_t x = 0; x < fs.size(); ++x)
        for (std::size_t y = x + 1; y < fs.size(); ++y) {
          adj[fs[x]].push_back(fs[y]);
          adj[fs[y]].push_back(fs[x]);
        }
    std::vector<bool> seen(cover.size(), false);
    std::vector<int> stack = {0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = true;
          ++reached;
          stack.push_back(y);
        }
    }
    return reached == cover.size();
  };

  std::vector<std::set<Face>> copies;
  for (const auto& cover : search.results) {
    if (!surface_connected(cover)) continue;
    const std::set<Face> target = face_set_of(cover);
    bool isomorphic = false;
    for (const Perm& p : graph_group.elements) {
      bool all_in = true;
      for (const Face& f : q44.faces) {
        if (!target.count(apply(p, f))) {
          all_in = false;
          break;
        }
      }
      if (all_in) {
        isomorphic = true;
        break;
      }
    }
    if (isomorphic) {
      ++result.copies_isomorphic_to_q44;
      copies.push_back(target);
    }
  }

  // Orbit structure of the copies under Aut(C_4 x C_4), recorded as data.
  std::vector<bool> assigned(copies.size(), false);
  for (std::size_t i = 0; i < copies.size(); ++i) {
    if (assigned[i]) continue;
    std::size_t orbit_size = 0;
    for (std::size_t j = i; j < copies.size(); ++j) {
      if (assigned[j]) continue;
      bool related = false;
      for (const Perm& p : graph_group.elements) {
        std::set<Face> mapped;
        for (const Face& f : copies[i]) mapped.insert(apply(p, f));
        if (mapped == copies[j]) {
          related = true;
          break;
        }
      }
      if (related) {
        assigned[j] = true;
        ++orbit_size;
      }
    }
    result.copy_orbit_sizes.push_back(orbit_size);
  }

  return result;
}

int count_q44_in_hypercube() {
  return enumerate_q44_in_hypercube().copies_isomorphic_to_q44;
}

}  // namespace torquad
