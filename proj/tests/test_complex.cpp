#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "torquad/complex.hpp"

using namespace torquad;

TEST_CASE("vertex encoding round-trips") {
  for (int n = 3; n <= 6; ++n)
    for (int k = 3; k <= 6; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) {
          auto [di, dj] = decode_vertex(encode_vertex(i, j, k), k);
          CHECK(di == i);
          CHECK(dj == j);
        }
}

TEST_CASE("cycle product graph counts and regularity") {
  Graph g33 = build_cycle_product_graph(3, 3);
  CHECK(g33.vertex_count() == 9);
  CHECK(g33.edge_count() == 18);

  Graph g44 = build_cycle_product_graph(4, 4);
  CHECK(g44.vertex_count() == 16);
  CHECK(g44.edge_count() == 32);

  Graph g35 = build_cycle_product_graph(3, 5);
  CHECK(g35.vertex_count() == 15);
  CHECK(g35.edge_count() == 30);
  for (int v = 0; v < 15; ++v) CHECK(g35.degree(v) == 4);

  CHECK_THROWS_AS(build_cycle_product_graph(2, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_cycle_product_graph(5, 2), std::invalid_argument);
}

TEST_CASE("product graph (4,4) is the 4-cube 1-skeleton") {
  // Independent construction: vertices are bitstrings, edges flip one bit.
  // Map (b3 b2)(b1 b0) -> (i,j) through the cyclic order 00,01,11,10 of the
  // two-bit square.
  auto gray = [](int hi, int lo) {
    static const int pos[2][2] = {{0, 1}, {3, 2}};  // pos[hi][lo]
    return pos[hi][lo];
  };
  auto to_vertex = [&](int bits) {
    int i = gray((bits >> 3) & 1, (bits >> 2) & 1);
    int j = gray((bits >> 1) & 1, bits & 1);
    return encode_vertex(i, j, 4);
  };
  std::set<Edge> cube_edges;
  for (int a = 0; a < 16; ++a)
    for (int bit = 0; bit < 4; ++bit)
      cube_edges.insert(make_edge(to_vertex(a), to_vertex(a ^ (1 << bit))));

  Graph g = build_cycle_product_graph(4, 4);
  std::vector<Edge> got = g.edges();
  CHECK(std::set<Edge>(got.begin(), got.end()) == cube_edges);
}

TEST_CASE("torus quadrangulation structure") {
  CellComplex q33 = build_torus_quadrangulation(3, 3);
  CHECK(q33.faces.size() == 9);
  std::map<Edge, int> on_faces;
  for (const Face& f : q33.faces)
    for (std::size_t p = 0; p < 4; ++p)
      ++on_faces[make_edge(f.boundary[p], f.boundary[(p + 1) % 4])];
  CHECK(on_faces.size() == 18);
  for (const auto& [e, cnt] : on_faces) CHECK(cnt == 2);

  CellComplex q44 = build_torus_quadrangulation(4, 4);
  CHECK(q44.faces.size() == 16);
  CHECK(euler_characteristic(q44) == 0);

  CHECK(build_torus_quadrangulation(5, 3).faces.size() == 15);
  CHECK_THROWS_AS(build_torus_quadrangulation(1, 3), std::invalid_argument);
}

namespace {

// Independent flag counter: walk vertex x neighbor x face and test incidence
// directly against the boundary cycles.
int count_flags_brute(const CellComplex& c) {
  int count = 0;
  for (int v = 0; v < c.graph.vertex_count(); ++v) {
    for (VertexId w : c.graph.neighbors(v)) {
      Edge e = make_edge(v, w);
      for (const Face& f : c.faces) {
        const auto& b = f.boundary;
        for (std::size_t p = 0; p < b.size(); ++p) {
          if (make_edge(b[p], b[(p + 1) % b.size()]) == e) {
            ++count;
            break;
          }
        }
      }
    }
  }
  return count;
}

}  // namespace

TEST_CASE("flag counts") {
  // 8 flags per quadrilateral face, verified by brute-force incidence.
  CellComplex q53 = build_torus_quadrangulation(5, 3);
  CHECK(count_flags_brute(q53) == 120);
  CHECK(flags(q53).size() == 120);

  CellComplex q33 = build_torus_quadrangulation(3, 3);
  CHECK(flags(q33).size() == 72);

  CellComplex q44 = build_torus_quadrangulation(4, 4);
  CHECK(flags(q44).size() == 128);

  // A single quadrilateral face.
  CellComplex single;
  single.graph = Graph(4);
  for (int v = 0; v < 4; ++v) single.graph.add_edge(v, (v + 1) % 4);
  single.faces = {canonical_face({0, 1, 2, 3})};
  CHECK(flags(single).size() == 8);
  CHECK(count_flags_brute(single) == 8);
}

TEST_CASE("flag count is 8nk across the grid") {
  for (int n = 3; n <= 8; ++n)
    for (int k = 3; k <= 8; ++k)
      CHECK(flags(build_torus_quadrangulation(n, k)).size() ==
            static_cast<std::size_t>(8) * n * k);
}

TEST_CASE("duoprism boundary complex") {
  CellComplex d33 = build_duoprism_boundary(3, 3);
  CHECK(d33.faces.size() == 15);
  CHECK(d33.cells3.size() == 6);

  CellComplex d44 = build_duoprism_boundary(4, 4);
  CHECK(d44.faces.size() == 24);
  CHECK(d44.cells3.size() == 8);
  for (const Face& f : d44.faces) CHECK(f.size() == 4);

  CellComplex d35 = build_duoprism_boundary(3, 5);
  CHECK(d35.faces.size() == 23);
  CHECK(d35.cells3.size() == 8);

  SUBCASE("every 2-face lies on exactly two 3-cells") {
    for (const auto& c : {d33, d44, d35}) {
      std::vector<int> on_cells(c.faces.size(), 0);
      for (const auto& cell : c.cells3)
        for (std::size_t fi : cell) ++on_cells[fi];
      for (int cnt : on_cells) CHECK(cnt == 2);
    }
  }

  SUBCASE("removing the n-gons and k-gons leaves exactly Q_{n,k}") {
    for (int n = 3; n <= 6; ++n) {
      for (int k = 3; k <= 6; ++k) {
        CellComplex duo = build_duoprism_boundary(n, k);
        CellComplex quad = build_torus_quadrangulation(n, k);
        std::set<Face> polygons;
        for (int j = 0; j < k; ++j) {
          std::vector<VertexId> cyc(n);
          for (int i = 0; i < n; ++i) cyc[i] = encode_vertex(i, j, k);
          polygons.insert(canonical_face(cyc));
        }
        for (int i = 0; i < n; ++i) {
          std::vector<VertexId> cyc(k);
          for (int j = 0; j < k; ++j) cyc[j] = encode_vertex(i, j, k);
          polygons.insert(canonical_face(cyc));
        }
        CHECK(polygons.size() == static_cast<std::size_t>(n + k));
        std::vector<Face> remaining;
        for (const Face& f : duo.faces)
          if (!polygons.count(f)) remaining.push_back(f);
        CHECK(remaining == quad.faces);
      }
    }
  }
}

TEST_CASE("duoprism (4,4) matches an independently built 4-cube boundary") {
  auto gray = [](int hi, int lo) {
    static const int pos[2][2] = {{0, 1}, {3, 2}};
    return pos[hi][lo];
  };
  auto to_vertex = [&](int bits) {
    int i = gray((bits >> 3) & 1, (bits >> 2) & 1);
    int j = gray((bits >> 1) & 1, bits & 1);
    return encode_vertex(i, j, 4);
  };

  // Squares of the 4-cube: pick two free bit positions, fix the other two.
  std::set<Face> cube_faces;
  for (int p = 0; p < 4; ++p) {
    for (int q = p + 1; q < 4; ++q) {
      for (int base = 0; base < 16; ++base) {
        if ((base >> p) & 1) continue;
        if ((base >> q) & 1) continue;
        cube_faces.insert(canonical_face(
            {to_vertex(base), to_vertex(base | (1 << p)),
             to_vertex(base | (1 << p) | (1 << q)), to_vertex(base | (1 << q))}));
      }
    }
  }
  CHECK(cube_faces.size() == 24);

  // Cubical cells: pick three free positions, fix one bit.
  std::set<std::set<Face>> cube_cells;
  for (int fixed = 0; fixed < 4; ++fixed) {
    for (int val = 0; val < 2; ++val) {
      std::set<Face> cell;
      for (int p = 0; p < 4; ++p) {
        for (int q = p + 1; q < 4; ++q) {
          if (p == fixed || q == fixed) continue;
          for (int base = 0; base < 16; ++base) {
            if (((base >> fixed) & 1) != val) continue;
            if ((base >> p) & 1) continue;
            if ((base >> q) & 1) continue;
            cell.insert(canonical_face({to_vertex(base),
                                        to_vertex(base | (1 << p)),
                                        to_vertex(base | (1 << p) | (1 << q)),
                                        to_vertex(base | (1 << q))}));
          }
        }
      }
      CHECK(cell.size() == 6);
      cube_cells.insert(cell);
    }
  }
  CHECK(cube_cells.size() == 8);

  CellComplex duo = build_duoprism_boundary(4, 4);
  CHECK(std::set<Face>(duo.faces.begin(), duo.faces.end()) == cube_faces);

  std::set<std::set<Face>> duo_cells;
  for (const auto& cell : duo.cells3) {
    std::set<Face> fs;
    for (std::size_t fi : cell) fs.insert(duo.faces[fi]);
    duo_cells.insert(fs);
  }
  CHECK(duo_cells == cube_cells);
}

TEST_CASE("canonical face") {
  CHECK(canonical_face({2, 0, 1}).boundary == std::vector<int>{0, 1, 2});
  CHECK(canonical_face({5, 4, 7, 6}).boundary == std::vector<int>{4, 5, 6, 7});
  CHECK_THROWS_AS(canonical_face({1, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(canonical_face({1, 2}), std::invalid_argument);

  SUBCASE("idempotent and invariant under rotation/reflection") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
      int m = 3 + static_cast<int>(rng() % 6);
      std::vector<int> cyc(m);
      // distinct labels
      std::set<int> used;
      for (int& v : cyc) {
        int x;
        do {
          x = static_cast<int>(rng() % 50);
        } while (used.count(x));
        used.insert(x);
        v = x;
      }
      Face base = canonical_face(cyc);
      CHECK(canonical_face(base.boundary) == base);

      std::vector<int> rotated(cyc);
      std::rotate(rotated.begin(), rotated.begin() + rng() % m, rotated.end());
      if (rng() % 2) std::reverse(rotated.begin(), rotated.end());
      CHECK(canonical_face(rotated) == base);
    }
  }
}

TEST_CASE("building twice gives identical face sets") {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 3; k <= 6; ++k) {
      CellComplex a = build_torus_quadrangulation(n, k);
      CellComplex b = build_torus_quadrangulation(n, k);
      CHECK(a.faces == b.faces);
      CHECK(a.graph == b.graph);
    }
  }
}

TEST_CASE("closed-surface validation across the grid") {
  for (int n = 3; n <= 8; ++n) {
    for (int k = 3; k <= 8; ++k) {
      CellComplex q = build_torus_quadrangulation(n, k);
      CHECK(q.graph.vertex_count() == n * k);
      CHECK(q.graph.edge_count() == static_cast<std::size_t>(2) * n * k);
      CHECK(q.faces.size() == static_cast<std::size_t>(n) * k);
      CHECK(euler_characteristic(q) == 0);
      CHECK_NOTHROW(validate_closed_surface(q));
      CHECK_NOTHROW(validate_complex(build_duoprism_boundary(n, k)));
    }
  }
}

TEST_CASE("validation rejects broken complexes") {
  CellComplex q = build_torus_quadrangulation(3, 3);
  q.faces.pop_back();  // an edge now lies on one face only
  CHECK_THROWS_AS(validate_closed_surface(q), std::runtime_error);

  CellComplex bad = build_torus_quadrangulation(3, 3);
  bad.faces.push_back(canonical_face({0, 1, 5}));  // not a graph cycle
  std::sort(bad.faces.begin(), bad.faces.end());
  CHECK_THROWS_AS(validate_complex(bad), std::runtime_error);
}

TEST_CASE("graph rejects loops and ignores duplicate edges") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 7), std::invalid_argument);
}
