#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "torquad/autgroup.hpp"
#include "torquad/complex.hpp"

using namespace torquad;

namespace {

long graph_order_formula(int n, int k) {
  if (n != k) return 4L * n * k;
  return n == 4 ? 384 : 8L * n * n;
}

long cellular_order_formula(int n, int k) { return n != k ? 4L * n * k : 8L * n * n; }

}  // namespace

TEST_CASE("perm basics") {
  Perm id = Perm::identity(5);
  CHECK(id.is_identity());
  Perm cyc({1, 2, 3, 4, 0});
  CHECK(compose(cyc, cyc.inverse()) == id);
  CHECK(compose(cyc.inverse(), cyc) == id);
  CHECK(compose(cyc, cyc)(0) == 2);
  CHECK_THROWS_AS(compose(cyc, Perm::identity(3)), std::invalid_argument);
}

TEST_CASE("group closure") {
  CHECK(group_closure({Perm::identity(6)}).order() == 1);

  Perm rot({1, 2, 3, 4, 5, 6, 0});
  CHECK(group_closure({rot}).order() == 7);

  CHECK(group_closure(structured_generators(3, 3)).order() == 72);

  CHECK_THROWS_AS(group_closure({Perm::identity(3), Perm::identity(4)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(group_closure({Perm({0, 0, 1})}), std::invalid_argument);

  SUBCASE("closed under composition and inverse") {
    PermGroup g = group_closure(structured_generators(3, 4));
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
      const Perm& a = g.elements[rng() % g.elements.size()];
      const Perm& b = g.elements[rng() % g.elements.size()];
      CHECK(g.contains(compose(a, b)));
      CHECK(g.contains(a.inverse()));
    }
    CHECK(g.contains(Perm::identity(12)));
  }
}

TEST_CASE("graph automorphism orders match the product-graph formula") {
  CHECK(graph_automorphisms(build_cycle_product_graph(3, 5)).order() == 60);
  CHECK(graph_automorphisms(build_cycle_product_graph(5, 5)).order() == 200);
  CHECK(graph_automorphisms(build_cycle_product_graph(4, 4)).order() == 384);
}

TEST_CASE("cellular automorphism orders") {
  CHECK(cellular_automorphisms(build_torus_quadrangulation(3, 5)).order() ==
        60);

  PermGroup q44 = cellular_automorphisms(build_torus_quadrangulation(4, 4));
  CHECK(q44.order() == 128);

  PermGroup g44 = graph_automorphisms(build_cycle_product_graph(4, 4));
  CHECK(g44.order() == 384);
  for (const Perm& p : q44.elements) CHECK(g44.contains(p));
}

TEST_CASE("orders across a small grid, plus containment") {
  for (int n = 3; n <= 5; ++n) {
    for (int k = n; k <= 5; ++k) {
      PermGroup gg = graph_automorphisms(build_cycle_product_graph(n, k));
      PermGroup cg = cellular_automorphisms(build_torus_quadrangulation(n, k));
      CHECK(gg.order() == graph_order_formula(n, k));
      CHECK(cg.order() == cellular_order_formula(n, k));
      for (const Perm& p : cg.elements) CHECK(gg.contains(p));
      if (n != 4 || k != 4) CHECK(gg.elements == cg.elements);
    }
  }
}

TEST_CASE("cellular elements map faces to faces, re-verified directly") {
  CellComplex q = build_torus_quadrangulation(4, 5);
  PermGroup cg = cellular_automorphisms(q);
  for (const Perm& p : cg.elements)
    for (const Face& f : q.faces) CHECK(q.has_face(apply(p, f)));
}

TEST_CASE("structured generators") {
  SUBCASE("counts and closure orders") {
    CHECK(structured_generators(3, 5).size() == 4);
    CHECK(group_closure(structured_generators(3, 5)).order() == 60);
    CHECK(structured_generators(5, 5).size() == 5);
    CHECK(group_closure(structured_generators(5, 5)).order() == 200);
  }

  SUBCASE("each generator is a cellular automorphism of Q_{n,k}") {
    for (auto [n, k] :
         std::vector<std::pair<int, int>>{{3, 5}, {5, 5}, {4, 4}}) {
      CellComplex q = build_torus_quadrangulation(n, k);
      for (const Perm& p : structured_generators(n, k))
        for (const Face& f : q.faces) CHECK(q.has_face(apply(p, f)));
    }
  }

  SUBCASE("(4,4) closure is the cellular group, not the graph group") {
    PermGroup closure = group_closure(structured_generators(4, 4));
    CHECK(closure.order() == 128);
    PermGroup cg = cellular_automorphisms(build_torus_quadrangulation(4, 4));
    CHECK(closure.elements == cg.elements);
  }

  SUBCASE("closure equals brute force on [3,5]^2") {
    for (int n = 3; n <= 5; ++n) {
      for (int k = 3; k <= 5; ++k) {
        PermGroup closure = group_closure(structured_generators(n, k));
        PermGroup cg =
            cellular_automorphisms(build_torus_quadrangulation(n, k));
        CHECK(closure.elements == cg.elements);
      }
    }
  }
}

TEST_CASE("vertex stabilizers and orbit-stabilizer") {
  PermGroup q55 = cellular_automorphisms(build_torus_quadrangulation(5, 5));
  for (VertexId v : {0, 7, 24}) {
    PermGroup stab = vertex_stabilizer(q55, v);
    CHECK(stab.order() == 8);
    for (const Perm& p : stab.elements) CHECK(p(v) == v);
  }

  PermGroup q35 = cellular_automorphisms(build_torus_quadrangulation(3, 5));
  for (VertexId v : {0, 5, 14}) CHECK(vertex_stabilizer(q35, v).order() == 4);

  SUBCASE("|orbit| x |stabilizer| = |G|") {
    std::mt19937 rng(13);
    for (const PermGroup& g : {q55, q35}) {
      for (int trial = 0; trial < 5; ++trial) {
        VertexId v = static_cast<VertexId>(rng() % g.degree);
        CHECK(static_cast<long>(orbit(g, v).size()) *
                  vertex_stabilizer(g, v).order() ==
              g.order());
      }
    }
  }
}

TEST_CASE("transitivity reports") {
  SUBCASE("Q_{3,5}: noble pattern") {
    CellComplex q = build_torus_quadrangulation(3, 5);
    TransitivityReport rep = transitivity_report(cellular_automorphisms(q), q);
    CHECK(rep.vertex_transitive);
    CHECK(rep.face_transitive);
    CHECK_FALSE(rep.edge_transitive);
    CHECK(rep.edge_orbits == 2);
    CHECK_FALSE(rep.flag_transitive);
  }

  SUBCASE("Q_{6,6}: flag-transitive with |G| = flag count") {
    CellComplex q = build_torus_quadrangulation(6, 6);
    PermGroup g = cellular_automorphisms(q);
    TransitivityReport rep = transitivity_report(g, q);
    CHECK(rep.flag_transitive);
    CHECK(rep.flag_orbits == 1);
    CHECK(g.order() == 288);
    CHECK(flags(q).size() == 288);
  }

  SUBCASE("trivial group: one orbit per cell") {
    CellComplex q = build_torus_quadrangulation(3, 3);
    PermGroup trivial = group_closure({Perm::identity(9)});
    TransitivityReport rep = transitivity_report(trivial, q);
    CHECK_FALSE(rep.vertex_transitive);
    CHECK(rep.vertex_orbits == 9);
    CHECK(rep.edge_orbits == 18);
    CHECK(rep.face_orbits == 9);
    CHECK(rep.flag_orbits == 72);
  }

  SUBCASE("rejects an action that breaks the complex") {
    CellComplex q = build_torus_quadrangulation(3, 4);
    // A permutation that is not a graph automorphism.
    std::vector<int> img(12);
    for (int v = 0; v < 12; ++v) img[v] = v;
    std::swap(img[0], img[1]);
    std::swap(img[2], img[5]);
    PermGroup bogus;
    bogus.degree = 12;
    bogus.generators = {Perm(img)};
    bogus.elements = {Perm::identity(12), Perm(img)};
    CHECK_THROWS_AS(transitivity_report(bogus, q), std::invalid_argument);
  }
}

TEST_CASE("size cap is enforced") {
  CHECK_THROWS_AS(graph_automorphisms(build_cycle_product_graph(8, 8), 50),
                  std::runtime_error);
}

TEST_CASE("complex isomorphisms dispatch on faces too") {
  CellComplex q44 = build_torus_quadrangulation(4, 4);
  CellComplex d44 = build_duoprism_boundary(4, 4);
  // Same 1-skeleton, different face sets and counts: not isomorphic.
  CHECK(complex_isomorphisms(q44, d44).empty());
  CHECK(complex_isomorphisms(q44, q44).size() == 128);

  CellComplex q35 = build_torus_quadrangulation(3, 5);
  CellComplex q53 = build_torus_quadrangulation(5, 3);
  CHECK(complex_isomorphisms(q35, q53).size() == 60);
}
