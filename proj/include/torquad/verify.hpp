#pragma once

#include <string>
#include <vector>

#include "torquad/autgroup.hpp"
#include "torquad/complex.hpp"
#include "torquad/geometry.hpp"

namespace torquad {

// The three sufficient conditions under which a subcomplex inherits a
// hidden-symmetry-free realization from its ambient polytope boundary:
//   (i)   every ambient symmetry (as a vertex permutation) preserves the
//         subcomplex's cells,
//   (ii)  the ambient polytope has no vertices beyond the subcomplex's,
//   (iii) the ambient symmetry group is no smaller than the subcomplex's
//         automorphism group.
struct Lemma2Report {
  bool cond_i = false;
  bool cond_ii = false;
  bool cond_iii = false;
  bool conclusion = false;  // always cond_i && cond_ii && cond_iii

  bool operator==(const Lemma2Report&) const = default;
};

// cond_i: every element of ambient_group maps sub edges to edges and sub
// faces to faces. cond_ii: ambient_vertex_count == |V(sub)|. cond_iii:
// |ambient_group| == aut_order. Throws on degree mismatch.
Lemma2Report check_lemma2(const PermGroup& ambient_group,
                          const CellComplex& sub, int ambient_vertex_count,
                          long aut_order);

// Machine-checkable record that Q_{n,k}'s duoprism realization has no
// hidden symmetries, assembled by verify_no_hidden_symmetries.
struct Certificate {
  int n = 0;
  int k = 0;
  double tolerance = 1e-9;

  long group_order_graph = 0;     // measured |Aut(C_n x C_k)|
  long group_order_cellular = 0;  // measured |Aut(Q_{n,k})|

  // One witness per cellular automorphism.
  std::vector<IsometryWitness> witnesses;
  double max_fit_residual = 0.0;
  double max_orth_residual = 0.0;

  // Extension of the full graph group (= the ambient duoprism symmetries;
  // differs from the cellular set only at n = k = 4).
  double graph_max_fit_residual = 0.0;
  double graph_max_orth_residual = 0.0;

  Lemma2Report lemma2_skeleton;  // C_n x C_k inside B(P^4_{n,k})
  Lemma2Report lemma2_quad;      // Q_{n,k} inside its realized copy
  TransitivityReport transitivity;
  MetricReport metric;

  std::string classification;  // "regular" iff flag-transitive else "noble"

  // Formula and structural checks.
  bool graph_order_formula_ok = false;     // 4nk / 8n^2 / 384
  bool cellular_order_formula_ok = false;  // 4nk / 8n^2
  bool cellular_subset_ok = false;  // Aut(Q) <= Aut(C_n x C_k)
  bool structured_ok = false;       // closure(structured gens) == Aut(Q)
  bool complex_valid_ok = false;    // closed torus surface checks
  bool flag_count_ok = false;       // 8nk flags; = |Aut(Q)| when n = k
  bool clifford_ok = false;         // inscription at tol 1e-12
  bool centroid_ok = false;         // vertex centroid at origin (1e-12)
  bool witnesses_ok = false;        // all residuals < tolerance
  bool witness_bijection_ok = false;  // each matrix permutes the point set
  bool witness_det_ok = false;        // |det A| = 1 within tolerance
  bool graph_extends_ok = false;      // every graph automorphism extends
  bool transitivity_ok = false;       // noble/regular orbit pattern
  bool metric_ok = false;             // expected buckets and classes

  bool pass = false;
};

// End-to-end pipeline: build the complexes, compute both groups, verify the
// group-order formulas, extend every automorphism to an isometry, check the
// Lemma 2 conditions, measure transitivity and metric regularity, classify.
Certificate verify_no_hidden_symmetries(int n, int k, double tol = 1e-9,
                                        int vertex_cap = 100);

// Same pipeline on a caller-supplied realization (e.g. an imported or
// tampered coordinates file).
Certificate verify_realization(const Realization& r, double tol = 1e-9,
                               int vertex_cap = 100);

// Result of enumerating Q_{4,4} subcomplexes of the 4-cube boundary.
struct HypercubeEnumeration {
  // Face-index subsets (into build_duoprism_boundary(4,4).faces) covering
  // every edge exactly twice.
  std::vector<std::vector<std::size_t>> double_covers;
  int copies_isomorphic_to_q44 = 0;
  int group_order_ratio = 0;  // |Aut(C_4 x C_4)| / |Aut(Q_{4,4})|
  // Orbit sizes of the copies under Aut(C_4 x C_4), recorded as data.
  std::vector<std::size_t> copy_orbit_sizes;
};

HypercubeEnumeration enumerate_q44_in_hypercube();

// The number of subcomplexes of the 4-cube's 24 squares that form a
// quadrangulation isomorphic to Q_{4,4}. Equals 3.
int count_q44_in_hypercube();

}  // namespace torquad
