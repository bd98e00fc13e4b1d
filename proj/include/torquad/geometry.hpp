#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <utility>
#include <vector>

#include "torquad/autgroup.hpp"
#include "torquad/complex.hpp"

namespace torquad {

using Point4 = Eigen::Vector4d;
using Matrix4 = Eigen::Matrix4d;

// A map from vertex ids to points of R^4, indexed by VertexId.
struct Realization {
  int n = 0;
  int k = 0;
  std::vector<Point4> points;

  std::size_t size() const { return points.size(); }
};

// Vertex (i,j) at (cos 2pi i/n, sin 2pi i/n, cos 2pi j/k, sin 2pi j/k):
// the duoprism P^4_{n,k} vertex set, inscribed in the Clifford 2-torus.
Realization duoprism_vertices(int n, int k);

// True iff every point satisfies |x1^2+x2^2-1| < tol and |x3^2+x4^2-1| < tol.
bool clifford_check(const Realization& r, double tol);

double centroid_norm(const Realization& r);

// A 4x4 matrix extending one automorphism, with the residuals that certify
// (or refute) it as a Euclidean symmetry of the realization.
struct IsometryWitness {
  Matrix4 matrix = Matrix4::Identity();
  Perm automorphism;
  double fit_residual = 0.0;            // max_v |A·M_v - M_{pi(v)}|
  double orthogonality_residual = 0.0;  // max-norm of A^T A - I
  double det = 1.0;

  bool valid(double tol) const {
    return fit_residual < tol && orthogonality_residual < tol;
  }
};

// Least-squares 4x4 matrix A minimizing sum_v |A·M_v - M_{pi(v)}|^2.
// The duoprism vertex centroid is the origin, so there is no translation
// part. Throws std::runtime_error if the points do not span R^4.
IsometryWitness extend_to_isometry(const Realization& r, const Perm& pi,
                                   double tol);

// Explicit orthogonal matrices paired with the structured generators:
// block rotations R(2pi/n) (+) I2 and I2 (+) R(2pi/k), block reflections,
// and (iff n = k) the coordinate-pair swap. Each matrix permutes the
// duoprism vertex set exactly as its paired automorphism.
std::vector<std::pair<Matrix4, Perm>> symmetry_generator_matrices(int n,
                                                                  int k);

// Deterministic 1-d clustering: sort, split where the gap between
// consecutive values exceeds tol, report each bucket's mean.
std::vector<double> bucket_values(std::vector<double> values, double tol);

struct MetricReport {
  std::vector<double> edge_length_orbits;    // distinct edge lengths
  std::size_t face_congruence_classes = 0;
  std::vector<double> dihedral_angle_classes;
  std::size_t vertex_figure_classes = 0;
  bool faces_are_planar_rectangles = false;
  double max_planarity_defect = 0.0;
};

// Measures the metric regularity of a quadrangulation's realization:
// edge-length buckets, face congruence (each face checked to be a planar
// rectangle), dihedral angles along edges, and vertex figures compared by
// the sorted multiset of pairwise distances among the 4 neighbor points.
// Throws on non-quadrilateral faces.
MetricReport metric_report(const Realization& r, const CellComplex& c,
                           double tol = 1e-9);

}  // namespace torquad
