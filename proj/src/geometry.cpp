#include "torquad/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace torquad {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

Eigen::Matrix2d rotation2(double angle) {
  Eigen::Matrix2d r;
  r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return r;
}

Matrix4 block_diag(const Eigen::Matrix2d& a, const Eigen::Matrix2d& b) {
  Matrix4 m = Matrix4::Zero();
  m.topLeftCorner<2, 2>() = a;
  m.bottomRightCorner<2, 2>() = b;
  return m;
}

}  // namespace

Realization duoprism_vertices(int n, int k) {
  if (n < 3 || k < 3)
    throw std::invalid_argument("cycle lengths must be at least 3");
  Realization r;
  r.n = n;
  r.k = k;
  r.points.resize(static_cast<std::size_t>(n) * k);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) {
      r.points[encode_vertex(i, j, k)] =
          Point4(std::cos(kTau * i / n), std::sin(kTau * i / n),
                 std::cos(kTau * j / k), std::sin(kTau * j / k));
    }
  }
  return r;
}

bool clifford_check(const Realization& r, double tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  for (const Point4& p : r.points) {
    double c1 = p[0] * p[0] + p[1] * p[1];
    double c2 = p[2] * p[2] + p[3] * p[3];
    if (std::abs(c1 - 1.0) >= tol || std::abs(c2 - 1.0) >= tol) return false;
  }
  return true;
}

double centroid_norm(const Realization& r) {
  Point4 c = Point4::Zero();
  for (const Point4& p : r.points) c += p;
  return (c / static_cast<double>(r.points.size())).norm();
}

IsometryWitness extend_to_isometry(const Realization& r, const Perm& pi,
                                   double tol) {
  const int count = static_cast<int>(r.points.size());
  if (pi.degree() != count)
    throw std::invalid_argument("automorphism degree does not match points");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");

  Eigen::Matrix4Xd source(4, count), target(4, count);
  for (int v = 0; v < count; ++v) {
    source.col(v) = r.points[v];
    target.col(v) = r.points[pi(v)];
  }

  // Normal equations for A minimizing ||A X - Y||_F: A = Y X^T (X X^T)^-1.
  Matrix4 gram = source * source.transpose();
  Eigen::JacobiSVD<Matrix4> svd(gram);
  const double smallest = svd.singularValues()(3);
  if (smallest < 1e-12 * svd.singularValues()(0))
    throw std::runtime_error("points do not affinely span R^4");

  IsometryWitness w;
  w.automorphism = pi;
  w.matrix = (target * source.transpose()) * gram.inverse();
  w.fit_residual = (w.matrix * source - target).colwise().norm().maxCoeff();
  w.orthogonality_residual =
      (w.matrix.transpose() * w.matrix - Matrix4::Identity())
          .cwiseAbs()
          .maxCoeff();
  w.det = w.matrix.determinant();
  return w;
}

std::vector<std::pair<Matrix4, Perm>> symmetry_generator_matrices(int n,
                                                                  int k) {
  const std::vector<Perm> gens = structured_generators(n, k);
  const Eigen::Matrix2d identity2 = Eigen::Matrix2d::Identity();
  Eigen::Matrix2d reflect2;
  reflect2 << 1, 0, 0, -1;  // conjugation: angle t -> -t

  std::vector<std::pair<Matrix4, Perm>> out;
  out.emplace_back(block_diag(rotation2(kTau / n), identity2), gens[0]);
  out.emplace_back(block_diag(reflect2, identity2), gens[1]);
  out.emplace_back(block_diag(identity2, rotation2(kTau / k)), gens[2]);
  out.emplace_back(block_diag(identity2, reflect2), gens[3]);
  if (n == k) {
    Matrix4 swap = Matrix4::Zero();
    swap.topRightCorner<2, 2>() = identity2;
    swap.bottomLeftCorner<2, 2>() = identity2;
    out.emplace_back(swap, gens[4]);
  }
  return out;
}

std::vector<double> bucket_values(std::vector<double> values, double tol) {
  if (values.empty()) return {};
  std::sort(values.begin(), values.end());
  std::vector<double> reps;
  double sum = values[0];
  std::size_t count = 1;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] - values[i - 1] > tol) {
      reps.push_back(sum / static_cast<double>(count));
      sum = 0;
      count = 0;
    }
    sum += values[i];
    ++count;
  }
  reps.push_back(sum / static_cast<double>(count));
  return reps;
}

namespace {

// Classes of real-vector signatures, matched entrywise within tol.
std::size_t signature_classes(const std::vector<std::vector<double>>& sigs,
                              double tol) {
  std::vector<std::vector<double>> reps;
  for (const auto& s : sigs) {
    bool matched = false;
    for (const auto& r : reps) {
      if (r.size() != s.size()) continue;
      bool close = true;
      for (std::size_t i = 0; i < s.size() && close; ++i)
        close = std::abs(s[i] - r[i]) <= tol;
      if (close) {
        matched = true;
        break;
      }
    }
    if (!matched) reps.push_back(s);
  }
  return reps.size();
}

}  // namespace

MetricReport metric_report(const Realization& r, const CellComplex& c,
                           double tol) {
  if (r.points.size() != static_cast<std::size_t>(c.graph.vertex_count()))
    throw std::invalid_argument("realization does not match the complex");
  for (const Face& f : c.faces)
    if (f.size() != 4)
      throw std::invalid_argument("metric report expects quadrilateral faces");

  MetricReport rep;

  std::vector<double> edge_lengths;
  for (const Edge& e : c.graph.edges())
    edge_lengths.push_back((r.points[e.first] - r.points[e.second]).norm());
  rep.edge_length_orbits = bucket_values(edge_lengths, tol);

  // Face congruence: each quad must be a planar rectangle; classes are the
  // distinct sorted side-length pairs.
  rep.faces_are_planar_rectangles = true;
  std::vector<std::vector<double>> face_sigs;
  for (const Face& f : c.faces) {
    const auto& b = f.boundary;
    Point4 p0 = r.points[b[0]], p1 = r.points[b[1]], p2 = r.points[b[2]],
           p3 = r.points[b[3]];
    // Distance of the far corner from the plane of the two sides at p0
    // (an upper bound for the third singular value of the span).
    Point4 u1 = (p1 - p0).normalized();
    Point4 w2 = (p3 - p0) - (p3 - p0).dot(u1) * u1;
    Point4 resid = (p2 - p0) - (p2 - p0).dot(u1) * u1;
    if (w2.norm() > 1e-300) {
      Point4 u2 = w2.normalized();
      resid -= resid.dot(u2) * u2;
    }
    const double planarity = resid.norm();
    rep.max_planarity_defect = std::max(rep.max_planarity_defect, planarity);
    if (planarity >= tol) rep.faces_are_planar_rectangles = false;

    double sides[4] = {(p1 - p0).norm(), (p2 - p1).norm(), (p3 - p2).norm(),
                       (p0 - p3).norm()};
    if (std::abs(sides[0] - sides[2]) >= tol ||
        std::abs(sides[1] - sides[3]) >= tol)
      rep.faces_are_planar_rectangles = false;
    Point4 corners[4] = {p0, p1, p2, p3};
    for (int q = 0; q < 4; ++q) {
      Point4 prev = corners[(q + 3) % 4] - corners[q];
      Point4 next = corners[(q + 1) % 4] - corners[q];
      if (std::abs(prev.dot(next)) >= tol)
        rep.faces_are_planar_rectangles = false;
    }
    std::vector<double> sig = {std::min(sides[0], sides[1]),
                               std::max(sides[0], sides[1])};
    face_sigs.push_back(std::move(sig));
  }
  rep.face_congruence_classes = signature_classes(face_sigs, tol);

  // Dihedral angle along each edge: angle in [0, pi] between the two
  // adjacent face half-planes after projecting out the edge direction.
  std::map<Edge, std::vector<std::size_t>> edge_faces;
  for (std::size_t fi = 0; fi < c.faces.size(); ++fi) {
    const auto& b = c.faces[fi].boundary;
    for (std::size_t p = 0; p < b.size(); ++p)
      edge_faces[make_edge(b[p], b[(p + 1) % b.size()])].push_back(fi);
  }
  std::vector<double> dihedrals;
  for (const auto& [e, incident] : edge_faces) {
    if (incident.size() != 2)
      throw std::invalid_argument("edge not on exactly two faces");
    Point4 pa = r.points[e.first];
    Point4 d = (r.points[e.second] - pa).normalized();
    Point4 wing[2];
    for (int side = 0; side < 2; ++side) {
      const auto& b = c.faces[incident[side]].boundary;
      // boundary neighbor of e.first within this face that is not e.second
      Point4 w = Point4::Zero();
      for (std::size_t p = 0; p < b.size(); ++p) {
        if (b[p] != e.first) continue;
        VertexId prev = b[(p + b.size() - 1) % b.size()];
        VertexId next = b[(p + 1) % b.size()];
        VertexId other = (prev == e.second) ? next : prev;
        w = r.points[other] - pa;
        break;
      }
      w -= w.dot(d) * d;
      wing[side] = w.normalized();
    }
    dihedrals.push_back(
        std::acos(std::clamp(wing[0].dot(wing[1]), -1.0, 1.0)));
  }
  rep.dihedral_angle_classes = bucket_values(dihedrals, tol);

  // Vertex figures: sorted pairwise distances among the neighbor points.
  std::vector<std::vector<double>> vertex_sigs;
  for (int v = 0; v < c.graph.vertex_count(); ++v) {
    const auto& nb = c.graph.neighbors(v);
    std::vector<double> sig;
    for (std::size_t x = 0; x < nb.size(); ++x)
      for (std::size_t y = x + 1; y < nb.size(); ++y)
        sig.push_back((r.points[nb[x]] - r.points[nb[y]]).norm());
    std::sort(sig.begin(), sig.end());
    vertex_sigs.push_back(std::move(sig));
  }
  rep.vertex_figure_classes = signature_classes(vertex_sigs, tol);

  return rep;
}

}  // namespace torquad
