#include "torquad/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace torquad {

using nlohmann::ordered_json;

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json complex_to_json(const CellComplex& c) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = c.n;
  j["k"] = c.k;
  j["vertices"] = c.graph.vertex_count();
  ordered_json edges = ordered_json::array();
  for (const Edge& e : c.graph.edges()) edges.push_back({e.first, e.second});
  j["edges"] = std::move(edges);
  ordered_json faces = ordered_json::array();
  for (const Face& f : c.faces) faces.push_back(f.boundary);
  j["faces"] = std::move(faces);
  if (!c.cells3.empty()) j["cells3"] = c.cells3;
  return j;
}

CellComplex complex_from_json(const ordered_json& j) {
  CellComplex c;
  c.n = j.at("n").get<int>();
  c.k = j.at("k").get<int>();
  c.graph = Graph(j.at("vertices").get<int>());
  for (const auto& e : j.at("edges"))
    c.graph.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  for (const auto& f : j.at("faces"))
    c.faces.push_back(canonical_face(f.get<std::vector<int>>()));
  std::sort(c.faces.begin(), c.faces.end());
  if (j.contains("cells3"))
    c.cells3 = j.at("cells3").get<std::vector<std::vector<std::size_t>>>();
  return c;
}

std::string realization_to_json_string(const CellComplex& c,
                                       const Realization& r) {
  // Rendered by hand to pin the coordinate format at 17 significant digits.
  std::ostringstream os;
  os << "{\n";
  os << "  \"schema_version\": " << kSchemaVersion << ",\n";
  os << "  \"n\": " << c.n << ",\n";
  os << "  \"k\": " << c.k << ",\n";
  os << "  \"vertices\": " << c.graph.vertex_count() << ",\n";
  os << "  \"edges\": [";
  const auto edges = c.graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    os << (i ? "," : "") << "[" << edges[i].first << "," << edges[i].second
       << "]";
  }
  os << "],\n";
  os << "  \"faces\": [";
  for (std::size_t i = 0; i < c.faces.size(); ++i) {
    os << (i ? "," : "") << "[";
    const auto& b = c.faces[i].boundary;
    for (std::size_t p = 0; p < b.size(); ++p) os << (p ? "," : "") << b[p];
    os << "]";
  }
  os << "],\n";
  os << "  \"coords\": [\n";
  for (std::size_t v = 0; v < r.points.size(); ++v) {
    const Point4& p = r.points[v];
    os << "    [" << format_double(p[0]) << ", " << format_double(p[1])
       << ", " << format_double(p[2]) << ", " << format_double(p[3]) << "]"
       << (v + 1 < r.points.size() ? "," : "") << "\n";
  }
  os << "  ]\n";
  os << "}\n";
  return os.str();
}

Realization realization_from_json(const ordered_json& j) {
  Realization r;
  r.n = j.at("n").get<int>();
  r.k = j.at("k").get<int>();
  for (const auto& row : j.at("coords")) {
    r.points.emplace_back(row.at(0).get<double>(), row.at(1).get<double>(),
                          row.at(2).get<double>(), row.at(3).get<double>());
  }
  if (r.points.size() != static_cast<std::size_t>(r.n) * r.k)
    throw std::runtime_error("coords length does not match n*k");
  return r;
}

std::string realization_to_off(const CellComplex& c, const Realization& r) {
  std::ostringstream os;
  os << "4OFF\n";
  os << "# duoprism realization n=" << c.n << " k=" << c.k << "\n";
  os << c.graph.vertex_count() << " " << c.faces.size() << " "
     << c.graph.edge_count() << "\n";
  for (const Point4& p : r.points) {
    os << format_double(p[0]) << " " << format_double(p[1]) << " "
       << format_double(p[2]) << " " << format_double(p[3]) << "\n";
  }
  for (const Face& f : c.faces) {
    os << f.size();
    for (VertexId v : f.boundary) os << " " << v;
    os << "\n";
  }
  return os.str();
}

ordered_json group_to_json(const PermGroup& g, bool include_elements) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["degree"] = g.degree;
  j["order"] = g.order();
  ordered_json gens = ordered_json::array();
  for (const Perm& p : g.generators) gens.push_back(p.img);
  j["generators"] = std::move(gens);
  if (include_elements) {
    ordered_json elems = ordered_json::array();
    for (const Perm& p : g.elements) elems.push_back(p.img);
    j["elements"] = std::move(elems);
  }
  return j;
}

PermGroup group_from_json(const ordered_json& j) {
  std::vector<Perm> gens;
  for (const auto& g : j.at("generators"))
    gens.emplace_back(g.get<std::vector<int>>());
  if (j.contains("elements")) {
    PermGroup group;
    group.degree = j.at("degree").get<int>();
    group.generators = std::move(gens);
    for (const auto& e : j.at("elements"))
      group.elements.emplace_back(e.get<std::vector<int>>());
    return group;
  }
  return group_closure(gens);
}

namespace {

ordered_json witness_to_json(const IsometryWitness& w) {
  ordered_json j;
  j["automorphism"] = w.automorphism.img;
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < 4; ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < 4; ++c) row.push_back(w.matrix(r, c));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  j["fit_residual"] = w.fit_residual;
  j["orthogonality_residual"] = w.orthogonality_residual;
  j["det"] = w.det;
  return j;
}

IsometryWitness witness_from_json(const ordered_json& j) {
  IsometryWitness w;
  w.automorphism = Perm(j.at("automorphism").get<std::vector<int>>());
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      w.matrix(r, c) = j.at("matrix").at(r).at(c).get<double>();
  w.fit_residual = j.at("fit_residual").get<double>();
  w.orthogonality_residual = j.at("orthogonality_residual").get<double>();
  w.det = j.at("det").get<double>();
  return w;
}

ordered_json lemma2_to_json(const Lemma2Report& rep) {
  return {{"cond_i", rep.cond_i},
          {"cond_ii", rep.cond_ii},
          {"cond_iii", rep.cond_iii},
          {"conclusion", rep.conclusion}};
}

Lemma2Report lemma2_from_json(const ordered_json& j) {
  Lemma2Report rep;
  rep.cond_i = j.at("cond_i").get<bool>();
  rep.cond_ii = j.at("cond_ii").get<bool>();
  rep.cond_iii = j.at("cond_iii").get<bool>();
  rep.conclusion = j.at("conclusion").get<bool>();
  return rep;
}

}  // namespace

ordered_json certificate_to_json(const Certificate& cert) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = cert.n;
  j["k"] = cert.k;
  j["tolerance"] = cert.tolerance;
  j["group_order_graph"] = cert.group_order_graph;
  j["group_order_cellular"] = cert.group_order_cellular;
  j["max_fit_residual"] = cert.max_fit_residual;
  j["max_orth_residual"] = cert.max_orth_residual;
  j["graph_max_fit_residual"] = cert.graph_max_fit_residual;
  j["graph_max_orth_residual"] = cert.graph_max_orth_residual;
  j["lemma2_skeleton"] = lemma2_to_json(cert.lemma2_skeleton);
  j["lemma2_quad"] = lemma2_to_json(cert.lemma2_quad);
  j["transitivity"] = {{"vertex_transitive", cert.transitivity.vertex_transitive},
                       {"edge_transitive", cert.transitivity.edge_transitive},
                       {"face_transitive", cert.transitivity.face_transitive},
                       {"flag_transitive", cert.transitivity.flag_transitive},
                       {"vertex_orbits", cert.transitivity.vertex_orbits},
                       {"edge_orbits", cert.transitivity.edge_orbits},
                       {"face_orbits", cert.transitivity.face_orbits},
                       {"flag_orbits", cert.transitivity.flag_orbits}};
  j["metric"] = {{"edge_length_orbits", cert.metric.edge_length_orbits},
                 {"face_congruence_classes", cert.metric.face_congruence_classes},
                 {"dihedral_angle_classes", cert.metric.dihedral_angle_classes},
                 {"vertex_figure_classes", cert.metric.vertex_figure_classes},
                 {"faces_are_planar_rectangles",
                  cert.metric.faces_are_planar_rectangles},
                 {"max_planarity_defect", cert.metric.max_planarity_defect}};
  j["classification"] = cert.classification;
  j["checks"] = {{"graph_order_formula_ok", cert.graph_order_formula_ok},
                 {"cellular_order_formula_ok", cert.cellular_order_formula_ok},
                 {"cellular_subset_ok", cert.cellular_subset_ok},
                 {"structured_ok", cert.structured_ok},
                 {"complex_valid_ok", cert.complex_valid_ok},
                 {"flag_count_ok", cert.flag_count_ok},
                 {"clifford_ok", cert.clifford_ok},
                 {"centroid_ok", cert.centroid_ok},
                 {"witnesses_ok", cert.witnesses_ok},
                 {"witness_bijection_ok", cert.witness_bijection_ok},
                 {"witness_det_ok", cert.witness_det_ok},
                 {"graph_extends_ok", cert.graph_extends_ok},
                 {"transitivity_ok", cert.transitivity_ok},
                 {"metric_ok", cert.metric_ok}};
  j["pass"] = cert.pass;
  ordered_json ws = ordered_json::array();
  for (const IsometryWitness& w : cert.witnesses)
    ws.push_back(witness_to_json(w));
  j["witnesses"] = std::move(ws);
  return j;
}

Certificate certificate_from_json(const ordered_json& j) {
  Certificate cert;
  cert.n = j.at("n").get<int>();
  cert.k = j.at("k").get<int>();
  cert.tolerance = j.at("tolerance").get<double>();
  cert.group_order_graph = j.at("group_order_graph").get<long>();
  cert.group_order_cellular = j.at("group_order_cellular").get<long>();
  cert.max_fit_residual = j.at("max_fit_residual").get<double>();
  cert.max_orth_residual = j.at("max_orth_residual").get<double>();
  cert.graph_max_fit_residual = j.at("graph_max_fit_residual").get<double>();
  cert.graph_max_orth_residual = j.at("graph_max_orth_residual").get<double>();
  cert.lemma2_skeleton = lemma2_from_json(j.at("lemma2_skeleton"));
  cert.lemma2_quad = lemma2_from_json(j.at("lemma2_quad"));
  const auto& t = j.at("transitivity");
  cert.transitivity.vertex_transitive = t.at("vertex_transitive").get<bool>();
  cert.transitivity.edge_transitive = t.at("edge_transitive").get<bool>();
  cert.transitivity.face_transitive = t.at("face_transitive").get<bool>();
  cert.transitivity.flag_transitive = t.at("flag_transitive").get<bool>();
  cert.transitivity.vertex_orbits = t.at("vertex_orbits").get<std::size_t>();
  cert.transitivity.edge_orbits = t.at("edge_orbits").get<std::size_t>();
  cert.transitivity.face_orbits = t.at("face_orbits").get<std::size_t>();
  cert.transitivity.flag_orbits = t.at("flag_orbits").get<std::size_t>();
  const auto& m = j.at("metric");
  cert.metric.edge_length_orbits =
      m.at("edge_length_orbits").get<std::vector<double>>();
  cert.metric.face_congruence_classes =
      m.at("face_congruence_classes").get<std::size_t>();
  cert.metric.dihedral_angle_classes =
      m.at("dihedral_angle_classes").get<std::vector<double>>();
  cert.metric.vertex_figure_classes =
      m.at("vertex_figure_classes").get<std::size_t>();
  cert.metric.faces_are_planar_rectangles =
      m.at("faces_are_planar_rectangles").get<bool>();
  cert.metric.max_planarity_defect =
      m.at("max_planarity_defect").get<double>();
  cert.classification = j.at("classification").get<std::string>();
  const auto& c = j.at("checks");
  cert.graph_order_formula_ok = c.at("graph_order_formula_ok").get<bool>();
  cert.cellular_order_formula_ok = c.at("cellular_order_formula_ok").get<bool>();
  cert.cellular_subset_ok = c.at("cellular_subset_ok").get<bool>();
  cert.structured_ok = c.at("structured_ok").get<bool>();
  cert.complex_valid_ok = c.at("complex_valid_ok").get<bool>();
  cert.flag_count_ok = c.at("flag_count_ok").get<bool>();
  cert.clifford_ok = c.at("clifford_ok").get<bool>();
  cert.centroid_ok = c.at("centroid_ok").get<bool>();
  cert.witnesses_ok = c.at("witnesses_ok").get<bool>();
  cert.witness_bijection_ok = c.at("witness_bijection_ok").get<bool>();
  cert.witness_det_ok = c.at("witness_det_ok").get<bool>();
  cert.graph_extends_ok = c.at("graph_extends_ok").get<bool>();
  cert.transitivity_ok = c.at("transitivity_ok").get<bool>();
  cert.metric_ok = c.at("metric_ok").get<bool>();
  cert.pass = j.at("pass").get<bool>();
  for (const auto& w : j.at("witnesses"))
    cert.witnesses.push_back(witness_from_json(w));
  return cert;
}

bool certificates_equal(const Certificate& a, const Certificate& b) {
  auto witness_eq = [](const IsometryWitness& x, const IsometryWitness& y) {
    return x.automorphism == y.automorphism &&
           (x.matrix.array() == y.matrix.array()).all() &&
           x.fit_residual == y.fit_residual &&
           x.orthogonality_residual == y.orthogonality_residual &&
           x.det == y.det;
  };
  if (a.witnesses.size() != b.witnesses.size()) return false;
  for (std::size_t i = 0; i < a.witnesses.size(); ++i)
    if (!witness_eq(a.witnesses[i], b.witnesses[i])) return false;
  return a.n == b.n && a.k == b.k && a.tolerance == b.tolerance &&
         a.group_order_graph == b.group_order_graph &&
         a.group_order_cellular == b.group_order_cellular &&
         a.max_fit_residual == b.max_fit_residual &&
         a.max_orth_residual == b.max_orth_residual &&
         a.graph_max_fit_residual == b.graph_max_fit_residual &&
         a.graph_max_orth_residual == b.graph_max_orth_residual &&
         a.lemma2_skeleton == b.lemma2_skeleton &&
         a.lemma2_quad == b.lemma2_quad &&
         a.transitivity == b.transitivity &&
         a.metric.edge_length_orbits == b.metric.edge_length_orbits &&
         a.metric.face_congruence_classes == b.metric.face_congruence_classes &&
         a.metric.dihedral_angle_classes == b.metric.dihedral_angle_classes &&
         a.metric.vertex_figure_classes == b.metric.vertex_figure_classes &&
         a.metric.faces_are_planar_rectangles ==
             b.metric.faces_are_planar_rectangles &&
         a.metric.max_planarity_defect == b.metric.max_planarity_defect &&
         a.classification == b.classification &&
         a.graph_order_formula_ok == b.graph_order_formula_ok && a.cellular_order_formula_ok == b.cellular_order_formula_ok &&
         a.cellular_subset_ok == b.cellular_subset_ok &&
         a.structured_ok == b.structured_ok &&
         a.complex_valid_ok == b.complex_valid_ok &&
         a.flag_count_ok == b.flag_count_ok && a.clifford_ok == b.clifford_ok &&
         a.centroid_ok == b.centroid_ok && a.witnesses_ok == b.witnesses_ok &&
         a.witness_bijection_ok == b.witness_bijection_ok &&
         a.witness_det_ok == b.witness_det_ok &&
         a.graph_extends_ok == b.graph_extends_ok &&
         a.transitivity_ok == b.transitivity_ok &&
         a.metric_ok == b.metric_ok && a.pass == b.pass;
}

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string residual(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

}  // namespace

std::string certificate_summary(const Certificate& cert) {
  std::ostringstream os;
  os << "Q(n=" << cert.n << ",k=" << cert.k
     << ") no-hidden-symmetry certificate\n";
  os << "status: " << (cert.pass ? "PASS" : "FAIL") << "\n";
  os << "graph automorphisms:    " << cert.group_order_graph
     << (cert.graph_order_formula_ok ? " (matches formula)" : " (ORDER MISMATCH)")
     << "\n";
  os << "cellular automorphisms: " << cert.group_order_cellular
     << (cert.cellular_order_formula_ok ? " (matches formula)" : " (ORDER MISMATCH)")
     << "\n";
  os << "structured generators reproduce the group: " << yn(cert.structured_ok)
     << "\n";
  os << "witnesses: " << cert.witnesses.size()
     << ", max fit residual " << residual(cert.max_fit_residual)
     << ", max orthogonality residual " << residual(cert.max_orth_residual)
     << "\n";
  os << "full graph group extends: " << yn(cert.graph_extends_ok)
     << " (fit " << residual(cert.graph_max_fit_residual) << ", orth "
     << residual(cert.graph_max_orth_residual) << ")\n";
  os << "clifford inscription: " << yn(cert.clifford_ok)
     << ", centroid at origin: " << yn(cert.centroid_ok) << "\n";
  os << "lemma 2 (skeleton in duoprism): i=" << yn(cert.lemma2_skeleton.cond_i)
     << " ii=" << yn(cert.lemma2_skeleton.cond_ii)
     << " iii=" << yn(cert.lemma2_skeleton.cond_iii) << "\n";
  os << "lemma 2 (quadrangulation):      i=" << yn(cert.lemma2_quad.cond_i)
     << " ii=" << yn(cert.lemma2_quad.cond_ii)
     << " iii=" << yn(cert.lemma2_quad.cond_iii) << "\n";
  os << "transitive on vertices/edges/faces/flags: "
     << yn(cert.transitivity.vertex_transitive) << "/"
     << yn(cert.transitivity.edge_transitive) << "/"
     << yn(cert.transitivity.face_transitive) << "/"
     << yn(cert.transitivity.flag_transitive) << "\n";
  os << "edge length classes:";
  for (double v : cert.metric.edge_length_orbits) os << " " << format_double(v);
  os << "\n";
  os << "dihedral angle classes:";
  for (double v : cert.metric.dihedral_angle_classes)
    os << " " << format_double(v);
  os << "\n";
  os << "face congruence classes: " << cert.metric.face_congruence_classes
     << ", vertex figure classes: " << cert.metric.vertex_figure_classes
     << "\n";
  os << "classification: " << cert.classification << ", "
     << cert.transitivity.edge_orbits << " edge orbit"
     << (cert.transitivity.edge_orbits == 1 ? "" : "s") << "\n";
  os << "order " << cert.group_order_cellular << ", " << cert.classification
     << ", 3 copies check: n/a\n";
  return os.str();
}

}  // namespace torquad
