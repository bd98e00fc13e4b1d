// Command-line front end: build the complexes, compute automorphism groups,
// realize in R^4, verify the no-hidden-symmetry certificates, count the
// Q_{4,4} copies in the 4-cube, and export machine-readable files.

#include <CLI11.hpp>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include "torquad/autgroup.hpp"
#include "torquad/complex.hpp"
#include "torquad/geometry.hpp"
#include "torquad/io.hpp"
#include "torquad/verify.hpp"

namespace fs = std::filesystem;
using namespace torquad;

namespace {

struct RunConfig {
  int n = 3;
  int k = 3;
  double tolerance = 1e-9;
  int vertex_cap = 100;
  std::string out;
  std::string format = "json";
  std::string coords_file;
  std::string sweep;
};

void add_nk(CLI::App* cmd, RunConfig& cfg, bool required = true) {
  auto* n = cmd->add_option("--n", cfg.n, "first cycle length (>= 3)");
  auto* k = cmd->add_option("--k", cfg.k, "second cycle length (>= 3)");
  if (required) {
    n->required();
    k->required();
  }
}

std::string tag(int n, int k) {
  return std::to_string(n) + "_" + std::to_string(k);
}

void ensure_dir(const std::string& dir) {
  if (!dir.empty() && dir != ".") fs::create_directories(dir);
}

fs::path out_path(const std::string& dir, const std::string& name) {
  return dir.empty() ? fs::path(name) : fs::path(dir) / name;
}

int cmd_build(const RunConfig& cfg) {
  const CellComplex quad = build_torus_quadrangulation(cfg.n, cfg.k);
  const CellComplex duo = build_duoprism_boundary(cfg.n, cfg.k);
  ensure_dir(cfg.out);
  write_file(out_path(cfg.out, "q_" + tag(cfg.n, cfg.k) + ".json").string(),
             complex_to_json(quad).dump(2) + "\n");
  write_file(
      out_path(cfg.out, "duoprism_" + tag(cfg.n, cfg.k) + ".json").string(),
      complex_to_json(duo).dump(2) + "\n");
  std::cout << "V=" << quad.graph.vertex_count()
            << " E=" << quad.graph.edge_count() << " F=" << quad.faces.size()
            << "\n";
  std::cout << "duoprism: F2=" << duo.faces.size()
            << " C3=" << duo.cells3.size() << "\n";
  return 0;
}

int cmd_aut(const RunConfig& cfg, bool include_elements) {
  const CellComplex quad = build_torus_quadrangulation(cfg.n, cfg.k);
  const PermGroup gg = graph_automorphisms(quad.graph, cfg.vertex_cap);
  const PermGroup cg = cellular_automorphisms(quad, cfg.vertex_cap);
  std::cout << "graph order " << gg.order() << "\n";
  std::cout << "cellular order " << cg.order() << "\n";
  if (!cfg.out.empty()) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = cfg.n;
    j["k"] = cfg.k;
    j["graph_automorphisms"] = group_to_json(gg, include_elements);
    j["cellular_automorphisms"] = group_to_json(cg, include_elements);
    write_file(cfg.out, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_realize(const RunConfig& cfg) {
  const CellComplex quad = build_torus_quadrangulation(cfg.n, cfg.k);
  const Realization r = duoprism_vertices(cfg.n, cfg.k);
  std::string payload;
  std::string suffix;
  if (cfg.format == "off") {
    payload = realization_to_off(quad, r);
    suffix = ".off";
  } else if (cfg.format == "json") {
    payload = realization_to_json_string(quad, r);
    suffix = ".json";
  } else {
    std::cerr << "error: realize supports --format json|off\n";
    return 2;
  }
  const std::string file =
      cfg.out.empty() ? "realization_" + tag(cfg.n, cfg.k) + suffix : cfg.out;
  write_file(file, payload);
  std::cout << "wrote " << file << " (" << r.points.size() << " points)\n";
  return 0;
}

int verify_one(const RunConfig& cfg, int n, int k, bool quiet) {
  Certificate cert;
  if (!cfg.coords_file.empty()) {
    const auto j = nlohmann::ordered_json::parse(read_file(cfg.coords_file));
    cert = verify_realization(realization_from_json(j), cfg.tolerance,
                              cfg.vertex_cap);
  } else {
    cert = verify_no_hidden_symmetries(n, k, cfg.tolerance, cfg.vertex_cap);
  }
  if (!cfg.out.empty()) {
    ensure_dir(cfg.out);
    write_file(
        out_path(cfg.out, "certificate_" + tag(cert.n, cert.k) + ".json")
            .string(),
        certificate_to_json(cert).dump(2) + "\n");
    write_file(out_path(cfg.out, "certificate_" + tag(cert.n, cert.k) + ".txt")
                   .string(),
               certificate_summary(cert));
  }
  if (!quiet) std::cout << certificate_summary(cert);
  return cert.pass ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.sweep.empty()) return verify_one(cfg, cfg.n, cfg.k, false);

  const auto dots = cfg.sweep.find("..");
  if (dots == std::string::npos) {
    std::cerr << "error: --sweep expects a range like 3..8\n";
    return 2;
  }
  const int lo = std::stoi(cfg.sweep.substr(0, dots));
  const int hi = std::stoi(cfg.sweep.substr(dots + 2));
  if (lo < 3 || hi < lo) {
    std::cerr << "error: bad sweep range\n";
    return 2;
  }
  int failures = 0;
  std::printf("%3s %3s %9s %9s %9s %11s %11s %8s %6s\n", "n", "k", "|AutG|",
              "|AutQ|", "witness", "max_fit", "max_orth", "class", "pass");
  for (int n = lo; n <= hi; ++n) {
    for (int k = lo; k <= hi; ++k) {
      const Certificate cert =
          verify_no_hidden_symmetries(n, k, cfg.tolerance, cfg.vertex_cap);
      if (!cfg.out.empty()) {
        ensure_dir(cfg.out);
        write_file(out_path(cfg.out, "certificate_" + tag(n, k) + ".json")
                       .string(),
                   certificate_to_json(cert).dump(2) + "\n");
        write_file(
            out_path(cfg.out, "certificate_" + tag(n, k) + ".txt").string(),
            certificate_summary(cert));
      }
      std::printf("%3d %3d %9ld %9ld %9zu %11.3e %11.3e %8s %6s\n", n, k,
                  cert.group_order_graph, cert.group_order_cellular,
                  cert.witnesses.size(), cert.max_fit_residual,
                  cert.max_orth_residual, cert.classification.c_str(),
                  cert.pass ? "yes" : "NO");
      if (!cert.pass) ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}

int cmd_count_hypercube() {
  const HypercubeEnumeration e = enumerate_q44_in_hypercube();
  std::cout << "copies=" << e.copies_isomorphic_to_q44
            << " ratio=" << e.group_order_ratio << "\n";
  std::cout << "edge double covers found: " << e.double_covers.size() << "\n";
  std::cout << "copy orbit sizes under Aut(C_4 x C_4):";
  for (std::size_t s : e.copy_orbit_sizes) std::cout << " " << s;
  std::cout << "\n";
  return (e.copies_isomorphic_to_q44 == 3 && e.group_order_ratio == 3) ? 0 : 1;
}

int cmd_export(const RunConfig& cfg) {
  const CellComplex quad = build_torus_quadrangulation(cfg.n, cfg.k);
  const Realization r = duoprism_vertices(cfg.n, cfg.k);
  std::string payload;
  if (cfg.format == "json") {
    payload = realization_to_json_string(quad, r);
  } else if (cfg.format == "off") {
    payload = realization_to_off(quad, r);
  } else if (cfg.format == "text") {
    const CellComplex duo = build_duoprism_boundary(cfg.n, cfg.k);
    std::ostringstream os;
    os << "Q(" << cfg.n << "," << cfg.k << ")\n"
       << "V=" << quad.graph.vertex_count() << " E=" << quad.graph.edge_count()
       << " F=" << quad.faces.size() << "\n"
       << "duoprism 2-faces=" << duo.faces.size()
       << " 3-cells=" << duo.cells3.size() << "\n"
       << "flags=" << flags(quad).size() << "\n";
    payload = os.str();
  } else {
    std::cerr << "error: export supports --format json|off|text\n";
    return 2;
  }
  if (cfg.out.empty()) {
    std::cout << payload;
  } else {
    write_file(cfg.out, payload);
    std::cout << "wrote " << cfg.out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toroidal quadrangulations Q_{n,k}: duoprism realizations, "
               "automorphism groups, and no-hidden-symmetry certificates"};
  app.require_subcommand(1);

  RunConfig cfg;
  bool include_elements = false;

  auto* build = app.add_subcommand("build", "construct Q_{n,k} and the "
                                            "duoprism boundary complex");
  add_nk(build, cfg);
  build->add_option("--out", cfg.out, "output directory");

  auto* aut = app.add_subcommand("aut", "compute automorphism groups");
  add_nk(aut, cfg);
  aut->add_option("--out", cfg.out, "write groups JSON to this file");
  aut->add_flag("--elements", include_elements, "include full element lists");

  auto* realize = app.add_subcommand("realize", "duoprism realization in R^4");
  add_nk(realize, cfg);
  realize->add_option("--format", cfg.format, "json or off");
  realize->add_option("--out", cfg.out, "output file");

  auto* verify = app.add_subcommand("verify", "run the no-hidden-symmetry "
                                              "certificate pipeline");
  add_nk(verify, cfg, false);
  verify->add_option("--tol", cfg.tolerance, "residual tolerance");
  verify->add_option("--out", cfg.out, "directory for certificate files");
  verify->add_option("--coords", cfg.coords_file,
                     "verify an imported realization JSON instead of the "
                     "exact duoprism coordinates");
  verify->add_option("--sweep", cfg.sweep, "grid range, e.g. 3..8");
  verify->add_option("--cap", cfg.vertex_cap, "vertex cap for searches");

  auto* count = app.add_subcommand(
      "count-hypercube", "enumerate the copies of Q_{4,4} in the 4-cube");

  auto* exp = app.add_subcommand("export", "export realization/complex files");
  add_nk(exp, cfg);
  exp->add_option("--format", cfg.format, "json, off, or text");
  exp->add_option("--out", cfg.out, "output file (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(cfg);
    if (aut->parsed()) return cmd_aut(cfg, include_elements);
    if (realize->parsed()) return cmd_realize(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (count->parsed()) return cmd_count_hypercube();
    if (exp->parsed()) return cmd_export(cfg);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
