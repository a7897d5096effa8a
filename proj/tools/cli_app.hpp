#pragma once

// The chordrig command-line front end. run_cli() is separate from main() so
// the tests can drive it with captured streams.
//
// Exit codes: 0 finished with a verdict or artifact, 1 a hypothesis of the
// requested computation failed, 2 usage error, 3 malformed input.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chordrig/chordrig.hpp"

namespace chordrig::cli {

enum ExitCode : int { ok = 0, hypothesis_failure = 1, usage = 2, malformed_input = 3 };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string output;
  std::string stress;
  std::string counterexample;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::uint64_t cap_subsets = default_subset_cap;
  int n = 0;
  int r = 0;
  std::vector<int> cut;
  bool property_a = false;
};

namespace detail {

using io::json;

inline bool is_input_error(Errc c) {
  switch (c) {
    case Errc::parse_error:
    case Errc::invalid_graph:
    case Errc::disconnected_graph:
    case Errc::degenerate_span:
    case Errc::dimension_mismatch:
      return true;
    default:
      return false;
  }
}

inline std::string join(const std::vector<Vertex>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

inline Framework load_framework(const std::string& path) {
  try {
    return io::framework_from_json(io::read_json_file(path));
  } catch (const Error& e) {
    if (e.code() == Errc::parse_error && e.detail().starts_with('$')) throw Error(Errc::parse_error, path + ": " + e.detail());
    throw;
  }
}

inline Matrix load_stress(const std::string& path) {
  try {
    return io::stress_from_json(io::read_json_file(path));
  } catch (const Error& e) {
    if (e.code() == Errc::parse_error && e.detail().starts_with('$')) throw Error(Errc::parse_error, path + ": " + e.detail());
    throw;
  }
}

/// Graph file or framework file; only the edges are read from the latter.
inline Graph load_graph(const std::string& path) {
  const json j = io::read_json_file(path);
  try {
    if (j.is_object() && j.contains("points")) {
      const json& pts = j["points"];
      if (!pts.is_array()) throw Error(Errc::parse_error, "$.points: expected an array of points");
      return io::edges_from_json(static_cast<int>(pts.size()), j.contains("edges") ? j["edges"] : json(), "$.edges");
    }
    return io::graph_from_json(j);
  } catch (const Error& e) {
    if (e.code() == Errc::parse_error) throw Error(Errc::parse_error, path + ": " + e.detail());
    throw;
  }
}

inline void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
  } else {
    io::write_text_file(cfg.output, text);
  }
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

inline int cmd_analyze(const RunConfig& cfg, std::ostream& out, bool certificate_only) {
  const Framework fw = load_framework(cfg.inputs.at(0));
  const Certificate cert = certify_chordal(fw, CertifyOptions{cfg.cap_subsets});
  const json cj = io::to_json(cert);
  if (!cfg.counterexample.empty() && cert.counterexample) io::write_text_file(cfg.counterexample, dump(io::to_json(*cert.counterexample)));

  if (certificate_only) {
    emit(cfg, out, dump(cj));
    return ok;
  }
  if (!cfg.output.empty()) io::write_text_file(cfg.output, dump(cj));

  const bool chordal = cert.connectivity >= 0;
  std::optional<std::vector<Vertex>> cycle;
  if (!chordal) cycle = find_chordless_cycle(fw.graph());
  const auto gp = is_general_position(fw, cfg.cap_subsets);

  if (cfg.format == "json") {
    json rep;
    rep["vertices"] = fw.order();
    rep["edges"] = fw.graph().size();
    rep["dim"] = fw.dim();
    rep["rbar"] = fw.rbar();
    rep["chordal"] = chordal;
    rep["chordless_cycle"] = cycle ? json(*cycle) : json(nullptr);
    rep["general_position"] = gp.ok;
    rep["dependent_points"] = gp.ok ? json(nullptr) : json(gp.violating);
    rep["certificate"] = cj;
    out << dump(rep);
    return ok;
  }
  out << "vertices: " << fw.order() << "  edges: " << fw.graph().size() << "  dim: " << fw.dim() << "  rbar: " << fw.rbar() << '\n';
  out << "chordal: " << (chordal ? "yes" : "no");
  if (cycle) out << " (chordless cycle " << join(*cycle) << ")";
  out << '\n';
  if (chordal) {
    out << "peo: " << join(cert.peo.sequence()) << '\n';
    out << "connectivity: " << cert.connectivity << '\n';
  }
  out << "general position: " << (gp.ok ? "yes" : "no");
  if (!gp.ok) out << " (points " << join(gp.violating) << " are affinely dependent)";
  out << '\n';
  if (cert.cut) out << "cut: " << join(*cert.cut) << '\n';
  out << "verdict: " << to_string(cert.verdict);
  if (cert.reason) out << " (" << to_string(*cert.reason) << ")";
  out << '\n';
  if (cert.stress) out << "psd stress rank: " << rank(cert.stress->matrix()) << '\n';
  if (!cfg.counterexample.empty() && cert.counterexample) out << "counterexample written to " << cfg.counterexample << '\n';
  if (!cfg.output.empty()) out << "certificate written to " << cfg.output << '\n';
  return ok;
}

inline int cmd_psdize(const RunConfig& cfg, std::ostream& out) {
  const Framework fw = load_framework(cfg.inputs.at(0));
  const Matrix s = load_stress(cfg.stress);
  const auto res = psdize_stress(fw, s, PsdizeOptions{cfg.cap_subsets, std::nullopt});
  const auto rbar = static_cast<std::size_t>(fw.rbar());
  std::vector<std::string> minors;
  for (std::size_t k = 1; k <= rbar; ++k) minors.push_back(to_string(leading_principal_minor(res.permuted, k)));
  const json sj = io::stress_to_json(res.stress.matrix());
  if (!cfg.output.empty()) io::write_text_file(cfg.output, dump(sj));

  if (cfg.format == "json") {
    json rep;
    rep["rank"] = rbar;
    rep["peo"] = res.peo.sequence();
    rep["minors"] = minors;
    rep["psd"] = true;
    rep["stress"] = sj;
    out << dump(rep);
    return ok;
  }
  out << "rank: " << rbar << '\n';
  out << "peo: " << join(res.peo.sequence()) << '\n';
  out << "leading minors checked: " << rbar << " (";
  for (std::size_t k = 0; k < minors.size(); ++k) out << (k ? ", " : "") << minors[k];
  out << ")\n";
  out << "result: PSD, rank " << rbar << '\n';
  if (cfg.output.empty()) {
    out << res.stress.matrix() << '\n';
  } else {
    out << "stress written to " << cfg.output << '\n';
  }
  return ok;
}

inline int cmd_stress_check(const RunConfig& cfg, std::ostream& out) {
  const Framework fw = load_framework(cfg.inputs.at(0));
  const Matrix s = load_stress(cfg.stress);
  const auto rep = validate_stress_matrix(fw, s);
  std::vector<std::string> minors;
  for (const auto& m : rep.leading_minors) minors.push_back(to_string(m));
  if (cfg.format == "json") {
    json j;
    j["symmetric"] = rep.symmetric;
    j["pattern_ok"] = rep.pattern_ok;
    j["kernel_ok"] = rep.kernel_ok;
    j["rank"] = rep.rank;
    j["generic_rank_profile"] = rep.generic_rank_profile;
    j["psd"] = rep.psd;
    j["leading_minors"] = minors;
    j["stress_matrix"] = rep.is_stress_matrix();
    out << dump(j);
    return ok;
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "symmetric: " << yn(rep.symmetric) << '\n';
  out << "zero on non-edges: " << yn(rep.pattern_ok);
  if (rep.pattern_violation) out << " (" << rep.pattern_violation->first << "," << rep.pattern_violation->second << ")";
  out << '\n';
  out << "in kernel of P: " << yn(rep.kernel_ok) << '\n';
  out << "rank: " << rep.rank << " (rbar = " << fw.rbar() << ")\n";
  out << "generic rank profile: " << yn(rep.generic_rank_profile);
  if (rep.failing_minor) out << " (leading minor " << *rep.failing_minor << " vanishes)";
  out << '\n';
  out << "leading minors: ";
  for (std::size_t k = 0; k < minors.size(); ++k) out << (k ? ", " : "") << minors[k];
  out << '\n';
  out << "psd: " << yn(rep.psd) << '\n';
  out << "stress matrix: " << yn(rep.is_stress_matrix()) << '\n';
  return ok;
}

inline int cmd_gale(const RunConfig& cfg, std::ostream& out) {
  const Framework fw = load_framework(cfg.inputs.at(0));
  Matrix z;
  if (cfg.property_a) {
    const auto chordal = is_chordal(fw.graph());
    if (!chordal.chordal) throw Error(Errc::precondition_violated, "graph is not chordal");
    z = property_A_gale(fw, chordal.order, CertifyOptions{cfg.cap_subsets}).matrix();
  } else {
    z = gale_matrix(fw).matrix();
  }
  json j;
  j["rows"] = z.rows();
  j["cols"] = z.cols();
  j["matrix"] = io::to_json(z);
  emit(cfg, out, dump(j));
  return ok;
}

inline int cmd_reflect(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Framework fw = load_framework(cfg.inputs.at(0));
  std::vector<Vertex> cut(cfg.cut.begin(), cfg.cut.end());
  if (cut.empty()) {
    const auto chordal = is_chordal(fw.graph());
    if (!chordal.chordal) throw Error(Errc::precondition_violated, "graph is not chordal; pass --cut explicitly");
    const auto found = vertex_cut_of_size_at_most(fw.graph(), chordal.order, fw.dim());
    if (!found)
      throw Error(Errc::precondition_violated, "graph is " + std::to_string(fw.dim() + 1) + "-connected; no cut of size <= r");
    cut = *found;
  }
  const Framework q = reflection_counterexample(fw, cut);
  err << "cut: " << join(cut) << '\n';
  emit(cfg, out, dump(io::to_json(q)));
  return ok;
}

inline int cmd_chordal(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg.inputs.at(0));
  const auto res = is_chordal(g);
  std::optional<int> kappa;
  std::optional<std::vector<Vertex>> cycle;
  if (res.chordal) {
    kappa = chordal_connectivity(g, res.order);
  } else {
    cycle = find_chordless_cycle(g);
  }
  if (cfg.format == "json") {
    json j;
    j["chordal"] = res.chordal;
    j["peo"] = res.chordal ? json(res.order.sequence()) : json(nullptr);
    j["connectivity"] = kappa ? json(*kappa) : json(nullptr);
    j["chordless_cycle"] = cycle ? json(*cycle) : json(nullptr);
    out << dump(j);
    return ok;
  }
  out << "chordal: " << (res.chordal ? "yes" : "no") << '\n';
  if (res.chordal) {
    out << "peo: " << join(res.order.sequence()) << '\n';
    out << "connectivity: " << *kappa << '\n';
  } else if (cycle) {
    out << "chordless cycle: " << join(*cycle) << '\n';
  }
  return ok;
}

inline int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  GenOptions opts;
  opts.subset_cap = cfg.cap_subsets;
  const Framework fw = gen_ktree_framework(cfg.n, cfg.r, cfg.seed, opts);
  emit(cfg, out, dump(io::to_json(fw)));
  return ok;
}

inline int cmd_plot(const RunConfig& cfg, std::ostream& out) {
  const Framework fw = load_framework(cfg.inputs.at(0));
  std::optional<StressMatrix> stress;
  if (!cfg.stress.empty()) stress = StressMatrix::checked(fw, load_stress(cfg.stress));
  emit(cfg, out, render_svg(fw, stress ? &*stress : nullptr));
  return ok;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact rigidity certificates for chordal bar frameworks", "chordrig"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::vector<std::string> formats{"text", "json"};

  auto framework_input = [&](CLI::App* sub) {
    sub->add_option("framework", cfg.inputs, "framework JSON file")->required()->expected(1)->check(CLI::ExistingFile);
  };
  auto cap = [&](CLI::App* sub) {
    sub->add_option("--cap-subsets", cfg.cap_subsets, "maximum number of subsets for exhaustive checks")
        ->check(CLI::PositiveNumber);
  };
  auto format = [&](CLI::App* sub) { sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember(formats)); };
  auto output = [&](CLI::App* sub, const char* what) { sub->add_option("-o,--output", cfg.output, what); };

  auto* analyze = app.add_subcommand("analyze", "chordality, connectivity, general position and verdict");
  framework_input(analyze);
  output(analyze, "write the certificate JSON here");
  analyze->add_option("--counterexample", cfg.counterexample, "write a reflected counterexample framework here");
  cap(analyze);
  format(analyze);

  auto* certify = app.add_subcommand("certify", "emit the certificate JSON");
  framework_input(certify);
  output(certify, "certificate file (default stdout)");
  certify->add_option("--counterexample", cfg.counterexample, "write a reflected counterexample framework here");
  cap(certify);

  auto* psdize = app.add_subcommand("psdize", "turn a generic-rank-profile stress matrix into a PSD one");
  psdize->add_option("framework", cfg.inputs, "framework JSON file, optionally followed by the stress file")
      ->required()
      ->expected(1, 2)
      ->check(CLI::ExistingFile);
  psdize->add_option("--stress", cfg.stress, "stress JSON file")->check(CLI::ExistingFile);
  output(psdize, "write the PSD stress JSON here");
  cap(psdize);
  format(psdize);

  auto* stress_check = app.add_subcommand("stress-check", "validate a stress matrix against a framework");
  stress_check->add_option("framework", cfg.inputs, "framework JSON file, optionally followed by the stress file")
      ->required()
      ->expected(1, 2)
      ->check(CLI::ExistingFile);
  stress_check->add_option("--stress", cfg.stress, "stress JSON file")->check(CLI::ExistingFile);
  format(stress_check);

  auto* gale = app.add_subcommand("gale", "print a Gale matrix");
  framework_input(gale);
  gale->add_flag("--property-a", cfg.property_a, "build the Property (A) Gale matrix from a PEO");
  output(gale, "output file (default stdout)");
  cap(gale);

  auto* reflect = app.add_subcommand("reflect", "reflect one side of a small cut");
  framework_input(reflect);
  reflect->add_option("--cut", cfg.cut, "cut vertices (default: found from a PEO)")->delimiter(',');
  output(reflect, "output file (default stdout)");

  auto* chordal = app.add_subcommand("chordal", "chordality test, PEO and connectivity");
  chordal->add_option("graph", cfg.inputs, "graph or framework JSON file")->required()->expected(1)->check(CLI::ExistingFile);
  format(chordal);

  auto* gen = app.add_subcommand("gen", "random (r+1)-tree framework in general position");
  gen->add_option("--n", cfg.n, "number of vertices")->required()->check(CLI::PositiveNumber);
  gen->add_option("--r", cfg.r, "dimension")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", cfg.seed, "generator seed");
  output(gen, "output file (default stdout)");
  cap(gen);

  auto* plot = app.add_subcommand("plot", "SVG drawing of a planar framework");
  framework_input(plot);
  plot->add_option("--stress", cfg.stress, "colour edges by the sign of this stress")->check(CLI::ExistingFile);
  output(plot, "SVG file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return usage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  if (cfg.command == "psdize" || cfg.command == "stress-check") {
    if (cfg.inputs.size() == 2) {
      if (!cfg.stress.empty()) {
        err << "chordrig: give the stress file either positionally or with --stress, not both\n";
        return usage;
      }
      cfg.stress = cfg.inputs[1];
    }
    if (cfg.stress.empty()) {
      err << "chordrig: " << cfg.command << " needs a stress file\n";
      return usage;
    }
  }

  try {
    if (cfg.command == "analyze") return detail::cmd_analyze(cfg, out, false);
    if (cfg.command == "certify") return detail::cmd_analyze(cfg, out, true);
    if (cfg.command == "psdize") return detail::cmd_psdize(cfg, out);
    if (cfg.command == "stress-check") return detail::cmd_stress_check(cfg, out);
    if (cfg.command == "gale") return detail::cmd_gale(cfg, out);
    if (cfg.command == "reflect") return detail::cmd_reflect(cfg, out, err);
    if (cfg.command == "chordal") return detail::cmd_chordal(cfg, out);
    if (cfg.command == "gen") return detail::cmd_gen(cfg, out);
    if (cfg.command == "plot") return detail::cmd_plot(cfg, out);
  } catch (const Error& e) {
    err << "chordrig: " << e.what() << '\n';
    if (e.code() == Errc::not_generic_rank_profile && !e.where().empty()) err << "failing minor: " << e.where().front() << '\n';
    return detail::is_input_error(e.code()) ? malformed_input : hypothesis_failure;
  }
  return usage;
}

}  // namespace chordrig::cli
