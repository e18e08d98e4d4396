#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cplanar/canonical_drawing.hpp"
#include "cplanar/cycle_tools.hpp"
#include "cplanar/embedded_saturator.hpp"
#include "cplanar/ht_tester.hpp"
#include "cplanar/instance_io.hpp"
#include "cplanar/oracle.hpp"

namespace cplanar::cli {
namespace {

// Input problems that end the command with exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string path;
  std::string output;
  std::string format = "text";
  int k = 3;
  int r = 3;
  int samples = 10000;
  std::size_t budget = kDefaultOracleBudget;
  bool embedded = false;
  bool timings = false;
};

Instance read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_instance(ss.str());
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

EmbeddedClusteredGraph read_embedded(const std::string& path) {
  const Instance inst = read(path);
  if (!inst.embedding) throw InputError(path + ": instance has no rotations");
  return inst.embedded();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

// Writes to -o when given, otherwise to stdout.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty())
    out << text;
  else
    write_file(o.output, text);
}

std::string join(const std::vector<int>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void timing_line(const Options& o, std::ostream& out, std::chrono::steady_clock::time_point t0) {
  if (o.timings) out << "seconds: " << std::fixed << std::setprecision(6) << seconds_since(t0) << "\n";
}

void cmd_validate(const Options& o, std::ostream& out) {
  const Instance inst = read(o.path);
  const Classification c = classify(inst.graph);
  out << "command: validate\n"
      << "valid: true\n"
      << "vertices: " << inst.graph.vertices.size() << "\n"
      << "edges: " << inst.graph.edges.size() << "\n"
      << "clusters: " << c.cluster_count << "\n"
      << "flat: " << c.flat << "\n"
      << "two_clustered: " << c.two_clustered << "\n"
      << "c_connected: " << c.c_connected << "\n"
      << "cyclic_clustered: " << c.cyclic_clustered << "\n"
      << "gt_shape: " << to_string(c.gt_shape) << "\n"
      << "embedded: " << inst.embedding.has_value() << "\n";
  if (inst.embedding) {
    const auto fs = inst.embedding->faces();
    std::size_t largest = 0;
    for (const auto& f : fs) largest = std::max(largest, f.vertex_set().size());
    const ValidationReport rep = validate(inst.embedded());
    out << "faces: " << fs.size() << "\n"
        << "largest_face_vertices: " << largest << "\n"
        << "embedded_flat_valid: " << rep.ok() << "\n";
    for (const auto& p : rep.problems) out << "problem: " << p << "\n";
  }
}

void cmd_test_ht(const Options& o, std::ostream& out) {
  const Instance inst = read(o.path);
  const auto t0 = std::chrono::steady_clock::now();
  const HtRun run = run_ht(inst.graph);
  const Verdict& v = run.verdict;
  const HtDiagnostics& d = v.diagnostics;
  out << "command: test-ht\n"
      << "outcome: " << to_string(v.outcome) << "\n"
      << "tier: " << to_string(v.tier) << "\n"
      << "vertices: " << d.vertices << "\n"
      << "edges: " << d.edges << "\n"
      << "edge_bound: " << (d.edge_bound_failed ? "fail" : "pass") << "\n"
      << "independent_pairs: " << d.independent_pairs << "\n"
      << "equations: " << d.equations << "\n"
      << "equation_bound: " << d.equation_bound << "\n"
      << "variables: " << d.variables << "\n"
      << "rank: " << d.rank << "\n";
  if (v.witness) {
    out << "witness_size: " << v.witness->size() << "\n";
    for (std::size_t i : *v.witness) out << "switch: " << describe(run.system.variables[i], run.simplified) << "\n";
  } else {
    out << "witness: none\n";
  }
  if (v.outcome == Outcome::EvenDrawingExistsInconclusive) out << "caveat: " << kInconclusiveCaveat << "\n";
  timing_line(o, out, t0);
}

void cmd_gen_counterexample(const Options& o, std::ostream& out) {
  CyclicClusteredCycle c;
  try {
    c = generate_counterexample(o.k, o.r);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::ostringstream doc;
  doc << "# cyclic-clustered cycle k=" << o.k << " r=" << o.r << " phi " << join(c.phi) << " winding "
      << winding_number(c) << "\n"
      << serialize(to_clustered_graph(c));
  emit(o, out, doc.str());
}

void cmd_winding(const Options& o, std::ostream& out) {
  const Instance inst = read(o.path);
  CyclicClusteredCycle c;
  try {
    c = cycle_from_graph(inst.graph);
  } catch (const std::invalid_argument& e) {
    throw InputError(o.path + ": " + e.what());
  }
  const MonotoneReduction red = monotone_reduce(c);
  const bool planar = cortese_test(c);
  out << "command: winding\n"
      << "k: " << c.k << "\n"
      << "n: " << c.n() << "\n"
      << "phi: " << join(c.phi) << "\n"
      << "winding: " << winding_number(c) << "\n"
      << "monotone: " << is_monotone(c) << "\n";
  for (const auto& s : red.trace) out << "step: " << s << "\n";
  if (red.trivial)
    out << "reduced: trivial\n";
  else
    out << "reduced_phi: " << join(red.cycle.phi) << "\n"
        << "reduced_labels: " << join(red.labels) << "\n";
  out << "outcome: " << to_string(planar ? Outcome::CPlanar : Outcome::NotCPlanar) << "\n"
      << "tier: CyclicClusteredCycle\n";
}

void cmd_test_embedded(const Options& o, std::ostream& out) {
  const EmbeddedClusteredGraph g = read_embedded(o.path);
  const auto t0 = std::chrono::steady_clock::now();
  out << "command: test-embedded\n";
  EmbeddedVerdict v;
  try {
    v = decide_embedded(g);
  } catch (const FaceSizeViolation& e) {
    out << "outcome: OutOfScope\n"
        << "tier: EmbeddedSmallFaces\n"
        << "reason: " << e.what() << "\n";
    return;
  } catch (const InvalidInstance& e) {
    throw InputError(o.path + ": " + e.what());
  }
  const EmbeddedStats& s = v.stats;
  out << "outcome: " << to_string(v.outcome) << "\n"
      << "tier: EmbeddedSmallFaces\n"
      << "vertices: " << s.vertices << "\n"
      << "edges: " << s.edges << "\n"
      << "faces: " << s.faces << "\n"
      << "vertices_after_preprocess: " << s.vertices_after_preprocess << "\n"
      << "merges: " << s.merges << "\n"
      << "ground: " << s.ground << "\n"
      << "target: " << s.target << "\n"
      << "common: " << s.common << "\n";
  if (!v.reason.empty()) out << "reason: " << v.reason << "\n";
  for (const auto& t : v.trace) out << "step: " << t << "\n";
  for (const auto& e : v.saturator)
    out << "saturating_edge: " << e.pair.first << " " << e.pair.second << " face " << e.face << "\n";
  timing_line(o, out, t0);
}

void cmd_oracle(const Options& o, std::ostream& out) {
  const Instance inst = read(o.path);
  const auto t0 = std::chrono::steady_clock::now();
  out << "command: oracle\n"
      << "mode: " << (o.embedded ? "embedded" : "flat") << "\n";
  try {
    bool answer = false;
    if (o.embedded) {
      if (!inst.embedding) throw InputError(o.path + ": instance has no rotations");
      answer = brute_force_embedded_saturator(inst.embedded(), o.budget);
    } else {
      answer = brute_force_flat_cplanarity(inst.graph, o.budget);
    }
    out << "outcome: " << to_string(answer ? Outcome::CPlanar : Outcome::NotCPlanar) << "\n";
  } catch (const BudgetExceeded& e) {
    out << "outcome: Refused\n"
        << "refusal: budget\n"
        << "reason: " << e.what() << "\n";
  } catch (const OracleRefusal& e) {
    out << "outcome: Refused\n"
        << "refusal: scope\n"
        << "reason: " << e.what() << "\n";
  } catch (const InvalidInstance& e) {
    throw InputError(o.path + ": " + e.what());
  }
  out << "tier: Exhaustive\n";
  timing_line(o, out, t0);
}

std::string render_text(const Instance& inst) {
  const ClusteredGraph& g = inst.graph;
  const CircularOrder ord = dfs_circle_order(g);
  const ParityVector pv = initial_parity_vector(g, ord);
  std::ostringstream os;
  os << "circle:";
  for (VertexId v : ord.sequence) os << " " << v;
  os << "\n";
  for (const auto& [node, arc] : ord.arcs)
    os << "arc: " << g.tree.node(node).label << " start " << arc.start << " length " << arc.length << "\n";
  for (const Edge& e : g.edges)
    os << "chord: " << e.id << " " << ord.position(e.u) << " " << ord.position(e.v) << "\n";
  os << "independent_pairs: " << pv.dimension() << "\n"
     << "odd_pairs: " << pv.bits.count() << "\n";
  for (std::size_t k = 0; k < pv.dimension(); ++k)
    if (pv.bits[k]) {
      const auto& [i, j] = pv.index.pair(k);
      os << "odd: " << g.edges[i].id << " " << g.edges[j].id << "\n";
    }
  if (inst.embedding) {
    const auto fs = inst.embedding->faces();
    const std::size_t outer = inst.embedding->outer_face(fs);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      os << "face: " << i << (i == outer ? " outer" : "") << " walk";
      for (VertexId v : fs[i].vertices) os << " " << v;
      os << "\n";
    }
  }
  return os.str();
}

void cmd_render(const Options& o, std::ostream& out) {
  const Instance inst = read(o.path);
  if (o.format == "svg")
    emit(o, out, render_svg(inst.graph, dfs_circle_order(inst.graph)));
  else
    emit(o, out, render_text(inst));
}

void cmd_sinusoid(const Options& o, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out << "command: sinusoid\n"
      << "k: " << o.k << "\n"
      << "r: " << o.r << "\n"
      << "samples: " << o.samples << "\n";
  try {
    const SinusoidCheck s = sinusoid_parity_vector(o.k, o.r, o.samples);
    out << "independent_pairs: " << s.parity.dimension() << "\n"
        << "crossings: " << s.crossings << "\n"
        << "odd_pairs: " << s.parity.bits.count() << "\n"
        << "even: " << s.parity.all_zero() << "\n";
  } catch (const ResolutionError& e) {
    out << "even: unresolved\n"
        << "reason: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  timing_line(o, out, t0);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clustered planarity tools", "cplanar"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--timings", o.timings, "Append wall-clock seconds (output is then not reproducible)");

  auto path_arg = [&](CLI::App* sub) { sub->add_option("instance", o.path, "Instance file")->required(); };

  auto* validate_cmd = app.add_subcommand("validate", "Parse, validate and classify an instance");
  path_arg(validate_cmd);
  auto* ht = app.add_subcommand("test-ht", "Parity-based c-planarity test");
  path_arg(ht);
  auto* gen = app.add_subcommand("gen-counterexample", "Write a monotone cyclic-clustered cycle");
  gen->add_option("--k", o.k, "Number of clusters (>= 3)");
  gen->add_option("--r", o.r, "Winding number (odd)");
  gen->add_option("-o,--output", o.output, "Output file (default stdout)");
  auto* wind = app.add_subcommand("winding", "Winding number and monotone reduction of a cycle instance");
  path_arg(wind);
  auto* emb = app.add_subcommand("test-embedded", "Decide an embedded flat instance with small faces");
  path_arg(emb);
  auto* orc = app.add_subcommand("oracle", "Exhaustive reference decision for small instances");
  path_arg(orc);
  orc->add_flag("--embedded", o.embedded, "Keep the given embedding");
  orc->add_option("--budget", o.budget, "Search node budget");
  auto* ren = app.add_subcommand("render", "Canonical circle drawing");
  path_arg(ren);
  ren->add_option("--format", o.format, "text or svg")->check(CLI::IsMember({"text", "svg"}));
  ren->add_option("-o,--output", o.output, "Output file (default stdout)");
  auto* sin = app.add_subcommand("sinusoid", "Numeric crossing-parity check of the sinusoid drawing");
  sin->add_option("--k", o.k, "Number of clusters");
  sin->add_option("--r", o.r, "Winding number (odd)");
  sin->add_option("--samples", o.samples, "Samples per arc");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*validate_cmd) cmd_validate(o, out);
    if (*ht) cmd_test_ht(o, out);
    if (*gen) cmd_gen_counterexample(o, out);
    if (*wind) cmd_winding(o, out);
    if (*emb) cmd_test_embedded(o, out);
    if (*orc) cmd_oracle(o, out);
    if (*ren) cmd_render(o, out);
    if (*sin) cmd_sinusoid(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace cplanar::cli
