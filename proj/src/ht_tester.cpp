#include "cplanar/ht_tester.hpp"

#include <chrono>
#include <stdexcept>

#include "cplanar/canonical_drawing.hpp"

namespace cplanar {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::CPlanar: return "CPlanar";
    case Outcome::NotCPlanar: return "NotCPlanar";
    case Outcome::EvenDrawingExistsInconclusive: return "EvenDrawingExistsInconclusive";
  }
  return "?";
}

const char* to_string(Tier t) {
  switch (t) {
    case Tier::TwoClustered: return "TwoClustered";
    case Tier::CConnected: return "CConnected";
    case Tier::None: return "None";
  }
  return "?";
}

const char* const kInconclusiveCaveat =
    "an independently even clustered drawing exists, but for flat instances with three or more "
    "clusters this does not imply c-planarity (cyclic-clustered cycles with odd winding number "
    "|w| >= 3 admit even clustered drawings and are not c-planar)";

HtRun run_ht(const ClusteredGraph& g) {
  const auto t0 = std::chrono::steady_clock::now();
  const Simplified simp = simplify(g);
  HtRun run{{}, simp.graph, {}};
  auto& diag = run.verdict.diagnostics;
  diag.vertices = simp.graph.vertices.size();
  diag.edges = simp.graph.edges.size();
  diag.equation_bound = diag.vertices * diag.edges;

  const Classification cls = classify(simp.graph);
  if (cls.two_clustered)
    run.verdict.tier = Tier::TwoClustered;
  else if (cls.c_connected)
    run.verdict.tier = Tier::CConnected;

  if (simp.verdict == EdgeBound::Fail) {
    diag.edge_bound_failed = true;
    run.verdict.outcome = Outcome::NotCPlanar;
  } else {
    const CircularOrder ord = dfs_circle_order(simp.graph);
    run.system = build_system(simp.graph, initial_parity_vector(simp.graph, ord));
    diag.independent_pairs = run.system.rhs.dimension();
    diag.equations = run.system.equation_count();
    diag.variables = run.system.variable_count();
    diag.rank = switch_space_rank(run.system);

    run.verdict.witness = solve(run.system);
    if (!run.verdict.witness) {
      run.verdict.outcome = Outcome::NotCPlanar;
    } else {
      if (!apply_switches(run.system.rhs, *run.verdict.witness, run.system).all_zero())
        throw std::logic_error("solver witness does not cancel the parity vector");
      run.verdict.outcome = run.verdict.tier == Tier::None ? Outcome::EvenDrawingExistsInconclusive
                                                           : Outcome::CPlanar;
    }
  }
  diag.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return run;
}

Verdict test_ht(const ClusteredGraph& g) { return run_ht(g).verdict; }

}  // namespace cplanar
