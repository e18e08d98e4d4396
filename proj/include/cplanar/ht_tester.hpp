#pragma once

#include <optional>
#include <string>

#include "cplanar/core.hpp"
#include "cplanar/switch_solver.hpp"

namespace cplanar {

enum class Outcome { CPlanar, NotCPlanar, EvenDrawingExistsInconclusive };
enum class Tier { TwoClustered, CConnected, None };

const char* to_string(Outcome o);
const char* to_string(Tier t);

/// Caveat attached to every inconclusive verdict: with three or more clusters
/// an independently even clustered drawing does not imply c-planarity.
extern const char* const kInconclusiveCaveat;

struct HtDiagnostics {
  std::size_t vertices = 0;
  std::size_t edges = 0;  // after simplification
  std::size_t independent_pairs = 0;
  std::size_t equations = 0;
  std::size_t equation_bound = 0;  // |E'|*|V'|
  std::size_t variables = 0;
  std::size_t rank = 0;
  bool edge_bound_failed = false;
  double seconds = 0.0;
};

struct Verdict {
  Outcome outcome = Outcome::NotCPlanar;
  Tier tier = Tier::None;
  std::optional<WitnessSet> witness;
  HtDiagnostics diagnostics;
};

struct HtRun {
  Verdict verdict;
  ClusteredGraph simplified;
  SwitchSystem system;  // empty when the edge bound already failed
};

/// Full pipeline with intermediates, for callers that want to inspect or
/// re-solve the system.
HtRun run_ht(const ClusteredGraph& g);

Verdict test_ht(const ClusteredGraph& g);

}  // namespace cplanar
