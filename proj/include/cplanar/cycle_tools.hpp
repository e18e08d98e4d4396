#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cplanar/canonical_drawing.hpp"
#include "cplanar/core.hpp"

namespace cplanar {

/// Cycle v_1 ... v_n whose clusters V_1 ... V_k are arranged cyclically.
/// phi[i] is the 1-based cluster index of v_{i+1}.
struct CyclicClusteredCycle {
  int k = 3;
  std::vector<int> phi;

  std::size_t n() const { return phi.size(); }
  friend bool operator==(const CyclicClusteredCycle&, const CyclicClusteredCycle&) = default;
};

/// Type invariants: k >= 3, n >= 3, every step stays in a cluster or moves to
/// a cyclically adjacent one, and every adjacent cluster pair is used.
ValidationReport validate(const CyclicClusteredCycle& c);

/// Sign of edge v_{i+1} v_{i+2} (0-based i, indices mod n), the representative
/// of phi(v_{i+2}) - phi(v_{i+1}) mod k in {-1, 0, 1}.
int edge_sign(const CyclicClusteredCycle& c, std::size_t i);

/// (1/k) * sum of edge signs. Only needs the signs to be defined; the cycle
/// does not have to use every adjacent cluster pair.
int winding_number(const CyclicClusteredCycle& c);

/// All signs equal and nonzero.
bool is_monotone(const CyclicClusteredCycle& c);

struct MonotoneReduction {
  CyclicClusteredCycle cycle;   // final cycle (meaningless when trivial)
  std::vector<int> labels;      // surviving original vertex numbers (1-based)
  bool trivial = false;         // reduced below three vertices
  int winding = 0;
  std::vector<std::string> trace;
};

/// Contracts intra-cluster edges and length-2 paths that return to the same
/// cluster until the cycle is monotone. The winding number is checked after
/// every step.
MonotoneReduction monotone_reduce(const CyclicClusteredCycle& c);

/// c-planarity criterion for cyclic-clustered cycles: winding in {-1, 0, 1}.
bool cortese_test(const CyclicClusteredCycle& c);

/// Monotone cycle on k*r vertices read off the sinusoid construction: vertex i
/// sits at angle i*2r*pi/(kr+1) and clusters are separated at angles
/// (2ri+1)*pi/(kr+1). Requires k >= 3 and odd r >= 1.
CyclicClusteredCycle generate_counterexample(int k, int r);

/// Vertices 1..n, edge i joins i and i+1 (edge n closes the cycle), flat tree
/// with clusters V1..Vk in order.
ClusteredGraph to_clustered_graph(const CyclicClusteredCycle& c);

/// Inverse of to_clustered_graph for any flat instance whose graph is a single
/// cycle and whose clusters are arranged cyclically. The walk starts at the
/// smallest vertex id along its smallest-id edge; clusters are numbered from
/// the first stored cluster towards its lower-indexed G_T neighbour.
CyclicClusteredCycle cycle_from_graph(const ClusteredGraph& g);

class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SinusoidCheck {
  ParityVector parity;        // over independent edge pairs of to_clustered_graph
  std::size_t crossings = 0;  // total crossings between independent edges found
};

/// Counts crossings between independent edges of the curve
/// alpha -> (alpha mod 2pi, sin((kr+1) alpha / r)), alpha in [0, 2 pi r), by
/// dense sampling with sign-change detection and bisection to 1e-9.
/// Throws ResolutionError on a near-tangency.
SinusoidCheck sinusoid_parity_vector(int k, int r, int samples);

}  // namespace cplanar
