#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cplanar/canonical_drawing.hpp"
#include "cplanar/core.hpp"

namespace cplanar {

enum class SwitchKind { EdgeVertex, EdgeCluster };

/// Passing an edge over a vertex, or over a whole cluster disc.
struct Switch {
  SwitchKind kind = SwitchKind::EdgeVertex;
  std::size_t edge_index = 0;
  EdgeId edge = 0;
  int target = 0;  // vertex id for EdgeVertex, tree node id for EdgeCluster

  friend bool operator==(const Switch&, const Switch&) = default;
};

std::string describe(const Switch& s, const ClusteredGraph& g);

/// Columns of the GF(2) system: one effect vector per allowed switch, and the
/// parity vector of the starting drawing as right-hand side.
struct SwitchSystem {
  std::vector<Switch> variables;
  std::vector<BitVector> rows;
  ParityVector rhs;

  std::size_t equation_count() const { return rhs.dimension(); }
  std::size_t variable_count() const { return variables.size(); }
};

/// Indices into SwitchSystem::variables, sorted, without repetition.
using WitnessSet = std::vector<std::size_t>;

/// Switches (e, x) with x a child of some node on the tree path between the
/// endpoints of e; endpoints themselves are excluded.
std::vector<Switch> allowed_switches(const ClusteredGraph& g);

/// Effect of passing edge `edge_index` over vertex v.
BitVector edge_vertex_row(const ClusteredGraph& g, const PairIndex& pairs, std::size_t edge_index,
                          VertexId v);

SwitchSystem build_system(const ClusteredGraph& g, const ParityVector& v0);

/// Gaussian elimination over GF(2): variables are scanned in index order and
/// each new basis vector pivots on its lowest set equation. Returns switches
/// whose effects sum to the right-hand side, or nullopt when none exist.
std::optional<WitnessSet> solve(const SwitchSystem& sys);

/// Rank of the switch space (diagnostics).
std::size_t switch_space_rank(const SwitchSystem& sys);

/// v0 plus the effect rows of w. A variable listed twice cancels.
ParityVector apply_switches(const ParityVector& v0, const WitnessSet& w, const SwitchSystem& sys);

/// Same system with variable i of the result equal to variable perm[i] of sys.
SwitchSystem permute_variables(const SwitchSystem& sys, std::span<const std::size_t> perm);

}  // namespace cplanar
