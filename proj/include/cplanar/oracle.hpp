#pragma once

#include <cstddef>
#include <stdexcept>

#include "cplanar/core.hpp"
#include "cplanar/embedded_saturator.hpp"

namespace cplanar {

/// The oracle declines to answer. Never a verdict.
class OracleRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public OracleRefusal {
 public:
  using OracleRefusal::OracleRefusal;
};

constexpr std::size_t kFlatOracleMaxVertices = 7;
constexpr std::size_t kFlatOracleMaxEdges = 12;
constexpr std::size_t kEmbeddedOracleMaxVertices = 10;
constexpr std::size_t kEmbeddedOracleMaxPairs = 12;
constexpr std::size_t kDefaultOracleBudget = 5'000'000;  // search nodes

/// Exhaustive c-planarity test for a flat instance with connected G: tries
/// every minimal set of intra-cluster non-edges that connects all clusters
/// and every planar rotation system of the augmented graph, accepting when
/// some face can be outer while each cluster's complement sits in a single
/// face of that cluster's sub-embedding.
bool brute_force_flat_cplanarity(const ClusteredGraph& g, std::size_t budget = kDefaultOracleBudget);

/// Exhaustive saturator search on the raw embedded instance: chords between
/// same-cluster non-adjacent vertices are drawn inside faces without
/// crossings, and the result must connect every cluster with all other
/// vertices in the part of its sub-embedding that holds the outer face.
bool brute_force_embedded_saturator(const EmbeddedClusteredGraph& g, std::size_t budget = kDefaultOracleBudget);

}  // namespace cplanar
