#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cplanar {

/// Independence oracle over ground elements 0..n-1. Sets are passed as
/// sorted index lists.
using IndependenceOracle = std::function<bool(const std::vector<std::size_t>&)>;

class MatroidError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Forests of a multigraph whose element i is the edge ends[i].
class GraphicMatroid {
 public:
  explicit GraphicMatroid(std::vector<std::pair<int, int>> ends) : ends_(std::move(ends)) {}
  bool independent(const std::vector<std::size_t>& set) const;
  std::size_t size() const { return ends_.size(); }
  IndependenceOracle oracle() const {
    return [this](const std::vector<std::size_t>& s) { return independent(s); };
  }

 private:
  std::vector<std::pair<int, int>> ends_;
};

/// At most one element from each block; element i lies in block[i].
class PartitionMatroid {
 public:
  explicit PartitionMatroid(std::vector<std::size_t> block) : block_(std::move(block)) {}
  bool independent(const std::vector<std::size_t>& set) const;
  std::size_t size() const { return block_.size(); }
  IndependenceOracle oracle() const {
    return [this](const std::vector<std::size_t>& s) { return independent(s); };
  }

 private:
  std::vector<std::size_t> block_;
};

/// Maximum common independent set by shortest augmenting paths in the
/// exchange graph, starting from the empty set. Throws MatroidError when an
/// augmentation yields a set one of the oracles rejects.
std::vector<std::size_t> matroid_intersection(std::size_t ground, const IndependenceOracle& m1,
                                              const IndependenceOracle& m2);

}  // namespace cplanar
