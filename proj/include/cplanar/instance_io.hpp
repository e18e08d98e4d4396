#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cplanar/combinatorial_map.hpp"
#include "cplanar/core.hpp"
#include "cplanar/embedded_saturator.hpp"

namespace cplanar {

/// Parse failure carrying a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Instance {
  ClusteredGraph graph;
  std::optional<CombinatorialMap> embedding;  // present when rotations are given

  /// Throws std::invalid_argument when the file carries no rotations.
  EmbeddedClusteredGraph embedded() const;
};

/// Grammar (one statement per line, '#' starts a comment):
///   vertices <int>...
///   edge <id> <u> <v>
///   tree <node>          node := '(' label item... ')', item := <int> | node
///   rotation <v> <end>...  end := <edge id> | <edge id>'  (second end of a loop)
///   outer <end> <v>
/// The tree may span several lines. The result is validated; structural
/// problems are reported as ParseError at the offending statement.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);

/// Canonical form: vertices and edges sorted by id, tree in stored order,
/// rotations listed from each vertex's smallest dart.
std::string serialize(const ClusteredGraph& g);
std::string serialize(const EmbeddedClusteredGraph& g);

}  // namespace cplanar
