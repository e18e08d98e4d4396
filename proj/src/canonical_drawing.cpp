#include "cplanar/canonical_drawing.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cplanar {

int CircularOrder::position(VertexId v) const {
  for (std::size_t i = 0; i < sequence.size(); ++i)
    if (sequence[i] == v) return static_cast<int>(i);
  throw std::out_of_range("vertex " + std::to_string(v) + " not on the circle");
}

PairIndex::PairIndex(const std::vector<Edge>& edges)
    : edge_count_(edges.size()), lookup_(edges.size() * edges.size(), -1) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!edges[i].independent_of(edges[j])) continue;
      const long k = static_cast<long>(pairs_.size());
      pairs_.emplace_back(i, j);
      lookup_[i * edge_count_ + j] = k;
      lookup_[j * edge_count_ + i] = k;
    }
}

long PairIndex::find(std::size_t i, std::size_t j) const {
  if (i >= edge_count_ || j >= edge_count_) return -1;
  return lookup_[i * edge_count_ + j];
}

CircularOrder dfs_circle_order(const ClusteredGraph& g) {
  require_valid(g);
  CircularOrder ord;
  // Iterative DFS; a node's arc closes once all of its children are placed.
  struct Frame {
    NodeId node;
    std::size_t next_child;
  };
  std::vector<Frame> stack{{g.tree.root(), 0}};
  ord.arcs[g.tree.root()].start = 0;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto& nd = g.tree.node(top.node);
    if (top.next_child == nd.children.size()) {
      auto& arc = ord.arcs[top.node];
      arc.length = static_cast<int>(ord.sequence.size()) - arc.start;
      stack.pop_back();
      continue;
    }
    const NodeId child = nd.children[top.next_child++];
    if (g.tree.is_leaf(child)) {
      ord.sequence.push_back(*g.tree.node(child).vertex);
    } else {
      ord.arcs[child].start = static_cast<int>(ord.sequence.size());
      stack.push_back({child, 0});
    }
  }
  return ord;
}

bool interleaves(const Edge& e, const Edge& f, const CircularOrder& ord) {
  if (!e.independent_of(f)) throw std::invalid_argument("interleaves: edges share an endpoint");
  const int a = ord.position(e.u), b = ord.position(e.v);
  const int lo = std::min(a, b), hi = std::max(a, b);
  const int x = ord.position(f.u), y = ord.position(f.v);
  const bool x_in = lo < x && x < hi;
  const bool y_in = lo < y && y < hi;
  return x_in != y_in;
}

ParityVector initial_parity_vector(const ClusteredGraph& g, const CircularOrder& ord) {
  ParityVector pv{PairIndex(g.edges), {}};
  pv.bits.resize(pv.index.size());
  for (std::size_t k = 0; k < pv.index.size(); ++k) {
    const auto [i, j] = pv.index.pair(k);
    pv.bits[k] = interleaves(g.edges[i], g.edges[j], ord);
  }
  return pv;
}

namespace {

struct Point {
  double x, y;
};

Point on_circle(double pos, int n, double radius = 1.0) {
  const double a = 2.0 * std::numbers::pi * pos / n - std::numbers::pi / 2.0;
  return {radius * std::cos(a), radius * std::sin(a)};
}

}  // namespace

std::string render_svg(const ClusteredGraph& g, const CircularOrder& ord) {
  const int n = static_cast<int>(ord.sequence.size());
  std::ostringstream os;
  os << std::fixed << std::setprecision(4);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"-1.3 -1.3 2.6 2.6\" "
        "width=\"520\" height=\"520\">\n"
     << "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"0.005\"/>\n";

  // A cluster's disc is the circular segment cut off by the chord joining the
  // half-way points just outside its arc. Nested clusters pull their chord
  // endpoints inward along the circle so that nested discs stay nested.
  int drawn = 0;
  for (const auto& [node, arc] : ord.arcs) {
    if (node == g.tree.root() || arc.length == 0) continue;
    const double shrink = 0.45 * (1.0 - std::pow(0.75, g.tree.depth(node) - 1));
    const double hue = std::fmod(47.0 * drawn++, 360.0);
    os << "  <path class=\"cluster\" data-label=\"" << g.tree.node(node).label << "\" ";
    if (arc.length == n) {
      const double r = 1.0 - shrink / n;
      os << "d=\"M " << r << " 0 A " << r << ' ' << r << " 0 1 1 " << -r << " 0 A " << r << ' '
         << r << " 0 1 1 " << r << " 0 Z\"";
    } else {
      const Point a = on_circle(arc.start - 0.5 + shrink, n);
      const Point b = on_circle(arc.start + arc.length - 0.5 - shrink, n);
      const int large = 2 * arc.length > n ? 1 : 0;
      os << "d=\"M " << a.x << ' ' << a.y << " A 1 1 0 " << large << " 1 " << b.x << ' ' << b.y
         << " Z\"";
    }
    os << " fill=\"hsl(" << hue << ",60%,80%)\" fill-opacity=\"0.35\" stroke=\"hsl(" << hue
       << ",50%,40%)\" stroke-width=\"0.008\"/>\n";
  }

  for (const Edge& e : g.edges) {
    const Point a = on_circle(ord.position(e.u), n), b = on_circle(ord.position(e.v), n);
    if (e.is_loop()) {
      os << "  <circle class=\"edge\" cx=\"" << a.x * 1.08 << "\" cy=\"" << a.y * 1.08
         << "\" r=\"0.08\" fill=\"none\" stroke=\"#222222\" stroke-width=\"0.01\"/>\n";
      continue;
    }
    os << "  <line class=\"edge\" data-id=\"" << e.id << "\" x1=\"" << a.x << "\" y1=\"" << a.y
       << "\" x2=\"" << b.x << "\" y2=\"" << b.y
       << "\" stroke=\"#222222\" stroke-width=\"0.01\"/>\n";
  }
  for (int i = 0; i < n; ++i) {
    const Point p = on_circle(i, n);
    const Point t = on_circle(i, n, 1.18);
    os << "  <circle class=\"vertex\" cx=\"" << p.x << "\" cy=\"" << p.y
       << "\" r=\"0.03\" fill=\"#000000\"/>\n"
       << "  <text x=\"" << t.x << "\" y=\"" << t.y
       << "\" font-size=\"0.08\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
       << ord.sequence[static_cast<std::size_t>(i)] << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace cplanar
