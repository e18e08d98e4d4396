#include "reference.hpp"

#include <algorithm>
#include <stdexcept>

namespace cplanar::testing {

Point circle_point(const Rational& t) {
  const Rational d = 1 + t * t;
  return {(1 - t * t) / d, 2 * t / d};
}

namespace {

int orientation(const Point& a, const Point& b, const Point& c) {
  const Rational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

}  // namespace

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
  if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0)
    throw std::logic_error("degenerate configuration in the exact drawing");
  return o1 != o2 && o3 != o4;
}

std::vector<VertexId> dfs_leaves(const ClusterTree& t) {
  std::vector<VertexId> out;
  std::vector<NodeId> stack{t.root()};
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    if (t.is_leaf(n)) {
      out.push_back(*t.node(n).vertex);
      continue;
    }
    const auto& kids = t.node(n).children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

CircleDrawing exact_circle_drawing(const ClusteredGraph& g, std::mt19937_64& rng) {
  CircleDrawing d;
  d.order = dfs_leaves(g.tree);
  // Parameters in (-n, n), strictly increasing, with random rational gaps.
  Rational t = -static_cast<int>(d.order.size());
  for (VertexId v : d.order) {
    t += Rational(std::uniform_int_distribution<int>(1, 97)(rng), 100);
    d.params.push_back(t);
    d.at[v] = circle_point(t);
  }
  return d;
}

std::map<std::pair<std::size_t, std::size_t>, bool> exact_crossings(const ClusteredGraph& g,
                                                                    const CircleDrawing& d) {
  std::map<std::pair<std::size_t, std::size_t>, bool> out;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
      const Edge& e = g.edges[i];
      const Edge& f = g.edges[j];
      if (e.touches(f.u) || e.touches(f.v)) continue;
      // A loop is a small curve at its vertex and meets no other edge.
      if (e.is_loop() || f.is_loop()) {
        out[{i, j}] = false;
        continue;
      }
      out[{i, j}] = segments_cross(d.at.at(e.u), d.at.at(e.v), d.at.at(f.u), d.at.at(f.v));
    }
  return out;
}

int cluster_boundary_violations(const ClusteredGraph& g, const CircleDrawing& d) {
  const int n = static_cast<int>(d.order.size());
  std::map<VertexId, int> pos;
  for (int i = 0; i < n; ++i) pos[d.order[static_cast<std::size_t>(i)]] = i;
  // Parameter just outside position i on either side; the circle wraps at
  // +-infinity, which the parameters never reach, so use +-(n + 1).
  auto before = [&](int i) { return i == 0 ? Rational(-(n + 1)) : (d.params[i - 1] + d.params[i]) / 2; };
  auto after = [&](int i) { return i == n - 1 ? Rational(n + 1) : (d.params[i] + d.params[i + 1]) / 2; };

  int violations = 0;
  for (NodeId c : g.tree.clusters()) {
    if (c == g.tree.root()) continue;
    const auto leaves = g.tree.leaves_under(c);
    if (static_cast<int>(leaves.size()) == n) continue;  // the whole circle, no chord
    int lo = n, hi = -1;
    for (VertexId v : leaves) {
      lo = std::min(lo, pos[v]);
      hi = std::max(hi, pos[v]);
    }
    const Point p = circle_point(before(lo)), q = circle_point(after(hi));
    auto inside = [&](VertexId v) { return pos[v] >= lo && pos[v] <= hi; };
    for (const Edge& e : g.edges) {
      if (e.is_loop()) continue;
      const bool expected = inside(e.u) != inside(e.v);
      violations += segments_cross(d.at.at(e.u), d.at.at(e.v), p, q) != expected;
    }
  }
  return violations;
}

std::size_t exhaustive_max_common(std::size_t ground, const IndependenceOracle& m1, const IndependenceOracle& m2) {
  if (ground > 20) throw std::invalid_argument("ground set too large for exhaustive search");
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << ground); ++mask) {
    std::vector<std::size_t> set;
    for (std::size_t i = 0; i < ground; ++i)
      if (mask >> i & 1) set.push_back(i);
    if (set.size() <= best) continue;
    if (m1(set) && m2(set)) best = set.size();
  }
  return best;
}

bool reference_solvable(const SwitchSystem& sys) {
  const std::size_t rows = sys.equation_count(), cols = sys.variable_count();
  std::vector<std::vector<unsigned char>> a(rows, std::vector<unsigned char>(cols + 1, 0));
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) a[i][j] = sys.rows[j][i];
  for (std::size_t i = 0; i < rows; ++i) a[i][cols] = sys.rhs.bits[i];
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && !a[p][c]) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && a[i][c])
        for (std::size_t k = c; k <= cols; ++k) a[i][k] ^= a[r][k];
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (a[i][cols]) return false;
  return true;
}

std::vector<bool> reference_row(const ClusteredGraph& g, const PairIndex& pairs, std::size_t i, VertexId v) {
  std::vector<bool> row(pairs.size(), false);
  const Edge& e = g.edges[i];
  for (std::size_t j = 0; j < g.edges.size(); ++j) {
    const Edge& f = g.edges[j];
    if (j == i || e.touches(f.u) || e.touches(f.v)) continue;
    // One parity flip per end of f at v.
    const bool odd = ((f.u == v) + (f.v == v)) % 2 == 1;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (pairs.pair(k) == std::pair(std::min(i, j), std::max(i, j))) row[k] = row[k] != odd;
  }
  return row;
}

int reference_winding(const std::vector<int>& phi, int k) {
  int sum = 0;
  const std::size_t n = phi.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int d = ((phi[(i + 1) % n] - phi[i]) % k + k) % k;
    if (d == 1)
      sum += 1;
    else if (d == k - 1)
      sum -= 1;
    else if (d != 0)
      throw std::invalid_argument("consecutive clusters are not adjacent");
  }
  if (sum % k != 0) throw std::logic_error("sign sum not divisible by k");
  return sum / k;
}

}  // namespace cplanar::testing
