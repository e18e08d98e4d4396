#include "cplanar/cycle_tools.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace cplanar {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// Representative in {-1, 0, 1} or 2 when the step is not between equal or
// cyclically adjacent clusters.
int step_sign(int from, int to, int k) {
  const int d = mod(to - from, k);
  if (d == 0) return 0;
  if (d == 1) return 1;
  if (d == k - 1) return -1;
  return 2;
}

int sign_sum(const std::vector<int>& phi, int k) {
  int sum = 0;
  for (std::size_t i = 0; i < phi.size(); ++i) sum += step_sign(phi[i], phi[(i + 1) % phi.size()], k);
  return sum;
}

std::string phi_string(const std::vector<int>& phi) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < phi.size(); ++i) os << (i ? "," : "") << phi[i];
  os << ')';
  return os.str();
}

// Everything but the requirement that each adjacent cluster pair is used.
ValidationReport sign_report(const CyclicClusteredCycle& c) {
  ValidationReport r;
  if (c.k < 3) r.problems.push_back("need k >= 3 clusters");
  if (c.n() < 3) r.problems.push_back("need at least 3 vertices");
  for (int x : c.phi)
    if (x < 1 || x > c.k) r.problems.push_back("cluster index " + std::to_string(x) + " out of range");
  if (!r.ok()) return r;
  for (std::size_t i = 0; i < c.n(); ++i)
    if (step_sign(c.phi[i], c.phi[(i + 1) % c.n()], c.k) == 2)
      r.problems.push_back("edge " + std::to_string(i + 1) + " joins non-adjacent clusters");
  return r;
}

}  // namespace

ValidationReport validate(const CyclicClusteredCycle& c) {
  ValidationReport r = sign_report(c);
  if (!r.ok()) return r;
  std::set<int> realized;  // i stands for the cluster pair {i, i+1 mod k}
  for (std::size_t i = 0; i < c.n(); ++i) {
    const int a = c.phi[i], b = c.phi[(i + 1) % c.n()];
    const int s = step_sign(a, b, c.k);
    if (s == 1) realized.insert(a);
    if (s == -1) realized.insert(b);
  }
  if (static_cast<int>(realized.size()) != c.k)
    r.problems.push_back("some pair of cyclically adjacent clusters has no edge");
  return r;
}

int edge_sign(const CyclicClusteredCycle& c, std::size_t i) {
  const int s = step_sign(c.phi[i % c.n()], c.phi[(i + 1) % c.n()], c.k);
  if (s == 2) throw std::invalid_argument("edge joins non-adjacent clusters");
  return s;
}

int winding_number(const CyclicClusteredCycle& c) {
  const auto r = sign_report(c);
  if (!r.ok()) throw std::invalid_argument("invalid cyclic-clustered cycle: " + r.to_string());
  const int sum = sign_sum(c.phi, c.k);
  if (sum % c.k != 0) throw std::logic_error("sign sum of a closed cycle is not divisible by k");
  return sum / c.k;
}

bool is_monotone(const CyclicClusteredCycle& c) {
  if (c.n() == 0) return false;
  const int first = edge_sign(c, 0);
  if (first == 0) return false;
  for (std::size_t i = 1; i < c.n(); ++i)
    if (edge_sign(c, i) != first) return false;
  return true;
}

MonotoneReduction monotone_reduce(const CyclicClusteredCycle& c) {
  MonotoneReduction out;
  out.winding = winding_number(c);
  std::vector<int> phi = c.phi;
  std::vector<int> labels(phi.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i) + 1;
  const int k = c.k;

  auto sign_at = [&](std::size_t i) { return step_sign(phi[i], phi[(i + 1) % phi.size()], k); };
  auto monotone = [&] {
    const int s0 = sign_at(0);
    if (s0 == 0) return false;
    for (std::size_t i = 1; i < phi.size(); ++i)
      if (sign_at(i) != s0) return false;
    return true;
  };

  while (true) {
    if (phi.size() < 3) {
      out.trivial = true;
      out.trace.push_back("reduces to trivial (" + std::to_string(phi.size()) + " vertices)");
      if (out.winding != 0) throw std::logic_error("nonzero winding reduced below three vertices");
      break;
    }
    if (monotone()) break;

    const std::size_t n = phi.size();
    std::string step;
    std::size_t zero = n;
    for (std::size_t i = 0; i < n && zero == n; ++i)
      if (sign_at(i) == 0) zero = i;
    if (zero < n) {
      // Contract v_i v_{i+1}; the merged vertex keeps the smaller label.
      const std::size_t j = (zero + 1) % n;
      step = "contract edge " + std::to_string(labels[zero]) + "-" + std::to_string(labels[j]);
      labels[zero] = std::min(labels[zero], labels[j]);
      phi.erase(phi.begin() + static_cast<long>(j));
      labels.erase(labels.begin() + static_cast<long>(j));
    } else {
      std::size_t at = n;
      for (std::size_t i = 0; i < n && at == n; ++i)
        if (sign_at(i) == -sign_at((i + 1) % n)) at = i;
      if (at == n) throw std::logic_error("non-monotone cycle without a reducible configuration");
      const std::size_t mid = (at + 1) % n, end = (at + 2) % n;
      step = "contract path " + std::to_string(labels[at]) + "-" + std::to_string(labels[mid]) + "-" +
             std::to_string(labels[end]);
      labels[at] = std::min(labels[at], labels[end]);
      // Erase the higher position first so the lower one stays valid.
      for (std::size_t p : {std::max(mid, end), std::min(mid, end)}) {
        phi.erase(phi.begin() + static_cast<long>(p));
        labels.erase(labels.begin() + static_cast<long>(p));
      }
    }
    const int sum = sign_sum(phi, k);
    if (sum != out.winding * k) throw std::logic_error("reduction step changed the winding number");
    out.trace.push_back(step + " -> " + phi_string(phi));
  }
  out.cycle = CyclicClusteredCycle{k, phi};
  out.labels = labels;
  return out;
}

bool cortese_test(const CyclicClusteredCycle& c) { return std::abs(winding_number(c)) <= 1; }

CyclicClusteredCycle generate_counterexample(int k, int r) {
  if (k < 3) throw std::invalid_argument("counterexample needs k >= 3");
  if (r < 1 || r % 2 == 0) throw std::invalid_argument("counterexample needs an odd r >= 1");
  // Angles in units of pi/(kr+1): vertex i at 2ri, boundary j at 2rj+1,
  // full turn 2(kr+1). Vertices are even and boundaries odd, so no vertex
  // ever sits on a boundary.
  const int turn = 2 * (k * r + 1);
  CyclicClusteredCycle c{k, {}};
  for (int i = 0; i < k * r; ++i) {
    const int angle = mod(2 * r * i, turn);
    int arc = k - 1;  // [2r(k-1)+1, turn+1) wraps through zero
    for (int j = 0; j + 1 < k; ++j)
      if (angle > 2 * r * j + 1 && angle < 2 * r * (j + 1) + 1) arc = j;
    if (angle % 2 != 0) throw std::logic_error("vertex on a cluster boundary");
    c.phi.push_back(arc + 1);
  }
  return c;
}

ClusteredGraph to_clustered_graph(const CyclicClusteredCycle& c) {
  ClusteredGraph g;
  const int n = static_cast<int>(c.n());
  for (int i = 1; i <= n; ++i) g.vertices.push_back(i);
  for (int i = 1; i <= n; ++i) g.edges.push_back(Edge{i, i, i % n + 1});
  g.tree.set_root_label("root");
  std::vector<NodeId> cluster(static_cast<std::size_t>(c.k) + 1);
  for (int j = 1; j <= c.k; ++j) cluster[static_cast<std::size_t>(j)] = g.tree.add_cluster(g.tree.root(), "V" + std::to_string(j));
  for (int i = 1; i <= n; ++i) g.tree.add_leaf(cluster[static_cast<std::size_t>(c.phi[static_cast<std::size_t>(i - 1)])], i);
  return g;
}

CyclicClusteredCycle cycle_from_graph(const ClusteredGraph& g) {
  const Classification cls = classify(g);
  if (!cls.cyclic_clustered) throw std::invalid_argument("instance is not cyclic-clustered");
  const std::size_t n = g.vertices.size();
  if (g.edges.size() != n) throw std::invalid_argument("graph is not a single cycle");
  for (VertexId v : g.vertices)
    if (g.incident_edges(v).size() != 2) throw std::invalid_argument("graph is not a single cycle");

  // Cyclic order of the clusters along G_T.
  const auto clusters = g.top_clusters();
  std::map<NodeId, std::size_t> pos;
  for (std::size_t i = 0; i < clusters.size(); ++i) pos[clusters[i]] = i;
  std::vector<std::set<std::size_t>> adj(clusters.size());
  for (const Edge& e : g.edges) {
    const auto a = pos.at(g.cluster_of(e.u)), b = pos.at(g.cluster_of(e.v));
    if (a != b) {
      adj[a].insert(b);
      adj[b].insert(a);
    }
  }
  std::vector<std::size_t> order{0};
  std::size_t prev = 0, cur = *adj[0].begin();
  while (cur != 0) {
    order.push_back(cur);
    const std::size_t next = *adj[cur].begin() == prev ? *adj[cur].rbegin() : *adj[cur].begin();
    prev = cur;
    cur = next;
  }
  std::map<NodeId, int> index;
  for (std::size_t i = 0; i < order.size(); ++i) index[clusters[order[i]]] = static_cast<int>(i) + 1;

  // Walk the cycle.
  CyclicClusteredCycle c{static_cast<int>(clusters.size()), {}};
  const VertexId start = *std::min_element(g.vertices.begin(), g.vertices.end());
  VertexId at = start;
  EdgeId via = -1;
  {
    const auto inc = g.incident_edges(start);
    via = std::min(g.edges[inc[0]].id, g.edges[inc[1]].id);
  }
  for (std::size_t step = 0; step < n; ++step) {
    c.phi.push_back(index.at(g.cluster_of(at)));
    const Edge& e = g.edge(via);
    at = e.other(at);
    for (std::size_t i : g.incident_edges(at))
      if (g.edges[i].id != via) {
        via = g.edges[i].id;
        break;
      }
  }
  if (at != start) throw std::invalid_argument("graph is not a single cycle");
  return c;
}

SinusoidCheck sinusoid_parity_vector(int k, int r, int samples) {
  if (samples < 2) throw std::invalid_argument("need at least two samples per arc");
  const CyclicClusteredCycle c = generate_counterexample(k, r);
  const ClusteredGraph g = to_clustered_graph(c);
  const std::size_t n = c.n();
  const double pi = std::numbers::pi;
  const double period = 2.0 * pi * r;
  const double freq = static_cast<double>(k * r + 1) / r;
  auto height = [&](double a) { return std::sin(freq * a); };

  // Edge i is the curve piece between consecutive vertex parameters; the
  // closing edge runs to alpha = 2 pi r, which is vertex 0 again.
  std::vector<double> start(n + 1);
  for (std::size_t i = 0; i < n; ++i) start[i] = static_cast<double>(i) * 2.0 * r * pi / (k * r + 1);
  start[n] = period;

  SinusoidCheck out{{PairIndex(g.edges), {}}, 0};
  out.parity.bits.resize(out.parity.index.size());
  constexpr double kParamTol = 1e-9;
  constexpr double kTangencyTol = 1e-12;
  constexpr double kNearTol = 1e-7;

  for (std::size_t p = 0; p < out.parity.index.size(); ++p) {
    const auto [a, b] = out.parity.index.pair(p);
    std::size_t count = 0;
    for (int m = 1; m < r; ++m) {
      const double shift = 2.0 * pi * m;
      auto gap = [&](double x) { return height(x) - height(x + shift); };
      for (double wrap : {0.0, period}) {
        // alpha in edge a with alpha + shift in edge b (mod the period).
        const double lo = std::max(start[a], start[b] - shift + wrap);
        const double hi = std::min(start[a + 1], start[b + 1] - shift + wrap);
        if (hi - lo <= 0) continue;
        const double step = (start[a + 1] - start[a]) / samples;
        const int pieces = std::max(1, static_cast<int>(std::ceil((hi - lo) / step)));
        auto tangency = [&] {
          return ResolutionError("resolution insufficient: near-tangency between edges " +
                                 std::to_string(a + 1) + " and " + std::to_string(b + 1));
        };
        std::vector<double> xs(static_cast<std::size_t>(pieces) + 1), gs(xs.size());
        for (std::size_t s = 0; s < xs.size(); ++s) {
          xs[s] = s + 1 == xs.size() ? hi : lo + (hi - lo) * static_cast<double>(s) / pieces;
          gs[s] = gap(xs[s]);
        }
        // The range ends are edge endpoints, which never lie on another edge.
        if (std::abs(gs.front()) < kTangencyTol || std::abs(gs.back()) < kTangencyTol) throw tangency();
        for (std::size_t s = 1; s < xs.size(); ++s) {
          const double g0 = gs[s - 1], g1 = gs[s];
          if (std::abs(g1) < kTangencyTol) {
            // Sample landed on a root: a crossing if the sign flips across it.
            if (s + 1 == xs.size()) throw tangency();
            const double g2 = gs[s + 1];
            if (std::abs(g2) < kTangencyTol || (g0 < 0) == (g2 < 0)) throw tangency();
            ++count;
            continue;
          }
          if (std::abs(g0) < kTangencyTol) continue;
          // A tiny local extremum of |gap| without a sign change is a touching
          // point the sampling cannot classify.
          if (s + 1 < xs.size() && std::abs(g1) < kNearTol && std::abs(g1) <= std::abs(g0) &&
              std::abs(g1) <= std::abs(gs[s + 1]) && (g0 < 0) == (g1 < 0) && (g1 < 0) == (gs[s + 1] < 0))
            throw tangency();
          if ((g0 < 0) != (g1 < 0)) {
            double l = xs[s - 1], h = xs[s], gl = g0;
            while (h - l > kParamTol) {
              const double mid = 0.5 * (l + h), gm = gap(mid);
              if ((gm < 0) == (gl < 0)) {
                l = mid;
                gl = gm;
              } else {
                h = mid;
              }
            }
            ++count;
          }
        }
      }
    }
    out.crossings += count;
    out.parity.bits[p] = count % 2 == 1;
  }
  return out;
}

}  // namespace cplanar
