#include "cplanar/matroid.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace cplanar {

bool GraphicMatroid::independent(const std::vector<std::size_t>& set) const {
  std::map<int, int> parent;
  auto find = [&](int x) {
    parent.emplace(x, x);
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i : set) {
    const auto [a, b] = ends_.at(i);
    const int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

bool PartitionMatroid::independent(const std::vector<std::size_t>& set) const {
  std::vector<std::size_t> used;
  for (std::size_t i : set) used.push_back(block_.at(i));
  std::sort(used.begin(), used.end());
  return std::adjacent_find(used.begin(), used.end()) == used.end();
}

namespace {

std::vector<std::size_t> members(const std::vector<bool>& in) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

// I - y + x as a sorted list (y may be npos for plain insertion).
std::vector<std::size_t> exchange(std::vector<bool> in, std::size_t y, std::size_t x) {
  if (y != static_cast<std::size_t>(-1)) in[y] = false;
  in[x] = true;
  return members(in);
}

}  // namespace

std::vector<std::size_t> matroid_intersection(std::size_t ground, const IndependenceOracle& m1,
                                              const IndependenceOracle& m2) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<bool> in(ground, false);
  while (true) {
    std::vector<bool> source(ground, false), sink(ground, false);
    for (std::size_t x = 0; x < ground; ++x) {
      if (in[x]) continue;
      source[x] = m1(exchange(in, none, x));
      sink[x] = m2(exchange(in, none, x));
    }
    // Arcs y -> x when I - y + x is independent in M1, x -> y when in M2.
    std::vector<std::vector<std::size_t>> out(ground);
    for (std::size_t y = 0; y < ground; ++y) {
      if (!in[y]) continue;
      for (std::size_t x = 0; x < ground; ++x) {
        if (in[x]) continue;
        const auto swapped = exchange(in, y, x);
        if (m1(swapped)) out[y].push_back(x);
        if (m2(swapped)) out[x].push_back(y);
      }
    }
    std::vector<std::size_t> pred(ground, none);
    std::vector<bool> seen(ground, false);
    std::queue<std::size_t> q;
    for (std::size_t x = 0; x < ground; ++x)
      if (source[x]) {
        seen[x] = true;
        q.push(x);
      }
    std::size_t end = none;
    while (!q.empty() && end == none) {
      const std::size_t a = q.front();
      q.pop();
      if (sink[a]) {
        end = a;
        break;
      }
      for (std::size_t b : out[a])
        if (!seen[b]) {
          seen[b] = true;
          pred[b] = a;
          q.push(b);
        }
    }
    if (end == none) break;
    for (std::size_t a = end; a != none; a = pred[a]) in[a] = !in[a];
    const auto now = members(in);
    if (!m1(now) || !m2(now)) throw MatroidError("augmentation produced a set that is not independent in both matroids");
  }
  return members(in);
}

}  // namespace cplanar
