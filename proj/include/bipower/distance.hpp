#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "bipower/errors.hpp"
#include "bipower/graph.hpp"

namespace bipower {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Single-source shortest-path lengths over all vertices of a bigraph.
class DistanceTable {
public:
  DistanceTable(VertexId source, std::size_t x_count, std::vector<std::uint32_t> dist)
      : source_(source), x_count_(x_count), dist_(std::move(dist)) {}

  VertexId source() const noexcept { return source_; }

  std::uint32_t at(VertexId v) const {
    return dist_.at(v.side == Side::X ? v.index : x_count_ + v.index);
  }

  bool reachable(VertexId v) const { return at(v) != kUnreachable; }

  const std::vector<std::uint32_t>& flat() const noexcept { return dist_; }

private:
  VertexId source_;
  std::size_t x_count_;
  std::vector<std::uint32_t> dist_;
};

inline void require_vertex(const BipartiteGraph& g, VertexId v) {
  if (!g.contains(v)) {
    throw InputError(std::string("vertex ") + (v.side == Side::X ? "x" : "y") + "[" +
                     std::to_string(v.index) + "] is out of range");
  }
}

inline DistanceTable bfs_distance(const BipartiteGraph& g, VertexId source) {
  require_vertex(g, source);
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  std::queue<VertexId> q;
  dist[g.flat(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    const VertexId u = q.front();
    q.pop();
    const auto du = dist[g.flat(u)];
    const Side other = opposite(u.side);
    for (auto w : g.neighbours(u)) {
      const VertexId v{other, w};
      auto& dv = dist[g.flat(v)];
      if (dv == kUnreachable) {
        dv = du + 1;
        q.push(v);
      }
    }
  }
  return {source, g.x_count(), std::move(dist)};
}

/// d(x, y) for every cross pair, computed by alternating bitset frontiers.
/// Row x holds the distances from x_x to every Y vertex.
inline std::vector<std::vector<std::uint32_t>> cross_distances(const BipartiteGraph& g) {
  const std::size_t nx = g.x_count(), ny = g.y_count();
  std::vector<Bits> cols;
  cols.reserve(ny);
  for (std::size_t y = 0; y < ny; ++y) cols.push_back(g.column(y));

  std::vector<std::vector<std::uint32_t>> out(nx, std::vector<std::uint32_t>(ny, kUnreachable));
  for (std::size_t x = 0; x < nx; ++x) {
    Bits seen_x(nx), seen_y(ny);
    seen_x.set(x);
    Bits frontier_y = g.row(x);
    std::uint32_t d = 1;
    while (frontier_y.any()) {
      for (auto y = frontier_y.find_first(); y != Bits::npos; y = frontier_y.find_next(y))
        out[x][y] = d;
      seen_y |= frontier_y;
      Bits next_x(nx);
      for (auto y = frontier_y.find_first(); y != Bits::npos; y = frontier_y.find_next(y))
        next_x |= cols[y];
      next_x -= seen_x;
      seen_x |= next_x;
      Bits next_y(ny);
      for (auto xx = next_x.find_first(); xx != Bits::npos; xx = next_x.find_next(xx))
        next_y |= g.row(xx);
      next_y -= seen_y;
      frontier_y = std::move(next_y);
      d += 2;
    }
  }
  return out;
}

inline bool is_connected(const BipartiteGraph& g) {
  if (g.vertex_count() <= 1) return true;
  const VertexId start = g.x_count() > 0 ? x_vertex(0) : y_vertex(0);
  const auto t = bfs_distance(g, start);
  return std::none_of(t.flat().begin(), t.flat().end(),
                      [](std::uint32_t d) { return d == kUnreachable; });
}

/// Largest finite distance between any two vertices (0 for graphs with < 2 vertices).
inline std::uint32_t diameter(const BipartiteGraph& g) {
  std::uint32_t best = 0;
  for (std::size_t f = 0; f < g.vertex_count(); ++f) {
    const auto table = bfs_distance(g, g.from_flat(f));
    for (auto d : table.flat())
      if (d != kUnreachable) best = std::max(best, d);
  }
  return best;
}

/// Lexicographically least shortest path from `from` to `to`: at every step
/// the smallest-index neighbour one layer closer to the target is taken.
inline std::vector<VertexId> shortest_path(const BipartiteGraph& g, VertexId from, VertexId to) {
  require_vertex(g, from);
  const auto to_target = bfs_distance(g, to);
  if (!to_target.reachable(from)) throw DomainError("no path between the given vertices");
  std::vector<VertexId> path{from};
  VertexId cur = from;
  while (cur != to) {
    const auto want = to_target.at(cur) - 1;
    for (auto w : g.neighbours(cur)) {
      const VertexId v{opposite(cur.side), w};
      if (to_target.at(v) == want) {
        cur = v;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

}  // namespace bipower
