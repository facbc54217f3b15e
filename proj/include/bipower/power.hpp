#pragma once

#include <cstddef>

#include "bipower/distance.hpp"
#include "bipower/errors.hpp"
#include "bipower/graph.hpp"

namespace bipower {

/// B^[k]: same vertices, x ~ y iff d_B(x, y) <= k. Cross pairs always have odd
/// distance, so the parity condition needs no separate test. Pairs in
/// different components stay non-adjacent.
inline BipartiteGraph bipartite_power(const BipartiteGraph& g, long long k) {
  require_odd_power(k);
  if (k == 1) return g;
  const auto dist = cross_distances(g);
  BipartiteGraph out(g.x_count(), g.y_count());
  out.set_labels(g.x_labels(), g.y_labels());
  for (std::size_t x = 0; x < g.x_count(); ++x)
    for (std::size_t y = 0; y < g.y_count(); ++y)
      if (dist[x][y] != kUnreachable && dist[x][y] <= static_cast<unsigned long long>(k))
        out.add_edge(x, y);
  return out;
}

}  // namespace bipower
