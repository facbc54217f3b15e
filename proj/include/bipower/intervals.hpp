#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bipower/distance.hpp"
#include "bipower/errors.hpp"
#include "bipower/graph.hpp"
#include "bipower/power.hpp"
#include "bipower/random.hpp"

namespace bipower {

struct Interval {
  long long left = 0;
  long long right = 0;

  bool valid() const noexcept { return left <= right; }

  /// Closed intervals: touching endpoints intersect.
  bool intersects(const Interval& o) const noexcept {
    return std::max(left, o.left) <= std::min(right, o.right);
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalRepresentation {
  std::vector<Interval> x_intervals;
  std::vector<Interval> y_intervals;

  const Interval& at(VertexId v) const {
    return v.side == Side::X ? x_intervals.at(v.index) : y_intervals.at(v.index);
  }

  friend bool operator==(const IntervalRepresentation&, const IntervalRepresentation&) = default;
};

/// A computed right endpoint that may fall left of the vertex's left endpoint.
struct RawEndpoint {
  long long value = 0;
  bool valid = false;
};

namespace detail {

inline void require_matching_sizes(const BipartiteGraph& g, const IntervalRepresentation& rep) {
  if (rep.x_intervals.size() != g.x_count() || rep.y_intervals.size() != g.y_count()) {
    throw InputError("interval representation has " + std::to_string(rep.x_intervals.size()) +
                     "+" + std::to_string(rep.y_intervals.size()) + " intervals for a " +
                     std::to_string(g.x_count()) + "+" + std::to_string(g.y_count()) +
                     " bigraph");
  }
}

inline std::optional<Edge> first_mismatch(const BipartiteGraph& g,
                                          const IntervalRepresentation& rep) {
  for (std::size_t x = 0; x < g.x_count(); ++x)
    for (std::size_t y = 0; y < g.y_count(); ++y)
      if (g.adjacent(x, y) != rep.x_intervals[x].intersects(rep.y_intervals[y])) return Edge{x, y};
  return std::nullopt;
}

}  // namespace detail

/// First cross pair whose adjacency disagrees with interval intersection, if any.
inline std::optional<Edge> representation_mismatch(const BipartiteGraph& g,
                                                   const IntervalRepresentation& rep) {
  detail::require_matching_sizes(g, rep);
  return detail::first_mismatch(g, rep);
}

inline bool verify_representation(const BipartiteGraph& g, const IntervalRepresentation& rep) {
  detail::require_matching_sizes(g, rep);
  auto ok = [](const Interval& i) { return i.valid(); };
  if (!std::all_of(rep.x_intervals.begin(), rep.x_intervals.end(), ok) ||
      !std::all_of(rep.y_intervals.begin(), rep.y_intervals.end(), ok)) {
    return false;
  }
  return !detail::first_mismatch(g, rep).has_value();
}

inline BipartiteGraph intervals_to_graph(const IntervalRepresentation& rep) {
  BipartiteGraph g(rep.x_intervals.size(), rep.y_intervals.size());
  for (std::size_t x = 0; x < rep.x_intervals.size(); ++x)
    for (std::size_t y = 0; y < rep.y_intervals.size(); ++y)
      if (rep.x_intervals[x].intersects(rep.y_intervals[y])) g.add_edge(x, y);
  return g;
}

struct Canonicalized {
  BipartiteGraph graph;
  IntervalRepresentation rep;
  std::vector<std::size_t> x_perm;  // new index -> original index
  std::vector<std::size_t> y_perm;
};

/// Reorders each side by (left, right, original index).
inline Canonicalized canonicalize(const BipartiteGraph& g, const IntervalRepresentation& rep) {
  if (!verify_representation(g, rep)) {
    throw ContractError("canonicalize requires a valid interval representation");
  }
  auto order = [](const std::vector<Interval>& ivs) {
    std::vector<std::size_t> p(ivs.size());
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::stable_sort(p.begin(), p.end(), [&](std::size_t a, std::size_t b) {
      return std::pair(ivs[a].left, ivs[a].right) < std::pair(ivs[b].left, ivs[b].right);
    });
    return p;
  };
  Canonicalized out;
  out.x_perm = order(rep.x_intervals);
  out.y_perm = order(rep.y_intervals);
  for (auto i : out.x_perm) out.rep.x_intervals.push_back(rep.x_intervals[i]);
  for (auto j : out.y_perm) out.rep.y_intervals.push_back(rep.y_intervals[j]);
  out.graph = permute(g, out.x_perm, out.y_perm);
  return out;
}

namespace detail {

inline RawEndpoint right_endpoint_from(const IntervalRepresentation& rep, VertexId v, long long k,
                                       const std::vector<std::vector<std::uint32_t>>& dist) {
  std::optional<long long> best;
  const auto kk = static_cast<std::uint32_t>(k);
  auto consider = [&](long long l) { best = best ? std::max(*best, l) : l; };
  if (v.side == Side::X) {
    for (std::size_t y = 0; y < rep.y_intervals.size(); ++y)
      if (dist[v.index][y] <= kk) consider(rep.y_intervals[y].left);
  } else {
    for (std::size_t x = 0; x < rep.x_intervals.size(); ++x)
      if (dist[x][v.index] <= kk) consider(rep.x_intervals[x].left);
  }
  if (!best) throw DomainError("no opposite-side vertex within distance " + std::to_string(k));
  return {*best, *best >= rep.at(v).left};
}

}  // namespace detail

/// r_k(v): the largest left endpoint among opposite-side vertices within
/// distance k of v. `valid` is false when that lies left of l(v).
inline RawEndpoint okamoto_right_endpoint(const BipartiteGraph& g,
                                          const IntervalRepresentation& rep, VertexId v,
                                          long long k) {
  require_odd_power(k);
  if (!verify_representation(g, rep)) {
    throw ContractError("okamoto_right_endpoint requires a valid interval representation");
  }
  require_vertex(g, v);
  return detail::right_endpoint_from(rep, v, k, cross_distances(g));
}

namespace detail {

inline nlohmann::json intervals_json(const std::vector<Interval>& ivs) {
  auto arr = nlohmann::json::array();
  for (const auto& i : ivs) arr.push_back({i.left, i.right});
  return arr;
}

}  // namespace detail

/// Interval model of B^[k]: I_k(v) = [l(v), max(l(v), r_k(v))]. The result is
/// checked against bipartite_power(g, k); a mismatch raises
/// CounterexampleError rather than returning a wrong model.
inline IntervalRepresentation power_representation(const BipartiteGraph& g,
                                                   const IntervalRepresentation& rep,
                                                   long long k) {
  require_odd_power(k);
  if (!verify_representation(g, rep)) {
    throw ContractError("power_representation requires a valid interval representation");
  }
  if (!is_connected(g)) throw ContractError("power_representation requires a connected bigraph");
  const auto dist = cross_distances(g);
  IntervalRepresentation out;
  for (std::size_t x = 0; x < g.x_count(); ++x) {
    const auto r = detail::right_endpoint_from(rep, x_vertex(x), k, dist);
    const auto l = rep.x_intervals[x].left;
    out.x_intervals.push_back({l, std::max(l, r.value)});
  }
  for (std::size_t y = 0; y < g.y_count(); ++y) {
    const auto r = detail::right_endpoint_from(rep, y_vertex(y), k, dist);
    const auto l = rep.y_intervals[y].left;
    out.y_intervals.push_back({l, std::max(l, r.value)});
  }
  const auto powered = bipartite_power(g, k);
  if (const auto bad = detail::first_mismatch(powered, out)) {
    nlohmann::json record = {
        {"k", k},
        {"x_intervals", detail::intervals_json(rep.x_intervals)},
        {"y_intervals", detail::intervals_json(rep.y_intervals)},
        {"pair", {g.x_labels()[bad->first], g.y_labels()[bad->second]}},
        {"power_adjacent", powered.adjacent(bad->first, bad->second)},
    };
    throw CounterexampleError("interval bigraph power closure", std::move(record));
  }
  return out;
}

/// Endpoints drawn uniformly from [0, span] and ordered so left <= right.
inline IntervalRepresentation random_interval_representation(std::uint64_t seed, std::size_t nx,
                                                             std::size_t ny, long long span) {
  if (span < 1) throw InputError("span must be >= 1");
  std::mt19937_64 rng(seed);
  auto draw = [&] {
    auto a = static_cast<long long>(uniform_below(rng, static_cast<std::uint64_t>(span) + 1));
    auto b = static_cast<long long>(uniform_below(rng, static_cast<std::uint64_t>(span) + 1));
    return Interval{std::min(a, b), std::max(a, b)};
  };
  IntervalRepresentation rep;
  for (std::size_t i = 0; i < nx; ++i) rep.x_intervals.push_back(draw());
  for (std::size_t j = 0; j < ny; ++j) rep.y_intervals.push_back(draw());
  return rep;
}

}  // namespace bipower
