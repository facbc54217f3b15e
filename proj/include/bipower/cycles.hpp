#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bipower/errors.hpp"
#include "bipower/graph.hpp"

namespace bipower {

/// A vertex sequence claimed to be a chordless cycle of `host_power`'s
/// bipartite power of some graph.
struct CycleCertificate {
  std::vector<VertexId> vertices;
  long long host_power = 1;

  std::size_t length() const noexcept { return vertices.size(); }

  friend bool operator==(const CycleCertificate&, const CycleCertificate&) = default;
};

/// True iff `c` is an induced cycle of `g`: even length >= 4, distinct
/// vertices, consecutive pairs adjacent, all other pairs non-adjacent.
inline bool verify_chordless(const BipartiteGraph& g, const CycleCertificate& c) {
  const auto& v = c.vertices;
  const std::size_t n = v.size();
  if (n < 4 || n % 2 != 0) return false;
  if (!std::all_of(v.begin(), v.end(), [&](VertexId u) { return g.contains(u); })) return false;
  if (std::set<VertexId>(v.begin(), v.end()).size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
      if (g.adjacent(v[i], v[j]) != consecutive) return false;
    }
  }
  return true;
}

struct SearchLimits {
  std::size_t vertex_cap = 64;
};

namespace detail {

class InducedCycleSearch {
public:
  InducedCycleSearch(const BipartiteGraph& g, std::size_t min_length)
      : g_(g), n_(g.vertex_count()), min_length_(min_length), adj_(n_, 0) {
    for (const auto& [x, y] : g.edges()) {
      const auto fx = g.flat(x_vertex(x)), fy = g.flat(y_vertex(y));
      adj_[fx] |= bit(fy);
      adj_[fy] |= bit(fx);
    }
  }

  std::optional<std::vector<std::size_t>> run() {
    for (std::size_t s = 0; s < n_; ++s) {
      start_ = s;
      above_start_ = ~((std::uint64_t{2} << s) - 1);
      path_.assign(1, s);
      if (extend(bit(s), 0)) return path_;
    }
    return std::nullopt;
  }

private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  // path_ is an induced path whose first vertex is the smallest on it.
  // `interior_nbrs` is the union of neighbourhoods of path_[1 .. size-2].
  bool extend(std::uint64_t on_path, std::uint64_t interior_nbrs) {
    const std::size_t head = path_.back();
    std::uint64_t cand = adj_[head] & above_start_ & ~on_path & ~interior_nbrs;
    const std::uint64_t next_interior = path_.size() >= 2 ? interior_nbrs | adj_[head] : 0;
    while (cand != 0) {
      const auto w = static_cast<std::size_t>(__builtin_ctzll(cand));
      cand &= cand - 1;
      path_.push_back(w);
      if (path_.size() >= 3 && (adj_[start_] & bit(w)) != 0) {
        if (path_.size() >= min_length_) return true;
      } else if (extend(on_path | bit(w), next_interior)) {
        return true;
      }
      path_.pop_back();
    }
    return false;
  }

  const BipartiteGraph& g_;
  std::size_t n_;
  std::size_t min_length_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::size_t> path_;
  std::size_t start_ = 0;
  std::uint64_t above_start_ = 0;
};

}  // namespace detail

/// Depth-first search over induced paths anchored at their smallest flat
/// vertex. Returns the first chordless cycle of length >= min_length in that
/// order, so the answer is a deterministic function of the graph.
inline std::optional<CycleCertificate> find_chordless_cycle(const BipartiteGraph& g,
                                                            std::size_t min_length,
                                                            SearchLimits limits = {}) {
  if (min_length < 6 || min_length % 2 != 0) {
    throw ContractError("chordless cycle search needs an even min_length >= 6");
  }
  if (limits.vertex_cap > 64) throw ContractError("vertex cap cannot exceed 64");
  if (g.vertex_count() > limits.vertex_cap) {
    throw CapacityError("graph has " + std::to_string(g.vertex_count()) +
                        " vertices; chordless cycle search is capped at " +
                        std::to_string(limits.vertex_cap));
  }
  auto found = detail::InducedCycleSearch(g, min_length).run();
  if (!found) return std::nullopt;
  CycleCertificate c;
  for (auto f : *found) c.vertices.push_back(g.from_flat(f));
  return c;
}

}  // namespace bipower
