#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "bipower/errors.hpp"

namespace bipower {

enum class Side : std::uint8_t { X, Y };

constexpr Side opposite(Side s) noexcept { return s == Side::X ? Side::Y : Side::X; }

struct VertexId {
  Side side = Side::X;
  std::size_t index = 0;

  friend bool operator==(const VertexId&, const VertexId&) = default;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

constexpr VertexId x_vertex(std::size_t i) noexcept { return {Side::X, i}; }
constexpr VertexId y_vertex(std::size_t j) noexcept { return {Side::Y, j}; }

using Bits = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<std::size_t, std::size_t>;  // (x index, y index)

/// Bigraph B = (X, Y, E). One bitset row per X vertex; the Y-side view is
/// derived. Within-side edges are not representable.
class BipartiteGraph {
public:
  BipartiteGraph() = default;

  BipartiteGraph(std::size_t x_count, std::size_t y_count)
      : x_count_(x_count), y_count_(y_count), rows_(x_count, Bits(y_count)) {
    for (std::size_t i = 0; i < x_count; ++i) x_labels_.push_back("x" + std::to_string(i + 1));
    for (std::size_t j = 0; j < y_count; ++j) y_labels_.push_back("y" + std::to_string(j + 1));
  }

  std::size_t x_count() const noexcept { return x_count_; }
  std::size_t y_count() const noexcept { return y_count_; }
  std::size_t vertex_count() const noexcept { return x_count_ + y_count_; }
  std::size_t side_size(Side s) const noexcept { return s == Side::X ? x_count_ : y_count_; }

  bool contains(VertexId v) const noexcept { return v.index < side_size(v.side); }

  bool adjacent(std::size_t x, std::size_t y) const { return rows_.at(x).test(y); }

  bool adjacent(VertexId u, VertexId v) const {
    if (u.side == v.side) return false;
    return u.side == Side::X ? adjacent(u.index, v.index) : adjacent(v.index, u.index);
  }

  void add_edge(std::size_t x, std::size_t y) {
    if (x >= x_count_ || y >= y_count_) {
      throw InputError("edge (" + std::to_string(x) + ", " + std::to_string(y) +
                       ") out of range for a " + std::to_string(x_count_) + "+" +
                       std::to_string(y_count_) + " bigraph");
    }
    rows_[x].set(y);
  }

  const Bits& row(std::size_t x) const { return rows_.at(x); }

  Bits column(std::size_t y) const {
    Bits col(x_count_);
    for (std::size_t x = 0; x < x_count_; ++x) col[x] = rows_[x][y];
    return col;
  }

  /// Neighbours of v, all on the opposite side, in ascending index order.
  std::vector<std::size_t> neighbours(VertexId v) const {
    std::vector<std::size_t> out;
    if (v.side == Side::X) {
      const Bits& r = rows_.at(v.index);
      for (auto j = r.find_first(); j != Bits::npos; j = r.find_next(j)) out.push_back(j);
    } else {
      for (std::size_t x = 0; x < x_count_; ++x)
        if (rows_[x].test(v.index)) out.push_back(x);
    }
    return out;
  }

  std::size_t edge_count() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.count();
    return n;
  }

  /// Edges sorted by (x, y).
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t x = 0; x < x_count_; ++x)
      for (auto y = rows_[x].find_first(); y != Bits::npos; y = rows_[x].find_next(y))
        out.emplace_back(x, y);
    return out;
  }

  const std::vector<std::string>& x_labels() const noexcept { return x_labels_; }
  const std::vector<std::string>& y_labels() const noexcept { return y_labels_; }

  const std::string& label(VertexId v) const {
    return v.side == Side::X ? x_labels_.at(v.index) : y_labels_.at(v.index);
  }

  void set_labels(std::vector<std::string> xs, std::vector<std::string> ys) {
    if (xs.size() != x_count_ || ys.size() != y_count_) {
      throw InputError("label count does not match side sizes");
    }
    x_labels_ = std::move(xs);
    y_labels_ = std::move(ys);
  }

  /// Same sides and same edges; labels ignored.
  bool same_edges(const BipartiteGraph& other) const {
    return x_count_ == other.x_count_ && y_count_ == other.y_count_ && rows_ == other.rows_;
  }

  /// Flat numbering: X vertices first, then Y.
  std::size_t flat(VertexId v) const noexcept {
    return v.side == Side::X ? v.index : x_count_ + v.index;
  }

  VertexId from_flat(std::size_t f) const noexcept {
    return f < x_count_ ? x_vertex(f) : y_vertex(f - x_count_);
  }

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

private:
  std::size_t x_count_ = 0;
  std::size_t y_count_ = 0;
  std::vector<Bits> rows_;
  std::vector<std::string> x_labels_;
  std::vector<std::string> y_labels_;
};

/// Builds a bigraph from an (x, y) edge list. Duplicate edges are merged.
inline BipartiteGraph build_graph(std::size_t x_count, std::size_t y_count,
                                  const std::vector<Edge>& edges) {
  BipartiteGraph g(x_count, y_count);
  for (const auto& [x, y] : edges) g.add_edge(x, y);
  return g;
}

/// Relabels vertices: new index i on each side is old index perm[i].
inline BipartiteGraph permute(const BipartiteGraph& g, const std::vector<std::size_t>& x_perm,
                              const std::vector<std::size_t>& y_perm) {
  if (x_perm.size() != g.x_count() || y_perm.size() != g.y_count()) {
    throw InputError("permutation size does not match graph");
  }
  BipartiteGraph out(g.x_count(), g.y_count());
  std::vector<std::string> xs, ys;
  for (std::size_t i = 0; i < x_perm.size(); ++i) {
    xs.push_back(g.x_labels().at(x_perm[i]));
    for (std::size_t j = 0; j < y_perm.size(); ++j)
      if (g.adjacent(x_perm[i], y_perm.at(j))) out.add_edge(i, j);
  }
  for (auto j : y_perm) ys.push_back(g.y_labels().at(j));
  out.set_labels(std::move(xs), std::move(ys));
  return out;
}

/// Even cycle C_{2n} as an n+n bigraph: walk position t is x_{t/2} for even t,
/// y_{t/2} for odd t.
inline BipartiteGraph cycle_graph(std::size_t length) {
  if (length < 4 || length % 2 != 0) throw InputError("cycle length must be even and >= 4");
  const std::size_t half = length / 2;
  BipartiteGraph g(half, half);
  for (std::size_t t = 0; t < length; ++t) {
    const std::size_t a = t, b = (t + 1) % length;
    const std::size_t xt = a % 2 == 0 ? a : b;
    const std::size_t yt = a % 2 == 0 ? b : a;
    g.add_edge(xt / 2, yt / 2);
  }
  return g;
}

/// Vertex at walk position t of cycle_graph(length).
constexpr VertexId cycle_vertex(std::size_t t) noexcept {
  return t % 2 == 0 ? x_vertex(t / 2) : y_vertex(t / 2);
}

}  // namespace bipower
