#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "bipower/errors.hpp"
#include "bipower/graph.hpp"
#include "bipower/power.hpp"

namespace bipower {

using Grid = std::vector<std::vector<std::uint8_t>>;
using Permutation = std::vector<std::size_t>;

/// Row/column orders, each mapping display position -> original index.
struct Arrangement {
  Permutation rows;
  Permutation cols;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;
};

inline Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

inline bool is_permutation_of(const Permutation& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto v : p) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

/// A 0/1 matrix stored in original index order together with a display arrangement.
class ArrangedMatrix {
public:
  ArrangedMatrix() = default;

  explicit ArrangedMatrix(Grid entries)
      : ArrangedMatrix(std::move(entries), Arrangement{}) {}

  ArrangedMatrix(Grid entries, Arrangement arrangement) : entries_(std::move(entries)) {
    rows_ = entries_.size();
    cols_ = rows_ == 0 ? 0 : entries_[0].size();
    for (const auto& r : entries_) {
      if (r.size() != cols_) throw InputError("matrix rows have different lengths");
      for (auto v : r)
        if (v > 1) throw InputError("matrix entries must be 0 or 1");
    }
    if (arrangement.rows.empty() && arrangement.cols.empty()) {
      arrangement = {identity_permutation(rows_), identity_permutation(cols_)};
    }
    if (!is_permutation_of(arrangement.rows, rows_) || !is_permutation_of(arrangement.cols, cols_)) {
      throw InputError("row/column arrangement is not a permutation of the matrix indices");
    }
    arrangement_ = std::move(arrangement);
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Grid& entries() const noexcept { return entries_; }
  const Arrangement& arrangement() const noexcept { return arrangement_; }

  /// Entry at display position (i, j), 0-based.
  bool at(std::size_t i, std::size_t j) const {
    return entries_[arrangement_.rows.at(i)][arrangement_.cols.at(j)] != 0;
  }

  Grid displayed() const {
    Grid out(rows_, std::vector<std::uint8_t>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j) ? 1 : 0;
    return out;
  }

  ArrangedMatrix with_arrangement(Arrangement a) const { return {entries_, std::move(a)}; }

  friend bool operator==(const ArrangedMatrix&, const ArrangedMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Grid entries_;
  Arrangement arrangement_;
};

enum class CellLabel : std::uint8_t { One, R, C };

using ZeroLabels = std::vector<std::vector<CellLabel>>;

/// Witness of a monotone consecutive arrangement. All bounds are 1-based
/// display coordinates.
struct McaCertificate {
  std::vector<std::size_t> a;  // first one-column of each row
  std::vector<std::size_t> b;  // last one-column of each row
  std::vector<std::size_t> c;  // first one-row of each column
  std::vector<std::size_t> d;  // last one-row of each column
  ZeroLabels labels;

  friend bool operator==(const McaCertificate&, const McaCertificate&) = default;
};

struct BoundaryMaps {
  std::vector<std::size_t> alpha;  // row -> first column
  std::vector<std::size_t> beta;   // row -> last column
  std::vector<std::size_t> gamma;  // column -> first row
  std::vector<std::size_t> delta;  // column -> last row
};

inline ArrangedMatrix graph_to_matrix(const BipartiteGraph& g) {
  Grid grid(g.x_count(), std::vector<std::uint8_t>(g.y_count(), 0));
  for (const auto& [x, y] : g.edges()) grid[x][y] = 1;
  return ArrangedMatrix(std::move(grid));
}

/// Rows become X vertices and columns Y vertices, in original index order.
inline BipartiteGraph matrix_to_graph(const ArrangedMatrix& m) {
  BipartiteGraph g(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.entries()[i][j]) g.add_edge(i, j);
  return g;
}

namespace detail {

inline void require_nonzero_lines(const ArrangedMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (std::none_of(m.entries()[i].begin(), m.entries()[i].end(), [](auto v) { return v != 0; }))
      throw ContractError("matrix row " + std::to_string(i) + " is all zero");
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    bool any = false;
    for (std::size_t i = 0; i < m.rows() && !any; ++i) any = m.entries()[i][j] != 0;
    if (!any) throw ContractError("matrix column " + std::to_string(j) + " is all zero");
  }
}

// First/last one along each displayed line, if the ones in every line are
// consecutive. `by_rows` selects rows (a, b) or columns (c, d).
inline std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> line_spans(
    const ArrangedMatrix& m, bool by_rows) {
  const std::size_t lines = by_rows ? m.rows() : m.cols();
  const std::size_t len = by_rows ? m.cols() : m.rows();
  std::vector<std::size_t> first(lines), last(lines);
  for (std::size_t l = 0; l < lines; ++l) {
    std::size_t lo = len, hi = 0, count = 0;
    for (std::size_t p = 0; p < len; ++p) {
      if (by_rows ? m.at(l, p) : m.at(p, l)) {
        lo = std::min(lo, p);
        hi = p;
        ++count;
      }
    }
    if (count != hi - lo + 1) return std::nullopt;
    first[l] = lo + 1;
    last[l] = hi + 1;
  }
  return std::pair{std::move(first), std::move(last)};
}

inline bool monotone(const std::vector<std::size_t>& v) {
  return std::is_sorted(v.begin(), v.end());
}

// Whether the zeros admit an R/C labelling closed under "above-right of R"
// and "below-left of C", decided directly from the zero pattern.
inline bool zero_labelling_exists(const ArrangedMatrix& m) {
  const std::size_t n = m.rows(), k = m.cols();
  // r_ok[i][j]: every cell (i' <= i, j' >= j) is zero.
  // c_ok[i][j]: every cell (i' >= i, j' <= j) is zero.
  std::vector<std::vector<bool>> r_ok(n, std::vector<bool>(k)), c_ok(n, std::vector<bool>(k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t jj = k; jj-- > 0;) {
      bool ok = !m.at(i, jj);
      if (i > 0) ok = ok && r_ok[i - 1][jj];
      if (jj + 1 < k) ok = ok && r_ok[i][jj + 1];
      r_ok[i][jj] = ok;
    }
  }
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t j = 0; j < k; ++j) {
      bool ok = !m.at(ii, j);
      if (ii + 1 < n) ok = ok && c_ok[ii + 1][j];
      if (j > 0) ok = ok && c_ok[ii][j - 1];
      c_ok[ii][j] = ok;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!m.at(i, j) && !r_ok[i][j] && !c_ok[i][j]) return false;
  return true;
}

}  // namespace detail

/// Per displayed row, the 1-based first and last one-column, provided the
/// ones are consecutive in every row. Zero rows or columns are a contract error.
inline std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> row_intervals(
    const ArrangedMatrix& m) {
  detail::require_nonzero_lines(m);
  return detail::line_spans(m, true);
}

/// Labels display cell (i, j) R when j > b_i and C when j < a_i.
inline ZeroLabels label_zeros(const ArrangedMatrix& m, const std::vector<std::size_t>& a,
                              const std::vector<std::size_t>& b) {
  if (a.size() != m.rows() || b.size() != m.rows()) {
    throw ContractError("row bounds do not match the matrix");
  }
  const std::size_t n = m.rows(), k = m.cols();
  ZeroLabels labels(n, std::vector<CellLabel>(k, CellLabel::One));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (m.at(i, j)) continue;
      if (j + 1 > b[i]) {
        labels[i][j] = CellLabel::R;
      } else if (j + 1 < a[i]) {
        labels[i][j] = CellLabel::C;
      } else {
        throw ContractError("zero inside the one-interval of row " + std::to_string(i + 1));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const bool closed =
          labels[i][j] == CellLabel::R
              ? (i == 0 || labels[i - 1][j] == CellLabel::R) &&
                    (j + 1 == k || labels[i][j + 1] == CellLabel::R)
          : labels[i][j] == CellLabel::C
              ? (i + 1 == n || labels[i + 1][j] == CellLabel::C) &&
                    (j == 0 || labels[i][j - 1] == CellLabel::C)
              : true;
      if (!closed) throw ContractError("row bounds are not monotone; R/C labelling is not closed");
    }
  }
  return labels;
}

/// Checks the displayed arrangement three ways (rows, columns, zero
/// labelling). They must agree; disagreement is an InternalDefect.
inline std::optional<McaCertificate> verify_mca(const ArrangedMatrix& m) {
  detail::require_nonzero_lines(m);
  const auto rows = detail::line_spans(m, true);
  const auto cols = detail::line_spans(m, false);
  const bool by_rows = rows && detail::monotone(rows->first) && detail::monotone(rows->second);
  const bool by_cols = cols && detail::monotone(cols->first) && detail::monotone(cols->second);
  const bool by_labels = detail::zero_labelling_exists(m);
  if (by_rows != by_cols || by_rows != by_labels) {
    throw InternalDefect("MCA formulations disagree (rows " + std::to_string(by_rows) +
                         ", columns " + std::to_string(by_cols) + ", labels " +
                         std::to_string(by_labels) + ")");
  }
  if (!by_rows) return std::nullopt;
  McaCertificate cert{rows->first, rows->second, cols->first, cols->second, {}};
  cert.labels = label_zeros(m, cert.a, cert.b);
  return cert;
}

struct McaSearchLimits {
  std::size_t max_rows = 12;
  std::size_t max_cols = 12;
};

namespace detail {

// Row orders are searched depth-first. For a fixed row order the column
// order is forced: columns sorted by (first row, last row). So a row order
// is accepted iff every column's ones are consecutive and no column interval
// strictly nests inside another, which is checked as columns close.
class McaSearch {
public:
  explicit McaSearch(const ArrangedMatrix& m)
      : m_(m), n_(m.rows()), k_(m.cols()), state_(k_, Unseen), opened_(k_, 0), used_(n_, false) {}

  std::optional<Arrangement> run() {
    if (!place(0)) return std::nullopt;
    std::vector<std::size_t> first(k_, n_), last(k_, 0);
    for (std::size_t pos = 0; pos < n_; ++pos) {
      for (std::size_t j = 0; j < k_; ++j) {
        if (m_.entries()[order_[pos]][j]) {
          first[j] = std::min(first[j], pos);
          last[j] = pos;
        }
      }
    }
    Permutation cols = identity_permutation(k_);
    std::stable_sort(cols.begin(), cols.end(), [&](std::size_t p, std::size_t q) {
      return std::pair(first[p], last[p]) < std::pair(first[q], last[q]);
    });
    return Arrangement{order_, std::move(cols)};
  }

private:
  enum State : std::uint8_t { Unseen, Open, Closed };

  bool place(std::size_t pos) {
    if (pos == n_) return true;
    for (std::size_t r = 0; r < n_; ++r) {
      if (used_[r] || duplicate_of_unused(r)) continue;
      const auto& row = m_.entries()[r];
      if (!admissible(row)) continue;
      const auto saved = state_;
      const auto saved_opened = opened_;
      for (std::size_t j = 0; j < k_; ++j) {
        if (row[j] && state_[j] == Unseen) {
          state_[j] = Open;
          opened_[j] = pos;
        } else if (!row[j] && state_[j] == Open) {
          state_[j] = Closed;
        }
      }
      used_[r] = true;
      order_.push_back(r);
      if (place(pos + 1)) return true;
      order_.pop_back();
      used_[r] = false;
      state_ = saved;
      opened_ = saved_opened;
    }
    return false;
  }

  // Identical rows are interchangeable; only the lowest unused one is tried.
  bool duplicate_of_unused(std::size_t r) const {
    for (std::size_t q = 0; q < r; ++q)
      if (!used_[q] && m_.entries()[q] == m_.entries()[r]) return true;
    return false;
  }

  bool admissible(const std::vector<std::uint8_t>& row) const {
    std::size_t latest_closing = 0;
    bool any_closing = false;
    std::size_t earliest_staying = SIZE_MAX;
    for (std::size_t j = 0; j < k_; ++j) {
      if (row[j] && state_[j] == Closed) return false;
      if (state_[j] == Open) {
        if (row[j]) {
          earliest_staying = std::min(earliest_staying, opened_[j]);
        } else {
          any_closing = true;
          latest_closing = std::max(latest_closing, opened_[j]);
        }
      }
    }
    // A column may close only if no column opened strictly earlier stays open.
    return !any_closing || earliest_staying == SIZE_MAX || earliest_staying >= latest_closing;
  }

  const ArrangedMatrix& m_;
  std::size_t n_, k_;
  std::vector<State> state_;
  std::vector<std::size_t> opened_;
  std::vector<bool> used_;
  Permutation order_;
};

}  // namespace detail

/// Searches row and column permutations for a monotone consecutive
/// arrangement. Deterministic: the lexicographically least accepted row
/// order (ascending original index) wins.
inline std::optional<std::pair<ArrangedMatrix, McaCertificate>> find_mca(
    const ArrangedMatrix& m, McaSearchLimits limits = {}) {
  detail::require_nonzero_lines(m);
  if (m.rows() > limits.max_rows || m.cols() > limits.max_cols) {
    throw CapacityError("MCA search is capped at " + std::to_string(limits.max_rows) + "x" +
                        std::to_string(limits.max_cols));
  }
  auto arrangement = detail::McaSearch(m).run();
  if (!arrangement) return std::nullopt;
  auto arranged = m.with_arrangement(std::move(*arrangement));
  auto cert = verify_mca(arranged);
  if (!cert) throw InternalDefect("find_mca produced an arrangement that verify_mca rejects");
  return std::pair{std::move(arranged), std::move(*cert)};
}

inline BoundaryMaps boundary_maps(const McaCertificate& cert) {
  BoundaryMaps maps{cert.a, cert.b, cert.c, cert.d};
  const std::size_t n = cert.a.size(), k = cert.c.size();
  auto in = [](std::size_t v, std::size_t hi) { return v >= 1 && v <= hi; };
  for (std::size_t i = 0; i < n; ++i) {
    if (!in(maps.alpha[i], k) || !in(maps.beta[i], k) || !in(maps.gamma[maps.alpha[i] - 1], n) ||
        !in(maps.delta[maps.beta[i] - 1], n)) {
      throw ContractError("certificate row bounds do not compose with column bounds");
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (!in(maps.gamma[j], n) || !in(maps.delta[j], n) || !in(maps.alpha[maps.gamma[j] - 1], k) ||
        !in(maps.beta[maps.delta[j] - 1], k)) {
      throw ContractError("certificate column bounds do not compose with row bounds");
    }
  }
  return maps;
}

/// Alternating row/column walk from display row `row` to display column
/// `col` (0-based), stepping to the extreme neighbour in the target's
/// direction: beta then delta rightward, alpha then gamma leftward. Entries
/// are 0-based display positions: row, column, row, ..., column.
inline std::vector<std::size_t> greedy_walk(const McaCertificate& cert, std::size_t row,
                                            std::size_t col) {
  const auto maps = boundary_maps(cert);
  if (row >= maps.alpha.size() || col >= maps.gamma.size()) {
    throw InputError("greedy walk endpoint out of range");
  }
  std::vector<std::size_t> walk{row};
  std::size_t r = row;
  const std::size_t target = col + 1;
  while (true) {
    if (maps.alpha[r] <= target && target <= maps.beta[r]) {
      walk.push_back(col);
      return walk;
    }
    const std::size_t via = target > maps.beta[r] ? maps.beta[r] : maps.alpha[r];
    const std::size_t next = (target > maps.beta[r] ? maps.delta[via - 1] : maps.gamma[via - 1]) - 1;
    if (next == r) throw DomainError("target column is unreachable from this row");
    walk.push_back(via - 1);
    walk.push_back(next);
    r = next;
  }
}

/// Length of greedy_walk; equals the shortest-path distance in a connected MCA bigraph.
inline std::size_t greedy_distance(const ArrangedMatrix& m, const McaCertificate& cert,
                                   std::size_t row, std::size_t col) {
  if (cert.a.size() != m.rows() || cert.c.size() != m.cols()) {
    throw ContractError("certificate does not match matrix");
  }
  return greedy_walk(cert, row, col).size() - 1;
}

/// Biadjacency matrix of B^[k] under the same arrangement as `g`'s MCA.
/// Failing verify_mca on the output raises CounterexampleError.
inline ArrangedMatrix matrix_power(const BipartiteGraph& g, const Arrangement& arrangement,
                                   long long k) {
  require_odd_power(k);
  const auto base = graph_to_matrix(g).with_arrangement(arrangement);
  if (!verify_mca(base)) {
    throw ContractError("matrix_power requires an arrangement that is an MCA of the input");
  }
  const auto powered = graph_to_matrix(bipartite_power(g, k)).with_arrangement(arrangement);
  if (!verify_mca(powered)) {
    nlohmann::json record = {{"k", k},
                             {"entries", base.entries()},
                             {"rows", arrangement.rows},
                             {"cols", arrangement.cols}};
    throw CounterexampleError("proper interval bigraph power closure", std::move(record));
  }
  return powered;
}

}  // namespace bipower
