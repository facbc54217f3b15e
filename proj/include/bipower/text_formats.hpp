#pragma once

#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "bipower/errors.hpp"
#include "bipower/graph.hpp"
#include "bipower/intervals.hpp"
#include "bipower/mca.hpp"

namespace bipower {

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

inline std::vector<std::pair<std::string_view, std::size_t>> split_fields(std::string_view line,
                                                                          char sep) {
  std::vector<std::pair<std::string_view, std::size_t>> out;  // (field, 1-based column)
  std::size_t start = 0;
  while (true) {
    const auto p = line.find(sep, start);
    out.emplace_back(line.substr(start, p == std::string_view::npos ? p : p - start), start + 1);
    if (p == std::string_view::npos) return out;
    start = p + 1;
  }
}

template <typename Int>
Int parse_int(std::string_view s, std::size_t line, std::size_t col, const char* what) {
  Int v{};
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError(std::string("expected ") + what + ", got \"" + std::string(s) + "\"", line,
                     col);
  }
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Interval TSV: `side<TAB>label<TAB>left<TAB>right` per vertex. Lines starting
// with '#' and blank lines are kept verbatim so files round-trip.

struct IntervalDocument {
  struct Line {
    std::optional<std::string> verbatim;  // comment or blank line
    VertexId vertex;
  };

  std::vector<std::string> x_labels;
  std::vector<std::string> y_labels;
  IntervalRepresentation rep;
  std::vector<Line> lines;

  BipartiteGraph graph() const {
    auto g = intervals_to_graph(rep);
    g.set_labels(x_labels, y_labels);
    return g;
  }
};

/// Document for `rep` with the labels of `g`, X lines first.
inline IntervalDocument make_interval_document(const BipartiteGraph& g,
                                               const IntervalRepresentation& rep) {
  if (rep.x_intervals.size() != g.x_count() || rep.y_intervals.size() != g.y_count()) {
    throw InputError("interval representation does not match graph");
  }
  IntervalDocument doc{g.x_labels(), g.y_labels(), rep, {}};
  for (std::size_t i = 0; i < g.x_count(); ++i) doc.lines.push_back({std::nullopt, x_vertex(i)});
  for (std::size_t j = 0; j < g.y_count(); ++j) doc.lines.push_back({std::nullopt, y_vertex(j)});
  return doc;
}

inline IntervalDocument read_interval_tsv(std::string_view text) {
  IntervalDocument doc;
  std::unordered_set<std::string> seen_x, seen_y;
  const auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const auto line = lines[ln];
    const std::size_t lineno = ln + 1;
    if (line.empty() || line.front() == '#' ||
        line.find_first_not_of(" \t\r") == std::string_view::npos) {
      doc.lines.push_back({std::string(line), {}});
      continue;
    }
    const auto f = detail::split_fields(line, '\t');
    if (f.size() != 4) {
      throw ParseError("expected 4 tab-separated fields, got " + std::to_string(f.size()), lineno,
                       1);
    }
    Side side;
    if (f[0].first == "X") {
      side = Side::X;
    } else if (f[0].first == "Y") {
      side = Side::Y;
    } else {
      throw ParseError("side must be X or Y", lineno, f[0].second);
    }
    std::string label(f[1].first);
    if (label.empty()) throw ParseError("empty label", lineno, f[1].second);
    const auto left = detail::parse_int<long long>(f[2].first, lineno, f[2].second, "integer");
    const auto right = detail::parse_int<long long>(f[3].first, lineno, f[3].second, "integer");
    if (left > right) throw ParseError("left endpoint exceeds right endpoint", lineno, f[3].second);
    auto& seen = side == Side::X ? seen_x : seen_y;
    if (!seen.insert(label).second) {
      throw ParseError("duplicate label \"" + label + "\"", lineno, f[1].second);
    }
    auto& labels = side == Side::X ? doc.x_labels : doc.y_labels;
    auto& ivs = side == Side::X ? doc.rep.x_intervals : doc.rep.y_intervals;
    doc.lines.push_back({std::nullopt, VertexId{side, labels.size()}});
    labels.push_back(std::move(label));
    ivs.push_back({left, right});
  }
  return doc;
}

inline std::string write_interval_tsv(const IntervalDocument& doc) {
  std::string out;
  for (const auto& line : doc.lines) {
    if (line.verbatim) {
      out += *line.verbatim;
    } else {
      const auto& v = line.vertex;
      const auto& iv = doc.rep.at(v);
      out += v.side == Side::X ? "X\t" : "Y\t";
      out += (v.side == Side::X ? doc.x_labels : doc.y_labels).at(v.index);
      out += "\t" + std::to_string(iv.left) + "\t" + std::to_string(iv.right);
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matrix text: `n m`, n lines of m '0'/'1' characters (original order), then
// optional `rows:` / `cols:` lines giving display -> original permutations.

inline ArrangedMatrix read_matrix_text(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw ParseError("empty matrix file", 1, 1);
  const auto dims = detail::split_fields(lines[0], ' ');
  if (dims.size() != 2) throw ParseError("first line must be `n m`", 1, 1);
  const auto n = detail::parse_int<std::size_t>(dims[0].first, 1, dims[0].second, "row count");
  const auto m = detail::parse_int<std::size_t>(dims[1].first, 1, dims[1].second, "column count");
  if (lines.size() < n + 1) throw ParseError("expected " + std::to_string(n) + " matrix rows",
                                             lines.size() + 1, 1);
  Grid grid(n, std::vector<std::uint8_t>(m));
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = lines[i + 1];
    if (row.size() != m) {
      throw ParseError("expected " + std::to_string(m) + " entries", i + 2,
                       std::min(row.size(), m) + 1);
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (row[j] != '0' && row[j] != '1') throw ParseError("entry must be 0 or 1", i + 2, j + 1);
      grid[i][j] = row[j] == '1' ? 1 : 0;
    }
  }
  Arrangement arr{identity_permutation(n), identity_permutation(m)};
  bool have_rows = false, have_cols = false;
  for (std::size_t ln = n + 1; ln < lines.size(); ++ln) {
    const auto line = lines[ln];
    const bool is_rows = line.starts_with("rows:");
    const bool is_cols = line.starts_with("cols:");
    if ((!is_rows && !is_cols) || (is_rows && have_rows) || (is_cols && have_cols)) {
      throw ParseError("expected a `rows:` or `cols:` line", ln + 1, 1);
    }
    Permutation perm;
    const auto body = line.substr(5);
    for (const auto& [tok, col] : detail::split_fields(body, ' ')) {
      if (tok.empty()) continue;
      perm.push_back(detail::parse_int<std::size_t>(tok, ln + 1, col + 5, "index"));
    }
    if (!is_permutation_of(perm, is_rows ? n : m)) {
      throw ParseError("not a permutation of 0.." + std::to_string((is_rows ? n : m)) + "-1",
                       ln + 1, 6);
    }
    (is_rows ? arr.rows : arr.cols) = std::move(perm);
    (is_rows ? have_rows : have_cols) = true;
  }
  return ArrangedMatrix(std::move(grid), std::move(arr));
}

/// Canonical text; permutation lines appear only for a non-identity arrangement.
inline std::string write_matrix_text(const ArrangedMatrix& mat) {
  std::string out = std::to_string(mat.rows()) + " " + std::to_string(mat.cols()) + "\n";
  for (const auto& row : mat.entries()) {
    for (auto v : row) out += v ? '1' : '0';
    out += '\n';
  }
  const auto& a = mat.arrangement();
  if (a.rows != identity_permutation(mat.rows()) || a.cols != identity_permutation(mat.cols())) {
    auto perm_line = [](const char* key, const Permutation& p) {
      std::string s = key;
      for (auto v : p) s += " " + std::to_string(v);
      return s + "\n";
    };
    out += perm_line("rows:", a.rows);
    out += perm_line("cols:", a.cols);
  }
  return out;
}

}  // namespace bipower
