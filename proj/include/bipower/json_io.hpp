#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "bipower/errors.hpp"
#include "bipower/graph.hpp"

namespace bipower {

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline std::string quoted(const std::string& s) {
  try {
    return nlohmann::json(s).dump();
  } catch (const nlohmann::json::type_error&) {
    throw InputError("label is not valid UTF-8");
  }
}

inline std::unordered_map<std::string, std::size_t> label_index(
    const std::vector<std::string>& labels, const char* side) {
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!idx.emplace(labels[i], i).second) {
      throw InputError(std::string("duplicate ") + side + " label " + quoted(labels[i]));
    }
  }
  return idx;
}

}  // namespace detail

/// Parses JSON text; syntax errors are reported with 1-based line/column.
inline nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t at = e.byte == 0 ? 0 : e.byte - 1;
    const auto [line, col] = detail::line_column(text, at);
    throw ParseError("malformed JSON", line, col);
  }
}

inline BipartiteGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("y") || !j.contains("edges")) {
    throw InputError(R"(graph JSON must be an object with "x", "y" and "edges")");
  }
  auto labels = [](const nlohmann::json& arr, const char* key) {
    if (!arr.is_array()) throw InputError(std::string("\"") + key + "\" must be an array");
    std::vector<std::string> out;
    for (const auto& v : arr) {
      if (!v.is_string()) throw InputError(std::string("\"") + key + "\" labels must be strings");
      out.push_back(v.get<std::string>());
    }
    return out;
  };
  auto xs = labels(j.at("x"), "x");
  auto ys = labels(j.at("y"), "y");
  const auto xi = detail::label_index(xs, "x");
  const auto yi = detail::label_index(ys, "y");
  BipartiteGraph g(xs.size(), ys.size());
  const auto& edges = j.at("edges");
  if (!edges.is_array()) throw InputError(R"("edges" must be an array)");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw InputError("each edge must be a [xLabel, yLabel] pair");
    }
    const auto x = xi.find(e[0].get<std::string>());
    const auto y = yi.find(e[1].get<std::string>());
    if (x == xi.end()) throw InputError("edge names unknown x label " + e[0].dump());
    if (y == yi.end()) throw InputError("edge names unknown y label " + e[1].dump());
    g.add_edge(x->second, y->second);
  }
  g.set_labels(std::move(xs), std::move(ys));
  return g;
}

inline BipartiteGraph read_graph_json(std::string_view text) {
  return graph_from_json(parse_json(text));
}

/// Canonical graph text: fixed key order, one edge per line, edges sorted by
/// (x index, y index), trailing newline.
inline std::string write_graph_json(const BipartiteGraph& g) {
  auto label_list = [](const std::vector<std::string>& ls) {
    std::string s = "[";
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (i) s += ", ";
      s += detail::quoted(ls[i]);
    }
    return s + "]";
  };
  std::string out = "{\n  \"x\": " + label_list(g.x_labels()) + ",\n  \"y\": " +
                    label_list(g.y_labels()) + ",\n  \"edges\": [";
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out += i ? ",\n    [" : "\n    [";
    out += detail::quoted(g.x_labels()[edges[i].first]) + ", " +
           detail::quoted(g.y_labels()[edges[i].second]) + "]";
  }
  out += edges.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

inline nlohmann::json graph_to_json(const BipartiteGraph& g) {
  return nlohmann::json::parse(write_graph_json(g));
}

}  // namespace bipower
