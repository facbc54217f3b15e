#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "bipower/chordal.hpp"
#include "bipower/cycles.hpp"
#include "bipower/errors.hpp"
#include "bipower/graph.hpp"
#include "bipower/intervals.hpp"
#include "bipower/mca.hpp"

namespace bipower {

inline nlohmann::json mca_certificate_to_json(const McaCertificate& cert) {
  auto labels = nlohmann::json::array();
  for (std::size_t i = 0; i < cert.labels.size(); ++i) {
    for (std::size_t j = 0; j < cert.labels[i].size(); ++j) {
      if (cert.labels[i][j] == CellLabel::R) labels.push_back({i + 1, j + 1, "R"});
      if (cert.labels[i][j] == CellLabel::C) labels.push_back({i + 1, j + 1, "C"});
    }
  }
  return {{"a", cert.a}, {"b", cert.b}, {"c", cert.c}, {"d", cert.d}, {"labels", labels}};
}

/// Resolves cycle labels against g. Sides alternate along the cycle; the
/// first vertex is taken from X when that resolves every label, else from Y.
inline CycleCertificate cycle_from_json(const BipartiteGraph& g, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("cycle") || !j.at("k").is_number_integer() ||
      !j.at("cycle").is_array()) {
    throw InputError(R"(cycle JSON must be {"k": odd int, "cycle": [label, ...]})");
  }
  std::unordered_map<std::string, std::size_t> xi, yi;
  for (std::size_t i = 0; i < g.x_count(); ++i) xi.emplace(g.x_labels()[i], i);
  for (std::size_t i = 0; i < g.y_count(); ++i) yi.emplace(g.y_labels()[i], i);
  std::vector<std::string> labels;
  for (const auto& l : j.at("cycle")) {
    if (!l.is_string()) throw InputError("cycle entries must be vertex labels");
    labels.push_back(l.get<std::string>());
  }
  for (int first = 0; first < 2; ++first) {
    CycleCertificate c{{}, j.at("k").get<long long>()};
    bool ok = true;
    for (std::size_t p = 0; p < labels.size() && ok; ++p) {
      const bool on_x = (p + static_cast<std::size_t>(first)) % 2 == 0;
      const auto& idx = on_x ? xi : yi;
      const auto it = idx.find(labels[p]);
      if (it == idx.end()) {
        ok = false;
      } else {
        c.vertices.push_back({on_x ? Side::X : Side::Y, it->second});
      }
    }
    if (ok) return c;
  }
  throw InputError("cycle labels do not name an alternating X/Y vertex sequence of the graph");
}

inline nlohmann::json path_to_json(const BipartiteGraph& g, const std::vector<VertexId>& path) {
  auto arr = nlohmann::json::array();
  for (auto v : path) arr.push_back(g.label(v));
  return arr;
}

inline nlohmann::json classification_to_json(const BipartiteGraph& g, const CycleCertificate& c,
                                             const CycleClassification& cls) {
  auto edges = nlohmann::json::array();
  for (std::size_t i = 0; i < cls.edges.size(); ++i) {
    nlohmann::json e = {
        {"from", g.label(c.vertices[i])},
        {"to", g.label(c.vertices[(i + 1) % c.length()])},
        {"distance", cls.edges[i].distance},
        {"class", to_string(cls.edges[i].cls)},
    };
    if (cls.witnesses[i]) e["witness"] = path_to_json(g, *cls.witnesses[i]);
    edges.push_back(std::move(e));
  }
  return {{"k1", cls.k1}, {"k2", cls.k2}, {"k3", cls.k3}, {"edges", edges}};
}

inline nlohmann::json lift_to_json(const BipartiteGraph& g, const LiftResult& r) {
  auto j = cycle_to_json(g, r.lifted);
  j["method"] = to_string(r.method);
  j["predicted_length"] = r.predicted_length;
  j["anomaly"] = r.anomaly;
  return j;
}

inline nlohmann::json closure_report_to_json(const BipartiteGraph& g,
                                             const StrongClosureReport& r) {
  nlohmann::json j = {
      {"k", r.k},
      {"kchordal_k", r.chordality},
      {"lower_in_class", r.lower_in_class},
      {"upper_in_class", r.upper_in_class},
      {"holds", r.holds()},
  };
  if (r.lower_witness) j["lower_witness"] = cycle_to_json(g, *r.lower_witness);
  if (r.upper_witness) j["upper_witness"] = cycle_to_json(g, *r.upper_witness);
  if (r.lift) j["lift"] = lift_to_json(g, *r.lift);
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

inline nlohmann::json intervals_to_json(const std::vector<std::string>& x_labels,
                                        const std::vector<std::string>& y_labels,
                                        const IntervalRepresentation& rep) {
  auto side = [](const std::vector<std::string>& labels, const std::vector<Interval>& ivs) {
    auto arr = nlohmann::json::array();
    for (std::size_t i = 0; i < ivs.size(); ++i)
      arr.push_back({{"label", labels.at(i)}, {"left", ivs[i].left}, {"right", ivs[i].right}});
    return arr;
  };
  return {{"x", side(x_labels, rep.x_intervals)}, {"y", side(y_labels, rep.y_intervals)}};
}

}  // namespace bipower
