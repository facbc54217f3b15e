#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bipower/cycles.hpp"
#include "bipower/distance.hpp"
#include "bipower/errors.hpp"
#include "bipower/graph.hpp"
#include "bipower/json_io.hpp"
#include "bipower/power.hpp"

namespace bipower {

struct ChordalVerdict {
  bool chordal = true;
  std::optional<CycleCertificate> witness;  // a chordless cycle of length >= 6 when !chordal
};

/// Chordal bipartite: every cycle longer than 4 has a chord.
inline ChordalVerdict is_chordal_bipartite(const BipartiteGraph& g, SearchLimits limits = {}) {
  auto c = find_chordless_cycle(g, 6, limits);
  return {!c.has_value(), std::move(c)};
}

inline long long normalized_chordality(long long k) {
  if (k < 4) throw ContractError("k-chordality needs k >= 4");
  return k % 2 == 0 ? k : k - 1;  // bipartite cycles are even
}

/// A chordless cycle with more than k vertices, if one exists.
inline std::optional<CycleCertificate> k_chordal_violation(const BipartiteGraph& g, long long k,
                                                           SearchLimits limits = {}) {
  return find_chordless_cycle(g, static_cast<std::size_t>(normalized_chordality(k) + 2), limits);
}

/// No chordless cycle with more than k vertices. k = 4 is chordal bipartite.
inline bool is_k_chordal(const BipartiteGraph& g, long long k, SearchLimits limits = {}) {
  return !k_chordal_violation(g, k, limits).has_value();
}

enum class PowerClass : std::uint8_t { Low, Mid, High };

inline const char* to_string(PowerClass c) {
  switch (c) {
    case PowerClass::Low: return "low";
    case PowerClass::Mid: return "mid";
    case PowerClass::High: return "high";
  }
  return "?";
}

/// Where a cycle edge of G^[k+2] first appears: High (d = k+2), Mid (d = k)
/// or Low (d <= k-2).
struct EdgePowerClass {
  std::uint32_t distance = 0;
  PowerClass cls = PowerClass::Low;
};

struct CycleClassification {
  std::vector<EdgePowerClass> edges;  // edge i joins vertices i and i+1 (cyclically)
  std::size_t k1 = 0;                 // High
  std::size_t k2 = 0;                 // Mid
  std::size_t k3 = 0;                 // Low
  std::vector<std::optional<std::vector<VertexId>>> witnesses;  // Mid/High edges only
};

inline CycleClassification classify_cycle_edges(const BipartiteGraph& g, long long k,
                                                const CycleCertificate& c) {
  require_odd_power(k);
  if (c.host_power != k + 2) {
    throw ContractError("cycle certificate is for power " + std::to_string(c.host_power) +
                        ", expected k+2 = " + std::to_string(k + 2));
  }
  if (!verify_chordless(bipartite_power(g, k + 2), c)) {
    throw ContractError("cycle is not chordless in G^[k+2]");
  }
  CycleClassification out;
  const std::size_t n = c.length();
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId u = c.vertices[i], v = c.vertices[(i + 1) % n];
    const auto d = bfs_distance(g, u).at(v);
    EdgePowerClass e{d, PowerClass::Low};
    if (d == static_cast<std::uint32_t>(k + 2)) {
      e.cls = PowerClass::High;
      ++out.k1;
    } else if (d == static_cast<std::uint32_t>(k)) {
      e.cls = PowerClass::Mid;
      ++out.k2;
    } else {
      ++out.k3;
    }
    out.edges.push_back(e);
    out.witnesses.push_back(e.cls == PowerClass::Low
                                ? std::nullopt
                                : std::optional<std::vector<VertexId>>(shortest_path(g, u, v)));
  }
  return out;
}

enum class LiftMethod : std::uint8_t { Case1Construction, Case2Construction, FallbackSearch };

inline const char* to_string(LiftMethod m) {
  switch (m) {
    case LiftMethod::Case1Construction: return "case1";
    case LiftMethod::Case2Construction: return "case2";
    case LiftMethod::FallbackSearch: return "fallback";
  }
  return "?";
}

struct LiftResult {
  CycleCertificate lifted;
  LiftMethod method = LiftMethod::FallbackSearch;
  std::size_t predicted_length = 0;
  bool anomaly = false;  // the splice was attempted and failed verification
};

inline nlohmann::json cycle_to_json(const BipartiteGraph& g, const CycleCertificate& c) {
  auto labels = nlohmann::json::array();
  for (auto v : c.vertices) labels.push_back(g.label(v));
  return {{"k", c.host_power}, {"cycle", labels}};
}

/// Turns a chordless cycle of G^[k+2] into one of G^[k]. With no Low edges,
/// each High edge u-v with witness path p_0 .. p_{k+2} is replaced by
/// u, p_k, p_{k+1} (an edge of G^[k] then two edges of G) and Mid edges are
/// kept, giving length 3*k1 + k2. The splice is verified; if it fails, or
/// Low edges are present, a direct search in G^[k] supplies the cycle.
inline LiftResult lift_chordless_cycle(const BipartiteGraph& g, long long k,
                                       const CycleCertificate& c, SearchLimits limits = {}) {
  if (c.length() < 6) throw ContractError("lift needs a cycle C_2n with n >= 3");
  const auto cls = classify_cycle_edges(g, k, c);
  const auto lower = bipartite_power(g, k);
  LiftResult result;
  if (cls.k3 == 0) {
    result.method = cls.k2 == 0 ? LiftMethod::Case1Construction : LiftMethod::Case2Construction;
    result.predicted_length = 3 * cls.k1 + cls.k2;
    CycleCertificate walk{{}, k};
    for (std::size_t i = 0; i < c.length(); ++i) {
      walk.vertices.push_back(c.vertices[i]);
      if (cls.edges[i].cls == PowerClass::High) {
        const auto& p = *cls.witnesses[i];
        walk.vertices.push_back(p[static_cast<std::size_t>(k)]);
        walk.vertices.push_back(p[static_cast<std::size_t>(k) + 1]);
      }
    }
    if (walk.length() == result.predicted_length && verify_chordless(lower, walk)) {
      result.lifted = std::move(walk);
      return result;
    }
    result.anomaly = true;
  }
  auto found = find_chordless_cycle(lower, 6, limits);
  if (!found) {
    nlohmann::json record = {{"k", k}, {"graph", graph_to_json(g)}, {"cycle", cycle_to_json(g, c)}};
    throw CounterexampleError("chordal bipartite strong closure", std::move(record));
  }
  found->host_power = k;
  result.method = LiftMethod::FallbackSearch;
  if (result.predicted_length == 0) result.predicted_length = found->length();
  result.lifted = std::move(*found);
  return result;
}

/// Outcome of evaluating "G^[k] in class => G^[k+2] in class" on one graph.
struct StrongClosureReport {
  long long k = 1;
  long long chordality = 4;  // 4 means chordal bipartite
  bool lower_in_class = true;
  bool upper_in_class = true;
  std::optional<CycleCertificate> lower_witness;
  std::optional<CycleCertificate> upper_witness;
  std::optional<LiftResult> lift;
  std::optional<nlohmann::json> counterexample;

  bool holds() const noexcept { return !counterexample.has_value(); }
};

/// Evaluates the strong-closure implication for chordal bipartite graphs.
/// When G^[k+2] is not chordal bipartite its witness cycle is lifted into
/// G^[k] as an independent cross-check of the contrapositive.
inline StrongClosureReport strongly_closed_check(const BipartiteGraph& g, long long k,
                                                 SearchLimits limits = {}) {
  require_odd_power(k);
  StrongClosureReport rep;
  rep.k = k;
  auto lower = is_chordal_bipartite(bipartite_power(g, k), limits);
  auto upper = is_chordal_bipartite(bipartite_power(g, k + 2), limits);
  rep.lower_in_class = lower.chordal;
  rep.upper_in_class = upper.chordal;
  if (lower.witness) lower.witness->host_power = k;
  if (upper.witness) upper.witness->host_power = k + 2;
  rep.lower_witness = std::move(lower.witness);
  rep.upper_witness = std::move(upper.witness);
  if (!rep.upper_in_class) {
    try {
      rep.lift = lift_chordless_cycle(g, k, *rep.upper_witness, limits);
    } catch (const CounterexampleError& e) {
      rep.counterexample = e.record();
    }
    if (rep.lift && rep.lower_in_class) {
      throw InternalDefect("lift found a chordless cycle in G^[k] that the recognizer missed");
    }
    if (rep.lower_in_class && !rep.counterexample) {
      rep.counterexample = nlohmann::json{{"k", k},
                                          {"graph", graph_to_json(g)},
                                          {"cycle", cycle_to_json(g, *rep.upper_witness)}};
    }
  }
  return rep;
}

/// The same implication for k-chordality: G^[m] k-chordal => G^[m+2] k-chordal.
inline StrongClosureReport k_chordal_closed_check(const BipartiteGraph& g, long long m,
                                                  long long chordality, SearchLimits limits = {}) {
  require_odd_power(m);
  StrongClosureReport rep;
  rep.k = m;
  rep.chordality = normalized_chordality(chordality);
  rep.lower_witness = k_chordal_violation(bipartite_power(g, m), chordality, limits);
  rep.upper_witness = k_chordal_violation(bipartite_power(g, m + 2), chordality, limits);
  rep.lower_in_class = !rep.lower_witness;
  rep.upper_in_class = !rep.upper_witness;
  if (rep.lower_witness) rep.lower_witness->host_power = m;
  if (rep.upper_witness) rep.upper_witness->host_power = m + 2;
  if (rep.lower_in_class && !rep.upper_in_class) {
    rep.counterexample = nlohmann::json{{"k", m},
                                        {"kchordal_k", rep.chordality},
                                        {"graph", graph_to_json(g)},
                                        {"cycle", cycle_to_json(g, *rep.upper_witness)}};
  }
  return rep;
}

}  // namespace bipower
