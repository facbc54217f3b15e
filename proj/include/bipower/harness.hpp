#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <iterator>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "bipower/certificate_json.hpp"
#include "bipower/chordal.hpp"
#include "bipower/distance.hpp"
#include "bipower/errors.hpp"
#include "bipower/graph.hpp"
#include "bipower/intervals.hpp"
#include "bipower/json_io.hpp"
#include "bipower/mca.hpp"
#include "bipower/random.hpp"
#include "bipower/text_formats.hpp"

namespace bipower {

// ---------------------------------------------------------------------------
// Generators

/// Independent coin flip per cross pair; deterministic per seed.
inline BipartiteGraph gen_random_bipartite(std::uint64_t seed, std::size_t nx, std::size_t ny,
                                           double edge_probability) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw InputError("edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  BipartiteGraph g(nx, ny);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y)
      if (uniform_unit(rng) < edge_probability) g.add_edge(x, y);
  return g;
}

inline Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  auto p = identity_permutation(n);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[uniform_below(rng, i)]);
  return p;
}

/// Random staircase: rows with consecutive ones and non-decreasing bounds,
/// every column covered. Entries are stored under a random relabelling and the
/// returned arrangement displays the staircase, so verify_mca always passes.
inline ArrangedMatrix gen_staircase_matrix(std::uint64_t seed, std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw InputError("staircase matrix needs n, m >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> a(n), b(n);  // 0-based display bounds
  a[0] = 0;
  b[0] = n == 1 ? m - 1 : uniform_between(rng, 0, m - 1);
  for (std::size_t i = 1; i < n; ++i) {
    a[i] = uniform_between(rng, a[i - 1], std::min(b[i - 1] + 1, m - 1));
    const std::size_t lo = std::max(b[i - 1], a[i]);
    b[i] = i + 1 == n ? m - 1 : uniform_between(rng, lo, m - 1);
  }
  Arrangement arr{random_permutation(rng, n), random_permutation(rng, m)};
  Grid grid(n, std::vector<std::uint8_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = a[i]; j <= b[i]; ++j) grid[arr.rows[i]][arr.cols[j]] = 1;
  return ArrangedMatrix(std::move(grid), std::move(arr));
}

/// Cycle of total length sum(segment_lengths) with the segment endpoints
/// ("corners") returned as a cycle certificate for power max(lengths).
inline std::pair<BipartiteGraph, CycleCertificate> gen_subdivided_cycle(
    const std::vector<long long>& segment_lengths) {
  if (segment_lengths.size() < 4 || segment_lengths.size() % 2 != 0) {
    throw InputError("need an even number (>= 4) of segments");
  }
  std::size_t total = 0;
  long long longest = 0;
  for (auto len : segment_lengths) {
    if (len < 1 || len % 2 == 0) throw InputError("segment lengths must be odd and positive");
    total += static_cast<std::size_t>(len);
    longest = std::max(longest, len);
  }
  auto g = cycle_graph(total);
  CycleCertificate corners{{}, longest};
  std::size_t pos = 0;
  for (auto len : segment_lengths) {
    corners.vertices.push_back(cycle_vertex(pos));
    pos += static_cast<std::size_t>(len);
  }
  return {std::move(g), std::move(corners)};
}

/// Every edge subset of the complete nx+ny bigraph, in binary-counter order:
/// bit (x * ny + y) of the counter is edge (x, y).
class BipartiteEnumeration {
public:
  static constexpr std::size_t kMaxCells = 16;

  BipartiteEnumeration(std::size_t nx, std::size_t ny) : nx_(nx), ny_(ny) {
    if (nx * ny > kMaxCells) {
      throw CapacityError("exhaustive enumeration is capped at nx*ny <= 16");
    }
  }

  std::uint64_t size() const noexcept { return std::uint64_t{1} << (nx_ * ny_); }

  BipartiteGraph at(std::uint64_t code) const {
    BipartiteGraph g(nx_, ny_);
    for (std::size_t x = 0; x < nx_; ++x)
      for (std::size_t y = 0; y < ny_; ++y)
        if ((code >> (x * ny_ + y)) & 1U) g.add_edge(x, y);
    return g;
  }

  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = BipartiteGraph;
    using difference_type = std::ptrdiff_t;

    iterator(const BipartiteEnumeration* e, std::uint64_t code) : e_(e), code_(code) {}
    BipartiteGraph operator*() const { return e_->at(code_); }
    iterator& operator++() {
      ++code_;
      return *this;
    }
    bool operator==(const iterator& o) const { return code_ == o.code_; }

  private:
    const BipartiteEnumeration* e_;
    std::uint64_t code_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

private:
  std::size_t nx_, ny_;
};

inline BipartiteEnumeration enumerate_bipartite(std::size_t nx, std::size_t ny) {
  return {nx, ny};
}

// ---------------------------------------------------------------------------
// Campaigns

enum class Theorem : std::uint8_t { T3, T4, T5, KChordal };

inline const char* to_string(Theorem t) {
  switch (t) {
    case Theorem::T3: return "t3";
    case Theorem::T4: return "t4";
    case Theorem::T5: return "t5";
    case Theorem::KChordal: return "kchordal";
  }
  return "?";
}

inline Theorem theorem_from_string(const std::string& s) {
  if (s == "t3") return Theorem::T3;
  if (s == "t4") return Theorem::T4;
  if (s == "t5") return Theorem::T5;
  if (s == "kchordal") return Theorem::KChordal;
  throw InputError("unknown theorem \"" + s + "\" (expected t3, t4, t5 or kchordal)");
}

inline std::vector<long long> default_k_set(Theorem t) {
  switch (t) {
    case Theorem::T4: return {3, 5, 7};
    case Theorem::T5: return {1, 3, 5};
    default: return {1, 3};
  }
}

struct CampaignBounds {
  std::size_t max_x = 6;
  std::size_t max_y = 6;
  long long span = 12;
  std::vector<long long> k_set;  // unused by T3, which sweeps every odd k <= diameter + 2
  long long k_chordal_k = 6;
};

struct Campaign {
  Theorem theorem = Theorem::T5;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  CampaignBounds bounds;
  unsigned parallelism = 1;
};

inline void validate(const Campaign& c) {
  if (c.trials < 1) throw InputError("a campaign needs at least one trial");
  if (c.bounds.max_x < 1 || c.bounds.max_y < 1) throw InputError("max-x and max-y must be >= 1");
  if (c.bounds.span < 1) throw InputError("span must be >= 1");
  if (c.parallelism < 1) throw InputError("parallelism must be >= 1");
  if (c.theorem != Theorem::T3 && c.bounds.k_set.empty()) throw InputError("k set is empty");
  for (auto k : c.bounds.k_set)
    if (k < 1 || k % 2 == 0) throw InputError("k set may contain only odd naturals");
  if (c.theorem == Theorem::KChordal && c.bounds.k_chordal_k < 4) {
    throw InputError("kchordal-k must be >= 4");
  }
}

struct FuzzReport {
  Campaign campaign;
  std::uint64_t executed = 0;
  std::uint64_t skipped = 0;
  std::vector<nlohmann::json> counterexamples;
  double wall_time_ms = 0;
};

/// Counterexample record: the failing instance plus the single CLI command
/// (and the files it reads) that reproduces the verdict.
inline nlohmann::json counterexample_record(Theorem t, std::uint64_t trial, long long k,
                                            nlohmann::json detail, std::string command,
                                            nlohmann::json files) {
  return {{"theorem", to_string(t)},
          {"trial", trial},
          {"k", k},
          {"detail", std::move(detail)},
          {"replay", {{"command", std::move(command)}, {"files", std::move(files)}}}};
}

namespace detail {

struct TrialOutcome {
  bool executed = false;
  std::vector<nlohmann::json> counterexamples;
};

inline TrialOutcome run_trial(const Campaign& c, std::uint64_t index) {
  std::mt19937_64 rng(trial_seed(c.seed, index));
  const auto& b = c.bounds;
  TrialOutcome out;
  const std::size_t nx = uniform_between(rng, 1, b.max_x);
  const std::size_t ny = uniform_between(rng, 1, b.max_y);
  switch (c.theorem) {
    case Theorem::T3: {
      const auto span = static_cast<long long>(uniform_between(rng, 1, static_cast<std::uint64_t>(b.span)));
      const auto rep = random_interval_representation(rng(), nx, ny, span);
      const auto g = intervals_to_graph(rep);
      if (!is_connected(g)) return out;
      out.executed = true;
      const long long top = static_cast<long long>(diameter(g)) + 2;
      for (long long k = 1; k <= top; k += 2) {
        try {
          power_representation(g, rep, k);
        } catch (const CounterexampleError& e) {
          out.counterexamples.push_back(counterexample_record(
              c.theorem, index, k, e.record(), "power-intervals -k " + std::to_string(k) + " rep.tsv",
              {{"rep.tsv", write_interval_tsv(make_interval_document(g, rep))}}));
        }
      }
      return out;
    }
    case Theorem::T4: {
      const auto mat = gen_staircase_matrix(rng(), nx, ny);
      const auto g = matrix_to_graph(mat);
      out.executed = true;
      for (auto k : b.k_set) {
        try {
          matrix_power(g, mat.arrangement(), k);
        } catch (const CounterexampleError& e) {
          out.counterexamples.push_back(counterexample_record(
              c.theorem, index, k, e.record(), "mca-power -k " + std::to_string(k) + " matrix.mat",
              {{"matrix.mat", write_matrix_text(mat)}}));
        }
      }
      return out;
    }
    case Theorem::T5:
    case Theorem::KChordal: {
      const double p = uniform_unit(rng);
      const auto g = gen_random_bipartite(rng(), nx, ny, p);
      out.executed = true;
      for (auto k : b.k_set) {
        const auto rep = c.theorem == Theorem::T5 ? strongly_closed_check(g, k)
                                                  : k_chordal_closed_check(g, k, b.k_chordal_k);
        if (!rep.counterexample) continue;
        const std::string cmd =
            c.theorem == Theorem::T5
                ? "check-chordal -k " + std::to_string(k) + " graph.json"
                : "check-kchordal --kchordal-k " + std::to_string(b.k_chordal_k) + " -k " +
                      std::to_string(k) + " graph.json";
        out.counterexamples.push_back(counterexample_record(
            c.theorem, index, k, *rep.counterexample, cmd, {{"graph.json", write_graph_json(g)}}));
      }
      return out;
    }
  }
  return out;
}

}  // namespace detail

/// Runs every trial (possibly on several threads) and merges outcomes by
/// trial index, so the report does not depend on scheduling.
inline FuzzReport run_campaign(const Campaign& c) {
  validate(c);
  const auto started = std::chrono::steady_clock::now();
  std::vector<detail::TrialOutcome> outcomes(c.trials);
  const auto workers = static_cast<std::uint64_t>(std::min<std::uint64_t>(c.parallelism, c.trials));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](std::uint64_t w) {
    try {
      for (std::uint64_t i = w; i < c.trials; i += workers) outcomes[i] = detail::run_trial(c, i);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::uint64_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  FuzzReport report{c, 0, 0, {}, 0};
  for (auto& o : outcomes) {
    (o.executed ? report.executed : report.skipped) += 1;
    for (auto& ce : o.counterexamples) report.counterexamples.push_back(std::move(ce));
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

inline nlohmann::json campaign_to_json(const Campaign& c) {
  return {{"theorem", to_string(c.theorem)},
          {"trials", c.trials},
          {"seed", c.seed},
          {"bounds",
           {{"max_x", c.bounds.max_x},
            {"max_y", c.bounds.max_y},
            {"span", c.bounds.span},
            {"k_set", c.bounds.k_set},
            {"kchordal_k", c.bounds.k_chordal_k}}}};
}

/// Reads the echo format above; `parallelism` may appear at top level.
inline Campaign campaign_from_json(const nlohmann::json& j) {
  try {
    Campaign c;
    c.theorem = theorem_from_string(j.at("theorem").get<std::string>());
    c.trials = j.value("trials", c.trials);
    c.seed = j.value("seed", c.seed);
    c.parallelism = j.value("parallelism", c.parallelism);
    const auto bounds = j.value("bounds", nlohmann::json::object());
    c.bounds.max_x = bounds.value("max_x", c.bounds.max_x);
    c.bounds.max_y = bounds.value("max_y", c.bounds.max_y);
    c.bounds.span = bounds.value("span", c.bounds.span);
    c.bounds.k_set = bounds.value("k_set", default_k_set(c.theorem));
    c.bounds.k_chordal_k = bounds.value("kchordal_k", c.bounds.k_chordal_k);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid campaign JSON: ") + e.what());
  }
}

/// Parallelism is an execution detail and is not echoed, so reports are
/// byte-identical for any worker count once wall time is left out.
inline nlohmann::json report_to_json(const FuzzReport& r, bool include_wall_time = true) {
  nlohmann::json j = {{"campaign", campaign_to_json(r.campaign)},
                      {"executed", r.executed},
                      {"skipped", r.skipped},
                      {"counterexamples", r.counterexamples}};
  if (include_wall_time) j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

}  // namespace bipower
