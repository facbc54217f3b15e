// bipower: command-line front end.
//
// Exit codes: 0 success / property holds, 1 property fails (certificate on
// stdout), 2 input or usage error, 3 closure counterexample, 4 internal defect.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bipower/bipower.hpp"

namespace {

using namespace bipower;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kCounterexample = 3;
constexpr int kDefect = 4;

struct Options {
  std::string format = "text";
  std::string output;
  std::vector<long long> k;
  std::size_t min_length = 6;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<std::size_t> max_x, max_y;
  std::optional<long long> span;
  std::optional<std::string> theorem;
  std::optional<long long> kchordal_k;
  std::vector<std::string> inputs;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw InputError("cannot write " + o.output);
  out << text;
}

void emit(const Options& o, const json& j) { emit(o, j.dump(2) + "\n"); }

bool as_json(const Options& o) { return o.format == "json"; }

long long single_k(const Options& o) {
  if (o.k.size() != 1) throw InputError("this command needs exactly one -k");
  require_odd_power(o.k.front());
  return o.k.front();
}

const std::string& input(const Options& o, std::size_t i, const char* what) {
  if (o.inputs.size() <= i) throw InputError(std::string("missing input file: ") + what);
  return o.inputs[i];
}

BipartiteGraph load_graph(const std::string& path) { return read_graph_json(read_file(path)); }

ArrangedMatrix load_matrix(const std::string& path) { return read_matrix_text(read_file(path)); }

json matrix_json(const ArrangedMatrix& m) {
  auto rows = json::array();
  for (const auto& r : m.entries()) {
    std::string s;
    for (auto v : r) s += v ? '1' : '0';
    rows.push_back(s);
  }
  return {{"rows", m.rows()},
          {"cols", m.cols()},
          {"entries", rows},
          {"row_order", m.arrangement().rows},
          {"col_order", m.arrangement().cols}};
}

// Interval document reordered into the graph's label order.
IntervalRepresentation align_intervals(const BipartiteGraph& g, const IntervalDocument& doc) {
  auto side = [](const std::vector<std::string>& want, const std::vector<std::string>& have,
                 const std::vector<Interval>& ivs, const char* name) {
    if (want.size() != have.size()) {
      throw InputError(std::string(name) + " side sizes differ between graph and intervals");
    }
    std::unordered_map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < have.size(); ++i) pos.emplace(have[i], i);
    std::vector<Interval> out;
    for (const auto& l : want) {
      const auto it = pos.find(l);
      if (it == pos.end()) throw InputError(std::string("no interval for ") + name + " label " + l);
      out.push_back(ivs[it->second]);
    }
    return out;
  };
  return {side(g.x_labels(), doc.x_labels, doc.rep.x_intervals, "X"),
          side(g.y_labels(), doc.y_labels, doc.rep.y_intervals, "Y")};
}

int cmd_power(const Options& o) {
  const auto k = single_k(o);
  emit(o, write_graph_json(bipartite_power(load_graph(input(o, 0, "graph.json")), k)));
  return kOk;
}

int cmd_check_chordal(const Options& o) {
  const auto g = load_graph(input(o, 0, "graph.json"));
  if (o.k.empty()) {
    const auto c = find_chordless_cycle(g, o.min_length);
    if (!c) {
      emit(o, json{{"chordal_bipartite", true}});
      return kOk;
    }
    emit(o, cycle_to_json(g, *c));
    return kNegative;
  }
  const auto rep = strongly_closed_check(g, single_k(o));
  emit(o, closure_report_to_json(g, rep));
  return rep.holds() ? kOk : kCounterexample;
}

int cmd_check_kchordal(const Options& o) {
  if (!o.kchordal_k) throw InputError("check-kchordal needs --kchordal-k");
  const auto g = load_graph(input(o, 0, "graph.json"));
  if (o.k.empty()) {
    const auto c = k_chordal_violation(g, *o.kchordal_k);
    if (!c) {
      emit(o, json{{"kchordal_k", normalized_chordality(*o.kchordal_k)}, {"k_chordal", true}});
      return kOk;
    }
    emit(o, cycle_to_json(g, *c));
    return kNegative;
  }
  const auto rep = k_chordal_closed_check(g, single_k(o), *o.kchordal_k);
  emit(o, closure_report_to_json(g, rep));
  return rep.holds() ? kOk : kCounterexample;
}

int cmd_verify_intervals(const Options& o) {
  const auto g = load_graph(input(o, 0, "graph.json"));
  const auto doc = read_interval_tsv(read_file(input(o, 1, "intervals.tsv")));
  const auto rep = align_intervals(g, doc);
  const auto bad = representation_mismatch(g, rep);
  if (!bad) {
    emit(o, json{{"valid", true}});
    return kOk;
  }
  const auto [x, y] = *bad;
  emit(o, json{{"valid", false},
               {"pair", {g.x_labels()[x], g.y_labels()[y]}},
               {"edge", g.adjacent(x, y)}});
  return kNegative;
}

int cmd_power_intervals(const Options& o) {
  const auto k = single_k(o);
  auto doc = read_interval_tsv(read_file(input(o, 0, "intervals.tsv")));
  const auto g = doc.graph();
  doc.rep = power_representation(g, doc.rep, k);
  if (as_json(o)) {
    emit(o, intervals_to_json(doc.x_labels, doc.y_labels, doc.rep));
  } else {
    emit(o, write_interval_tsv(doc));
  }
  return kOk;
}

int cmd_mca_verify(const Options& o) {
  const auto m = load_matrix(input(o, 0, "matrix.mat"));
  const auto cert = verify_mca(m);
  if (!cert) {
    emit(o, json{{"mca", false}});
    return kNegative;
  }
  emit(o, mca_certificate_to_json(*cert));
  return kOk;
}

int cmd_mca_find(const Options& o) {
  const auto m = load_matrix(input(o, 0, "matrix.mat"));
  const auto found = find_mca(m);
  if (!found) {
    emit(o, json{{"mca", false}});
    return kNegative;
  }
  if (as_json(o)) {
    emit(o, json{{"matrix", matrix_json(found->first)},
                 {"certificate", mca_certificate_to_json(found->second)}});
  } else {
    emit(o, write_matrix_text(found->first));
  }
  return kOk;
}

int cmd_mca_power(const Options& o) {
  const auto k = single_k(o);
  const auto m = load_matrix(input(o, 0, "matrix.mat"));
  const auto powered = matrix_power(matrix_to_graph(m), m.arrangement(), k);
  if (as_json(o)) {
    emit(o, json{{"matrix", matrix_json(powered)},
                 {"certificate", mca_certificate_to_json(*verify_mca(powered))}});
  } else {
    emit(o, write_matrix_text(powered));
  }
  return kOk;
}

int cmd_classify_cycle(const Options& o) {
  const auto k = single_k(o);
  const auto g = load_graph(input(o, 0, "graph.json"));
  const auto c = cycle_from_json(g, parse_json(read_file(input(o, 1, "cycle.json"))));
  emit(o, classification_to_json(g, c, classify_cycle_edges(g, k, c)));
  return kOk;
}

int cmd_lift_cycle(const Options& o) {
  const auto k = single_k(o);
  const auto g = load_graph(input(o, 0, "graph.json"));
  const auto c = cycle_from_json(g, parse_json(read_file(input(o, 1, "cycle.json"))));
  emit(o, lift_to_json(g, lift_chordless_cycle(g, k, c)));
  return kOk;
}

int cmd_fuzz(const Options& o) {
  Campaign c;
  if (!o.inputs.empty()) {
    c = campaign_from_json(parse_json(read_file(o.inputs.front())));
  } else {
    if (!o.theorem) throw InputError("fuzz needs --theorem or a campaign file");
    c.theorem = theorem_from_string(*o.theorem);
    c.bounds.k_set = default_k_set(c.theorem);
  }
  if (o.theorem) c.theorem = theorem_from_string(*o.theorem);
  if (o.trials) c.trials = *o.trials;
  if (o.seed) c.seed = *o.seed;
  if (o.max_x) c.bounds.max_x = *o.max_x;
  if (o.max_y) c.bounds.max_y = *o.max_y;
  if (o.span) c.bounds.span = *o.span;
  if (!o.k.empty()) c.bounds.k_set = o.k;
  if (o.kchordal_k) c.bounds.k_chordal_k = *o.kchordal_k;
  const auto report = run_campaign(c);
  emit(o, report_to_json(report));
  return report.counterexamples.empty() ? kOk : kCounterexample;
}

int cmd_gen(const Options& o) {
  if (!o.theorem) throw InputError("gen needs --theorem");
  const auto t = theorem_from_string(*o.theorem);
  const std::uint64_t seed = o.seed.value_or(1);
  const std::size_t nx = o.max_x.value_or(6), ny = o.max_y.value_or(6);
  switch (t) {
    case Theorem::T3: {
      const auto rep = random_interval_representation(seed, nx, ny, o.span.value_or(12));
      const auto g = intervals_to_graph(rep);
      if (as_json(o)) {
        emit(o, intervals_to_json(g.x_labels(), g.y_labels(), rep));
      } else {
        emit(o, write_interval_tsv(make_interval_document(g, rep)));
      }
      break;
    }
    case Theorem::T4: {
      const auto m = gen_staircase_matrix(seed, nx, ny);
      if (as_json(o)) {
        emit(o, matrix_json(m));
      } else {
        emit(o, write_matrix_text(m));
      }
      break;
    }
    case Theorem::T5:
    case Theorem::KChordal:
      emit(o, write_graph_json(gen_random_bipartite(seed, nx, ny, 0.5)));
      break;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite graph powers: construction, class recognition and closure checks"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", o.output, "Write the payload to this path instead of stdout");
  };
  auto add_k = [&](CLI::App* sub) {
    sub->add_option("-k", o.k, "Odd power (repeatable)")->allow_extra_args(false);
  };
  auto add_inputs = [&](CLI::App* sub, const char* desc) {
    sub->add_option("inputs", o.inputs, desc);
  };

  struct Verb {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const std::vector<Verb> verbs = {
      {"power", "Bipartite power of a graph JSON", cmd_power},
      {"check-chordal", "Chordal bipartite test, or the closure check with -k", cmd_check_chordal},
      {"check-kchordal", "k-chordal test, or the closure check with -k", cmd_check_kchordal},
      {"verify-intervals", "Check an interval TSV against a graph JSON", cmd_verify_intervals},
      {"power-intervals", "Interval representation of the k-th power", cmd_power_intervals},
      {"mca-verify", "Check the displayed arrangement of a matrix", cmd_mca_verify},
      {"mca-find", "Search for a monotone consecutive arrangement", cmd_mca_find},
      {"mca-power", "Power of a matrix under its arrangement", cmd_mca_power},
      {"classify-cycle", "Classify the edges of a chordless cycle of G^[k+2]", cmd_classify_cycle},
      {"lift-cycle", "Lift a chordless cycle of G^[k+2] into G^[k]", cmd_lift_cycle},
      {"fuzz", "Run a seeded counterexample campaign", cmd_fuzz},
      {"gen", "Generate a random instance", cmd_gen},
  };
  std::unordered_map<const CLI::App*, int (*)(const Options&)> dispatch;
  for (const auto& v : verbs) {
    auto* sub = app.add_subcommand(v.name, v.help);
    add_common(sub);
    add_inputs(sub, "Input files");
    dispatch.emplace(sub, v.run);
    const std::string name = v.name;
    if (name != "mca-verify" && name != "mca-find" && name != "gen" && name != "verify-intervals") {
      add_k(sub);
    }
    if (name == "check-chordal") sub->add_option("--min-length", o.min_length, "Even, >= 6");
    if (name == "check-kchordal" || name == "fuzz") {
      sub->add_option("--kchordal-k", o.kchordal_k, "Chordality bound (>= 4)");
    }
    if (name == "fuzz" || name == "gen") {
      sub->add_option("--seed", o.seed, "Seed");
      sub->add_option("--max-x", o.max_x, "X side size bound");
      sub->add_option("--max-y", o.max_y, "Y side size bound");
      sub->add_option("--span", o.span, "Interval endpoint range");
      sub->add_option("--theorem", o.theorem, "t3, t4, t5 or kchordal");
    }
    if (name == "fuzz") sub->add_option("--trials", o.trials, "Number of trials");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    for (const auto& [sub, run] : dispatch)
      if (sub->parsed()) return run(o);
    return kUsage;
  } catch (const CounterexampleError& e) {
    std::cerr << "bipower: " << e.what() << "\n";
    try {
      emit(o, e.record());
    } catch (const std::exception&) {
      std::cout << e.record().dump(2) << "\n";
    }
    return kCounterexample;
  } catch (const InternalDefect& e) {
    std::cerr << "bipower: internal defect: " << e.what() << "\n";
    return kDefect;
  } catch (const InputError& e) {
    std::cerr << "bipower: " << e.what() << "\n";
    return kUsage;
  } catch (const ContractError& e) {
    std::cerr << "bipower: " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityError& e) {
    std::cerr << "bipower: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "bipower: " << e.what() << "\n";
    return kUsage;
  }
}
