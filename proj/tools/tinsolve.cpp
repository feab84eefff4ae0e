// tinsolve: command-line front end for the tin library.
//
// Every command prints a JSON run report on standard output. Vertex ids in
// reports and files are 1-indexed. Exit codes: 0 ok, 1 usage or unreadable
// input, 2 invalid decomposition or broken residual bound, 3 size cap.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tin/tin.hpp"

namespace {

using json = nlohmann::json;
using namespace tin;

enum Exit { kOk = 0, kUsage = 1, kViolation = 2, kCap = 3 };

struct Input {
  std::string path;
  std::string text;
};

std::string digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream s;
  s << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

Input slurp(const std::string& path) {
  Input in{path, {}};
  if (path == "-") {
    in.text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return in;
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot open '" + path + "'");
  in.text.assign(std::istreambuf_iterator<char>(f), {});
  return in;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write '" + path + "'");
  f << text;
}

json one_indexed(const VertexSet& s) {
  json out = json::array();
  s.for_each([&](Vertex v) { out.push_back(v + 1); });
  return out;
}

class Run {
public:
  explicit Run(std::string command) : start_(std::chrono::steady_clock::now()) {
    report_["command"] = std::move(command);
    report_["inputs"] = json::object();
    report_["results"] = json::object();
    report_["artifacts"] = json::object();
  }

  template <typename Parse>
  auto load(const std::string& role, const std::string& path, Parse parse) {
    Input in = slurp(path);
    report_["inputs"][role] = {{"path", path == "-" ? "<stdin>" : path}, {"digest", digest(in.text)}};
    std::istringstream stream(in.text);
    return parse(stream);
  }

  Graph graph(const std::string& path) {
    return load("graph", path, [](std::istream& s) { return io::read_graph(s); });
  }

  RefinedTreeDecomposition td(const std::string& role, const std::string& path, const Graph& g) {
    if (path.empty()) {
      report_["inputs"][role] = {{"path", "<trivial>"}};
      return trivial_decomposition(g);
    }
    auto td = load(role, path, [](std::istream& s) { return io::read_td(s); });
    if (td.vertex_count != g.order())
      throw InvalidInput(role + " is over " + std::to_string(td.vertex_count) + " vertices, graph has " +
                         std::to_string(g.order()));
    return td;
  }

  json& results() { return report_["results"]; }

  /// Writes `text` to `path`, or inlines it in the report when path is empty.
  void artifact(const std::string& name, const std::string& path, const std::string& text) {
    if (path.empty()) {
      report_["artifacts"][name] = {{"inline", text}};
    } else {
      write_file(path, text);
      report_["artifacts"][name] = {{"path", path}, {"digest", digest(text)}};
    }
  }

  void emit(std::ostream& out) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    report_["wall_time_ms"] = std::round(ms * 1000.0) / 1000.0;
    out << report_.dump(2) << '\n';
  }

private:
  json report_;
  std::chrono::steady_clock::time_point start_;
};

json validation_json(const ValidationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"clause", clause_name(x.clause)}, {"witness", x.witness}});
  return v;
}

void require_valid_for_cli(Run& run, const Graph& g, const RefinedTreeDecomposition& td) {
  auto report = validate(g, td, 1);
  if (!report.ok()) {
    run.results()["valid"] = false;
    run.results()["violations"] = validation_json(report);
    throw InvalidDecomposition(report.summary());
  }
}

Graph pattern_from(const std::string& spec) {
  if (spec.size() > 3 && spec.substr(spec.size() - 3) == ".gr") {
    Input in = slurp(spec);
    std::istringstream s(in.text);
    return io::read_graph(s);
  }
  return named_pattern(spec);
}

long parse_param(const std::string& token) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty()) throw InvalidInput("expected an integer parameter, got '" + token + "'");
  return v;
}

Graph generated(const std::vector<std::string>& args) {
  if (args.empty()) throw InvalidInput("gen needs a kind");
  const std::string& kind = args[0];
  std::vector<std::string> rest(args.begin() + 1, args.end());
  if (kind == "double-join" || kind == "double_join") {
    if (rest.size() == 1 && rest[0].find(".gr") != std::string::npos) return gen::double_join(pattern_from(rest[0]));
    return gen::double_join(generated(rest));
  }
  if (kind == "random") {
    if (rest.size() != 3) throw InvalidInput("generator 'random' takes n p seed");
    double p = 0;
    try {
      p = std::stod(rest[1]);
    } catch (const std::exception&) {
      throw InvalidInput("bad edge probability '" + rest[1] + "'");
    }
    if (p < 0 || p > 1) throw InvalidInput("edge probability must lie in [0,1]");
    return gen::random_gnp(static_cast<int>(parse_param(rest[0])), p, static_cast<std::uint64_t>(parse_param(rest[2])));
  }
  std::vector<long> params;
  for (const auto& r : rest) params.push_back(parse_param(r));
  return gen::generate(kind, params);
}

struct Options {
  std::string graph = "-";
  std::string td;
  std::string out;
  std::string weights;
  std::string family;
  std::vector<std::string> patterns;
  std::string member_weight = "unit";
  std::string emit_derived, emit_derived_td;
  std::vector<std::string> cut;
  std::string td_a, td_b;
  std::vector<std::string> gen_args;
  int k = -1;
  int threads = 1;
  bool exact = false;
  bool force = false;
};

int cap_for(const Options& o) { return o.force ? kOracleHardCap : kOracleCap; }

int cmd_validate(Run& run, const Options& o) {
  Graph g = run.graph(o.graph);
  auto td = run.td("td", o.td, g);
  auto report = validate(g, td, 1);
  run.results()["valid"] = report.ok();
  run.results()["violations"] = validation_json(report);
  run.results()["nodes"] = td.node_count();
  return report.ok() ? kOk : kViolation;
}

int cmd_measure(Run& run, const Options& o) {
  Graph g = run.graph(o.graph);
  auto td = run.td("td", o.td, g);
  require_valid_for_cli(run, g, td);
  auto& r = run.results();
  r["nodes"] = td.node_count();
  r["width"] = width(td);
  r["independence_number"] = independence_number(g, td);
  r["residual_independence_number"] = residual_independence_number(g, td);
  r["refinement"] = td.refinement();
  return kOk;
}

int cmd_nice(Run& run, const Options& o) {
  Graph g = run.graph(o.graph);
  auto td = run.td("td", o.td, g);
  require_valid_for_cli(run, g, td);
  auto nice = make_nice(g, td);
  auto& r = run.results();
  r["nodes"] = nice.node_count();
  r["node_bound"] = kNiceNodeBoundFactor * (width(td) + 2) * td.node_count();
  r["counts"] = {{"leaf", nice.count(NodeType::Leaf)},
                 {"introduce", nice.count(NodeType::Introduce)},
                 {"forget", nice.count(NodeType::Forget)},
                 {"join", nice.count(NodeType::Join)}};
  r["width"] = width(nice.decomposition);
  r["residual_independence_number"] = residual_independence_number(g, nice.decomposition);
  run.artifact("nice_td", o.out, io::to_text(io::write_td, nice.decomposition));
  return kOk;
}

int cmd_mwis(Run& run, const Options& o) {
  Graph g = run.graph(o.graph);
  auto td = run.td("td", o.td, g);
  WeightMap w = o.weights.empty()
                    ? WeightMap::uniform(g.order())
                    : run.load("weights", o.weights, [&](std::istream& s) { return io::read_weights(s, g.order()); });
  require_valid_for_cli(run, g, td);
  const int measured = residual_independence_number(g, td);
  const int k = o.k >= 0 ? o.k : measured;
  if (measured > k)
    throw ResidualBoundViolated("residual independence number " + std::to_string(measured) + " exceeds k = " +
                                std::to_string(k));
  auto result = solve_mwis(g, w, td, k);
  auto& r = run.results();
  r["k"] = k;
  r["refinement"] = td.refinement();
  r["weight"] = format_rational(result.weight);
  r["set"] = one_indexed(result.set);
  return kOk;
}

int cmd_pack(Run& run, const Options& o) {
  Graph g = run.graph(o.graph);
  auto td = run.td("td", o.td, g);
  PackingInstance inst;
  if (!o.family.empty() == !o.patterns.empty()) throw InvalidInput("give exactly one of --family and --patterns");
  if (!o.family.empty()) {
    inst = run.load("family", o.family, [&](std::istream& s) { return io::read_family(s, g.order()); });
  } else {
    std::vector<Graph> patterns;
    for (const auto& p : o.patterns) patterns.push_back(pattern_from(p));
    inst.family = enumerate_pattern_subgraphs(g, patterns);
    WeightMap w = o.weights.empty()
                      ? WeightMap::uniform(g.order())
                      : run.load("weights", o.weights, [&](std::istream& s) { return io::read_weights(s, g.order()); });
    for (const auto& m : inst.family.members) {
      if (o.member_weight == "unit")
        inst.weights.emplace_back(1);
      else if (o.member_weight == "size")
        inst.weights.emplace_back(m.size());
      else
        inst.weights.push_back(w.total(m));
    }
  }
  require_valid_for_cli(run, g, td);
  const int measured = independence_number(g, td);
  const int k = o.k >= 0 ? o.k : measured;
  if (measured > k)
    throw ResidualBoundViolated("independence number " + std::to_string(measured) + " of the decomposition exceeds k = " +
                                std::to_string(k));
  auto result = solve_packing(g, inst, td, k);
  auto& r = run.results();
  r["k"] = k;
  r["members"] = inst.family.size();
  r["weight"] = format_rational(result.weight);
  json chosen = json::array();
  for (int j : result.selected) chosen.push_back({{"member", j + 1}, {"vertices", one_indexed(inst.family.members[j])}});
  r["selected"] = chosen;
  if (!o.emit_derived.empty())
    run.artifact("derived_graph", o.emit_derived, io::to_text(io::write_graph, derived_graph(g, inst.family)));
  if (!o.emit_derived_td.empty())
    run.artifact("derived_td", o.emit_derived_td,
                 io::to_text(io::write_td, derived_decomposition(g, inst.family, td)));
  if (o.patterns.empty() == false && !o.out.empty()) run.artifact("family", o.out, io::to_text(io::write_family, inst));
  return kOk;
}

int cmd_tin(Run& run, const Options& o) {
  Graph g = run.graph(o.graph);
  auto result = tin_exact(g, cap_for(o), o.threads);
  auto& r = run.results();
  r["tree_independence_number"] = result.value;
  json order = json::array();
  for (Vertex v : result.elimination_order) order.push_back(v + 1);
  r["elimination_order"] = order;
  r["witness_nodes"] = result.witness.node_count();
  run.artifact("witness_td", o.out, io::to_text(io::write_td, result.witness));
  return kOk;
}

int cmd_tw(Run& run, const Options& o) {
  Graph g = run.graph(o.graph);
  run.results()["treewidth"] = treewidth_exact(g, cap_for(o), o.threads);
  return kOk;
}

int cmd_compose(Run& run, const Options& o) {
  Graph g = run.graph(o.graph);
  if (o.cut.size() != 3) throw InvalidInput("--cut takes three set files A B C");
  auto set = [&](const char* role, const std::string& path) {
    return run.load(role, path, [&](std::istream& s) { return io::read_vertex_set(s, g.order()); });
  };
  VertexSet a = set("cut_a", o.cut[0]), b = set("cut_b", o.cut[1]), c = set("cut_c", o.cut[2]);
  auto read_part = [&](const char* role, const std::string& path) {
    if (path.empty()) throw InvalidInput(std::string("missing decomposition for ") + role);
    return run.load(role, path, [](std::istream& s) { return io::read_td(s); });
  };
  auto ta = read_part("td_a", o.td_a);
  auto tb = read_part("td_b", o.td_b);
  auto out = compose_clique_cutset(g, a, b, c, ta, tb);
  auto ga = induced_subgraph(g, a | c).graph;
  auto gb = induced_subgraph(g, b | c).graph;
  auto& r = run.results();
  r["independence_number"] = independence_number(g, out);
  r["independence_number_a"] = independence_number(ga, ta);
  r["independence_number_b"] = independence_number(gb, tb);
  r["residual_independence_number"] = residual_independence_number(g, out);
  r["nodes"] = out.node_count();
  run.artifact("composed_td", o.out, io::to_text(io::write_td, out));
  return kOk;
}

int cmd_gen(Run& run, const Options& o, bool& report_to_stderr) {
  Graph g = generated(o.gen_args);
  json params = json::array();
  for (const auto& a : o.gen_args) params.push_back(a);
  run.results()["spec"] = params;
  run.results()["vertices"] = g.order();
  run.results()["edges"] = g.edge_count();
  const auto text = io::to_text(io::write_graph, g);
  if (o.out.empty()) {
    std::cout << text;
    report_to_stderr = true;
  } else {
    run.artifact("graph", o.out, text);
  }
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree-independence number toolkit: decompositions, exact oracles, MWIS and packing solvers"};
  app.require_subcommand(1);
  Options o;

  auto graph_opt = [&](CLI::App* sub) { sub->add_option("--graph", o.graph, ".gr file, '-' for stdin")->capture_default_str(); };
  auto td_opt = [&](CLI::App* sub) { sub->add_option("--td", o.td, ".td file; the single-bag decomposition if omitted"); };
  auto threads_opt = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "worker threads")->capture_default_str()->check(CLI::Range(1, 256));
  };

  auto* validate = app.add_subcommand("validate", "Check the tree decomposition axioms and marked-set inclusion");
  graph_opt(validate);
  td_opt(validate);

  auto* measure = app.add_subcommand("measure", "Width, independence number and residual independence number of a decomposition");
  graph_opt(measure);
  td_opt(measure);

  auto* nice = app.add_subcommand(
      "nice", "Convert to a nice refined decomposition (leaf/introduce/forget/join, no growth of bags or marked sets)");
  graph_opt(nice);
  td_opt(nice);
  nice->add_option("-o,--out", o.out, "output .td; inlined in the report if omitted");

  auto* mwis = app.add_subcommand(
      "mwis", "Max weight independent set by dynamic programming over a refined decomposition with residual "
              "independence number at most k");
  graph_opt(mwis);
  td_opt(mwis);
  mwis->add_option("--weights", o.weights, "weight file; unit weights if omitted");
  mwis->add_option("-k", o.k, "residual bound; measured from the decomposition if omitted");

  auto* pack = app.add_subcommand(
      "pack", "Max weight independent packing of connected subgraphs via MWIS on the derived intersection-or-adjacency "
              "graph");
  graph_opt(pack);
  td_opt(pack);
  pack->add_option("--family", o.family, ".fam file listing members and weights");
  pack->add_option("--patterns", o.patterns, "pattern names (k1,k2,p3,...) or .gr files")->delimiter(',');
  pack->add_option("--member-weight", o.member_weight, "weight of pattern members: unit, size or sum")
      ->check(CLI::IsMember({"unit", "size", "sum"}))
      ->capture_default_str();
  pack->add_option("--weights", o.weights, "vertex weights for --member-weight sum");
  pack->add_option("-k", o.k, "independence bound; alpha of the decomposition if omitted");
  pack->add_option("--emit-derived", o.emit_derived, "write the derived graph (.gr)");
  pack->add_option("--emit-derived-td", o.emit_derived_td, "write the transferred decomposition (.td)");
  pack->add_option("-o,--out", o.out, "write the enumerated pattern family (.fam)");

  auto* tin = app.add_subcommand("tin", "Exact tree-independence number with a witness decomposition (subset DP over elimination sets)");
  graph_opt(tin);
  threads_opt(tin);
  tin->add_flag("--exact", o.exact, "exact computation (the only mode)");
  tin->add_flag("--force", o.force, "raise the vertex cap from 20 to 26");
  tin->add_option("-o,--out", o.out, "witness .td; inlined in the report if omitted");

  auto* tw = app.add_subcommand("tw", "Exact treewidth (subset DP over elimination sets)");
  graph_opt(tw);
  threads_opt(tw);
  tw->add_flag("--force", o.force, "raise the vertex cap from 20 to 26");

  auto* compose = app.add_subcommand(
      "compose", "Glue decompositions of G[A+C] and G[B+C] along a clique cutset C; alpha is the max of the parts");
  graph_opt(compose);
  compose->add_option("--cut", o.cut, "set files A B C (1-indexed ids)")->expected(3)->required();
  compose->add_option("--td-a", o.td_a, ".td of G[A+C], vertices numbered in increasing order of the original ids")->required();
  compose->add_option("--td-b", o.td_b, ".td of G[B+C], numbered likewise")->required();
  compose->add_option("-o,--out", o.out, "output .td; inlined in the report if omitted");

  auto* gen = app.add_subcommand(
      "gen", "Generate a graph: complete n, path n, cycle n, edgeless n, star leaves, knn n, complete-bipartite m n, "
             "sharpness k, random n p seed, double-join <kind ...|file.gr>");
  gen->add_option("spec", o.gen_args, "kind and parameters")->required();
  gen->add_option("-o,--out", o.out, "output .gr; standard output if omitted (report then goes to stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Run run(chosen->get_name());
  bool report_to_stderr = false;
  int code = kOk;
  try {
    if (chosen == validate) code = cmd_validate(run, o);
    else if (chosen == measure) code = cmd_measure(run, o);
    else if (chosen == nice) code = cmd_nice(run, o);
    else if (chosen == mwis) code = cmd_mwis(run, o);
    else if (chosen == pack) code = cmd_pack(run, o);
    else if (chosen == tin) code = cmd_tin(run, o);
    else if (chosen == tw) code = cmd_tw(run, o);
    else if (chosen == compose) code = cmd_compose(run, o);
    else if (chosen == gen) code = cmd_gen(run, o, report_to_stderr);
  } catch (const CapExceeded& e) {
    run.results()["error"] = e.what();
    code = kCap;
  } catch (const InvalidDecomposition& e) {
    run.results()["error"] = e.what();
    code = kViolation;
  } catch (const ResidualBoundViolated& e) {
    run.results()["error"] = e.what();
    code = kViolation;
  } catch (const Error& e) {
    run.results()["error"] = e.what();
    code = kUsage;
  }
  run.emit(report_to_stderr || code == kUsage ? std::cerr : std::cout);
  return code;
}
