#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kladder/decomp.hpp"
#include "kladder/errors.hpp"
#include "kladder/graph.hpp"
#include "kladder/io.hpp"
#include "kladder/minors.hpp"
#include "kladder/nicepair.hpp"
#include "kladder/params.hpp"
#include "kladder/refine.hpp"
#include "kladder/sigma.hpp"
#include "kladder/slide.hpp"

using nlohmann::json;
using namespace kladder;

namespace {

json load_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("JSON parse error in ") + path + ": " + e.what());
  }
}

void emit(const json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw ValidationError("cannot open output file: " + out_path);
    out << text;
  }
}

json param_value_json(const ParamValue& v) {
  if (v.is_infinite()) return json("infinity");
  return json(v.finite());
}

json trace_json(const std::vector<RefineTrace>& trace) {
  json arr = json::array();
  for (const auto& t : trace) {
    json line;
    line["violation"] = t.violation;
    line["potential_before"] = t.potential_before;
    line["potential_after"] = t.potential_after;
    arr.push_back(line);
  }
  return arr;
}

void write_trace_lines(const std::vector<RefineTrace>& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open trace file: " + path);
  for (const auto& t : trace) {
    json line;
    line["violation"] = t.violation;
    line["potential_before"] = t.potential_before;
    line["potential_after"] = t.potential_after;
    out << line.dump() << "\n";
  }
}

struct Opts {
  std::string graph, pattern, decomp, slide, family, out, trace, regex, s_list;
  int k = -1, l = -1, a = -1, t = -1, d = -1;
  long long seed = 0;
  bool dot = false;
};

void add_dot(json& j, const Graph& g, bool want) {
  if (want) j["dot"] = graph_to_dot(g);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> xs;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) xs.push_back(std::stoi(tok));
  std::sort(xs.begin(), xs.end());
  return xs;
}

int run(int argc, char** argv) {
  CLI::App app{"Laboratory for k-treedepth, ladders, and decomposition refinement"};
  app.require_subcommand(1);
  Opts o;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--graph", o.graph, "graph file (JSON or edge list), '-' for stdin");
    c->add_option("--out", o.out, "output file (default stdout)");
    c->add_flag("--dot", o.dot, "include DOT renderings of output graphs");
    c->add_option("--seed", o.seed, "random seed (randomized helpers only)");
  };

  auto* param = app.add_subcommand("param", "compute a parameter");
  auto* p_tdk = param->add_subcommand("td_k", "k-treedepth with a dismantlable witness");
  auto* p_pdk = param->add_subcommand("pd_k", "k-pathdepth with a dismantlable witness");
  auto* p_td = param->add_subcommand("td", "treedepth (deletion recursion)");
  auto* p_tw = param->add_subcommand("tw", "treewidth (subset dynamic program)");
  auto* p_pl = param->add_subcommand("pL", "p_L for a regular language over the alphabet");
  for (auto* c : {p_tdk, p_pdk, p_td, p_tw, p_pl}) add_common(c);
  p_tdk->add_option("--k", o.k, "clique-sum order bound")->required();
  p_pdk->add_option("--k", o.k, "clique-sum order bound")->required();
  p_pl->add_option("--regex", o.regex, "regex over a, s1, s2, ..., sinf")->required();
  param->require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "generate standard graphs");
  auto* g_grid = gen->add_subcommand("grid", "the k x l grid");
  auto* g_ladder = gen->add_subcommand("ladder", "k-ladder with path columns");
  auto* g_ttp = gen->add_subcommand("tree-times-path", "tree (from --graph) times P_l");
  auto* g_trees = gen->add_subcommand("trees", "all trees on k vertices up to isomorphism");
  for (auto* c : {g_grid, g_ladder, g_ttp, g_trees}) add_common(c);
  g_grid->add_option("--k", o.k, "rows")->required();
  g_grid->add_option("--l", o.l, "columns")->required();
  g_ladder->add_option("--k", o.k, "rows")->required();
  g_ladder->add_option("--l", o.l, "columns")->required();
  g_ttp->add_option("--l", o.l, "path length")->required();
  g_trees->add_option("--k", o.k, "number of vertices")->required();
  gen->require_subcommand(1);

  auto* minor = app.add_subcommand("minor", "minor containment and extraction");
  auto* m_test = minor->add_subcommand("test", "is --pattern a minor of --graph");
  auto* m_extract = minor->add_subcommand(
      "extract-ladder", "ladder model from rows/connectors (JSON instance via --graph)");
  auto* m_gil = minor->add_subcommand("grid-in-ladder",
                                      "k x l grid model inside tree-times-path");
  for (auto* c : {m_test, m_extract, m_gil}) add_common(c);
  m_test->add_option("--pattern", o.pattern, "pattern graph file")->required();
  m_gil->add_option("--k", o.k, "grid rows; --graph names a tree on 2k-1 vertices")
      ->required();
  m_gil->add_option("--l", o.l, "grid columns")->required();
  minor->require_subcommand(1);

  auto* decomp = app.add_subcommand("decomp", "tree decompositions");
  auto* d_val = decomp->add_subcommand("validate", "validate a decomposition against a graph");
  auto* d_dis = decomp->add_subcommand("dismantle", "k-dismantling certificate");
  auto* d_helly = decomp->add_subcommand("helly", "disjoint-projections / cover dichotomy");
  for (auto* c : {d_val, d_dis, d_helly}) add_common(c);
  d_val->add_option("--decomp", o.decomp, "decomposition JSON file")->required();
  d_dis->add_option("--decomp", o.decomp, "decomposition JSON file")->required();
  d_dis->add_option("--k", o.k, "adhesion bound for splits")->required();
  d_helly->add_option("--decomp", o.decomp, "decomposition JSON file")->required();
  d_helly->add_option("--family", o.family, "JSON array of connected vertex sets")->required();
  d_helly->add_option("--d", o.d, "target number of disjoint projections")->required();
  decomp->require_subcommand(1);

  auto* refine = app.add_subcommand("refine", "decomposition refinement drivers");
  auto* r_unb = refine->add_subcommand("unbreakable", "unbreakable decomposition");
  auto* r_good = refine->add_subcommand("good", "good (G,S)-decomposition");
  for (auto* c : {r_unb, r_good}) add_common(c);
  r_unb->add_option("--k", o.k, "unbreakability order")->required();
  r_unb->add_option("--trace", o.trace, "write refinement trace as JSON lines");
  r_good->add_option("--k", o.k, "connectivity order")->required();
  r_good->add_option("--a", o.a, "adhesion bound (>= k)")->required();
  r_good->add_option("--t", o.t, "width target")->required();
  r_good->add_option("--s", o.s_list, "comma-separated S (default: all vertices)");
  r_good->add_option("--trace", o.trace, "write refinement trace as JSON lines");
  refine->require_subcommand(1);

  auto* slide = app.add_subcommand("slide", "token sliding");
  auto* s_build = slide->add_subcommand("build", "slide P_k in the tree from --graph");
  auto* s_compile = slide->add_subcommand("compile", "sliding sequence to a product minor model");
  for (auto* c : {s_build, s_compile}) add_common(c);
  s_build->add_option("--k", o.k, "path length (tokens)")->required();
  s_compile->add_option("--slide", o.slide, "sliding sequence JSON file")->required();
  s_compile->add_option("--l", o.l, "pattern path factor length")->required();
  slide->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  auto need_graph = [&]() {
    if (o.graph.empty()) throw ValidationError("--graph is required for this command");
    return load_graph(o.graph);
  };

  json out;

  if (p_tdk->parsed() || p_pdk->parsed()) {
    Graph g = need_graph();
    check_size(g.num_vertices(), 10, "parameter solver graph");
    auto [v, w] = p_tdk->parsed() ? k_treedepth(g, o.k) : k_pathdepth(g, o.k);
    out["value"] = param_value_json(v);
    if (!v.is_infinite()) out["witness"] = decomposition_to_json(w);
  } else if (p_td->parsed()) {
    Graph g = need_graph();
    check_size(g.num_vertices(), 12, "treedepth graph");
    out["value"] = param_value_json(treedepth_oracle(g));
  } else if (p_tw->parsed()) {
    Graph g = need_graph();
    check_size(g.num_vertices(), 12, "treewidth graph");
    out["value"] = param_value_json(treewidth_oracle(g));
  } else if (p_pl->parsed()) {
    Graph g = need_graph();
    check_size(g.num_vertices(), 8, "p_L graph");
    out["value"] = param_value_json(p_regex(g, parse_sigma_regex(o.regex)));
  } else if (g_grid->parsed()) {
    if (o.k < 1 || o.l < 1) throw ValidationError("grid: k and l must be positive");
    check_size(o.k * o.l, 10000, "grid");
    Graph g = grid_graph(o.k, o.l);
    out = graph_to_json(g);
    add_dot(out, g, o.dot);
  } else if (g_ladder->parsed()) {
    if (o.k < 1 || o.l < 1) throw ValidationError("ladder: k and l must be positive");
    check_size(o.k * o.l, 10000, "ladder");
    KLadder lad = make_k_ladder(o.k, o.l, std::vector<Graph>(o.l, path_graph(o.k)));
    out = graph_to_json(lad.graph);
    add_dot(out, lad.graph, o.dot);
  } else if (g_ttp->parsed()) {
    Graph t = need_graph();
    if (o.l < 1) throw ValidationError("tree-times-path: l must be positive");
    if (t.num_vertices() != t.num_edges() + 1 || !is_connected(t))
      throw ValidationError("tree-times-path: --graph is not a tree");
    check_size(t.num_vertices() * o.l, 10000, "tree-times-path");
    Graph g = cartesian_product(t, path_graph(o.l));
    out = graph_to_json(g);
    add_dot(out, g, o.dot);
  } else if (g_trees->parsed()) {
    check_size(o.k, 10, "tree enumeration");
    json arr = json::array();
    for (const Graph& t : enumerate_trees_up_to_iso(o.k)) arr.push_back(graph_to_json(t));
    out["trees"] = arr;
  } else if (m_test->parsed()) {
    Graph h = need_graph();
    Graph pat = load_graph(o.pattern);
    check_size(h.num_vertices(), 12, "minor test host");
    check_size(pat.num_vertices(), 10, "minor test pattern");
    if (auto m = find_minor_model(pat, h)) {
      out["minor"] = true;
      out["model"] = model_to_json(*m);
    } else {
      out["minor"] = false;
    }
  } else if (m_extract->parsed()) {
    json inst = load_json(o.graph.empty() ? "-" : o.graph);
    Graph g = graph_from_json(inst.at("graph"));
    check_size(g.num_vertices(), 200, "ladder extraction host");
    std::vector<PathSeq> rows;
    for (const auto& r : inst.at("rows")) rows.push_back(r.get<std::vector<int>>());
    std::vector<std::vector<int>> connectors;
    for (const auto& c : inst.at("connectors"))
      connectors.push_back(c.get<std::vector<int>>());
    auto [lad, model] = extract_ladder(g, rows, connectors);
    out["k"] = lad.k;
    out["l"] = lad.l;
    out["ladder"] = graph_to_json(lad.graph);
    out["model"] = model_to_json(model);
    add_dot(out, lad.graph, o.dot);
  } else if (m_gil->parsed()) {
    Graph t = need_graph();
    check_size(o.k, 4, "grid-in-ladder rows");
    check_size(o.l, 5, "grid-in-ladder columns");
    MinorModel m = grid_in_ladder(o.k, o.l, t);
    out["model"] = model_to_json(m);
  } else if (d_val->parsed()) {
    Graph g = need_graph();
    TreeDecomposition d = decomposition_from_json(load_json(o.decomp));
    if (auto r = validate_tree_decomposition(g, d)) {
      out["ok"] = false;
      out["report"] = *r;
      emit(out, o.out);
      return 1;
    }
    out["ok"] = true;
    out["width"] = d.width();
    out["adhesion"] = d.adhesion();
  } else if (d_dis->parsed()) {
    TreeDecomposition d = decomposition_from_json(load_json(o.decomp));
    check_size(static_cast<int>(d.bags.size()), 64, "dismantling nodes");
    if (auto cert = k_dismantle_certificate(d, o.k)) {
      out["dismantlable"] = true;
      out["certificate"] = cert_to_json(*cert);
    } else {
      out["dismantlable"] = false;
    }
  } else if (d_helly->parsed()) {
    Graph g = need_graph();
    TreeDecomposition d = decomposition_from_json(load_json(o.decomp));
    if (auto r = validate_tree_decomposition(g, d))
      throw ValidationError("helly: invalid decomposition: " + *r);
    json famj = load_json(o.family);
    std::vector<std::vector<int>> fam;
    for (const auto& m : famj) {
      auto set = m.get<std::vector<int>>();
      std::sort(set.begin(), set.end());
      fam.push_back(set);
    }
    HellyResult res = helly_cover(g, d, fam, o.d);
    out["arm"] = res.disjoint ? "disjoint" : "cover";
    if (res.disjoint)
      out["member_indices"] = res.member_indices;
    else
      out["cover_nodes"] = res.cover_nodes;
  } else if (r_unb->parsed()) {
    Graph g = need_graph();
    check_size(g.num_vertices(), 12, "unbreakable refinement graph");
    std::vector<RefineTrace> trace;
    TreeDecomposition d = unbreakable_decomposition(g, o.k, &trace);
    out["decomposition"] = decomposition_to_json(d);
    if (!o.trace.empty())
      write_trace_lines(trace, o.trace);
    else
      out["trace"] = trace_json(trace);
  } else if (r_good->parsed()) {
    Graph g = need_graph();
    check_size(g.num_vertices(), 12, "good refinement graph");
    std::vector<int> s = o.s_list.empty() ? g.vertices() : parse_int_list(o.s_list);
    std::vector<RefineTrace> trace;
    auto [s2, d] = good_gs_decomposition(g, s, o.k, o.a, o.t, &trace);
    out["S"] = s2;
    out["decomposition"] = decomposition_to_json(d);
    if (!o.trace.empty())
      write_trace_lines(trace, o.trace);
    else
      out["trace"] = trace_json(trace);
  } else if (s_build->parsed()) {
    Graph t = need_graph();
    SlidingSequence s = path_sliding_in_tree(t, o.k);
    out = sliding_to_json(s);
  } else if (s_compile->parsed()) {
    SlidingSequence s = sliding_from_json(load_json(o.slide));
    MinorModel m = sliding_to_model(s, o.l);
    out["model"] = model_to_json(m);
  } else {
    throw ValidationError("no subcommand selected");
  }

  emit(out, o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
