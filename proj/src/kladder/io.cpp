#include "kladder/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kladder/errors.hpp"

namespace kladder {

using nlohmann::json;

namespace {

int as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ValidationError(what + ": expected an integer");
  return j.get<int>();
}

std::vector<int> as_int_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + ": expected an array");
  std::vector<int> xs;
  for (const auto& e : j) xs.push_back(as_int(e, what));
  return xs;
}

std::vector<std::pair<int, int>> as_pair_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + ": expected an array of pairs");
  std::vector<std::pair<int, int>> ps;
  for (const auto& e : j) {
    auto xs = as_int_list(e, what);
    if (xs.size() != 2) throw ValidationError(what + ": expected pairs of two integers");
    ps.emplace_back(xs[0], xs[1]);
  }
  return ps;
}

const json& field(const json& j, const std::string& key, const std::string& what) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(what + ": missing field \"" + key + "\"");
  return j.at(key);
}

int key_to_int(const std::string& k, const std::string& what) {
  try {
    size_t pos = 0;
    int v = std::stoi(k, &pos);
    if (pos != k.size()) throw std::invalid_argument(k);
    return v;
  } catch (const std::exception&) {
    throw ValidationError(what + ": non-integer key \"" + k + "\"");
  }
}

}  // namespace

json graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.num_vertices();
  std::vector<int> verts = g.vertices();
  bool contiguous = true;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    if (verts[i] != i) contiguous = false;
  if (!contiguous) j["vertices"] = verts;
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  j["edges"] = edges;
  return j;
}

Graph graph_from_json(const json& j) {
  int n = as_int(field(j, "n", "graph"), "graph n");
  if (n < 0) throw ValidationError("graph: negative n");
  std::vector<int> verts;
  if (j.contains("vertices")) {
    verts = as_int_list(j.at("vertices"), "graph vertices");
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ValidationError("graph: duplicate vertices");
    if (static_cast<int>(verts.size()) != n)
      throw ValidationError("graph: n does not match the vertex list");
  } else {
    for (int i = 0; i < n; ++i) verts.push_back(i);
  }
  Graph g = Graph::on_vertices(verts);
  for (auto [u, v] : as_pair_list(field(j, "edges", "graph"), "graph edges")) {
    if (!g.has_vertex(u) || !g.has_vertex(v))
      throw ValidationError("graph: edge endpoint is not a vertex");
    if (u == v) throw ValidationError("graph: self-loop");
    g = g.with_edge(u, v);
  }
  return g;
}

json decomposition_to_json(const TreeDecomposition& d) {
  json j;
  json edges = json::array();
  for (auto [x, y] : d.tree.edges()) edges.push_back(json::array({x, y}));
  j["tree_edges"] = edges;
  json bags = json::object();
  for (const auto& [x, bag] : d.bags) bags[std::to_string(x)] = bag;
  j["bags"] = bags;
  return j;
}

TreeDecomposition decomposition_from_json(const json& j) {
  TreeDecomposition d;
  const json& bags = field(j, "bags", "decomposition");
  if (!bags.is_object()) throw ValidationError("decomposition: bags must be an object");
  std::vector<int> nodes;
  for (auto it = bags.begin(); it != bags.end(); ++it) {
    int x = key_to_int(it.key(), "decomposition bags");
    auto bag = as_int_list(it.value(), "decomposition bag");
    std::sort(bag.begin(), bag.end());
    if (d.bags.count(x)) throw ValidationError("decomposition: duplicate node");
    d.bags[x] = bag;
    nodes.push_back(x);
  }
  d.tree = Graph::on_vertices(nodes);
  for (auto [x, y] : as_pair_list(field(j, "tree_edges", "decomposition"),
                                  "decomposition tree_edges")) {
    if (!d.bags.count(x) || !d.bags.count(y))
      throw ValidationError("decomposition: tree edge on an unknown node");
    d.tree = d.tree.with_edge(x, y);
  }
  return d;
}

json model_to_json(const MinorModel& m) {
  json j;
  j["pattern"] = graph_to_json(m.pattern);
  j["host"] = graph_to_json(m.host);
  json sets = json::object();
  for (const auto& [x, set] : m.branch_sets) sets[std::to_string(x)] = set;
  j["branch_sets"] = sets;
  return j;
}

MinorModel model_from_json(const json& j) {
  MinorModel m;
  m.pattern = graph_from_json(field(j, "pattern", "model"));
  m.host = graph_from_json(field(j, "host", "model"));
  const json& sets = field(j, "branch_sets", "model");
  if (!sets.is_object()) throw ValidationError("model: branch_sets must be an object");
  for (auto it = sets.begin(); it != sets.end(); ++it) {
    int x = key_to_int(it.key(), "model branch_sets");
    auto set = as_int_list(it.value(), "model branch set");
    std::sort(set.begin(), set.end());
    m.branch_sets[x] = set;
  }
  return m;
}

json good_pair_to_json(const GoodPair& gp) {
  json j;
  j["graph"] = graph_to_json(gp.graph);
  j["U"] = gp.u;
  json fam = json::array();
  for (const auto& b : gp.b_family) fam.push_back(b);
  j["B"] = fam;
  return j;
}

GoodPair good_pair_from_json(const json& j) {
  GoodPair gp;
  gp.graph = graph_from_json(field(j, "graph", "good pair"));
  gp.u = as_int_list(field(j, "U", "good pair"), "good pair U");
  std::sort(gp.u.begin(), gp.u.end());
  const json& fam = field(j, "B", "good pair");
  if (!fam.is_array()) throw ValidationError("good pair: B must be an array");
  for (const auto& e : fam) {
    auto b = as_int_list(e, "good pair member");
    std::sort(b.begin(), b.end());
    gp.b_family.push_back(b);
  }
  return gp;
}

json sliding_to_json(const SlidingSequence& s) {
  json j;
  j["pattern"] = graph_to_json(s.pattern);
  j["host"] = graph_to_json(s.host);
  json inj = json::array();
  for (const auto& phi : s.injections) {
    json step = json::object();
    for (const auto& [x, v] : phi) step[std::to_string(x)] = v;
    inj.push_back(step);
  }
  j["injections"] = inj;
  return j;
}

SlidingSequence sliding_from_json(const json& j) {
  SlidingSequence s;
  s.pattern = graph_from_json(field(j, "pattern", "sliding"));
  s.host = graph_from_json(field(j, "host", "sliding"));
  const json& inj = field(j, "injections", "sliding");
  if (!inj.is_array()) throw ValidationError("sliding: injections must be an array");
  for (const auto& e : inj) {
    if (!e.is_object()) throw ValidationError("sliding: injection must be an object");
    std::map<int, int> phi;
    for (auto it = e.begin(); it != e.end(); ++it)
      phi[key_to_int(it.key(), "sliding injection")] =
          as_int(it.value(), "sliding injection value");
    s.injections.push_back(phi);
  }
  return s;
}

json cert_to_json(const DismantleCert& c) {
  json j;
  j["move"] = c.move;
  if (c.move == "remove") j["vertex"] = c.vertex;
  if (c.move == "split") j["edge"] = json::array({c.edge[0], c.edge[1]});
  json kids = json::array();
  for (const auto& ch : c.children) kids.push_back(cert_to_json(ch));
  j["children"] = kids;
  return j;
}

DismantleCert cert_from_json(const json& j) {
  DismantleCert c;
  const json& mv = field(j, "move", "certificate");
  if (!mv.is_string()) throw ValidationError("certificate: move must be a string");
  c.move = mv.get<std::string>();
  if (c.move == "remove") c.vertex = as_int(field(j, "vertex", "certificate"), "certificate vertex");
  if (c.move == "split") {
    auto e = as_int_list(field(j, "edge", "certificate"), "certificate edge");
    if (e.size() != 2) throw ValidationError("certificate: edge must have two nodes");
    c.edge = {e[0], e[1]};
  }
  if (j.contains("children"))
    for (const auto& ch : j.at("children")) c.children.push_back(cert_from_json(ch));
  return c;
}

Graph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw ValidationError("edge list: missing header \"n m\"");
  if (n < 0 || m < 0) throw ValidationError("edge list: negative counts");
  std::vector<int> verts;
  for (int i = 0; i < n; ++i) verts.push_back(i);
  Graph g = Graph::on_vertices(verts);
  for (int i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw ValidationError("edge list: truncated edge lines");
    if (!g.has_vertex(u) || !g.has_vertex(v))
      throw ValidationError("edge list: edge endpoint out of range");
    if (u == v) throw ValidationError("edge list: self-loop");
    g = g.with_edge(u, v);
  }
  return g;
}

std::string graph_to_edge_list(const Graph& g) {
  std::vector<int> verts = g.vertices();
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    if (verts[i] != i)
      throw ValidationError("edge list: vertex identities must be 0..n-1");
  std::ostringstream out;
  out << g.num_vertices() << " " << g.num_edges() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph {\n";
  for (int v : g.vertices()) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

Graph load_graph(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ValidationError("empty graph input");
  if (text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ValidationError(std::string("graph JSON parse error: ") + e.what());
    }
    return graph_from_json(j);
  }
  return graph_from_edge_list(text);
}

}  // namespace kladder
