#include "treelike/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace treelike {

namespace {

using nlohmann::json;

class SymbolTable {
 public:
  int intern(const std::string& label) {
    auto [it, fresh] = index_.try_emplace(label, static_cast<int>(labels_.size()));
    if (fresh) labels_.push_back(label);
    return it->second;
  }

  int find(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
  }

  std::vector<std::string> take() { return std::move(labels_); }
  int size() const { return static_cast<int>(labels_.size()); }

 private:
  std::unordered_map<std::string, int> index_;
  std::vector<std::string> labels_;
};

std::string scalar_label(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw std::invalid_argument("vertex labels must be strings or integers");
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, true, true);  // allow comments
  if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
  return j;
}

}  // namespace

LabeledGraph read_graph_text(const std::string& text) {
  SymbolTable symbols;
  std::vector<Edge> edges;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op) || op[0] == '#') continue;
    if (op == "v") {
      std::string label;
      if (!(ls >> label)) throw std::invalid_argument("line " + std::to_string(line_no) + ": v needs a label");
      symbols.intern(label);
    } else if (op == "e") {
      std::string a, b;
      if (!(ls >> a >> b)) throw std::invalid_argument("line " + std::to_string(line_no) + ": e needs two labels");
      int ia = symbols.intern(a);  // sequence the interns: ids follow appearance order
      int ib = symbols.intern(b);
      edges.emplace_back(ia, ib);
    } else {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown directive " + op);
    }
  }
  int n = symbols.size();
  return LabeledGraph{Graph::from_edges(n, std::move(edges)), symbols.take()};
}

LabeledGraph read_graph_json(const std::string& text) {
  json j = parse_json(text);
  SymbolTable symbols;
  if (j.contains("vertices")) {
    for (const json& v : j.at("vertices")) symbols.intern(scalar_label(v));
  }
  std::vector<Edge> edges;
  for (const json& e : j.value("edges", json::array())) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edges must be [a, b] pairs");
    int ia = symbols.intern(scalar_label(e[0]));
    int ib = symbols.intern(scalar_label(e[1]));
    edges.emplace_back(ia, ib);
  }
  int n = symbols.size();
  return LabeledGraph{Graph::from_edges(n, std::move(edges)), symbols.take()};
}

LabeledGraph read_graph_auto(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? read_graph_json(text) : read_graph_text(text);
  }
  return read_graph_text(text);
}

std::string write_graph_json(const Graph& g) {
  json j;
  j["vertices"] = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(v);
  j["edges"] = json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump(2) + "\n";
}

WallingDoc read_walling_json(const std::string& text) {
  json j = parse_json(text);
  SymbolTable symbols;
  for (const json& p : j.at("ground")) symbols.intern(scalar_label(p));
  int n = symbols.size();
  if (n == 0) throw std::invalid_argument("walling needs a nonempty ground set");

  std::vector<Bitset> walls;
  for (const json& w : j.value("walls", json::array())) {
    Bitset side(n);
    for (const json& p : w) {
      std::string label = scalar_label(p);
      int id = symbols.find(label);
      if (id < 0) throw std::invalid_argument("wall member " + label + " is not in the ground set");
      side.set(id);
    }
    walls.push_back(std::move(side));
  }
  return WallingDoc{Walling::close(n, std::move(walls)), symbols.take()};
}

std::string write_walling_json(const Walling& w) {
  json j;
  j["ground"] = json::array();
  for (int p = 0; p < w.ground(); ++p) j["ground"].push_back(p);
  j["walls"] = json::array();
  for (const Bitset& wall : w.walls()) j["walls"].push_back(wall.to_vector());
  return j.dump(2) + "\n";
}

std::variant<Pocset, PocsetViolation> read_pocset_json(const std::string& text) {
  json j = parse_json(text);
  int n = j.at("elements").get<int>();
  auto pairs = [](const json& arr) {
    std::vector<std::pair<int, int>> out;
    for (const json& p : arr) {
      if (!p.is_array() || p.size() != 2) throw std::invalid_argument("pairs must be [a, b]");
      out.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    return out;
  };
  return validate_pocset(n, pairs(j.value("order", json::array())), pairs(j.value("involution", json::array())));
}

CutFamily read_family_json(const Graph& g, const std::string& text) {
  json j = parse_json(text);
  CutFamily f;
  for (const json& c : j.value("cuts", json::array())) {
    Bitset side(g.vertex_count());
    for (const json& v : c) {
      int x = v.get<int>();
      g.check_vertex(x);
      side.set(x);
    }
    f.cuts.push_back(make_cut(g, std::move(side)));
  }
  f.closed_under_complement = complement_closed(f);
  if (j.contains("closed_under_complement") &&
      j["closed_under_complement"].get<bool>() != f.closed_under_complement) {
    throw std::invalid_argument("closed_under_complement flag does not match the cuts");
  }
  return f;
}

std::string write_family_json(const CutFamily& f) {
  json j;
  j["provenance"] = to_string(f.provenance);
  j["closed_under_complement"] = f.closed_under_complement;
  j["cuts"] = json::array();
  for (const Cut& c : f.cuts) j["cuts"].push_back(c.side.to_vector());
  return j.dump(2) + "\n";
}

std::variant<TreeDecomposition, TreedecViolation> read_treedec_json(const Graph& host, const std::string& text) {
  json j = parse_json(text);
  const json& bag_obj = j.at("bags");
  int k = static_cast<int>(bag_obj.size());
  std::vector<Bitset> bags(k, Bitset(host.vertex_count()));
  for (auto it = bag_obj.begin(); it != bag_obj.end(); ++it) {
    int node = std::stoi(it.key());
    if (node < 0 || node >= k) throw std::invalid_argument("bag keys must be dense 0-based node ids");
    for (const json& v : it.value()) {
      int x = v.get<int>();
      host.check_vertex(x);
      bags[node].set(x);
    }
  }
  std::vector<Edge> edges;
  for (const json& e : j.value("skeleton_edges", json::array())) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("skeleton edges must be [y, y'] pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return validate_treedec(host, Graph::from_edges(k, std::move(edges)), std::move(bags));
}

std::string write_treedec_json(const TreeDecomposition& td) {
  json j;
  j["skeleton_edges"] = json::array();
  for (auto [a, b] : td.skeleton.edges()) j["skeleton_edges"].push_back({a, b});
  j["bags"] = json::object();
  for (int y = 0; y < td.skeleton.vertex_count(); ++y) {
    j["bags"][std::to_string(y)] = td.bags[y].to_vector();
  }
  j["labels"] = td.skeleton_labels;
  j["width"] = width(td);
  return j.dump(2) + "\n";
}

std::string write_hyperplanes_json(const Arrangement& arr) {
  json j;
  j["pair_count"] = arr.pair_count();
  j["classes"] = json::array();
  for (const HyperplaneClass& c : arr.classes()) {
    json e = json::array();
    for (auto [u, v] : c.edges) e.push_back({u, v});
    j["classes"].push_back({{"pair_id", c.pair_id},
                            {"edges", std::move(e)},
                            {"halfspaces", {c.halfspace_a, c.halfspace_b}},
                            {"boundary_diameter", c.boundary_diameter}});
  }
  j["sides"] = json::array();
  for (const HalfSpace& h : arr.halfspaces()) j["sides"].push_back(h.side.to_vector());
  j["nested"] = json::array();
  for (const HyperplaneClass& a : arr.classes()) {
    std::vector<bool> row;
    for (const HyperplaneClass& b : arr.classes()) {
      row.push_back(nested(arr.halfspace(a.halfspace_a).side, arr.halfspace(b.halfspace_a).side));
    }
    j["nested"].push_back(row);
  }
  Graph adj = hyperplane_adjacency(arr);
  j["adjacency_edges"] = json::array();
  for (auto [a, b] : adj.edges()) j["adjacency_edges"].push_back({a, b});
  return j.dump(2) + "\n";
}

namespace {

json flow_body(const FlowForest& ff) {
  json j;
  j["step"] = ff.step;
  j["orbit"] = ff.orbit;
  j["fixed"] = ff.fixed;
  return j;
}

}  // namespace

std::string write_orbits_json(const WindowedFamily& w, const FlowForest& ff) {
  json j = flow_body(ff);
  j["family"] = to_string(w.kind);
  j["radius"] = w.radius;
  if (w.degree > 0) j["degree"] = w.degree;
  j["horizon"] = w.horizon;
  j["frontier"] = w.frontier.to_vector();
  j["certified"] = w.certified.to_vector();
  json coords = json::array();
  for (auto [a, b] : w.coords) coords.push_back({a, b});
  j["coords"] = std::move(coords);
  return j.dump(2) + "\n";
}

std::string write_flow_json(const Arrangement& arr, const EndTarget& target, const FlowForest& ff) {
  json j = flow_body(ff);
  j["target"] = target.target;
  j["vertices"] = arr.graph().vertex_count();
  return j.dump(2) + "\n";
}

std::string export_dot(const Graph& g, const DotOverlays& overlays) {
  std::ostringstream out;
  out << "graph g {\n";
  out << "  node [shape=circle];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    std::vector<std::string> attrs;
    if (overlays.labels && v < static_cast<int>(overlays.labels->size())) {
      attrs.push_back("label=\"" + (*overlays.labels)[v] + "\"");
    }
    if (overlays.highlight && overlays.highlight->test(v)) {
      attrs.push_back("style=filled");
      attrs.push_back("fillcolor=gray");
    }
    if (overlays.flow && overlays.flow->step[v] == v) attrs.push_back("shape=doublecircle");
    if (!attrs.empty()) {
      out << " [";
      for (size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << "]";
    }
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) {
    out << "  " << u << " -- " << v;
    std::vector<std::string> attrs;
    if (overlays.tree_edges) {
      const auto& t = *overlays.tree_edges;
      if (std::find(t.begin(), t.end(), Edge{u, v}) != t.end()) attrs.push_back("style=bold");
    }
    if (overlays.cuts) {
      for (const Cut& c : overlays.cuts->cuts) {
        if (c.side.test(u) != c.side.test(v)) {
          attrs.push_back("style=dashed");
          break;
        }
      }
    }
    if (!attrs.empty()) {
      out << " [";
      for (size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << "]";
    }
    out << ";\n";
  }
  if (overlays.flow) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      int w = overlays.flow->step[v];
      if (w != v) out << "  " << v << " -- " << w << " [dir=forward, color=red, constraint=false];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace treelike
