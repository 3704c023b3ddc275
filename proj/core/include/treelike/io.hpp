#pragma once

#include <string>
#include <variant>
#include <vector>

#include "treelike/cuts.hpp"
#include "treelike/end_flow.hpp"
#include "treelike/pocset.hpp"
#include "treelike/treedec.hpp"

namespace treelike {

// Dense graph plus the original input labels.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;
};

// Text format: one directive per line, `v <label>` or `e <a> <b>`;
// `#` starts a comment. Labels map to dense ids in appearance order.
LabeledGraph read_graph_text(const std::string& text);

// {"vertices":[...], "edges":[[a,b],...]}; labels may be numbers or strings.
LabeledGraph read_graph_json(const std::string& text);

// Sniffs JSON by a leading '{'.
LabeledGraph read_graph_auto(const std::string& text);

std::string write_graph_json(const Graph& g);

struct WallingDoc {
  Walling walling;
  std::vector<std::string> labels;  // per ground point
};

// {"ground":[...], "walls":[[member,...],...]}
WallingDoc read_walling_json(const std::string& text);
std::string write_walling_json(const Walling& w);

// {"elements":n, "order":[[a,b],...], "involution":[[a,b],...]}
std::variant<Pocset, PocsetViolation> read_pocset_json(const std::string& text);

// {"cuts":[[vertex,...],...], "closed_under_complement":bool}
CutFamily read_family_json(const Graph& g, const std::string& text);
std::string write_family_json(const CutFamily& f);

// {"skeleton_edges":[[y,y'],...], "bags":{"y":[x,...],...}}
std::variant<TreeDecomposition, TreedecViolation> read_treedec_json(const Graph& host, const std::string& text);
std::string write_treedec_json(const TreeDecomposition& td);

std::string write_hyperplanes_json(const Arrangement& arr);
std::string write_orbits_json(const WindowedFamily& w, const FlowForest& ff);
std::string write_flow_json(const Arrangement& arr, const EndTarget& target, const FlowForest& ff);

// Deterministic DOT. Overlay pointers may be null; flow steps render as
// directed extra edges, cut boundaries as dashed edges.
struct DotOverlays {
  const std::vector<Edge>* tree_edges = nullptr;
  const CutFamily* cuts = nullptr;
  const FlowForest* flow = nullptr;
  const Bitset* highlight = nullptr;
  const std::vector<std::string>* labels = nullptr;
};

std::string export_dot(const Graph& g, const DotOverlays& overlays = {});

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace treelike
