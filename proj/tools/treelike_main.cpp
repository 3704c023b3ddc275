// Command line front end: one subcommand per library entry point.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "treelike/generators.hpp"
#include "treelike/io.hpp"
#include "treelike/pipeline.hpp"
#include "treelike/tree_extract.hpp"

namespace {

using nlohmann::json;
using namespace treelike;

struct Common {
  bool as_json = false;
  bool as_dot = false;
  long long seed = -1;
  uint64_t cap = 0;  // 0 = per-subcommand default
  std::string out;

  uint64_t orientation_cap() const { return cap ? cap : kDefaultOrientationCap; }
  int generate_cap() const {
    return cap ? static_cast<int>(std::min<uint64_t>(cap, 1u << 30)) : kDefaultGenerateCap;
  }
};

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(c.out, text);
  }
}

LabeledGraph load_graph(const std::string& path) { return read_graph_auto(read_text_file(path)); }

std::string violation_text(const TreedecViolation& v) {
  return v.message + (v.a >= 0 ? " (witness " + std::to_string(v.a) +
                                     (v.b >= 0 ? ", " + std::to_string(v.b) : "") + ")"
                               : "");
}

TreeDecomposition load_or_heuristic_treedec(const Graph& host, const std::string& path) {
  if (path.empty()) return heuristic_treedec(host);
  auto parsed = read_treedec_json(host, read_text_file(path));
  if (auto* violation = std::get_if<TreedecViolation>(&parsed)) {
    throw std::runtime_error("invalid decomposition: " + violation_text(*violation));
  }
  return std::get<TreeDecomposition>(std::move(parsed));
}

int cmd_check_median(const Common& c, const std::string& path) {
  Graph g = load_graph(path).graph;
  MedianCertificate cert = check_median(g);
  if (c.as_json) {
    json j{{"accepted", cert.accepted}};
    if (cert.witness) {
      j["witness"] = {{"x", cert.witness->x},
                      {"y", cert.witness->y},
                      {"z", cert.witness->z},
                      {"intersection", cert.witness->intersection.to_vector()}};
    }
    emit(c, j.dump(2) + "\n");
  } else if (cert.accepted) {
    emit(c, "median: " + std::to_string(g.vertex_count()) + " vertices, " +
                std::to_string(g.edge_count()) + " edges\n");
  } else {
    const MedianWitness& w = *cert.witness;
    std::string sizes = std::to_string(w.intersection.count());
    emit(c, "not median: triple (" + std::to_string(w.x) + ", " + std::to_string(w.y) + ", " +
                std::to_string(w.z) + ") has " + sizes + " candidate medians\n");
  }
  return cert.accepted ? 0 : 1;
}

int cmd_hyperplanes(const Common& c, const std::string& path) {
  Arrangement arr = Arrangement::build(MedianGraph::verify(load_graph(path).graph));
  if (c.as_dot) {
    emit(c, export_dot(hyperplane_adjacency(arr)));
  } else {
    emit(c, write_hyperplanes_json(arr));
  }
  return 0;
}

int cmd_dual(const Common& c, const std::string& path) {
  std::string text = read_text_file(path);
  json probe = json::parse(text, nullptr, true, true);
  DualGraph dual;
  if (probe.contains("ground")) {
    WallingDoc doc = read_walling_json(text);
    dual = wall_dual(doc.walling, c.orientation_cap()).dual;
  } else {
    auto parsed = read_pocset_json(text);
    if (auto* violation = std::get_if<PocsetViolation>(&parsed)) {
      throw std::runtime_error("invalid pocset: " + violation->message);
    }
    dual = dual_median_graph(std::get<Pocset>(parsed), c.orientation_cap());
  }
  if (c.as_dot) {
    emit(c, export_dot(dual.graph));
  } else {
    json j = json::parse(write_graph_json(dual.graph));
    j["orientations"] = json::array();
    for (const Bitset& o : dual.vertex_orientation) j["orientations"].push_back(o.to_vector());
    emit(c, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_spanning_tree(const Common& c, const std::string& path, const std::vector<int>& bounded,
                      const std::string& stages_out) {
  Arrangement arr = Arrangement::build(MedianGraph::verify(load_graph(path).graph));
  HalfspaceColoring coloring = bounded.empty()
                                   ? color_halfspaces(arr)
                                   : color_halfspaces_bounded(arr, bounded[0], bounded[1]);
  StagedForest sf = extract_spanning_tree(arr, coloring);
  const std::vector<Edge> empty;
  const std::vector<Edge>& tree = sf.stage_edges.empty() ? empty : sf.stage_edges.back();
  if (!stages_out.empty()) {
    json stages = json::array();
    for (const auto& edges : sf.stage_edges) {
      json e = json::array();
      for (auto [u, v] : edges) e.push_back({u, v});
      stages.push_back(std::move(e));
    }
    write_text_file(stages_out,
                    json{{"stage_edges", std::move(stages)}, {"stage_blocks", sf.stage_blocks}}.dump(2) + "\n");
  }
  if (c.as_dot) {
    DotOverlays overlays;
    overlays.tree_edges = &tree;
    emit(c, export_dot(arr.graph(), overlays));
  } else {
    json e = json::array();
    for (auto [u, v] : tree) e.push_back({u, v});
    emit(c, json{{"edges", std::move(e)}, {"colors", coloring.color_count}}.dump(2) + "\n");
  }
  return 0;
}

int cmd_radial_cuts(const Common& c, const std::string& path, int center, int radius) {
  Graph g = load_graph(path).graph;
  CutFamily f = center >= 0 ? radial_cuts(g, center, radius) : all_radial_cuts(g);
  emit(c, write_family_json(f));
  return 0;
}

int cmd_connectify(const Common& c, const std::string& graph_path, const std::string& family_path) {
  Graph g = load_graph(graph_path).graph;
  CutFamily f = read_family_json(g, read_text_file(family_path));
  emit(c, write_family_json(connectify(g, f)));
  return 0;
}

int cmd_treedec(const Common& c, const std::string& action, const std::string& graph_path,
                const std::string& treedec_path) {
  Graph host = load_graph(graph_path).graph;
  if (action == "validate") {
    if (treedec_path.empty()) throw std::runtime_error("validate needs a decomposition file");
    auto parsed = read_treedec_json(host, read_text_file(treedec_path));
    if (auto* violation = std::get_if<TreedecViolation>(&parsed)) {
      emit(c, "invalid: " + violation_text(*violation) + "\n");
      return 1;
    }
    emit(c, "valid: width " + std::to_string(width(std::get<TreeDecomposition>(parsed))) + "\n");
    return 0;
  }
  TreeDecomposition td = load_or_heuristic_treedec(host, treedec_path);
  if (action == "shrink") {
    emit(c, write_treedec_json(shrink_bags(td)));
  } else if (action == "prune") {
    emit(c, write_treedec_json(prune_skeleton(td)));
  } else if (action == "cuts") {
    emit(c, write_family_json(treedec_cuts(td, true)));
  } else {
    throw std::runtime_error("unknown treedec action: " + action);
  }
  return 0;
}

int cmd_flow(const Common& c, const std::string& graph_path, int target, const std::string& family,
             int radius, int degree, const std::string& emit_path) {
  Common out = c;
  if (!emit_path.empty()) out.out = emit_path;
  if (!family.empty()) {
    WindowedFamily w = make_window(parse_window_kind(family), radius, degree);
    FlowForest ff = flow_forest(w.arr, w.target);
    if (c.as_dot) {
      std::vector<std::string> labels;
      for (auto [a, b] : w.coords) labels.push_back(std::to_string(a) + "," + std::to_string(b));
      DotOverlays overlays;
      overlays.flow = &ff;
      overlays.highlight = &w.certified;
      overlays.labels = &labels;
      emit(out, export_dot(w.arr.graph(), overlays));
    } else {
      emit(out, write_orbits_json(w, ff));
    }
    return 0;
  }
  Arrangement arr = Arrangement::build(MedianGraph::verify(load_graph(graph_path).graph));
  EndTarget u = principal_target(arr, target);
  FlowForest ff = flow_forest(arr, u);
  if (c.as_dot) {
    DotOverlays overlays;
    overlays.flow = &ff;
    emit(out, export_dot(arr.graph(), overlays));
  } else {
    emit(out, write_flow_json(arr, u, ff));
  }
  return 0;
}

int cmd_hypfin_witness(const Common& c, const std::string& path, bool rank) {
  WallingDoc doc = read_walling_json(read_text_file(path));
  std::vector<Bitset> family;
  for (const Bitset& w : doc.walling.walls()) {
    if (w.any()) family.push_back(w);
  }
  FerWitness witness = rank ? oneended_fer_witness_rank(doc.walling.ground(), family)
                            : oneended_fer_witness(doc.walling.ground(), family);
  if (c.as_json || !c.out.empty()) {
    emit(c, json{{"cofinal", witness.cofinal},
                 {"max_size", witness.max_size},
                 {"levels", witness.seq.class_of}}
                    .dump(2) +
                "\n");
  } else {
    std::string text;
    for (size_t level = 0; level < witness.seq.class_of.size(); ++level) {
      const auto& cls = witness.seq.class_of[level];
      text += "F_" + std::to_string(level) + ":";
      for (int rep = 0; rep < static_cast<int>(cls.size()); ++rep) {
        if (cls[rep] != rep) continue;
        text += " {";
        bool first = true;
        for (int x = 0; x < static_cast<int>(cls.size()); ++x) {
          if (cls[x] == rep) {
            text += (first ? "" : ",") + std::to_string(x);
            first = false;
          }
        }
        text += "}";
      }
      text += "\n";
    }
    text += witness.cofinal ? "cofinal: yes\n" : "cofinal: no\n";
    emit(c, text);
  }
  return 0;
}

int cmd_generate(const Common& c, const std::string& spec_text) {
  GeneratorSpec spec = GeneratorSpec::parse(spec_text);
  if (c.seed >= 0) {
    if (spec.kind == GeneratorSpec::Kind::random_tree) spec.args[1] = static_cast<int>(c.seed);
    if (spec.kind == GeneratorSpec::Kind::median_closure) spec.args[2] = static_cast<int>(c.seed);
  }
  MedianGraph m = generate(spec, c.generate_cap());
  if (c.as_dot) {
    emit(c, export_dot(m.graph()));
  } else {
    emit(c, write_graph_json(m.graph()));
  }
  return 0;
}

int cmd_pipeline(const Common& c, const std::string& preset_name, const std::string& graph_path,
                 const std::string& family, int radius, int degree, int target,
                 const std::string& treedec_path, const std::string& out_dir) {
  PipelinePreset preset = parse_preset(preset_name);
  PipelineBundle bundle;
  if (!family.empty()) {
    if (preset != PipelinePreset::end_to_forest) {
      throw std::runtime_error("window inputs only fit end-to-forest");
    }
    bundle = run_pipeline(make_window(parse_window_kind(family), radius, degree));
  } else {
    LabeledGraph lg = load_graph(graph_path);
    PipelineOptions opts;
    opts.target = target;
    opts.orientation_cap = c.orientation_cap();
    TreeDecomposition td;
    if (!treedec_path.empty()) {
      td = load_or_heuristic_treedec(lg.graph, treedec_path);
      opts.treedec = &td;
    }
    bundle = run_pipeline(lg.graph, preset, opts);
  }
  if (!out_dir.empty()) write_bundle(bundle, out_dir);
  std::cout << bundle.summary;
  return 0;
}

int cmd_export_dot(const Common& c, const std::string& graph_path, const std::string& cuts_path,
                   const std::string& tree_path, int flow_target) {
  LabeledGraph lg = load_graph(graph_path);
  DotOverlays overlays;
  overlays.labels = &lg.labels;

  CutFamily cuts;
  if (!cuts_path.empty()) {
    cuts = read_family_json(lg.graph, read_text_file(cuts_path));
    overlays.cuts = &cuts;
  }
  std::vector<Edge> tree;
  if (!tree_path.empty()) {
    json j = json::parse(read_text_file(tree_path), nullptr, true, true);
    for (const json& e : j.at("edges")) tree.emplace_back(e[0].get<int>(), e[1].get<int>());
    overlays.tree_edges = &tree;
  }
  FlowForest ff;
  if (flow_target >= 0) {
    Arrangement arr = Arrangement::build(MedianGraph::verify(lg.graph));
    ff = flow_forest(arr, principal_target(arr, flow_target));
    overlays.flow = &ff;
  }
  emit(c, export_dot(lg.graph, overlays));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"median graphs, half-spaces and tree extraction"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_flag("--json", common.as_json, "JSON output where text is the default");
  app.add_flag("--dot", common.as_dot, "DOT output where applicable");
  app.add_option("--seed", common.seed, "override generator seeds");
  app.add_option("--cap", common.cap, "orientation / generation cap");
  app.add_option("-o,--out", common.out, "write output to a file");

  std::string graph_path, second_path, action, family, spec_text, preset_name;
  std::string stages_out, emit_path, out_dir;
  std::vector<int> bounded;
  int center = -1, radius = 4, degree = 3, target = 0, flow_target = -1;

  CLI::App* check = app.add_subcommand("check-median", "run the median recognition check");
  check->add_option("graph", graph_path)->required();

  CLI::App* hyper = app.add_subcommand("hyperplanes", "half-space classes and adjacency");
  hyper->add_option("graph", graph_path)->required();

  CLI::App* dual = app.add_subcommand("dual", "dual median graph of a pocset or walling");
  dual->add_option("input", second_path)->required();

  CLI::App* stree = app.add_subcommand("spanning-tree", "staged canonical spanning tree");
  stree->add_option("graph", graph_path)->required();
  stree->add_option("--bounded", bounded, "degree and diameter premises")->expected(2);
  stree->add_option("--stages-json", stages_out, "write the stage data to a file");

  CLI::App* radial = app.add_subcommand("radial-cuts", "components of ball complements");
  radial->add_option("graph", graph_path)->required();
  radial->add_option("--center", center);
  radial->add_option("--radius", radius);

  CLI::App* conn = app.add_subcommand("connectify", "repair a cut family to connected sides");
  conn->add_option("graph", graph_path)->required();
  conn->add_option("family", second_path)->required();

  CLI::App* treedec = app.add_subcommand("treedec", "tree decomposition utilities");
  treedec->add_option("action", action, "validate | shrink | prune | cuts")->required();
  treedec->add_option("graph", graph_path)->required();
  treedec->add_option("treedec", second_path, "decomposition file; heuristic when omitted");

  CLI::App* flow = app.add_subcommand("flow", "end-directed step map and orbits");
  flow->add_option("graph", graph_path);
  flow->add_option("--target", target);
  flow->add_option("--family", family, "window family instead of a graph file");
  flow->add_option("--radius", radius);
  flow->add_option("--degree", degree);
  flow->add_option("--emit", emit_path, "write orbit data to a file");

  CLI::App* hypfin = app.add_subcommand("hypfin-witness", "increasing partition witness");
  hypfin->add_option("walling", second_path)->required();
  bool rank = false;
  hypfin->add_flag("--rank", rank, "use the poset-rank variant");

  CLI::App* gen = app.add_subcommand("generate", "materialize a corpus graph");
  gen->add_option("spec", spec_text)->required();

  CLI::App* pipe = app.add_subcommand("pipeline", "run a named preset end to end");
  pipe->add_option("preset", preset_name)->required();
  pipe->add_option("graph", graph_path);
  pipe->add_option("--family", family);
  pipe->add_option("--radius", radius);
  pipe->add_option("--degree", degree);
  pipe->add_option("--target", target);
  pipe->add_option("--treedec", second_path);
  pipe->add_option("--out", out_dir, "bundle directory");

  CLI::App* dot = app.add_subcommand("export-dot", "deterministic DOT with overlays");
  dot->add_option("graph", graph_path)->required();
  dot->add_option("--cuts", second_path);
  dot->add_option("--tree", stages_out);
  dot->add_option("--flow-target", flow_target);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check_median(common, graph_path);
    if (hyper->parsed()) return cmd_hyperplanes(common, graph_path);
    if (dual->parsed()) return cmd_dual(common, second_path);
    if (stree->parsed()) return cmd_spanning_tree(common, graph_path, bounded, stages_out);
    if (radial->parsed()) return cmd_radial_cuts(common, graph_path, center, radius);
    if (conn->parsed()) return cmd_connectify(common, graph_path, second_path);
    if (treedec->parsed()) return cmd_treedec(common, action, graph_path, second_path);
    if (flow->parsed()) return cmd_flow(common, graph_path, target, family, radius, degree, emit_path);
    if (hypfin->parsed()) return cmd_hypfin_witness(common, second_path, rank);
    if (gen->parsed()) return cmd_generate(common, spec_text);
    if (pipe->parsed()) {
      return cmd_pipeline(common, preset_name, graph_path, family, radius, degree, target,
                          second_path, out_dir);
    }
    if (dot->parsed()) return cmd_export_dot(common, graph_path, second_path, stages_out, flow_target);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
