#include "treelike/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <future>

#include "json.hpp"
#include "treelike/io.hpp"
#include "treelike/tree_extract.hpp"

namespace treelike {

namespace {

using nlohmann::json;

constexpr int kDualVerifyLimit = 512;  // check_median is cubic; assume above this

struct ComponentRun {
  int representative;
  std::vector<int> global_ids;  // local -> global
  std::vector<PipelineArtifact> artifacts;
  json stages = json::array();
};

void add_artifact(ComponentRun& run, const std::string& name, std::string content) {
  run.artifacts.push_back({name, std::move(content)});
}

void add_stage(ComponentRun& run, const std::string& name, json detail) {
  detail["name"] = name;
  run.stages.push_back(std::move(detail));
}

json coloring_json(const HalfspaceColoring& c) {
  return json{{"color_of_pair", c.color_of_pair}, {"color_count", c.color_count}};
}

json staged_forest_json(const StagedForest& sf) {
  json stages = json::array();
  for (const auto& edges : sf.stage_edges) {
    json e = json::array();
    for (auto [u, v] : edges) e.push_back({u, v});
    stages.push_back(std::move(e));
  }
  return json{{"stage_edges", std::move(stages)}, {"stage_blocks", sf.stage_blocks}};
}

json en_json(const EnReport& rep) {
  json roots = json::array();
  for (const auto& level : rep.roots) {
    json obj = json::object();
    for (const auto& [cls, rs] : level) obj[std::to_string(cls)] = rs;
    roots.push_back(std::move(obj));
  }
  return json{{"classes", rep.classes},
              {"roots", std::move(roots)},
              {"orbit_count", rep.orbit_count},
              {"finitely_many_orbits", rep.finitely_many_orbits}};
}

// Shared tail: cut family -> walling -> dual -> spanning tree of the dual.
void walling_tail(ComponentRun& run, const Graph& g, const CutFamily& family, uint64_t cap) {
  std::vector<Bitset> sides;
  for (const Cut& c : family.cuts) sides.push_back(c.side);
  Walling w = Walling::close(g.vertex_count(), std::move(sides));
  add_artifact(run, "walling.json", write_walling_json(w));

  ProperWallingReport report = proper_walling_report(w);
  FinitenessReport fin = walling_finiteness_check(g, family);
  json report_json{{"wall_count", report.wall_count},
                   {"nontrivial_wall_count", report.nontrivial_wall_count},
                   {"max_block_size", report.max_block_size},
                   {"max_non_nested", report.max_non_nested},
                   {"max_successors", report.max_successors},
                   {"max_separating", report.max_separating},
                   {"max_boundary_count", fin.max_count}};
  add_artifact(run, "walling-report.json", report_json.dump(2) + "\n");
  add_stage(run, "walling-check", report_json);

  WallDual dual = [&] {
    try {
      return wall_dual(w, cap);
    } catch (const CapExceededError& e) {
      throw PipelineError("dual", run.representative, e.what());
    }
  }();
  json dual_json = json::parse(write_graph_json(dual.dual.graph));
  dual_json["principal"] = dual.principal;
  add_artifact(run, "dual.json", dual_json.dump(2) + "\n");
  add_stage(run, "dual", {{"vertices", dual.dual.graph.vertex_count()}});

  bool verify = dual.dual.graph.vertex_count() <= kDualVerifyLimit;
  MedianGraph m = [&] {
    try {
      return verify ? MedianGraph::verify(dual.dual.graph) : MedianGraph::assume_median(dual.dual.graph);
    } catch (const NotMedianError& e) {
      throw PipelineError("dual-median", run.representative, e.what());
    }
  }();
  add_stage(run, "dual-median", {{"verified", verify}});

  Arrangement arr = Arrangement::build(m);
  HalfspaceColoring coloring = color_halfspaces(arr);
  StagedForest sf = extract_spanning_tree(arr, coloring);
  add_artifact(run, "dual-coloring.json", coloring_json(coloring).dump(2) + "\n");
  add_artifact(run, "dual-stages.json", staged_forest_json(sf).dump(2) + "\n");
  json tree = json::array();
  if (!sf.stage_edges.empty()) {
    for (auto [u, v] : sf.stage_edges.back()) tree.push_back({u, v});
  }
  add_artifact(run, "dual-tree.json", json{{"edges", std::move(tree)}}.dump(2) + "\n");
  add_stage(run, "spanning-tree",
            {{"stages", static_cast<int>(sf.stage_edges.size())},
             {"edges", sf.stage_edges.empty() ? 0 : static_cast<int>(sf.stage_edges.back().size())}});
}

MedianGraph verified_stage(ComponentRun& run, const Graph& g) {
  try {
    MedianGraph m = MedianGraph::verify(g);
    add_stage(run, "check-median", {{"accepted", true}, {"vertices", g.vertex_count()}});
    return m;
  } catch (const NotMedianError& e) {
    throw PipelineError("check-median", run.representative, e.what());
  }
}

void run_median_to_tree(ComponentRun& run, const Graph& g) {
  MedianGraph m = verified_stage(run, g);
  Arrangement arr = Arrangement::build(m);
  add_artifact(run, "hyperplanes.json", write_hyperplanes_json(arr));
  add_stage(run, "hyperplanes", {{"pairs", arr.pair_count()}});

  HalfspaceColoring coloring = color_halfspaces(arr);
  add_artifact(run, "coloring.json", coloring_json(coloring).dump(2) + "\n");
  add_stage(run, "coloring", {{"colors", coloring.color_count}});

  StagedForest sf = extract_spanning_tree(arr, coloring);
  add_artifact(run, "stages.json", staged_forest_json(sf).dump(2) + "\n");
  json tree = json::array();
  if (!sf.stage_edges.empty()) {
    for (auto [u, v] : sf.stage_edges.back()) tree.push_back({u, v});
  }
  add_artifact(run, "tree.json", json{{"edges", std::move(tree)}}.dump(2) + "\n");
  add_stage(run, "spanning-tree",
            {{"stages", static_cast<int>(sf.stage_edges.size())},
             {"edges", sf.stage_edges.empty() ? 0 : static_cast<int>(sf.stage_edges.back().size())}});

  int r = 0;
  for (const HyperplaneClass& c : arr.classes()) r = std::max(r, c.boundary_diameter);
  QuasiIsometryReport qi = verify_quasi_isometry(arr, sf, r);
  if (!qi.within) throw PipelineError("quasi-isometry", run.representative, "stage distance bound violated");
  add_artifact(run, "qi.json",
               json{{"r", r}, {"bound", qi.bound}, {"observed_max", qi.observed_max}, {"within", qi.within}}
                       .dump(2) +
                   "\n");
  add_stage(run, "quasi-isometry", {{"r", r}, {"within", qi.within}});
}

void run_quasitree_to_tree(ComponentRun& run, const Graph& g, uint64_t cap) {
  CutFamily radial = all_radial_cuts(g);
  add_artifact(run, "cuts.json", write_family_json(radial));
  add_stage(run, "radial-cuts", {{"cuts", static_cast<int>(radial.cuts.size())}});

  CutFamily connected = connectify(g, radial);
  add_artifact(run, "connectified.json", write_family_json(connected));
  add_stage(run, "connectify", {{"cuts", static_cast<int>(connected.cuts.size())}});

  walling_tail(run, g, connected, cap);
}

void run_treedec_to_tree(ComponentRun& run, const Graph& g, const TreeDecomposition* provided, uint64_t cap) {
  const TreeDecomposition* td = provided;
  TreeDecomposition own;
  if (!td) {
    own = heuristic_treedec(g);
    td = &own;
  }
  add_artifact(run, "treedec.json", write_treedec_json(*td));
  add_stage(run, "treedec", {{"width", width(*td)}, {"nodes", td->skeleton.vertex_count()}});

  CutFamily cuts = treedec_cuts(*td, true);
  add_artifact(run, "cuts.json", write_family_json(cuts));
  add_stage(run, "treedec-cuts", {{"cuts", static_cast<int>(cuts.cuts.size())}});

  walling_tail(run, g, cuts, cap);
}

void run_end_to_forest(ComponentRun& run, const Graph& g, int target) {
  MedianGraph m = verified_stage(run, g);
  Arrangement arr = Arrangement::build(m);
  add_stage(run, "hyperplanes", {{"pairs", arr.pair_count()}});

  EndTarget u = principal_target(arr, target);
  FlowForest ff = flow_forest(arr, u);
  add_artifact(run, "flow.json", write_flow_json(arr, u, ff));
  add_stage(run, "flow",
            {{"target", target}, {"fixed", static_cast<int>(ff.fixed.size())}});

  std::vector<int> orbits = ff.orbit;
  std::sort(orbits.begin(), orbits.end());
  orbits.erase(std::unique(orbits.begin(), orbits.end()), orbits.end());
  EnReport rep = e_n_sequence(arr, u, static_cast<int>(orbits.size()));
  add_artifact(run, "en.json", en_json(rep).dump(2) + "\n");
  add_stage(run, "en-sequence",
            {{"levels", static_cast<int>(rep.classes.size())}, {"orbits", rep.orbit_count}});
}

ComponentRun run_component(const Graph& g, const std::vector<int>& global_ids, int representative,
                           PipelinePreset preset, const PipelineOptions& opts) {
  ComponentRun run;
  run.representative = representative;
  run.global_ids = global_ids;
  add_artifact(run, "graph.json", write_graph_json(g));
  add_artifact(run, "vertices.json", json(global_ids).dump(2) + "\n");

  switch (preset) {
    case PipelinePreset::median_to_tree:
      run_median_to_tree(run, g);
      break;
    case PipelinePreset::quasitree_to_tree:
      run_quasitree_to_tree(run, g, opts.orientation_cap);
      break;
    case PipelinePreset::treedec_to_tree:
      run_treedec_to_tree(run, g, opts.treedec, opts.orientation_cap);
      break;
    case PipelinePreset::end_to_forest: {
      int local_target = 0;
      for (size_t i = 0; i < global_ids.size(); ++i) {
        if (global_ids[i] == opts.target) local_target = static_cast<int>(i);
      }
      run_end_to_forest(run, g, local_target);
      break;
    }
  }
  return run;
}

}  // namespace

PipelinePreset parse_preset(const std::string& name) {
  if (name == "median-to-tree") return PipelinePreset::median_to_tree;
  if (name == "quasitree-to-tree") return PipelinePreset::quasitree_to_tree;
  if (name == "treedec-to-tree") return PipelinePreset::treedec_to_tree;
  if (name == "end-to-forest") return PipelinePreset::end_to_forest;
  throw std::invalid_argument("unknown pipeline preset: " + name);
}

std::string to_string(PipelinePreset preset) {
  switch (preset) {
    case PipelinePreset::median_to_tree: return "median-to-tree";
    case PipelinePreset::quasitree_to_tree: return "quasitree-to-tree";
    case PipelinePreset::treedec_to_tree: return "treedec-to-tree";
    case PipelinePreset::end_to_forest: return "end-to-forest";
  }
  throw std::invalid_argument("unknown pipeline preset");
}

PipelineBundle run_pipeline(const Graph& g, PipelinePreset preset, const PipelineOptions& opts) {
  if (g.vertex_count() == 0) throw std::invalid_argument("pipeline needs a nonempty graph");
  if (opts.treedec && preset != PipelinePreset::treedec_to_tree) {
    throw std::invalid_argument("a decomposition input only fits treedec-to-tree");
  }
  if (opts.treedec && !g.connected()) {
    throw std::invalid_argument("an external decomposition needs a connected host");
  }
  if (preset == PipelinePreset::end_to_forest) g.check_vertex(opts.target);

  std::vector<int> comp = g.component_ids();
  std::vector<int> reps = comp;
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

  struct Piece {
    Graph graph;
    std::vector<int> global_ids;
    int representative;
  };
  std::vector<Piece> pieces;
  for (int r : reps) {
    Piece p;
    p.representative = r;
    std::vector<int> local(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (comp[v] == r) {
        local[v] = static_cast<int>(p.global_ids.size());
        p.global_ids.push_back(v);
      }
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
      if (comp[u] == r) edges.emplace_back(local[u], local[v]);
    }
    p.graph = Graph::from_edges(static_cast<int>(p.global_ids.size()), std::move(edges));
    pieces.push_back(std::move(p));
  }

  std::vector<ComponentRun> runs;
  if (pieces.size() == 1) {
    runs.push_back(run_component(pieces[0].graph, pieces[0].global_ids, pieces[0].representative,
                                 preset, opts));
  } else {
    std::vector<std::future<ComponentRun>> futures;
    for (const Piece& p : pieces) {
      futures.push_back(std::async(std::launch::async, [&p, preset, &opts] {
        return run_component(p.graph, p.global_ids, p.representative, preset, opts);
      }));
    }
    for (auto& f : futures) runs.push_back(f.get());
  }

  PipelineBundle bundle;
  json components = json::array();
  for (size_t i = 0; i < runs.size(); ++i) {
    std::string prefix = "component-" + std::to_string(i) + "/";
    for (PipelineArtifact& a : runs[i].artifacts) {
      bundle.artifacts.push_back({prefix + a.name, std::move(a.content)});
    }
    components.push_back({{"representative", runs[i].representative},
                          {"vertices", static_cast<int>(runs[i].global_ids.size())},
                          {"stages", std::move(runs[i].stages)}});
  }
  json summary{{"schema_version", kPipelineSchemaVersion},
               {"preset", to_string(preset)},
               {"ok", true},
               {"components", std::move(components)}};
  bundle.summary = summary.dump(2) + "\n";
  std::sort(bundle.artifacts.begin(), bundle.artifacts.end(),
            [](const PipelineArtifact& a, const PipelineArtifact& b) { return a.name < b.name; });
  return bundle;
}

PipelineBundle run_pipeline(const WindowedFamily& w) {
  PipelineBundle bundle;
  ComponentRun run;
  run.representative = 0;
  add_artifact(run, "window.json", write_graph_json(w.arr.graph()));
  add_stage(run, "window",
            {{"family", to_string(w.kind)},
             {"radius", w.radius},
             {"vertices", w.arr.graph().vertex_count()},
             {"certified", w.certified.count()}});

  FlowForest ff = flow_forest(w.arr, w.target);
  add_artifact(run, "orbits.json", write_orbits_json(w, ff));
  add_stage(run, "flow", {{"fixed", static_cast<int>(ff.fixed.size())}});

  std::vector<int> orbits = ff.orbit;
  std::sort(orbits.begin(), orbits.end());
  orbits.erase(std::unique(orbits.begin(), orbits.end()), orbits.end());
  EnReport rep = e_n_sequence(w.arr, w.target, static_cast<int>(orbits.size()));
  add_artifact(run, "en.json", en_json(rep).dump(2) + "\n");
  add_stage(run, "en-sequence",
            {{"levels", static_cast<int>(rep.classes.size())}, {"orbits", rep.orbit_count}});

  json components = json::array();
  std::string prefix = "component-0/";
  for (PipelineArtifact& a : run.artifacts) {
    bundle.artifacts.push_back({prefix + a.name, std::move(a.content)});
  }
  components.push_back({{"representative", 0},
                        {"vertices", w.arr.graph().vertex_count()},
                        {"stages", std::move(run.stages)}});
  json summary{{"schema_version", kPipelineSchemaVersion},
               {"preset", to_string(PipelinePreset::end_to_forest)},
               {"ok", true},
               {"components", std::move(components)}};
  bundle.summary = summary.dump(2) + "\n";
  std::sort(bundle.artifacts.begin(), bundle.artifacts.end(),
            [](const PipelineArtifact& a, const PipelineArtifact& b) { return a.name < b.name; });
  return bundle;
}

void write_bundle(const PipelineBundle& bundle, const std::string& directory) {
  namespace fs = std::filesystem;
  fs::create_directories(directory);
  for (const PipelineArtifact& a : bundle.artifacts) {
    fs::path path = fs::path(directory) / a.name;
    fs::create_directories(path.parent_path());
    write_text_file(path.string(), a.content);
  }
  write_text_file((fs::path(directory) / "summary.json").string(), bundle.summary);
}

}  // namespace treelike
