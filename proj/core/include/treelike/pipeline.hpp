#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "treelike/end_flow.hpp"
#include "treelike/pocset.hpp"
#include "treelike/treedec.hpp"

namespace treelike {

constexpr int kPipelineSchemaVersion = 1;

enum class PipelinePreset { median_to_tree, quasitree_to_tree, treedec_to_tree, end_to_forest };

PipelinePreset parse_preset(const std::string& name);
std::string to_string(PipelinePreset preset);

struct PipelineOptions {
  int target = 0;  // flow target for end-to-forest
  uint64_t orientation_cap = kDefaultOrientationCap;
  // external decomposition for treedec-to-tree; requires a connected host.
  // The heuristic is used when absent.
  const TreeDecomposition* treedec = nullptr;
};

// A stage's contract violation aborts the whole run.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string stage_name, int component_rep, const std::string& message)
      : std::runtime_error("pipeline stage " + stage_name + " (component " +
                           std::to_string(component_rep) + "): " + message),
        stage(std::move(stage_name)),
        component(component_rep) {}
  std::string stage;
  int component;
};

struct PipelineArtifact {
  std::string name;  // bundle-relative path
  std::string content;
};

// Deterministic report bundle: artifacts sorted by name plus summary.json.
// Components are processed independently (concurrently when several) with
// local vertex ids, then merged in representative order, so a run on a
// disjoint union matches the per-component runs artifact for artifact.
struct PipelineBundle {
  std::vector<PipelineArtifact> artifacts;
  std::string summary;
};

PipelineBundle run_pipeline(const Graph& g, PipelinePreset preset, const PipelineOptions& opts = {});

// end-to-forest over a window's certified structure.
PipelineBundle run_pipeline(const WindowedFamily& w);

void write_bundle(const PipelineBundle& bundle, const std::string& directory);

}  // namespace treelike
