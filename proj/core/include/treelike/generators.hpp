#pragma once

#include <string>
#include <vector>

#include "treelike/median.hpp"
#include "treelike/pocset.hpp"

namespace treelike {

constexpr int kDefaultGenerateCap = 4096;

// Recipe for a corpus graph. Parsed from strings like
//   hypercube(3)  grid(3,4)  random_tree(20,7)  staircase(6)
//   median_closure(5,4,9)  product(grid(2,2),hypercube(1))
struct GeneratorSpec {
  enum class Kind { hypercube, grid, random_tree, product, median_closure, staircase };

  Kind kind;
  std::vector<int> args;
  std::vector<GeneratorSpec> factors;  // product only

  static GeneratorSpec parse(const std::string& text);
  std::string text() const;
};

// Materializes the recipe and runs the median check on the result.
// Throws CapExceededError when the vertex count would exceed the cap.
MedianGraph generate(const GeneratorSpec& spec, int vertex_cap = kDefaultGenerateCap);
MedianGraph generate(const std::string& spec, int vertex_cap = kDefaultGenerateCap);

// Building blocks, exposed for tests.
Graph hypercube_graph(int dim);
Graph grid_graph(int rows, int cols);
Graph random_tree_graph(int n, uint32_t seed);
Graph product_graph(const Graph& a, const Graph& b);
Graph staircase_graph(int radius);

// Random subsets of {0,1}^dim closed under coordinatewise majority,
// as an induced subgraph of the hypercube.
Graph median_closure_graph(int dim, int seeds, uint32_t seed, int vertex_cap = kDefaultGenerateCap);

}  // namespace treelike
