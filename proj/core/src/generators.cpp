#include "treelike/generators.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <stdexcept>

namespace treelike {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) throw std::invalid_argument("generator spec: expected '" + std::string(1, c) + "' in " + s);
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    if (start == pos) throw std::invalid_argument("generator spec: expected a name in " + s);
    return s.substr(start, pos - start);
  }

  int number() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("generator spec: expected a number in " + s);
    return std::stoi(s.substr(start, pos - start));
  }

  GeneratorSpec spec() {
    std::string name = ident();
    GeneratorSpec g;
    if (name == "hypercube") {
      g.kind = GeneratorSpec::Kind::hypercube;
      expect('(');
      g.args = {number()};
      expect(')');
    } else if (name == "grid") {
      g.kind = GeneratorSpec::Kind::grid;
      expect('(');
      g.args = {number()};
      expect(',');
      g.args.push_back(number());
      expect(')');
    } else if (name == "random_tree") {
      g.kind = GeneratorSpec::Kind::random_tree;
      expect('(');
      g.args = {number()};
      expect(',');
      g.args.push_back(number());
      expect(')');
    } else if (name == "median_closure") {
      g.kind = GeneratorSpec::Kind::median_closure;
      expect('(');
      g.args = {number()};
      expect(',');
      g.args.push_back(number());
      expect(',');
      g.args.push_back(number());
      expect(')');
    } else if (name == "staircase") {
      g.kind = GeneratorSpec::Kind::staircase;
      expect('(');
      g.args = {number()};
      expect(')');
    } else if (name == "product") {
      g.kind = GeneratorSpec::Kind::product;
      expect('(');
      g.factors.push_back(spec());
      expect(',');
      g.factors.push_back(spec());
      expect(')');
    } else {
      throw std::invalid_argument("generator spec: unknown generator " + name);
    }
    return g;
  }
};

void check_cap(long long vertices, int cap) {
  if (vertices > cap) {
    throw CapExceededError("generated graph would exceed the vertex cap", static_cast<uint64_t>(cap));
  }
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
  Parser p(text);
  GeneratorSpec g = p.spec();
  p.skip_ws();
  if (p.pos != text.size()) throw std::invalid_argument("generator spec: trailing input in " + text);
  return g;
}

std::string GeneratorSpec::text() const {
  auto join_args = [this]() {
    std::string out;
    for (size_t i = 0; i < args.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(args[i]);
    }
    return out;
  };
  switch (kind) {
    case Kind::hypercube: return "hypercube(" + join_args() + ")";
    case Kind::grid: return "grid(" + join_args() + ")";
    case Kind::random_tree: return "random_tree(" + join_args() + ")";
    case Kind::median_closure: return "median_closure(" + join_args() + ")";
    case Kind::staircase: return "staircase(" + join_args() + ")";
    case Kind::product: return "product(" + factors[0].text() + "," + factors[1].text() + ")";
  }
  throw std::invalid_argument("generator spec: unknown kind");
}

Graph hypercube_graph(int dim) {
  if (dim < 0 || dim > 20) throw std::invalid_argument("hypercube dimension out of range");
  int n = 1 << dim;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int b = 0; b < dim; ++b) {
      int w = v ^ (1 << b);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid sides must be positive");
  auto id = [cols](int r, int c) { return r * cols + c; };
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
    }
  }
  return Graph::from_edges(rows * cols, std::move(edges));
}

Graph random_tree_graph(int n, uint32_t seed) {
  if (n < 1) throw std::invalid_argument("tree size must be positive");
  std::mt19937 gen(seed);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    int parent = static_cast<int>(gen() % static_cast<uint32_t>(v));
    edges.emplace_back(parent, v);
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph product_graph(const Graph& a, const Graph& b) {
  int na = a.vertex_count(), nb = b.vertex_count();
  auto id = [nb](int i, int j) { return i * nb + j; };
  std::vector<Edge> edges;
  for (int i = 0; i < na; ++i) {
    for (auto [u, v] : b.edges()) edges.emplace_back(id(i, u), id(i, v));
  }
  for (auto [u, v] : a.edges()) {
    for (int j = 0; j < nb; ++j) edges.emplace_back(id(u, j), id(v, j));
  }
  return Graph::from_edges(na * nb, std::move(edges));
}

Graph staircase_graph(int radius) {
  if (radius < 1) throw std::invalid_argument("staircase radius must be at least 1");
  std::vector<std::pair<int, int>> coords;
  std::vector<std::vector<int>> id(radius + 1, std::vector<int>(radius + 1, -1));
  for (int a = 0; a <= radius; ++a) {
    for (int b = 0; b <= radius; ++b) {
      if (b - a < -2 || b - a > 3) continue;
      id[a][b] = static_cast<int>(coords.size());
      coords.emplace_back(a, b);
    }
  }
  std::vector<Edge> edges;
  for (size_t v = 0; v < coords.size(); ++v) {
    auto [a, b] = coords[v];
    if (a + 1 <= radius && id[a + 1][b] >= 0) edges.emplace_back(static_cast<int>(v), id[a + 1][b]);
    if (b + 1 <= radius && id[a][b + 1] >= 0) edges.emplace_back(static_cast<int>(v), id[a][b + 1]);
  }
  return Graph::from_edges(static_cast<int>(coords.size()), std::move(edges));
}

Graph median_closure_graph(int dim, int seeds, uint32_t seed, int vertex_cap) {
  if (dim < 1 || dim > 20) throw std::invalid_argument("closure dimension out of range");
  if (seeds < 1) throw std::invalid_argument("closure needs at least one seed");
  uint32_t space = uint32_t{1} << dim;
  if (static_cast<uint32_t>(seeds) > space) throw std::invalid_argument("more seeds than points");

  std::mt19937 gen(seed);
  std::set<uint32_t> closed;
  while (closed.size() < static_cast<size_t>(seeds)) closed.insert(gen() % space);

  // close under coordinatewise majority; each round only needs triples
  // touching the previous round's additions
  std::vector<uint32_t> fresh(closed.begin(), closed.end());
  while (!fresh.empty()) {
    std::vector<uint32_t> all(closed.begin(), closed.end());
    std::vector<uint32_t> next;
    for (uint32_t a : fresh) {
      for (size_t j = 0; j < all.size(); ++j) {
        for (size_t k = j; k < all.size(); ++k) {
          uint32_t b = all[j], c = all[k];
          uint32_t m = (a & b) | (a & c) | (b & c);
          if (closed.insert(m).second) {
            check_cap(static_cast<long long>(closed.size()), vertex_cap);
            next.push_back(m);
          }
        }
      }
    }
    fresh = std::move(next);
  }

  std::vector<uint32_t> members(closed.begin(), closed.end());
  std::vector<Edge> edges;
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = i + 1; j < members.size(); ++j) {
      uint32_t diff = members[i] ^ members[j];
      if (diff && (diff & (diff - 1)) == 0) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return Graph::from_edges(static_cast<int>(members.size()), std::move(edges));
}

namespace {

Graph materialize(const GeneratorSpec& spec, int cap) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::hypercube:
      check_cap(1LL << std::min(spec.args[0], 62), cap);
      return hypercube_graph(spec.args[0]);
    case GeneratorSpec::Kind::grid:
      check_cap(static_cast<long long>(spec.args[0]) * spec.args[1], cap);
      return grid_graph(spec.args[0], spec.args[1]);
    case GeneratorSpec::Kind::random_tree:
      check_cap(spec.args[0], cap);
      return random_tree_graph(spec.args[0], static_cast<uint32_t>(spec.args[1]));
    case GeneratorSpec::Kind::median_closure:
      return median_closure_graph(spec.args[0], spec.args[1], static_cast<uint32_t>(spec.args[2]), cap);
    case GeneratorSpec::Kind::staircase:
      return staircase_graph(spec.args[0]);
    case GeneratorSpec::Kind::product: {
      Graph a = materialize(spec.factors[0], cap);
      Graph b = materialize(spec.factors[1], cap);
      check_cap(static_cast<long long>(a.vertex_count()) * b.vertex_count(), cap);
      return product_graph(a, b);
    }
  }
  throw std::invalid_argument("generator spec: unknown kind");
}

}  // namespace

MedianGraph generate(const GeneratorSpec& spec, int vertex_cap) {
  Graph g = materialize(spec, vertex_cap);
  check_cap(g.vertex_count(), vertex_cap);
  return MedianGraph::verify(std::move(g));
}

MedianGraph generate(const std::string& spec, int vertex_cap) {
  return generate(GeneratorSpec::parse(spec), vertex_cap);
}

}  // namespace treelike
