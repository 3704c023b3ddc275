#include "treelike/median.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace treelike {

namespace {

// Interval membership bitsets for all pairs, packed row-major by (x, y).
struct IntervalTable {
  int n = 0;
  size_t words_per_set = 0;
  std::vector<uint64_t> data;

  const uint64_t* row(int x, int y) const {
    return data.data() + (static_cast<size_t>(x) * n + y) * words_per_set;
  }
};

IntervalTable build_intervals(const Graph& g) {
  IntervalTable t;
  t.n = g.vertex_count();
  t.words_per_set = (static_cast<size_t>(t.n) + 63) / 64;
  t.data.assign(static_cast<size_t>(t.n) * t.n * t.words_per_set, 0);
  for (int x = 0; x < t.n; ++x) {
    auto dx = g.dist_row(x);
    for (int y = x; y < t.n; ++y) {
      auto dy = g.dist_row(y);
      uint64_t* row_xy = t.data.data() + (static_cast<size_t>(x) * t.n + y) * t.words_per_set;
      uint64_t* row_yx = t.data.data() + (static_cast<size_t>(y) * t.n + x) * t.words_per_set;
      int32_t dxy = dx[y];
      for (int z = 0; z < t.n; ++z) {
        if (dx[z] + dy[z] == dxy) {
          row_xy[z >> 6] |= uint64_t{1} << (z & 63);
        }
      }
      if (y != x) {
        std::copy(row_xy, row_xy + t.words_per_set, row_yx);
      }
    }
  }
  return t;
}

}  // namespace

MedianCertificate check_median(const Graph& g) {
  if (!g.connected()) throw std::invalid_argument("check_median requires a connected graph");
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("check_median requires a nonempty graph");
  IntervalTable t = build_intervals(g);
  size_t wps = t.words_per_set;
  std::vector<uint64_t> buf(wps);
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      const uint64_t* xy = t.row(x, y);
      for (int z = y; z < n; ++z) {
        const uint64_t* yz = t.row(y, z);
        const uint64_t* zx = t.row(z, x);
        int cnt = 0;
        for (size_t w = 0; w < wps; ++w) {
          buf[w] = xy[w] & yz[w] & zx[w];
          cnt += __builtin_popcountll(buf[w]);
        }
        if (cnt != 1) {
          Bitset inter(n);
          for (int v = 0; v < n; ++v) {
            if ((buf[v >> 6] >> (v & 63)) & 1u) inter.set(v);
          }
          return {false, MedianWitness{x, y, z, std::move(inter)}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

MedianGraph MedianGraph::verify(Graph g) {
  MedianCertificate cert = check_median(g);
  if (!cert.accepted) {
    auto& w = *cert.witness;
    std::ostringstream msg;
    msg << "not a median graph: triple (" << w.x << ", " << w.y << ", " << w.z
        << ") has interval intersection of size " << w.intersection.count();
    throw NotMedianError(msg.str(), std::move(w));
  }
  return MedianGraph(std::move(g));
}

MedianGraph MedianGraph::assume_median(Graph g) { return MedianGraph(std::move(g)); }

int median_vertex(const MedianGraph& m, int x, int y, int z) {
  const Graph& g = m.graph();
  g.check_vertex(x);
  g.check_vertex(y);
  g.check_vertex(z);
  auto dx = g.dist_row(x), dy = g.dist_row(y), dz = g.dist_row(z);
  int32_t dxy = dx[y], dyz = dy[z], dzx = dz[x];
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (dx[v] + dy[v] == dxy && dy[v] + dz[v] == dyz && dz[v] + dx[v] == dzx) return v;
  }
  throw std::logic_error("median vertex not found on a verified median graph");
}

Bitset cone(const Graph& g, int x, int y) {
  g.check_vertex(x);
  g.check_vertex(y);
  Bitset out(g.vertex_count());
  auto dx = g.dist_row(x), dy = g.dist_row(y);
  int32_t dxy = dx[y];
  if (dxy < 0) return out;  // different components: nothing is behind y
  for (int z = 0; z < g.vertex_count(); ++z) {
    if (dy[z] >= 0 && dx[z] == dxy + dy[z]) out.set(z);
  }
  return out;
}

int gate_projection(const MedianGraph& m, const Bitset& a, int x) {
  const Graph& g = m.graph();
  g.check_vertex(x);
  if (a.universe() != g.vertex_count()) throw std::invalid_argument("set universe mismatch");
  if (a.none()) throw std::invalid_argument("gate projection onto an empty set");
  if (a.test(x)) return x;
  int cur = a.first();
  auto dx = g.dist_row(x);
  for (;;) {
    bool moved = false;
    auto dc = g.dist_row(cur);
    for (int v = a.first(); v >= 0; v = a.next(v)) {
      // v violates cur ∈ [x, v]
      if (dx[cur] + dc[v] != dx[v]) {
        cur = median_vertex(m, x, v, cur);
        // the median of x and two members stays inside a convex set
        if (!a.test(cur)) throw std::invalid_argument("gate_projection requires a convex set");
        moved = true;
        break;
      }
    }
    if (!moved) return cur;
  }
}

Bitset convex_hull(const MedianGraph& m, const Bitset& a) {
  const Graph& g = m.graph();
  if (a.universe() != g.vertex_count()) throw std::invalid_argument("set universe mismatch");
  Bitset cur = a;
  for (;;) {
    Bitset next = cur;
    auto members = cur.to_vector();
    for (size_t i = 0; i < members.size(); ++i) {
      for (size_t j = i + 1; j < members.size(); ++j) {
        next |= interval(g, members[i], members[j]);
      }
    }
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

}  // namespace treelike
