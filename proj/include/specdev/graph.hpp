#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "specdev/rational.hpp"

namespace specdev {

/// Hard cap on constructible graphs. Adjacency lives in packed bit rows
/// (n * ceil(n/64) words), so memory grows quadratically with n.
inline constexpr int kMaxVertices = 32768;

/// Immutable simple undirected graph. No loops, no multi-edges; adjacency
/// is symmetric by construction and the edge count is cached.
class Graph {
 public:
  /// Builds from an edge list. Duplicate edges (in either orientation)
  /// collapse silently; loops and out-of-range endpoints are errors.
  /// n = 0 is rejected: the degree statistics divide by n.
  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);

  /// Labeled-enumeration constructor: bit k of `mask` is vertex pair k in
  /// column-major order (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...
  /// Requires n(n-1)/2 <= 64, i.e. n <= 11.
  static Graph from_edge_mask(int n, std::uint64_t mask);

  int vertex_count() const noexcept { return n_; }
  std::int64_t edge_count() const noexcept { return m_; }

  bool adjacent(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * stride_ + (v >> 6)] >>
            (v & 63)) & 1u;
  }

  int degree(int u) const { return degrees_[static_cast<std::size_t>(u)]; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int max_degree() const noexcept { return max_degree_; }

  /// Visits neighbors of u in ascending order.
  template <typename F>
  void for_each_neighbor(int u, F&& f) const {
    const std::uint64_t* row = bits_.data() + static_cast<std::size_t>(u) * stride_;
    for (int w = 0; w < stride_; ++w) {
      std::uint64_t word = row[w];
      while (word) {
        f((w << 6) + std::countr_zero(word));
        word &= word - 1;
      }
    }
  }

  /// Visits each edge once as (u, v) with u < v, ascending.
  template <typename F>
  void for_each_edge(F&& f) const {
    for (int u = 0; u < n_; ++u) {
      for_each_neighbor(u, [&](int v) {
        if (v > u) f(u, v);
      });
    }
  }

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(int n);
  void add_edge_unchecked(int u, int v);
  void finalize();

  friend Graph blow_up(const Graph&, int);

  int n_ = 0;
  int stride_ = 0;  // 64-bit words per adjacency row
  std::int64_t m_ = 0;
  int max_degree_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<int> degrees_;
};

/// Exact degree statistics of a graph, all rationals unrounded.
/// The split point d_ceil = ceil(2m/n) partitions V into the vertices at or
/// above the average degree (partition_high = W_{>=d}) and the rest
/// (partition_low = W_{<=d-1}); when 2m/n is an integer, degree-d vertices
/// sit in partition_high and contribute zero deviation.
struct DegreeStats {
  std::vector<int> degrees;
  Rational avg_degree;             // 2m/n
  Rational s;                      // sum_v |d(v) - 2m/n|
  long d_ceil = 0;                 // ceil(2m/n)
  std::vector<int> partition_high; // W_{>=d}, ascending
  std::vector<int> partition_low;  // W_{<=d-1}, ascending
};

DegreeStats degree_stats(const Graph& g);

/// sum over partition_high of d(v) - 2m/n, exact. Equals s/2 on every
/// graph: positive and negative deviations cancel, and the high side is
/// precisely the set of nonnegative deviations.
Rational high_side_deviation(const DegreeStats& st);

bool half_deviation_identity_holds(const DegreeStats& st);

/// Replaces every vertex with an independent set of t copies; copies of u
/// and v are joined exactly when uv was an edge. n' = tn, m' = t^2 m.
/// Copy i of vertex u gets index u*t + i, so t = 1 returns an equal graph.
Graph blow_up(const Graph& g, int t);

struct GraphComponent {
  Graph graph;
  std::vector<int> vertices;  // original indices, ascending; local i -> vertices[i]
};

/// Maximal connected subgraphs, ordered by smallest contained vertex.
std::vector<GraphComponent> connected_components(const Graph& g);

/// Vertex sets of the connected components (no subgraph construction).
std::vector<std::vector<int>> component_vertex_sets(const Graph& g);

}  // namespace specdev
