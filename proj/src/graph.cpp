#include "specdev/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace specdev {

Graph::Graph(int n) : n_(n), stride_((n + 63) / 64) {
  bits_.assign(static_cast<std::size_t>(n_) * stride_, 0);
}

void Graph::add_edge_unchecked(int u, int v) {
  bits_[static_cast<std::size_t>(u) * stride_ + (v >> 6)] |= 1ull << (v & 63);
  bits_[static_cast<std::size_t>(v) * stride_ + (u >> 6)] |= 1ull << (u & 63);
}

void Graph::finalize() {
  degrees_.resize(static_cast<std::size_t>(n_));
  std::int64_t twice_m = 0;
  for (int u = 0; u < n_; ++u) {
    int d = 0;
    const std::uint64_t* row = bits_.data() + static_cast<std::size_t>(u) * stride_;
    for (int w = 0; w < stride_; ++w) d += std::popcount(row[w]);
    degrees_[static_cast<std::size_t>(u)] = d;
    max_degree_ = std::max(max_degree_, d);
    twice_m += d;
  }
  m_ = twice_m / 2;
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  if (n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) +
                                " exceeds cap " + std::to_string(kMaxVertices));
  }
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") out of range [0," +
                                  std::to_string(n) + ")");
    }
    if (u == v) {
      throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    }
    g.add_edge_unchecked(u, v);
  }
  g.finalize();
  return g;
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
  if (n < 1 || n > 11) {
    throw std::invalid_argument("from_edge_mask needs 1 <= n <= 11");
  }
  const int pairs = n * (n - 1) / 2;
  if (pairs < 64 && (mask >> pairs) != 0) {
    throw std::invalid_argument("edge mask has bits beyond pair count");
  }
  Graph g(n);
  int k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      if ((mask >> k) & 1u) g.add_edge_unchecked(u, v);
    }
  }
  g.finalize();
  return g;
}

DegreeStats degree_stats(const Graph& g) {
  const int n = g.vertex_count();
  const std::int64_t two_m = 2 * g.edge_count();

  DegreeStats st;
  st.degrees = g.degrees();
  st.avg_degree = Rational(two_m, n);
  st.avg_degree.canonicalize();

  // s = sum_v |n*d(v) - 2m| / n, accumulated as an integer numerator
  BigInt s_num = 0;
  for (int v = 0; v < n; ++v) {
    std::int64_t dev = static_cast<std::int64_t>(n) * g.degree(v) - two_m;
    s_num += dev < 0 ? -dev : dev;
  }
  st.s = Rational(s_num, BigInt(n));
  st.s.canonicalize();

  st.d_ceil = static_cast<long>((two_m + n - 1) / n);  // ceil(2m/n), n >= 1
  for (int v = 0; v < n; ++v) {
    (g.degree(v) >= st.d_ceil ? st.partition_high : st.partition_low).push_back(v);
  }
  return st;
}

Rational high_side_deviation(const DegreeStats& st) {
  Rational total(0);
  for (int v : st.partition_high) {
    total += Rational(st.degrees[static_cast<std::size_t>(v)]) - st.avg_degree;
  }
  return total;
}

bool half_deviation_identity_holds(const DegreeStats& st) {
  return high_side_deviation(st) * 2 == st.s;
}

Graph blow_up(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("blow-up factor must be >= 1");
  const std::int64_t n_out = static_cast<std::int64_t>(g.vertex_count()) * t;
  if (n_out > kMaxVertices) {
    throw std::invalid_argument("blow-up would create " + std::to_string(n_out) +
                                " vertices, cap is " + std::to_string(kMaxVertices));
  }
  Graph out(static_cast<int>(n_out));
  g.for_each_edge([&](int u, int v) {
    for (int i = 0; i < t; ++i) {
      for (int j = 0; j < t; ++j) {
        out.add_edge_unchecked(u * t + i, v * t + j);
      }
    }
  });
  out.finalize();
  return out;
}

std::vector<std::vector<int>> component_vertex_sets(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> comps;
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::vector<int> comp;
    stack.push_back(root);
    seen[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      g.for_each_neighbor(u, [&](int v) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          stack.push_back(v);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<GraphComponent> connected_components(const Graph& g) {
  std::vector<GraphComponent> out;
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (auto& comp : component_vertex_sets(g)) {
    for (std::size_t i = 0; i < comp.size(); ++i) {
      local[static_cast<std::size_t>(comp[i])] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : comp) {
      g.for_each_neighbor(u, [&](int v) {
        if (v > u) edges.emplace_back(local[static_cast<std::size_t>(u)],
                                      local[static_cast<std::size_t>(v)]);
      });
    }
    out.push_back({Graph::from_edge_list(static_cast<int>(comp.size()), edges),
                   std::move(comp)});
  }
  return out;
}

}  // namespace specdev
