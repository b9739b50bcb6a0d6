#include "specdev/generators.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace specdev {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

Graph from_edges(int n, const EdgeList& edges) {
  return Graph::from_edge_list(n, edges);
}

[[noreturn]] void reject(const std::string& msg) {
  throw std::invalid_argument("generator: " + msg);
}

}  // namespace

Graph make_star(int n) {
  if (n < 1) reject("star needs n >= 1");
  EdgeList e;
  for (int v = 1; v < n; ++v) e.emplace_back(0, v);
  return from_edges(n, e);
}

Graph make_path(int n) {
  if (n < 1) reject("path needs n >= 1");
  EdgeList e;
  for (int v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return from_edges(n, e);
}

Graph make_cycle(int n) {
  if (n < 3) reject("cycle needs n >= 3");
  EdgeList e;
  for (int v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  e.emplace_back(n - 1, 0);
  return from_edges(n, e);
}

Graph make_complete(int n) {
  if (n < 1) reject("complete needs n >= 1");
  EdgeList e;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) e.emplace_back(u, v);
  return from_edges(n, e);
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) reject("complete_bipartite needs both parts >= 1");
  EdgeList e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return from_edges(a + b, e);
}

Graph make_circulant_regular(int n, int k) {
  if (n < 1) reject("circulant needs n >= 1");
  if (k < 0 || k >= n) reject("circulant degree must satisfy 0 <= k < n");
  if (k % 2 == 1 && n % 2 == 1) {
    reject("odd circulant degree needs an even vertex count");
  }
  EdgeList e;
  for (int off = 1; off <= k / 2; ++off) {
    for (int u = 0; u < n; ++u) e.emplace_back(u, (u + off) % n);
  }
  if (k % 2 == 1) {
    for (int u = 0; u < n / 2; ++u) e.emplace_back(u, u + n / 2);
  }
  return from_edges(n, e);
}

Graph make_gnp(int n, double p, std::uint64_t seed) {
  if (n < 1) reject("gnp needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) reject("gnp needs 0 <= p <= 1");
  EdgeList e;
  std::uint64_t k = 0;  // pair counter, column-major like the rest of the code
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      if (counter_uniform01(seed, k) < p) e.emplace_back(u, v);
    }
  }
  return from_edges(n, e);
}

Graph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::star: return make_star(spec.n);
    case Family::path: return make_path(spec.n);
    case Family::cycle: return make_cycle(spec.n);
    case Family::complete: return make_complete(spec.n);
    case Family::complete_bipartite: return make_complete_bipartite(spec.n, spec.b);
    case Family::circulant_regular: return make_circulant_regular(spec.n, spec.b);
    case Family::gnp_random: return make_gnp(spec.n, spec.p, spec.seed);
  }
  reject("unknown family");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::star: return "star";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::circulant_regular: return "circulant_regular";
    case Family::gnp_random: return "gnp";
  }
  return "?";
}

namespace {

std::vector<std::string> split_colon(std::string_view text) {
  std::vector<std::string> parts;
  while (true) {
    auto pos = text.find(':');
    parts.emplace_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return parts;
}

int parse_int(const std::string& tok, const char* what) {
  int value = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    reject(std::string("bad ") + what + " '" + tok + "'");
  }
  return value;
}

}  // namespace

GenSpec parse_gen_spec(std::string_view text, std::uint64_t default_seed) {
  const auto parts = split_colon(text);
  const std::string& name = parts[0];
  GenSpec spec;
  spec.seed = default_seed;

  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() - 1 < lo || parts.size() - 1 > hi) {
      reject("'" + name + "' takes " + std::to_string(lo) +
             (hi > lo ? ".." + std::to_string(hi) : "") + " parameters");
    }
  };

  if (name == "star" || name == "path" || name == "cycle" || name == "complete") {
    spec.family = name == "star"       ? Family::star
                  : name == "path"     ? Family::path
                  : name == "cycle"    ? Family::cycle
                                       : Family::complete;
    arity(1, 1);
    spec.n = parse_int(parts[1], "vertex count");
  } else if (name == "complete_bipartite") {
    spec.family = Family::complete_bipartite;
    arity(2, 2);
    spec.n = parse_int(parts[1], "part size");
    spec.b = parse_int(parts[2], "part size");
  } else if (name == "circulant_regular" || name == "circulant") {
    spec.family = Family::circulant_regular;
    arity(2, 2);
    spec.n = parse_int(parts[1], "vertex count");
    spec.b = parse_int(parts[2], "degree");
  } else if (name == "gnp" || name == "gnp_random") {
    spec.family = Family::gnp_random;
    arity(2, 3);
    spec.n = parse_int(parts[1], "vertex count");
    char* end = nullptr;
    spec.p = std::strtod(parts[2].c_str(), &end);
    if (end != parts[2].c_str() + parts[2].size()) {
      reject("bad probability '" + parts[2] + "'");
    }
    if (parts.size() == 4) {
      spec.seed = static_cast<std::uint64_t>(parse_int(parts[3], "seed"));
    }
  } else {
    reject("unknown family '" + name + "'");
  }
  return spec;
}

}  // namespace specdev
