#include "specdev/graph6.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace specdev {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int data_byte(std::string_view text, std::size_t i) {
  if (i >= text.size()) {
    throw Graph6ParseError("truncated graph6 input", text.size());
  }
  const unsigned char c = static_cast<unsigned char>(text[i]);
  if (c < 63 || c > 126) {
    throw Graph6ParseError("byte outside graph6 range 63..126", i);
  }
  return c - 63;
}

}  // namespace

Graph from_graph6(std::string_view text) {
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw Graph6ParseError("empty graph6 input", 0);

  std::size_t pos = 0;
  long n;
  if (data_byte(text, 0) == 63) {  // '~': extended length prefix
    if (data_byte(text, 1) == 63) {
      // 36-bit form encodes n >= 258048, far beyond the vertex cap
      throw Graph6ParseError("graph6 vertex count exceeds supported cap", 1);
    }
    n = (static_cast<long>(data_byte(text, 1)) << 12) |
        (static_cast<long>(data_byte(text, 2)) << 6) |
        static_cast<long>(data_byte(text, 3));
    pos = 4;
  } else {
    n = data_byte(text, 0);
    pos = 1;
  }
  if (n == 0) throw Graph6ParseError("graph with 0 vertices is not supported", 0);
  if (n > kMaxVertices) {
    throw Graph6ParseError("graph6 vertex count exceeds supported cap", 0);
  }

  const std::int64_t pair_bits = n * (n - 1) / 2;
  const std::int64_t data_bytes = (pair_bits + 5) / 6;
  if (static_cast<std::int64_t>(text.size()) - static_cast<std::int64_t>(pos) >
      data_bytes) {
    throw Graph6ParseError("trailing bytes after graph6 data", pos + data_bytes);
  }

  std::vector<std::pair<int, int>> edges;
  int u = 0, v = 1;
  for (std::int64_t b = 0; b < data_bytes; ++b) {
    const int group = data_byte(text, pos + b);
    for (int bit = 5; bit >= 0; --bit) {
      const std::int64_t k = b * 6 + (5 - bit);
      const bool set = (group >> bit) & 1;
      if (k < pair_bits) {
        if (set) edges.emplace_back(u, v);
        if (++u == v) {
          u = 0;
          ++v;
        }
      } else if (set) {
        throw Graph6ParseError("nonzero padding bits", pos + b);
      }
    }
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int group = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    group <<= (6 - filled);  // zero padding on the right
    out.push_back(static_cast<char>(group + 63));
  }
  return out;
}

Graph read_edge_list_text(std::istream& in) {
  std::string line;
  long line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) throw std::invalid_argument("edge list: missing 'n m' header");
  long n, m;
  {
    std::istringstream hdr(line);
    if (!(hdr >> n >> m) || n < 1 || m < 0) {
      throw std::invalid_argument("edge list line 1: bad header '" + line + "'");
    }
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    if (!next_line()) {
      throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                  " edges, got " + std::to_string(i));
    }
    std::istringstream row(line);
    long u, v;
    if (!(row >> u >> v)) {
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": bad edge '" + line + "'");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  try {
    return Graph::from_edge_list(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("edge list: " + std::string(e.what()));
  }
}

void write_edge_list_text(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  g.for_each_edge([&](int u, int v) { out << u << ' ' << v << '\n'; });
}

}  // namespace specdev
