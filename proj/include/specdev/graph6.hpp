#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "specdev/graph.hpp"

namespace specdev {

struct Graph6ParseError : std::runtime_error {
  Graph6ParseError(const std::string& msg, std::size_t offset_)
      : std::runtime_error(msg + " (byte offset " + std::to_string(offset_) + ")"),
        offset(offset_) {}
  std::size_t offset;
};

/// Decodes one graph6 string. The ">>graph6<<" header is optional and
/// trailing CR/LF is tolerated; anything else malformed (bad length prefix,
/// truncation, nonzero padding bits, stray bytes) raises Graph6ParseError
/// with the byte offset.
Graph from_graph6(std::string_view text);

/// Canonical graph6 encoding, no header.
std::string to_graph6(const Graph& g);

/// Plain text edge list: first line "n m", then one "u v" per line,
/// 0-indexed. Errors name the offending line and token.
Graph read_edge_list_text(std::istream& in);
void write_edge_list_text(const Graph& g, std::ostream& out);

}  // namespace specdev
