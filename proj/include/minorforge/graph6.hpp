#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "minorforge/graph.hpp"

namespace minorforge {

// Parse / format errors carry the byte offset of the offending input byte.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(std::size_t offset, const std::string& what)
        : std::runtime_error("graph6 error at byte " + std::to_string(offset) +
                             ": " + what),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Header-free graph6: N(n) size prefix, then the upper adjacency triangle in
// column order packed into big-endian 6-bit groups, each group offset by 63.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Debugging alternative: one "u v" pair per line, 0-based; blank lines and
// lines starting with '#' are skipped. Vertex count is max index + 1 unless a
// lone "n" line appears first.
Graph from_edge_list_text(std::string_view text);

}  // namespace minorforge
