#include "minorforge/graph6.hpp"

#include <sstream>

namespace minorforge {

namespace {

bool printable(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph from_graph6(std::string_view text) {
    // Strip one trailing newline so whole lines can be passed as-is.
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) throw Graph6Error(0, "empty input");

    std::size_t pos = 0;
    long n = 0;
    if (!printable(text[0])) throw Graph6Error(0, "non-printable byte");
    if (text[0] == 126) {
        // long form: '~' then three bytes, or '~~' then six (beyond our range)
        if (text.size() >= 2 && text[1] == 126)
            throw Graph6Error(1, "vertex count exceeds engine limit");
        if (text.size() < 4) throw Graph6Error(text.size(), "malformed length prefix");
        for (std::size_t i = 1; i <= 3; ++i) {
            if (!printable(text[i])) throw Graph6Error(i, "non-printable byte");
            n = (n << 6) | (text[i] - 63);
        }
        pos = 4;
    } else {
        n = text[0] - 63;
        pos = 1;
    }
    if (n > kMaxVertices)
        throw Graph6Error(0, "vertex count exceeds engine limit");

    Graph g(static_cast<int>(n));
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() < pos + nbytes)
        throw Graph6Error(text.size(), "truncated adjacency data");
    if (text.size() > pos + nbytes)
        throw Graph6Error(pos + nbytes, "trailing garbage");

    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            char c = text[pos + bit / 6];
            if (!printable(c)) throw Graph6Error(pos + bit / 6, "non-printable byte");
            if ((static_cast<unsigned>(c - 63) >> (5 - bit % 6)) & 1)
                g.add_edge(u, static_cast<int>(v));
        }
    }
    // Padding bits must be zero.
    for (std::size_t b = bit; b < nbytes * 6; ++b) {
        char c = text[pos + b / 6];
        if ((static_cast<unsigned>(c - 63) >> (5 - b % 6)) & 1)
            throw Graph6Error(pos + b / 6, "nonzero padding bits");
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int group = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

Graph from_edge_list_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::pair<int, int>> edges;
    int n = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long u, v;
        if (ls >> u) {
            if (ls >> v) {
                edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
                n = std::max({n, static_cast<int>(u) + 1, static_cast<int>(v) + 1});
            } else if (edges.empty() && n < 0) {
                n = static_cast<int>(u);
            } else {
                throw std::invalid_argument("bad edge list line: " + line);
            }
        } else {
            throw std::invalid_argument("bad edge list line: " + line);
        }
    }
    if (n < 0) n = 0;
    return Graph(n, edges);
}

}  // namespace minorforge
