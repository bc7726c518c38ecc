#include "toughcycles/io.hpp"

#include <cctype>
#include <cstdint>
#include <vector>

namespace toughcycles {

namespace {

constexpr std::string_view kGraph6Prefix = ">>graph6<<";

int sixbit(std::string_view line, std::size_t pos) {
    if (pos >= line.size()) throw ParseError("truncated graph6 line", pos);
    unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", pos);
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    std::size_t base = 0;
    if (line.substr(0, kGraph6Prefix.size()) == kGraph6Prefix) {
        base = kGraph6Prefix.size();
        line = line.substr(base);
    }
    if (line.empty()) throw ParseError("empty graph6 line", base);

    std::size_t pos = 0;
    long n;
    int first = sixbit(line, pos);
    if (first < 63) {
        n = first;
        pos = 1;
    } else if (line.size() >= 2 && line[1] == '~') {
        // '~~' introduces the 36-bit size form; always beyond our capacity.
        throw ParseError("graph order exceeds 64", base + 1);
    } else {
        n = (long(sixbit(line, 1)) << 12) | (long(sixbit(line, 2)) << 6) | sixbit(line, 3);
        pos = 4;
    }
    if (n < 1) throw ParseError("graph order must be at least 1", base);
    if (n > Graph::max_vertices) throw ParseError("graph order exceeds 64", base);

    int nn = static_cast<int>(n);
    std::size_t nbits = static_cast<std::size_t>(nn) * (nn - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (line.size() != pos + nbytes)
        throw ParseError(line.size() < pos + nbytes ? "truncated graph6 edge data"
                                                    : "trailing garbage after graph6 data",
                         base + std::min(line.size(), pos + nbytes));

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex j = 1; j < nn; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            int group = sixbit(line, pos + bit / 6);
            if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // padding must be zero
    for (std::size_t b = nbits; b < nbytes * 6; ++b) {
        int group = sixbit(line, pos + b / 6);
        if ((group >> (5 - b % 6)) & 1) throw ParseError("nonzero graph6 padding", base + pos + b / 6);
    }
    return Graph(nn, edges);
}

std::string write_graph6(const Graph& g) {
    int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int group = 0, fill = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++fill == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                fill = 0;
            }
        }
    }
    if (fill > 0) out.push_back(static_cast<char>(63 + (group << (6 - fill))));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<long> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        bool neg = text[i] == '-';
        if (neg) ++i;
        long val = 0;
        std::size_t digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            val = val * 10 + (text[i] - '0');
            if (val > Graph::max_vertices * 2) val = Graph::max_vertices * 2;  // clamp, range-checked below
            ++i;
            ++digits;
        }
        if (digits == 0 || (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))))
            throw ParseError("expected integer token", start);
        tokens.push_back(neg ? -val : val);
    }
    if (tokens.empty()) throw ParseError("missing vertex count", 0);
    long n = tokens[0];
    if (n < 1 || n > Graph::max_vertices) throw ParseError("vertex count out of range [1,64]", 0);
    if ((tokens.size() - 1) % 2 != 0) throw ParseError("odd number of edge endpoints", text.size());

    std::vector<Edge> edges;
    for (std::size_t t = 1; t + 1 < tokens.size(); t += 2) {
        long a = tokens[t], b = tokens[t + 1];
        if (a < 0 || a >= n || b < 0 || b >= n) throw ParseError("edge endpoint out of range", 0);
        if (a == b) throw ParseError("self-loop", 0);
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    return Graph(static_cast<int>(n), edges);
}

}  // namespace toughcycles
