#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dipart/digraph.hpp"

namespace dipart {

// ---------------------------------------------------------------------------
// digraph6: '&', then n in graph6 form, then n*n adjacency bits row-major
// (diagonal zero), zero-padded to a 6-bit boundary, each group + 63.
// ---------------------------------------------------------------------------

inline std::string encode_digraph6(const Digraph& d) {
    std::string out = "&";
    int n = d.n();
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else {
        out += '~';
        out += static_cast<char>(((n >> 12) & 63) + 63);
        out += static_cast<char>(((n >> 6) & 63) + 63);
        out += static_cast<char>((n & 63) + 63);
    }
    int bits = n * n;
    int acc = 0, have = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            acc = (acc << 1) | (d.has_arc(i, j) ? 1 : 0);
            if (++have == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                have = 0;
            }
        }
    if (bits % 6 != 0) {
        acc <<= (6 - bits % 6);
        out += static_cast<char>(acc + 63);
    }
    return out;
}

inline Digraph decode_digraph6(const std::string& s) {
    if (s.empty() || s[0] != '&') throw std::invalid_argument("digraph6: missing '&' header");
    std::size_t pos = 1;
    if (pos >= s.size()) throw std::invalid_argument("digraph6: truncated");
    int n;
    if (s[pos] == '~') {
        if (pos + 3 >= s.size()) throw std::invalid_argument("digraph6: truncated size");
        n = ((s[pos + 1] - 63) << 12) | ((s[pos + 2] - 63) << 6) | (s[pos + 3] - 63);
        pos += 4;
    } else {
        n = s[pos] - 63;
        pos += 1;
    }
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("digraph6: vertex count out of range");
    int bits = n * n;
    int groups = (bits + 5) / 6;
    if (static_cast<int>(s.size() - pos) != groups) throw std::invalid_argument("digraph6: wrong body length");
    std::vector<Arc> arcs;
    int bit = 0;
    for (int g = 0; g < groups; ++g) {
        int val = s[pos + g] - 63;
        if (val < 0 || val > 63) throw std::invalid_argument("digraph6: byte out of range");
        for (int b = 5; b >= 0; --b, ++bit) {
            bool on = (val >> b) & 1;
            if (bit >= bits) {
                if (on) throw std::invalid_argument("digraph6: nonzero padding");
                continue;
            }
            if (!on) continue;
            int i = bit / n, j = bit % n;
            if (i == j) throw std::invalid_argument("digraph6: loop bit set");
            arcs.push_back({i, j});
        }
    }
    return Digraph(n, arcs);
}

// ---------------------------------------------------------------------------
// Plain edge-list text: first line "n m", then m lines "u v", 0-indexed.
// ---------------------------------------------------------------------------

inline std::string write_edge_list(const Digraph& d) {
    std::ostringstream out;
    auto arcs = d.arcs();
    out << d.n() << ' ' << arcs.size() << '\n';
    for (auto [u, v] : arcs) out << u << ' ' << v << '\n';
    return out.str();
}

inline Digraph read_edge_list(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    std::vector<Arc> arcs;
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated arc list");
        arcs.push_back({u, v});
    }
    return Digraph(n, arcs);
}

inline Digraph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

/// Reads a digraph file: digraph6 when the first byte is '&', else edge list.
inline Digraph read_digraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open digraph file: " + path);
    std::string first;
    if (!(in >> first)) throw std::invalid_argument("empty digraph file: " + path);
    if (!first.empty() && first[0] == '&') return decode_digraph6(first);
    in.seekg(0);
    return read_edge_list(in);
}

// ---------------------------------------------------------------------------
// Partition text: one path per line, vertices separated by blanks.
// ---------------------------------------------------------------------------

inline PathPartition read_partition(std::istream& in) {
    PathPartition pp;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        Path p;
        int v;
        while (row >> v) p.vertices.push_back(v);
        if (!p.vertices.empty()) pp.paths.push_back(std::move(p));
    }
    return pp;
}

inline PathPartition read_partition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open partition file: " + path);
    return read_partition(in);
}

inline std::string write_partition(const PathPartition& pp) {
    std::ostringstream out;
    for (const auto& p : pp.paths) {
        for (std::size_t i = 0; i < p.vertices.size(); ++i) {
            if (i) out << ' ';
            out << p.vertices[i];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace dipart
