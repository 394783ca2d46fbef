#pragma once

// Simple graphs, hypergraphs, orientations, and the edge-list / set-list text
// formats. Vertex ids are 1-based everywhere; edges are stored normalized
// (u < v) and sorted, so edge indices are stable and deterministic.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cooldec/common.hpp"

namespace cooldec {

struct Graph {
    int n = 0;                                // vertices 1..n
    std::vector<std::pair<int, int>> edges;   // normalized u<v, sorted lexicographically
    std::vector<std::vector<int>> adj;        // adj[v], v in 1..n; index 0 unused

    static Graph from_edges(int n, std::vector<std::pair<int, int>> raw) {
        Graph g;
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        g.n = n;
        for (auto& [u, v] : raw) {
            if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
            if (u < 1 || v < 1 || u > n || v > n)
                throw std::invalid_argument("Graph: endpoint outside 1.." + std::to_string(n));
            if (u > v) std::swap(u, v);
        }
        std::sort(raw.begin(), raw.end());
        for (std::size_t i = 1; i < raw.size(); ++i)
            if (raw[i] == raw[i - 1])
                throw std::invalid_argument("Graph: duplicate edge " + std::to_string(raw[i].first) +
                                            " " + std::to_string(raw[i].second));
        g.edges = std::move(raw);
        g.adj.assign(n + 1, {});
        for (auto [u, v] : g.edges) {
            g.adj[u].push_back(v);
            g.adj[v].push_back(u);
        }
        for (auto& a : g.adj) std::sort(a.begin(), a.end());
        return g;
    }

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int max_degree() const {
        int d = 0;
        for (int v = 1; v <= n; ++v) d = std::max(d, degree(v));
        return d;
    }
    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
    }
    // index into edges, or -1
    int edge_id(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
        if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
        return static_cast<int>(it - edges.begin());
    }
};

struct Hypergraph {
    int n = 0;                          // ground set 1..n
    std::vector<std::vector<int>> sets; // each sorted ascending; duplicates across the family allowed

    static Hypergraph from_sets(int n, std::vector<std::vector<int>> family) {
        Hypergraph h;
        if (n < 0) throw std::invalid_argument("Hypergraph: negative ground-set size");
        h.n = n;
        for (auto& s : family) {
            std::sort(s.begin(), s.end());
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] < 1 || s[i] > n)
                    throw std::invalid_argument("Hypergraph: member outside 1.." + std::to_string(n));
                if (i > 0 && s[i] == s[i - 1])
                    throw std::invalid_argument("Hypergraph: repeated vertex " + std::to_string(s[i]) +
                                                " within a set");
            }
        }
        h.sets = std::move(family);
        return h;
    }

    int max_degree() const {
        std::vector<int> deg(n + 1, 0);
        for (const auto& s : sets)
            for (int v : s) ++deg[v];
        int d = 0;
        for (int v = 1; v <= n; ++v) d = std::max(d, deg[v]);
        return d;
    }
};

// Dual of a simple graph: one hypergraph vertex per edge of g, one set per
// vertex of g holding its incident edge ids (1-based). Has max degree 2.
inline Hypergraph dual_hypergraph(const Graph& g) {
    std::vector<std::vector<int>> family(g.n);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        family[u - 1].push_back(e + 1);
        family[v - 1].push_back(e + 1);
    }
    return Hypergraph::from_sets(std::max(g.edge_count(), 0), std::move(family));
}

// ---------------------------------------------------------------------------
// Text formats. Lines starting with '#' are comments. An optional header line
// "n <count>" fixes the vertex count; otherwise it is the largest id seen.
// ---------------------------------------------------------------------------

namespace detail {
inline bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}
} // namespace detail

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int declared_n = -1;
    int max_id = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::blank_or_comment(line)) continue;
        std::istringstream ls(line);
        std::string first;
        ls >> first;
        if (first == "n") {
            int count;
            if (!(ls >> count) || count < 0)
                throw parse_error("line " + std::to_string(lineno) + ": bad vertex-count header");
            declared_n = count;
            continue;
        }
        int u, v;
        std::istringstream ls2(line);
        std::string trailing;
        if (!(ls2 >> u >> v) || (ls2 >> trailing))
            throw parse_error("line " + std::to_string(lineno) + ": expected \"u v\"");
        if (u < 1 || v < 1)
            throw parse_error("line " + std::to_string(lineno) + ": vertex ids are 1-based");
        if (u == v)
            throw parse_error("line " + std::to_string(lineno) + ": self-loop at vertex " + std::to_string(u));
        max_id = std::max({max_id, u, v});
        edges.emplace_back(u, v);
    }
    int n = declared_n >= 0 ? declared_n : max_id;
    if (declared_n >= 0 && max_id > declared_n)
        throw parse_error("edge endpoint " + std::to_string(max_id) + " exceeds declared n=" +
                          std::to_string(declared_n));
    try {
        return Graph::from_edges(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

inline Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int max_id = 0;
    std::vector<std::vector<int>> family;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::blank_or_comment(line)) continue;
        std::istringstream ls(line);
        std::vector<int> set;
        int v;
        while (ls >> v) {
            if (v < 1) throw parse_error("line " + std::to_string(lineno) + ": vertex ids are 1-based");
            max_id = std::max(max_id, v);
            set.push_back(v);
        }
        if (!ls.eof())
            throw parse_error("line " + std::to_string(lineno) + ": malformed set");
        if (set.empty()) continue;
        family.push_back(std::move(set));
    }
    try {
        return Hypergraph::from_sets(max_id, std::move(family));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

// ---------------------------------------------------------------------------
// Orientations
// ---------------------------------------------------------------------------

struct Orientation {
    std::vector<int> head; // head[e] for edge index e; the other endpoint is the tail

    std::vector<int> indegrees(const Graph& g) const {
        std::vector<int> indeg(g.n + 1, 0);
        for (int e = 0; e < g.edge_count(); ++e) ++indeg[head[e]];
        return indeg;
    }
};

// Peels a vertex of current degree <= cap (lowest id first), orienting its
// remaining incident edges toward it, until the graph is empty. Succeeds
// exactly when g is cap-degenerate; every indegree of the result is <= cap.
inline Orientation degeneracy_orient(const Graph& g, int cap) {
    if (cap < 1) throw std::invalid_argument("degeneracy_orient: cap must be >= 1");
    std::vector<int> deg(g.n + 1);
    std::vector<char> gone(g.n + 1, 0);
    for (int v = 1; v <= g.n; ++v) deg[v] = g.degree(v);
    Orientation o;
    o.head.assign(g.edge_count(), 0);
    for (int round = 0; round < g.n; ++round) {
        int pick = 0;
        for (int v = 1; v <= g.n; ++v) {
            if (!gone[v] && deg[v] <= cap) {
                pick = v;
                break;
            }
        }
        if (pick == 0)
            throw std::runtime_error("degeneracy_orient: graph is not " + std::to_string(cap) +
                                     "-degenerate");
        gone[pick] = 1;
        for (int x : g.adj[pick]) {
            if (gone[x]) continue;
            o.head[g.edge_id(pick, x)] = pick;
            --deg[x];
        }
        deg[pick] = 0;
    }
    return o;
}

} // namespace cooldec
