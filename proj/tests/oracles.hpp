#pragma once

// Test-only oracles: independent brute-force reimplementations used to
// cross-check the library. Everything here is deliberately written the dumb
// way (trial division, raw odometers, unpruned enumeration) and must not
// call into the code paths it checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cooldec/graph.hpp"

namespace oracle {

// prime test and factorization by trial division
inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::int64_t> factorize(std::int64_t n) {
    std::vector<std::int64_t> fs;
    for (std::int64_t d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            fs.push_back(d);
            n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

inline int liouville(std::int64_t n) { return factorize(n).size() % 2 == 0 ? 1 : -1; }

// completely multiplicative evaluation from a prime-sign rule
inline int multiplicative_eval(std::int64_t n, const std::function<int(std::int64_t)>& prime_sign) {
    int s = 1;
    for (std::int64_t p : factorize(n)) s *= prime_sign(p);
    return s;
}

// count of digit 1 via an explicit digit string
inline int ternary_ones_digits(std::int64_t n) {
    if (n == 0) return 0;
    std::string digits;
    while (n > 0) {
        digits.push_back(static_cast<char>('0' + n % 3));
        n /= 3;
    }
    int ones = 0;
    for (char c : digits)
        if (c == '1') ++ones;
    return ones;
}

// ---------------------------------------------------------------------------
// Raw odometer enumerations (no pruning). Suitable for grids up to ~1e6.
// ---------------------------------------------------------------------------

inline bool edge_sums_cool(const cooldec::Graph& g, const std::vector<double>& edge_vals) {
    std::vector<double> s(g.n + 1, 0.0);
    for (int e = 0; e < g.edge_count(); ++e) {
        s[g.edges[e].first] += edge_vals[e];
        s[g.edges[e].second] += edge_vals[e];
    }
    for (auto [u, v] : g.edges)
        if (s[u] == s[v]) return false;
    return true;
}

// first (odometer order) cool edge decoration, or nullopt
inline std::optional<std::vector<double>> first_cool_edge_decoration(const cooldec::Graph& g,
                                                                     std::vector<double> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    const int m = g.edge_count();
    std::vector<std::size_t> idx(m, 0);
    std::vector<double> vals(m);
    while (true) {
        for (int e = 0; e < m; ++e) vals[e] = values[idx[e]];
        if (edge_sums_cool(g, vals)) return vals;
        int pos = m - 1;
        while (pos >= 0 && ++idx[pos] == values.size()) idx[pos--] = 0;
        if (pos < 0) return std::nullopt;
    }
}

inline bool vertex_sums_cool(const cooldec::Graph& g, const std::vector<double>& vertex_vals) {
    std::vector<double> s(g.n + 1, 0.0);
    for (int v = 1; v <= g.n; ++v)
        for (int x : g.adj[v]) s[v] += vertex_vals[x];
    for (auto [u, v] : g.edges)
        if (s[u] == s[v]) return false;
    return true;
}

inline std::optional<std::vector<double>> first_cool_vertex_decoration(
    const cooldec::Graph& g, const std::vector<std::vector<double>>& lists) {
    std::vector<std::size_t> idx(g.n + 1, 0);
    std::vector<double> vals(g.n + 1, 0.0);
    while (true) {
        for (int v = 1; v <= g.n; ++v) vals[v] = lists[v][idx[v]];
        if (vertex_sums_cool(g, vals)) return vals;
        int pos = g.n;
        while (pos >= 1 && ++idx[pos] == lists[pos].size()) idx[pos--] = 0;
        if (pos < 1) return std::nullopt;
    }
}

inline bool hypergraph_assignment_cool(const cooldec::Hypergraph& h, const std::vector<int>& vals) {
    std::vector<long long> sums;
    for (const auto& set : h.sets) {
        long long s = 0;
        for (int v : set) s += vals[v];
        sums.push_back(s);
    }
    for (std::size_t i = 0; i < h.sets.size(); ++i)
        for (std::size_t j = i + 1; j < h.sets.size(); ++j) {
            bool meet = false;
            for (int v : h.sets[i])
                if (std::binary_search(h.sets[j].begin(), h.sets[j].end(), v)) { meet = true; break; }
            if (meet && sums[i] == sums[j]) return false;
        }
    return true;
}

inline std::optional<std::vector<int>> first_cool_hypergraph_assignment(const cooldec::Hypergraph& h,
                                                                        int C) {
    std::vector<int> vals(h.n + 1, 1);
    while (true) {
        if (hypergraph_assignment_cool(h, vals)) return vals;
        int pos = h.n;
        while (pos >= 1 && ++vals[pos] > C) vals[pos--] = 1;
        if (pos < 1) return std::nullopt;
    }
}

// plain clique enumeration, no bounds beyond adjacency
inline bool has_clique_of_size(const cooldec::Graph& g, int size) {
    std::vector<int> current;
    std::function<bool(int)> extend = [&](int from) -> bool {
        if (static_cast<int>(current.size()) == size) return true;
        for (int v = from; v <= g.n; ++v) {
            bool ok = true;
            for (int u : current)
                if (!g.has_edge(u, v)) { ok = false; break; }
            if (!ok) continue;
            current.push_back(v);
            if (extend(v + 1)) return true;
            current.pop_back();
        }
        return false;
    };
    return extend(1);
}

// ---------------------------------------------------------------------------
// Random graph generation (fixed-seed mt19937 everywhere)
// ---------------------------------------------------------------------------

inline cooldec::Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution coin(p);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return cooldec::Graph::from_edges(n, std::move(edges));
}

// random graph with an exact edge budget, avoiding isolated-edge components
inline cooldec::Graph random_graph_edge_budget(std::mt19937_64& rng, int n, int max_edges,
                                               bool forbid_isolated_edges) {
    while (true) {
        std::vector<std::pair<int, int>> all;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
        std::shuffle(all.begin(), all.end(), rng);
        int m = std::uniform_int_distribution<int>(1, std::min<int>(max_edges, all.size()))(rng);
        all.resize(m);
        auto g = cooldec::Graph::from_edges(n, std::move(all));
        if (!forbid_isolated_edges) return g;
        bool bad = false;
        for (auto [u, v] : g.edges)
            if (g.degree(u) == 1 && g.degree(v) == 1) { bad = true; break; }
        if (!bad) return g;
    }
}

} // namespace oracle
