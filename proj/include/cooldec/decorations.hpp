#pragma once

// Cool decorations of graphs and hypergraphs: derived vertex sums, the
// verifier, Kalkowski's greedy total decoration, and exhaustive backtracking
// searches over finite value grids.
//
// All searches return the lexicographically first witness (values tried in
// ascending order, positions in canonical order), so outputs are stable
// across runs.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cooldec/common.hpp"
#include "cooldec/graph.hpp"

namespace cooldec {

enum class DecorationKind { edge, vertex, total, ironic };

inline const char* to_string(DecorationKind k) {
    switch (k) {
    case DecorationKind::edge: return "edge";
    case DecorationKind::vertex: return "vertex";
    case DecorationKind::total: return "total";
    case DecorationKind::ironic: return "ironic";
    }
    return "?";
}

struct Decoration {
    DecorationKind kind = DecorationKind::edge;
    std::vector<double> vertex_values; // index 1..n when present, else empty
    std::vector<double> edge_values;   // aligned with Graph::edges when present, else empty

    static Decoration edge(std::vector<double> ev) {
        return Decoration{DecorationKind::edge, {}, std::move(ev)};
    }
    static Decoration vertex(std::vector<double> vv) {
        return Decoration{DecorationKind::vertex, std::move(vv), {}};
    }
    static Decoration total(std::vector<double> vv, std::vector<double> ev) {
        return Decoration{DecorationKind::total, std::move(vv), std::move(ev)};
    }
    static Decoration ironic(std::vector<double> vv) {
        return Decoration{DecorationKind::ironic, std::move(vv), {}};
    }
};

namespace detail {
inline void check_complete(const Graph& g, const Decoration& d) {
    const bool needs_vertex = d.kind != DecorationKind::edge;
    const bool needs_edge = d.kind == DecorationKind::edge || d.kind == DecorationKind::total;
    std::string missing;
    if (needs_vertex && static_cast<int>(d.vertex_values.size()) != g.n + 1)
        missing += " vertex-values(" + std::to_string(d.vertex_values.size()) + "/" +
                   std::to_string(g.n + 1) + ")";
    if (needs_edge && static_cast<int>(d.edge_values.size()) != g.edge_count())
        missing += " edge-values(" + std::to_string(d.edge_values.size()) + "/" +
                   std::to_string(g.edge_count()) + ")";
    if (!needs_vertex && !d.vertex_values.empty()) missing += " unexpected-vertex-values";
    if (!needs_edge && !d.edge_values.empty()) missing += " unexpected-edge-values";
    if (!missing.empty())
        throw std::invalid_argument("incomplete decoration:" + missing);
}
} // namespace detail

// S(v) per kind; M(v) = f(v)*deg(v) for ironic decorations.
inline std::vector<double> vertex_sums(const Graph& g, const Decoration& d) {
    detail::check_complete(g, d);
    std::vector<double> s(g.n + 1, 0.0);
    switch (d.kind) {
    case DecorationKind::edge:
        for (int e = 0; e < g.edge_count(); ++e) {
            s[g.edges[e].first] += d.edge_values[e];
            s[g.edges[e].second] += d.edge_values[e];
        }
        break;
    case DecorationKind::vertex:
        for (int v = 1; v <= g.n; ++v)
            for (int x : g.adj[v]) s[v] += d.vertex_values[x];
        break;
    case DecorationKind::total:
        for (int v = 1; v <= g.n; ++v) s[v] = d.vertex_values[v];
        for (int e = 0; e < g.edge_count(); ++e) {
            s[g.edges[e].first] += d.edge_values[e];
            s[g.edges[e].second] += d.edge_values[e];
        }
        break;
    case DecorationKind::ironic:
        for (int v = 1; v <= g.n; ++v) s[v] = d.vertex_values[v] * g.degree(v);
        break;
    }
    return s;
}

struct CoolReport {
    bool cool = true;
    std::vector<std::pair<int, int>> violations; // adjacent pairs with equal sums
};

inline CoolReport verify_cool(const Graph& g, const Decoration& d) {
    auto s = vertex_sums(g, d);
    CoolReport r;
    for (auto [u, v] : g.edges) {
        if (s[u] == s[v]) {
            r.cool = false;
            r.violations.emplace_back(u, v);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Kalkowski's total decoration.
//
// Start with 1 on every vertex and 2 on every edge; process vertices in
// order. At vertex v the backward edges (to already-processed neighbors x)
// each admit one chip move that shifts S(v) by +-1 while keeping S(x) fixed:
//   f(x)=1: move a chip from the edge to x   (edge 2->1, vertex 1->2, off -1)
//   f(x)=2: move a chip from x to the edge   (vertex 2->1, edge 2->3, off +1)
// The achievable sums form a contiguous run of k+1 integers against at most
// k forbidden values, so a free sum always exists. We take the offset of
// smallest magnitude (ties to the negative side) and realize it on the
// lowest-id backward edges of the needed sign.
// ---------------------------------------------------------------------------

inline Decoration kalkowski_total(const Graph& g, const std::vector<int>& order = {}) {
    std::vector<int> ord = order;
    if (ord.empty()) {
        ord.resize(g.n);
        for (int v = 1; v <= g.n; ++v) ord[v - 1] = v;
    }
    if (static_cast<int>(ord.size()) != g.n)
        throw std::invalid_argument("kalkowski_total: ordering must list every vertex once");
    std::vector<int> pos(g.n + 1, -1);
    for (int i = 0; i < g.n; ++i) {
        int v = ord[i];
        if (v < 1 || v > g.n || pos[v] != -1)
            throw std::invalid_argument("kalkowski_total: ordering must list every vertex once");
        pos[v] = i;
    }

    std::vector<int> fv(g.n + 1, 1);
    std::vector<int> fe(g.edge_count(), 2);
    std::vector<long long> final_sum(g.n + 1, 0);
    std::vector<char> done(g.n + 1, 0);

    for (int v : ord) {
        if (g.degree(v) == 0) continue; // isolated: vacuously cool, left at 1

        std::vector<int> backward; // processed neighbors, ascending id
        for (int x : g.adj[v])
            if (done[x]) backward.push_back(x);

        long long base = fv[v];
        for (int x : g.adj[v]) base += fe[g.edge_id(v, x)];

        int neg = 0, pls = 0;
        for (int x : backward) (fv[x] == 1 ? neg : pls)++;

        std::vector<long long> forbidden;
        for (int x : backward) forbidden.push_back(final_sum[x]);

        int chosen = 0;
        bool ok = false;
        for (int mag = 0; mag <= std::max(neg, pls) && !ok; ++mag) {
            for (int off : {-mag, mag}) {
                if (off < -neg || off > pls) continue;
                if (std::find(forbidden.begin(), forbidden.end(), base + off) == forbidden.end()) {
                    chosen = off;
                    ok = true;
                    break;
                }
            }
        }
        if (!ok) throw std::logic_error("kalkowski_total: no admissible sum (cannot happen)");

        int want = std::abs(chosen);
        for (int x : backward) {
            if (want == 0) break;
            int e = g.edge_id(v, x);
            if (chosen < 0 && fv[x] == 1) {
                fe[e] -= 1; // chip from edge to x
                fv[x] += 1;
                --want;
            } else if (chosen > 0 && fv[x] == 2) {
                fv[x] -= 1; // chip from x to edge
                fe[e] += 1;
                --want;
            }
        }
        final_sum[v] = base + chosen;
        done[v] = 1;
    }

    std::vector<double> vv(g.n + 1, 0.0), ev(g.edge_count());
    for (int v = 1; v <= g.n; ++v) vv[v] = fv[v];
    for (int e = 0; e < g.edge_count(); ++e) ev[e] = fe[e];
    Decoration d = Decoration::total(std::move(vv), std::move(ev));

    // finalized sums must survive all later chip moves
    auto sums = vertex_sums(g, d);
    for (int v = 1; v <= g.n; ++v)
        if (done[v] && sums[v] != static_cast<double>(final_sum[v]))
            throw std::logic_error("kalkowski_total: finalized sum drifted (cannot happen)");
    if (!verify_cool(g, d).cool)
        throw std::logic_error("kalkowski_total: produced a non-cool decoration (cannot happen)");
    return d;
}

// ---------------------------------------------------------------------------
// Exhaustive searches. Shared scheme: depth-first over positions in canonical
// order, values ascending, pruning as soon as a finished sum collides with a
// finished adjacent sum. Grid-size preconditions are checked up front and
// violations reported as budget_exceeded, never as none-found.
// ---------------------------------------------------------------------------

inline constexpr std::uint64_t kDefaultGridBudget = 10'000'000;

namespace detail {

inline std::vector<double> sorted_unique(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

inline bool grid_ok(std::size_t positions, const std::function<std::size_t(std::size_t)>& list_size,
                    std::uint64_t budget) {
    long double grid = 1.0L;
    for (std::size_t i = 0; i < positions; ++i) {
        grid *= static_cast<long double>(list_size(i));
        if (!grid_within_budget(grid, budget)) return false;
    }
    return true;
}

} // namespace detail

inline SearchResult<Decoration> brute_force_edge(const Graph& g, std::vector<double> values,
                                                 std::uint64_t budget = kDefaultGridBudget) {
    values = detail::sorted_unique(values);
    if (values.empty()) throw std::invalid_argument("brute_force_edge: empty value set");
    const int m = g.edge_count();
    if (!detail::grid_ok(m, [&](std::size_t) { return values.size(); }, budget))
        return SearchResult<Decoration>::make_refused();

    // vertex becomes checkable once its last incident edge (by index) is set
    std::vector<int> last_edge(g.n + 1, -1);
    for (int e = 0; e < m; ++e) {
        last_edge[g.edges[e].first] = e;
        last_edge[g.edges[e].second] = e;
    }
    std::vector<std::vector<int>> completes(m); // edge index -> vertices completed there
    for (int v = 1; v <= g.n; ++v)
        if (last_edge[v] >= 0) completes[last_edge[v]].push_back(v);

    std::vector<double> sum(g.n + 1, 0.0);
    std::vector<char> complete(g.n + 1, 0);
    std::vector<double> val(m, 0.0);

    std::function<bool(int)> dfs = [&](int e) -> bool {
        if (e == m) return true;
        auto [a, b] = g.edges[e];
        for (double x : values) {
            val[e] = x;
            sum[a] += x;
            sum[b] += x;
            bool fine = true;
            for (int v : completes[e]) {
                complete[v] = 1;
                for (int w : g.adj[v])
                    if (complete[w] && sum[w] == sum[v]) { fine = false; break; }
                if (!fine) break;
            }
            if (fine && dfs(e + 1)) return true;
            for (int v : completes[e]) complete[v] = 0;
            sum[a] -= x;
            sum[b] -= x;
        }
        return false;
    };

    if (dfs(0)) return SearchResult<Decoration>::make_found(Decoration::edge(val));
    return SearchResult<Decoration>::make_none();
}

inline SearchResult<Decoration> brute_force_vertex(const Graph& g,
                                                   std::vector<std::vector<double>> lists,
                                                   std::uint64_t budget = kDefaultGridBudget) {
    if (static_cast<int>(lists.size()) != g.n + 1)
        throw std::invalid_argument("brute_force_vertex: need one list per vertex (index 1..n)");
    for (int v = 1; v <= g.n; ++v) {
        lists[v] = detail::sorted_unique(lists[v]);
        if (lists[v].empty()) throw std::invalid_argument("brute_force_vertex: empty list");
    }
    if (!detail::grid_ok(g.n, [&](std::size_t i) { return lists[i + 1].size(); }, budget))
        return SearchResult<Decoration>::make_refused();

    // S(v) is ready once v's largest-id neighbor is assigned
    std::vector<std::vector<int>> completes(g.n + 1);
    for (int v = 1; v <= g.n; ++v)
        if (g.degree(v) > 0) completes[g.adj[v].back()].push_back(v);

    std::vector<double> sum(g.n + 1, 0.0), val(g.n + 1, 0.0);
    std::vector<char> complete(g.n + 1, 0);

    std::function<bool(int)> dfs = [&](int v) -> bool {
        if (v > g.n) return true;
        for (double x : lists[v]) {
            val[v] = x;
            for (int w : g.adj[v]) sum[w] += x;
            bool fine = true;
            for (int u : completes[v]) {
                complete[u] = 1;
                for (int w : g.adj[u])
                    if (complete[w] && sum[w] == sum[u]) { fine = false; break; }
                if (!fine) break;
            }
            if (fine && dfs(v + 1)) return true;
            for (int u : completes[v]) complete[u] = 0;
            for (int w : g.adj[v]) sum[w] -= x;
        }
        return false;
    };

    if (dfs(1)) return SearchResult<Decoration>::make_found(Decoration::vertex(val));
    return SearchResult<Decoration>::make_none();
}

inline SearchResult<Decoration> brute_force_ironic(const Graph& g, int k,
                                                   std::uint64_t budget = kDefaultGridBudget) {
    if (k < 1) throw std::invalid_argument("brute_force_ironic: k must be >= 1");
    if (!detail::grid_ok(g.n, [&](std::size_t) { return static_cast<std::size_t>(k); }, budget))
        return SearchResult<Decoration>::make_refused();

    std::vector<double> val(g.n + 1, 0.0);
    // M(v) = f(v)*deg(v) is local, so earlier neighbors are checked directly
    std::function<bool(int)> dfs = [&](int v) -> bool {
        if (v > g.n) return true;
        for (int x = 1; x <= k; ++x) {
            double mv = static_cast<double>(x) * g.degree(v);
            bool fine = true;
            for (int w : g.adj[v]) {
                if (w >= v) break;
                if (val[w] * g.degree(w) == mv) { fine = false; break; }
            }
            if (fine) {
                val[v] = x;
                if (dfs(v + 1)) return true;
            }
        }
        return false;
    };

    if (dfs(1)) return SearchResult<Decoration>::make_found(Decoration::ironic(val));
    return SearchResult<Decoration>::make_none();
}

// Proper coloring from the homogeneous cascades L(v) = {d_v, 2*d_v, ..., k*d_v}.
// Returned per-vertex colors are the chosen list elements; dividing by d_v
// recovers an ironic decoration (see cascade_to_ironic).
inline SearchResult<std::vector<std::int64_t>> brute_force_cascade_lists(
    const Graph& g, int k, std::uint64_t budget = kDefaultGridBudget) {
    if (k < 1) throw std::invalid_argument("brute_force_cascade_lists: k must be >= 1");
    if (!detail::grid_ok(g.n, [&](std::size_t) { return static_cast<std::size_t>(k); }, budget))
        return SearchResult<std::vector<std::int64_t>>::make_refused();

    std::vector<std::int64_t> color(g.n + 1, 0);
    std::function<bool(int)> dfs = [&](int v) -> bool {
        if (v > g.n) return true;
        for (int i = 1; i <= k; ++i) {
            std::int64_t c = static_cast<std::int64_t>(i) * g.degree(v);
            bool fine = true;
            for (int w : g.adj[v]) {
                if (w >= v) break;
                if (color[w] == c) { fine = false; break; }
            }
            if (fine) {
                color[v] = c;
                if (dfs(v + 1)) return true;
            }
            if (g.degree(v) == 0) break; // the cascade of an isolated vertex is just {0}
        }
        return false;
    };

    if (dfs(1)) return SearchResult<std::vector<std::int64_t>>::make_found(color);
    return SearchResult<std::vector<std::int64_t>>::make_none();
}

inline Decoration cascade_to_ironic(const Graph& g, const std::vector<std::int64_t>& cascade_colors) {
    std::vector<double> vv(g.n + 1, 1.0);
    for (int v = 1; v <= g.n; ++v)
        if (g.degree(v) > 0)
            vv[v] = static_cast<double>(cascade_colors[v]) / g.degree(v);
    return Decoration::ironic(std::move(vv));
}

// Vertex assignment f: V -> {1..C} with S(A) != S(B) for every intersecting
// pair of distinct family members.
inline SearchResult<std::vector<int>> brute_force_hypergraph(const Hypergraph& h, int C,
                                                             std::uint64_t budget = kDefaultGridBudget) {
    if (C < 1) throw std::invalid_argument("brute_force_hypergraph: C must be >= 1");
    if (!detail::grid_ok(h.n, [&](std::size_t) { return static_cast<std::size_t>(C); }, budget))
        return SearchResult<std::vector<int>>::make_refused();

    const int f = static_cast<int>(h.sets.size());
    std::vector<std::vector<int>> clash(f); // intersecting pairs, precomputed
    for (int i = 0; i < f; ++i)
        for (int j = i + 1; j < f; ++j) {
            const auto& A = h.sets[i];
            const auto& B = h.sets[j];
            bool meet = false;
            for (std::size_t a = 0, b = 0; a < A.size() && b < B.size();) {
                if (A[a] == B[b]) { meet = true; break; }
                (A[a] < B[b]) ? ++a : ++b;
            }
            if (meet) {
                clash[std::max(i, j)].push_back(std::min(i, j)); // wait for the later one
            }
        }

    // set becomes checkable once its largest vertex is assigned
    std::vector<std::vector<int>> completes(h.n + 1);
    std::vector<std::vector<int>> member_of(h.n + 1);
    for (int i = 0; i < f; ++i) {
        if (h.sets[i].empty()) continue;
        completes[h.sets[i].back()].push_back(i);
        for (int v : h.sets[i]) member_of[v].push_back(i);
    }
    std::vector<long long> setsum(f, 0);
    std::vector<char> ready(f, 0);
    std::vector<int> val(h.n + 1, 0);

    std::function<bool(int)> dfs = [&](int v) -> bool {
        if (v > h.n) return true;
        for (int x = 1; x <= C; ++x) {
            val[v] = x;
            for (int i : member_of[v]) setsum[i] += x;
            bool fine = true;
            for (int i : completes[v]) {
                ready[i] = 1;
                for (int j : clash[i])
                    if (ready[j] && setsum[j] == setsum[i]) { fine = false; break; }
                if (!fine) break;
            }
            if (fine && dfs(v + 1)) return true;
            for (int i : completes[v]) ready[i] = 0;
            for (int i : member_of[v]) setsum[i] -= x;
        }
        return false;
    };

    // duplicate intersecting sets force equal sums; also two empty... empty sets never clash
    for (int i = 0; i < f; ++i)
        for (int j : clash[i])
            if (h.sets[i] == h.sets[j]) return SearchResult<std::vector<int>>::make_none();

    if (dfs(1)) return SearchResult<std::vector<int>>::make_found(val);
    return SearchResult<std::vector<int>>::make_none();
}

} // namespace cooldec
