#pragma once

// The polynomial method for decorations from lists. The graph polynomial
// P = prod_{uv in E} (S(u) - S(v)) is expanded sparsely over integer
// coefficients; a top-degree monomial with nonzero coefficient certifies
// decorability from lists one longer than its exponents, and a grid
// enumeration then realizes the promised decoration.
//
// Two variants: edge variables (one per edge, S(v) = sum of incident edge
// variables) and, for bipartite graphs, vertex variables (S over neighbor
// variables). In the bipartite form every X-side variable enters factors
// negatively and every Y-side variable positively, so same-exponent
// monomials never cancel; that sign coherence is what lets the orientation
// argument certify coefficients without expanding anything.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <vector>

#include "cooldec/common.hpp"
#include "cooldec/decorations.hpp"
#include "cooldec/graph.hpp"

namespace cooldec {

using Exponents = std::vector<std::uint8_t>;

struct SparsePolynomial {
    int nvars = 0;
    int factor_count = 0;                     // degree of the (uniform) expanded product
    std::map<Exponents, long long> terms;     // lexicographic key order; no zero coefficients

    bool is_zero() const { return terms.empty(); }

    // max total degree over stored monomials; -1 for the zero polynomial
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms) {
            int t = 0;
            for (auto x : e) t += x;
            d = std::max(d, t);
        }
        return d;
    }

    bool is_uniform() const {
        for (const auto& [e, c] : terms) {
            int t = 0;
            for (auto x : e) t += x;
            if (t != factor_count) return false;
        }
        return true;
    }

    __int128 evaluate(const std::vector<long long>& point) const {
        __int128 total = 0;
        for (const auto& [e, c] : terms) {
            __int128 term = c;
            for (int i = 0; i < nvars; ++i)
                for (int k = 0; k < e[i]; ++k) term *= point[i];
            total += term;
        }
        return total;
    }
};

// A linear form sum c_i * x_i, stored sparse.
using LinearForm = std::vector<std::pair<int, int>>; // (variable, coefficient)

namespace detail {

// Iterative sparse product of linear factors. With caps active, monomials
// that already exceed a cap are dropped: exponents only grow, so no dropped
// monomial can contribute to a within-caps coefficient later.
inline SparsePolynomial expand_product(int nvars, const std::vector<LinearForm>& factors,
                                       const Exponents* caps) {
    SparsePolynomial p;
    p.nvars = nvars;
    p.factor_count = static_cast<int>(factors.size());
    p.terms[Exponents(nvars, 0)] = 1;
    for (const auto& f : factors) {
        std::map<Exponents, long long> next;
        for (const auto& [exp, coeff] : p.terms) {
            for (const auto& [var, c] : f) {
                if (caps && (*caps)[var] <= exp[var]) continue;
                Exponents e = exp;
                ++e[var];
                long long& slot = next[e];
                slot += coeff * c;
                if (slot == 0) next.erase(e);
            }
        }
        p.terms = std::move(next);
        if (p.terms.empty()) break;
    }
    return p;
}

} // namespace detail

inline constexpr int kDefaultExpansionFactors = 12;

inline SparsePolynomial build_edge_polynomial(const Graph& g,
                                              int max_factors = kDefaultExpansionFactors,
                                              const Exponents* caps = nullptr) {
    const int m = g.edge_count();
    if (m > max_factors)
        throw budget_error("build_edge_polynomial: " + std::to_string(m) + " factors exceed budget " +
                           std::to_string(max_factors));
    std::vector<LinearForm> factors;
    factors.reserve(m);
    for (auto [u, v] : g.edges) {
        std::map<int, int> c; // variable -> coefficient in S(u)-S(v)
        for (int x : g.adj[u]) c[g.edge_id(u, x)] += 1;
        for (int x : g.adj[v]) c[g.edge_id(v, x)] -= 1;
        LinearForm f;
        for (auto [var, coeff] : c)
            if (coeff != 0) f.emplace_back(var, coeff);
        factors.push_back(std::move(f));
    }
    return detail::expand_product(m, factors, caps);
}

struct Bipartition {
    std::vector<std::int8_t> side; // index 1..n; 0 = X, 1 = Y
};

// Deterministic 2-coloring by BFS, smallest vertex of each component on the
// X side. Empty when the graph has an odd cycle.
inline std::optional<Bipartition> auto_bipartition(const Graph& g) {
    Bipartition b;
    b.side.assign(g.n + 1, -1);
    for (int root = 1; root <= g.n; ++root) {
        if (b.side[root] != -1) continue;
        b.side[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.adj[v]) {
                if (b.side[w] == -1) {
                    b.side[w] = static_cast<std::int8_t>(1 - b.side[v]);
                    q.push(w);
                } else if (b.side[w] == b.side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return b;
}

inline void validate_bipartition(const Graph& g, const Bipartition& parts) {
    if (static_cast<int>(parts.side.size()) != g.n + 1)
        throw std::invalid_argument("bipartition: side vector must cover vertices 1..n");
    for (int v = 1; v <= g.n; ++v)
        if (parts.side[v] != 0 && parts.side[v] != 1)
            throw std::invalid_argument("bipartition: vertex " + std::to_string(v) + " unassigned");
    for (auto [u, v] : g.edges)
        if (parts.side[u] == parts.side[v])
            throw std::invalid_argument("bipartition: edge " + std::to_string(u) + "-" +
                                        std::to_string(v) + " inside one part");
}

// Variables are vertex ids (variable v-1 for vertex v). For each edge uv with
// u in X the factor is S(u)-S(v): Y-neighbors of u positive, X-neighbors of
// v negative.
inline SparsePolynomial build_bipartite_vertex_polynomial(const Graph& g, const Bipartition& parts,
                                                          int max_factors = kDefaultExpansionFactors,
                                                          const Exponents* caps = nullptr) {
    validate_bipartition(g, parts);
    const int m = g.edge_count();
    if (m > max_factors)
        throw budget_error("build_bipartite_vertex_polynomial: " + std::to_string(m) +
                           " factors exceed budget " + std::to_string(max_factors));
    std::vector<LinearForm> factors;
    factors.reserve(m);
    for (auto [a, b] : g.edges) {
        int u = parts.side[a] == 0 ? a : b; // X endpoint
        int v = parts.side[a] == 0 ? b : a; // Y endpoint
        std::map<int, int> c;
        for (int x : g.adj[u]) c[x - 1] += 1; // neighbors of u lie in Y
        for (int x : g.adj[v]) c[x - 1] -= 1; // neighbors of v lie in X
        LinearForm f;
        for (auto [var, coeff] : c)
            if (coeff != 0) f.emplace_back(var, coeff);
        factors.push_back(std::move(f));
    }
    return detail::expand_product(g.n, factors, caps);
}

struct Certificate {
    Exponents exponents;
    long long coefficient = 0;

    std::vector<int> list_sizes() const {
        std::vector<int> s;
        s.reserve(exponents.size());
        for (auto e : exponents) s.push_back(e + 1);
        return s;
    }
};

// Smallest (lexicographically) stored monomial of full degree with all
// exponents within caps. Works on capped expansions too, since pruning only
// removes monomials that violate the caps.
inline std::optional<Certificate> find_certificate(const SparsePolynomial& p, const Exponents& caps) {
    if (static_cast<int>(caps.size()) != p.nvars)
        throw std::invalid_argument("find_certificate: caps size must equal variable count");
    for (const auto& [e, c] : p.terms) {
        int total = 0;
        bool ok = true;
        for (int i = 0; i < p.nvars; ++i) {
            total += e[i];
            if (e[i] > caps[i]) { ok = false; break; }
        }
        if (ok && total == p.factor_count) return Certificate{e, c};
    }
    return std::nullopt;
}

enum class PolyMode { edge, bipartite_vertex };

// Realizes a decoration by scanning the list grid for a point where every
// factor of P is nonzero (one exists whenever a certificate fits the list
// sizes). Backtracks factor-by-factor, so only a sliver of the grid is
// usually touched; the budget guards the worst case.
inline SearchResult<Decoration> decorate_from_lists(const Graph& g, PolyMode mode,
                                                    std::vector<std::vector<double>> lists,
                                                    const Bipartition* parts = nullptr,
                                                    std::uint64_t budget = kDefaultGridBudget) {
    Bipartition bp;
    if (mode == PolyMode::bipartite_vertex) {
        if (parts) {
            bp = *parts;
        } else {
            auto auto_bp = auto_bipartition(g);
            if (!auto_bp) throw std::invalid_argument("decorate_from_lists: graph is not bipartite");
            bp = *auto_bp;
        }
        validate_bipartition(g, bp);
    }

    const int positions = mode == PolyMode::edge ? g.edge_count() : g.n;
    if (static_cast<int>(lists.size()) != positions)
        throw std::invalid_argument("decorate_from_lists: need one list per " +
                                    std::string(mode == PolyMode::edge ? "edge" : "vertex"));
    for (auto& l : lists) {
        l = detail::sorted_unique(l);
        if (l.empty()) throw std::invalid_argument("decorate_from_lists: empty list");
    }
    if (!detail::grid_ok(positions, [&](std::size_t i) { return lists[i].size(); }, budget))
        return SearchResult<Decoration>::make_refused();

    // factor j (edge j) is checkable once every variable it touches is set
    const int m = g.edge_count();
    std::vector<std::vector<int>> factor_ready_at(positions);
    auto factor_vars = [&](int e) {
        std::vector<int> vars;
        auto [u, v] = g.edges[e];
        if (mode == PolyMode::edge) {
            for (int x : g.adj[u]) vars.push_back(g.edge_id(u, x));
            for (int x : g.adj[v]) vars.push_back(g.edge_id(v, x));
        } else {
            for (int x : g.adj[u]) vars.push_back(x - 1);
            for (int x : g.adj[v]) vars.push_back(x - 1);
        }
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        return vars;
    };
    for (int e = 0; e < m; ++e) {
        auto vars = factor_vars(e);
        if (vars.empty()) return SearchResult<Decoration>::make_none(); // K2: identically zero
        factor_ready_at[vars.back()].push_back(e);
    }

    std::vector<double> val(positions, 0.0);
    auto factor_value = [&](int e) {
        auto [u, v] = g.edges[e];
        double s = 0.0;
        if (mode == PolyMode::edge) {
            for (int x : g.adj[u]) s += val[g.edge_id(u, x)];
            for (int x : g.adj[v]) s -= val[g.edge_id(v, x)];
        } else {
            for (int x : g.adj[u]) s += val[x - 1];
            for (int x : g.adj[v]) s -= val[x - 1];
        }
        return s;
    };

    std::function<bool(int)> dfs = [&](int i) -> bool {
        if (i == positions) return true;
        for (double x : lists[i]) {
            val[i] = x;
            bool fine = true;
            for (int e : factor_ready_at[i])
                if (factor_value(e) == 0.0) { fine = false; break; }
            if (fine && dfs(i + 1)) return true;
        }
        return false;
    };

    if (!dfs(0)) return SearchResult<Decoration>::make_none();

    if (mode == PolyMode::edge) return SearchResult<Decoration>::make_found(Decoration::edge(val));
    std::vector<double> vv(g.n + 1, 0.0);
    for (int v = 1; v <= g.n; ++v) vv[v] = val[v - 1];
    return SearchResult<Decoration>::make_found(Decoration::vertex(std::move(vv)));
}

namespace detail {

// Number of orientations of g whose indegree vector equals target. Each
// per-factor variable choice in the bipartite polynomial is exactly an
// orientation, so this count is the certificate coefficient's magnitude.
inline long long count_orientations_with_indegrees(const Graph& g, const std::vector<int>& target) {
    std::vector<int> room(target);
    long long count = 0;
    std::function<void(int)> dfs = [&](int e) {
        if (e == g.edge_count()) {
            ++count;
            return;
        }
        auto [u, v] = g.edges[e];
        // remaining edges must still be absorbable; the simple per-vertex cap prune suffices
        if (room[u] > 0) {
            --room[u];
            dfs(e + 1);
            ++room[u];
        }
        if (room[v] > 0) {
            --room[v];
            dfs(e + 1);
            ++room[v];
        }
    };
    dfs(0);
    return count;
}

} // namespace detail

// Certificate from the low-indegree orientation: pick the head's variable in
// every factor. Exponents equal indegrees (so <= 2 after a 2-degenerate
// peel) and the coefficient is the signed count of orientations sharing that
// indegree vector, nonzero by sign coherence.
inline Certificate orientation_certificate(const Graph& g, const Bipartition& parts, int cap = 2) {
    validate_bipartition(g, parts);
    Orientation o = degeneracy_orient(g, cap);
    auto indeg = o.indegrees(g);

    Exponents exps(g.n, 0);
    for (int v = 1; v <= g.n; ++v) exps[v - 1] = static_cast<std::uint8_t>(indeg[v]);

    int x_heads = 0;
    for (int e = 0; e < g.edge_count(); ++e)
        if (parts.side[o.head[e]] == 0) ++x_heads;

    std::vector<int> target(indeg.begin(), indeg.end());
    long long ways = detail::count_orientations_with_indegrees(g, target);
    long long coeff = (x_heads % 2 == 0) ? ways : -ways;
    if (coeff == 0) throw std::logic_error("orientation_certificate: zero coefficient (cannot happen)");
    return Certificate{exps, coeff};
}

} // namespace cooldec
