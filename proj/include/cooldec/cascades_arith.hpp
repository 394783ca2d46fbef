#pragma once

// Rainbow cascade colorings of N and arithmetic graphs B_k. Two integers are
// adjacent in B_k when max(a/d, b/d) <= k for d = gcd(a, b) — equivalently,
// when both lie in one cascade {d, 2d, ..., kd}. Finite windows of B_k are
// materialized as graphs for clique and chromatic probing.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "cooldec/common.hpp"
#include "cooldec/graph.hpp"

namespace cooldec {

// Color of n in the (p-1)-coloring: write n = p^s * m with p not dividing m
// and take m mod p. Never 0, so the palette is {1..p-1}.
inline std::int64_t rainbow_color(std::int64_t p, std::int64_t n) {
    if (p < 2) throw std::invalid_argument("rainbow_color: p must be a prime >= 2");
    if (n < 1) throw std::invalid_argument("rainbow_color: n must be >= 1");
    while (n % p == 0) n /= p;
    return n % p;
}

struct RainbowViolation {
    std::int64_t root = 0; // cascade {root, 2*root, ..., (p-1)*root}
    std::int64_t a = 0;    // two members sharing a color
    std::int64_t b = 0;
};

// Scans every cascade of length p-1 inside 1..n; nullopt means all rainbow.
inline std::optional<RainbowViolation> verify_rainbow(std::int64_t p, std::int64_t n) {
    if (p < 2) throw std::invalid_argument("verify_rainbow: p must be a prime >= 2");
    std::vector<std::int64_t> seen(p, 0); // color -> multiple index, stamped per root
    for (std::int64_t d = 1; (p - 1) * d <= n; ++d) {
        for (std::int64_t i = 1; i <= p - 1; ++i) {
            std::int64_t c = rainbow_color(p, i * d);
            if (seen[c] == d) {
                for (std::int64_t a = 1; a < i; ++a)
                    if (rainbow_color(p, a * d) == c) return RainbowViolation{d, a * d, i * d};
            }
            seen[c] = d;
        }
    }
    return std::nullopt;
}

struct ArithmeticGraphWindow {
    std::int64_t k = 0;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    Graph graph; // vertex v <-> integer lo + v - 1

    std::int64_t value_of(int v) const { return lo + v - 1; }
    int vertex_of(std::int64_t value) const { return static_cast<int>(value - lo + 1); }
};

inline ArithmeticGraphWindow build_window(std::int64_t k, std::int64_t lo, std::int64_t hi,
                                          std::int64_t max_vertices = 5000) {
    if (k < 1) throw std::invalid_argument("build_window: k must be >= 1");
    if (lo < 1 || hi < lo) throw std::invalid_argument("build_window: need 1 <= lo <= hi");
    const std::int64_t n = hi - lo + 1;
    if (n > max_vertices)
        throw budget_error("build_window: " + std::to_string(n) + " vertices exceed budget " +
                           std::to_string(max_vertices));
    std::vector<std::pair<int, int>> edges;
    for (std::int64_t a = lo; a <= hi; ++a)
        for (std::int64_t b = a + 1; b <= hi; ++b) {
            std::int64_t d = std::gcd(a, b);
            if (b / d <= k) // b > a, so b/d is the proximity
                edges.emplace_back(static_cast<int>(a - lo + 1), static_cast<int>(b - lo + 1));
        }
    ArithmeticGraphWindow w;
    w.k = k;
    w.lo = lo;
    w.hi = hi;
    w.graph = Graph::from_edges(static_cast<int>(n), std::move(edges));
    return w;
}

namespace detail {

struct Bitset {
    std::vector<std::uint64_t> w;
    explicit Bitset(int n = 0) : w((n + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    int count() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
    void and_with(const Bitset& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    }
    int next(int from) const { // first set bit >= from, or -1
        for (int i = from; i < static_cast<int>(w.size()) * 64;) {
            std::uint64_t word = w[i >> 6] >> (i & 63);
            if (word) return i + __builtin_ctzll(word);
            i = ((i >> 6) + 1) << 6;
        }
        return -1;
    }
};

} // namespace detail

// Exhaustive search for a clique of exactly `size` vertices, candidates
// visited in ascending id order. Returns the member integers, or nullopt
// once the whole search tree is exhausted.
inline std::optional<std::vector<std::int64_t>> clique_probe(const ArithmeticGraphWindow& win,
                                                             int size) {
    if (size < 1) throw std::invalid_argument("clique_probe: size must be >= 1");
    const Graph& g = win.graph;
    const int n = g.n;
    if (size > n) return std::nullopt;

    std::vector<detail::Bitset> adj(n, detail::Bitset(n));
    for (auto [u, v] : g.edges) {
        adj[u - 1].set(v - 1);
        adj[v - 1].set(u - 1);
    }

    std::vector<int> clique;
    std::function<bool(detail::Bitset&)> dfs = [&](detail::Bitset& cand) -> bool {
        if (static_cast<int>(clique.size()) == size) return true;
        if (static_cast<int>(clique.size()) + cand.count() < size) return false;
        for (int v = cand.next(0); v != -1; v = cand.next(v + 1)) {
            detail::Bitset next = cand;
            detail::Bitset upper(n);
            for (int i = v + 1; i < n; ++i) upper.set(i);
            next.and_with(adj[v]);
            next.and_with(upper);
            clique.push_back(v);
            if (dfs(next)) return true;
            clique.pop_back();
        }
        return false;
    };

    detail::Bitset all(n);
    for (int i = 0; i < n; ++i) all.set(i);
    if (!dfs(all)) return std::nullopt;
    std::vector<std::int64_t> values;
    for (int v : clique) values.push_back(win.value_of(v + 1));
    std::sort(values.begin(), values.end());
    return values;
}

enum class ChromaticMode { greedy, exact };

struct ChromaticResult {
    int colors = 0;
    std::vector<int> coloring; // index 1..n; colors 1..colors
    bool exact = false;
};

namespace detail {

inline ChromaticResult dsatur_greedy(const Graph& g) {
    const int n = g.n;
    ChromaticResult r;
    r.coloring.assign(n + 1, 0);
    std::vector<std::vector<char>> neigh_colors(n + 1); // color presence per vertex
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1, best_sat = -1, best_deg = -1;
        for (int v = 1; v <= n; ++v) {
            if (r.coloring[v] != 0) continue;
            int sat = 0;
            for (std::size_t c = 1; c < neigh_colors[v].size(); ++c)
                if (neigh_colors[v][c]) ++sat;
            if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
                pick = v;
                best_sat = sat;
                best_deg = g.degree(v);
            }
        }
        int c = 1;
        while (c < static_cast<int>(neigh_colors[pick].size()) && neigh_colors[pick][c]) ++c;
        r.coloring[pick] = c;
        used = std::max(used, c);
        for (int w : g.adj[pick]) {
            if (static_cast<int>(neigh_colors[w].size()) <= c) neigh_colors[w].resize(c + 1, 0);
            neigh_colors[w][c] = 1;
        }
    }
    r.colors = used;
    r.exact = false;
    return r;
}

// DSATUR-ordered branch and bound; lower bound from the canonical cascade
// clique {1..k} intersected with the window.
inline ChromaticResult dsatur_exact(const ArithmeticGraphWindow& win, int lower_bound) {
    const Graph& g = win.graph;
    const int n = g.n;
    ChromaticResult best = dsatur_greedy(g);
    if (best.colors <= lower_bound) {
        best.exact = true;
        return best;
    }

    std::vector<int> color(n + 1, 0);
    std::vector<int> best_coloring;
    int best_count = best.colors;

    std::function<void(int, int)> dfs = [&](int colored, int used) {
        if (used >= best_count) return;
        if (colored == n) {
            best_count = used;
            best_coloring.assign(color.begin(), color.end());
            return;
        }
        // most saturated uncolored vertex, ties by degree then id
        int pick = -1, best_sat = -1, best_deg = -1;
        for (int v = 1; v <= n; ++v) {
            if (color[v] != 0) continue;
            std::uint64_t mask = 0;
            int sat = 0;
            for (int w : g.adj[v])
                if (color[w] != 0 && !(mask & (1ull << (color[w] & 63)))) {
                    mask |= 1ull << (color[w] & 63);
                    ++sat;
                }
            if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
                pick = v;
                best_sat = sat;
                best_deg = g.degree(v);
            }
        }
        std::vector<char> taken(used + 2, 0);
        for (int w : g.adj[pick])
            if (color[w] != 0 && color[w] <= used + 1) taken[color[w]] = 1;
        const int limit = std::min(used + 1, best_count - 1);
        for (int c = 1; c <= limit; ++c) {
            if (taken[c]) continue;
            color[pick] = c;
            dfs(colored + 1, std::max(used, c));
            color[pick] = 0;
            if (best_count <= lower_bound) return; // proved optimal
        }
    };
    dfs(0, 0);

    ChromaticResult r;
    r.colors = best_count;
    r.exact = true;
    if (!best_coloring.empty())
        r.coloring = best_coloring;
    else
        r.coloring = best.coloring; // greedy already optimal
    return r;
}

} // namespace detail

inline ChromaticResult chromatic_probe(const ArithmeticGraphWindow& win, ChromaticMode mode,
                                       int max_exact_vertices = 60) {
    if (mode == ChromaticMode::greedy) return detail::dsatur_greedy(win.graph);
    if (win.graph.n > max_exact_vertices)
        throw budget_error("chromatic_probe: exact mode capped at " +
                           std::to_string(max_exact_vertices) + " vertices");
    int lb = 0;
    for (std::int64_t x = 1; x <= win.k; ++x)
        if (win.lo <= x && x <= win.hi) ++lb;
    lb = std::max(lb, win.graph.n > 0 ? 1 : 0);
    return detail::dsatur_exact(win, lb);
}

// Proper coloring of the window from the rainbow coloring for p = k+1
// (requires k+1 prime): same-cascade members always get distinct colors.
inline std::vector<int> rainbow_restriction_coloring(const ArithmeticGraphWindow& win) {
    const std::int64_t p = win.k + 1;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("rainbow_restriction_coloring: k+1 must be prime");
    std::vector<int> coloring(win.graph.n + 1, 0);
    for (int v = 1; v <= win.graph.n; ++v)
        coloring[v] = static_cast<int>(rainbow_color(p, win.value_of(v)));
    for (auto [u, v] : win.graph.edges)
        if (coloring[u] == coloring[v])
            throw std::logic_error("rainbow_restriction_coloring: collision (cannot happen)");
    return coloring;
}

} // namespace cooldec
