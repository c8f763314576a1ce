#include "rainbow/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rainbow/rng.hpp"

namespace rainbow {

Example1 example1(int sigma2, int m) {
    if (sigma2 < 4 || sigma2 % 2 != 0)
        throw std::invalid_argument("example1: sigma2 must be even and >= 4");
    if (m < 0) throw std::invalid_argument("example1: m must be >= 0");
    const int s = sigma2 / 2;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> hub1(m + 2), hub2(m + 2);
    int next = 0;
    for (int i = 0; i <= m + 1; ++i) {
        const int clique = (i == 0 || i == m + 1) ? s : s - 1;
        hub1[i] = next++;
        hub2[i] = next++;
        int first = next;
        for (int j = 0; j < clique; ++j) {
            int v = next++;
            edges.emplace_back(hub1[i], v);
            edges.emplace_back(hub2[i], v);
            for (int w = first; w < v; ++w) edges.emplace_back(w, v);
        }
    }
    for (int i = 0; i <= m; ++i) edges.emplace_back(hub2[i], hub1[i + 1]);
    Example1 out;
    out.graph = Graph::from_edges(next, edges);
    out.terminal_a = hub1[0];
    out.terminal_b = hub2[m + 1];
    return out;
}

Graph example2(int delta, int m) {
    if (delta < 2) throw std::invalid_argument("example2: delta must be >= 2");
    if (m < 0) throw std::invalid_argument("example2: m must be >= 0");
    std::vector<std::pair<int, int>> edges;
    std::vector<int> x1(m + 2), x2(m + 2);
    int next = 0;
    for (int i = 0; i <= m + 1; ++i) {
        const int size = (i == 0 || i == m + 1) ? delta + 2 : delta + 1;
        int first = next;
        x1[i] = first;
        x2[i] = first + 1;
        next += size;
        for (int u = first; u < next; ++u)
            for (int v = u + 1; v < next; ++v)
                if (!(u == x1[i] && v == x2[i])) edges.emplace_back(u, v);
    }
    for (int i = 0; i <= m; ++i) edges.emplace_back(x2[i], x1[i + 1]);
    return Graph::from_edges(next, edges);
}

namespace {

// Random graph with every degree >= min_degree, connected. Edges come from
// G(n, p); deficient vertices and components are then patched with random
// edges drawn from the same stream.
Graph random_min_degree_connected(int n, int min_degree, double p, Rng& rng) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<int> deg(n, 0);
    auto add = [&](int u, int v) {
        adj[u][v] = adj[v][u] = 1;
        ++deg[u];
        ++deg[v];
    };
    std::uint32_t threshold =
        static_cast<std::uint32_t>(std::min(p, 0.999) * 4294967296.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_chance(threshold)) add(u, v);
    for (int u = 0; u < n; ++u) {
        while (deg[u] < min_degree) {
            std::vector<int> candidates;
            for (int v = 0; v < n; ++v)
                if (v != u && !adj[u][v]) candidates.push_back(v);
            if (candidates.empty()) break;
            add(u, candidates[rng.next_below(static_cast<int>(candidates.size()))]);
        }
    }
    // join components with random cross edges
    for (;;) {
        std::vector<int> comp(n, -1);
        int ncomp = 0;
        for (int s = 0; s < n; ++s) {
            if (comp[s] >= 0) continue;
            comp[s] = ncomp;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v = 0; v < n; ++v)
                    if (adj[u][v] && comp[v] < 0) {
                        comp[v] = ncomp;
                        stack.push_back(v);
                    }
            }
            ++ncomp;
        }
        if (ncomp == 1) break;
        std::vector<int> a, b;
        for (int v = 0; v < n; ++v) (comp[v] == 0 ? a : b).push_back(v);
        add(a[rng.next_below(static_cast<int>(a.size()))],
            b[rng.next_below(static_cast<int>(b.size()))]);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adj[u][v]) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

}  // namespace

Graph random_with_sigma2(int n, int target_sigma2, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random_with_sigma2: n must be >= 3");
    if (target_sigma2 < 1 || target_sigma2 > 2 * (n - 2))
        throw std::invalid_argument("random_with_sigma2: infeasible target (needs <= 2(n-2))");
    const int d0 = (target_sigma2 + 1) / 2;
    Rng rng(seed);
    for (int attempt = 0; attempt < 400; ++attempt) {
        double p = std::min(0.95, (d0 + 1.0 + 0.75 * std::max(1.0, d0 * 0.5)) / (n - 1));
        Graph g = random_min_degree_connected(n, d0, p, rng);
        auto s2 = sigma2(g);
        if (s2 && *s2 >= target_sigma2) return g;
    }
    throw std::runtime_error("random_with_sigma2: sampling budget exhausted");
}

Graph random_with_sigma2_exact(int n, int target_sigma2, std::uint64_t seed) {
    const int t = target_sigma2;
    if (n < 6) throw std::invalid_argument("random_with_sigma2_exact: n must be >= 6");
    int da = (t + 1) / 2, db = t / 2;
    if (db < 1 || da > n - 3)
        throw std::invalid_argument("random_with_sigma2_exact: infeasible target");
    // Core on n-2 vertices with min degree da + 1, so every pair not
    // involving the planted vertices sums to > t; the planted nonadjacent
    // pair (n-2, n-1) has degree sum exactly t.
    if (da + 1 > n - 4)
        throw std::invalid_argument("random_with_sigma2_exact: infeasible target for this n");
    Rng rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        double p = std::min(0.95, (da + 2.5) / (n - 3.0));
        Graph core = random_min_degree_connected(n - 2, da + 1, p, rng);
        auto edges = core.edges();
        int a = n - 2, b = n - 1;
        // attach a and b to distinct random core vertices
        auto attach = [&](int v, int count) {
            std::vector<int> pool(n - 2);
            std::iota(pool.begin(), pool.end(), 0);
            for (int i = 0; i < count; ++i) {
                int j = rng.next_below(static_cast<int>(pool.size()));
                edges.emplace_back(v, pool[j]);
                pool.erase(pool.begin() + j);
            }
        };
        attach(a, da);
        attach(b, db);
        Graph g = Graph::from_edges(n, edges);
        auto s2 = sigma2(g);
        if (s2 && *s2 == t && is_connected(g)) return g;
    }
    throw std::runtime_error("random_with_sigma2_exact: sampling budget exhausted");
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    auto edges = std::vector<std::pair<int, int>>{};
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return Graph::from_edges(10, edges);
}

}  // namespace rainbow
