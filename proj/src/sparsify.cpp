#include "rainbow/sparsify.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace rainbow {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

Graph sparsify(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("sparsify: graph is disconnected");
    auto s2 = sigma2(g);
    if (!s2) throw std::invalid_argument("sparsify: sigma2 undefined (complete graph)");
    const int t = *s2;
    const int n = g.vertex_count();

    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<int> deg(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u][v] = adj[v][u] = 1;
        ++deg[u];
        ++deg[v];
    }

    // Smallest degree among current non-neighbors of x, ignoring `skip`.
    auto min_nonadj_deg = [&](int x, int skip) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (v == x || v == skip || adj[x][v]) continue;
            if (best < 0 || deg[v] < best) best = deg[v];
        }
        return best;
    };

    // An edge once blocked stays blocked (degrees only fall, nonadjacent
    // pools only grow), so a single ascending pass deletes exactly the
    // edges the repeated lowest-id rule would.
    std::vector<std::pair<int, int>> kept, deleted;
    for (auto [x, y] : g.edges()) {
        bool ok = deg[x] + deg[y] >= t + 2;
        if (ok) {
            int mx = min_nonadj_deg(x, y);
            if (mx >= 0 && deg[x] - 1 + mx < t) ok = false;
        }
        if (ok) {
            int my = min_nonadj_deg(y, x);
            if (my >= 0 && deg[y] - 1 + my < t) ok = false;
        }
        if (ok) {
            adj[x][y] = adj[y][x] = 0;
            --deg[x];
            --deg[y];
            deleted.emplace_back(x, y);
        } else {
            kept.emplace_back(x, y);
        }
    }

    Dsu dsu(n);
    int components = n;
    for (auto [u, v] : kept)
        if (dsu.unite(u, v)) --components;
    for (auto [u, v] : deleted) {
        if (components == 1) break;
        if (dsu.unite(u, v)) {
            kept.emplace_back(u, v);
            --components;
        }
    }

    Graph out = Graph::from_edges(n, kept);

    if (!is_connected(out)) throw std::runtime_error("sparsify: output disconnected");
    auto s2out = sigma2(out);
    if (!s2out || *s2out != t)
        throw std::runtime_error("sparsify: sigma2 not preserved");
    // |E| < n*t/2 + 2n/(t+4), compared exactly:
    // 2(t+4)|E| < n*t*(t+4) + 4n
    std::int64_t lhs = 2LL * (t + 4) * out.edge_count();
    std::int64_t rhs = static_cast<std::int64_t>(n) * t * (t + 4) + 4LL * n;
    if (lhs >= rhs) throw std::runtime_error("sparsify: edge bound violated");
    return out;
}

}  // namespace rainbow
