#include "rainbow/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace rainbow {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw std::invalid_argument("graph: vertex count must be >= 1");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    std::vector<std::pair<int, int>> canon;
    canon.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: vertex id out of range: (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        canon.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(canon.begin(), canon.end());
    for (std::size_t i = 1; i < canon.size(); ++i)
        if (canon[i] == canon[i - 1])
            throw std::invalid_argument("graph: parallel edge (" + std::to_string(canon[i].first) +
                                        "," + std::to_string(canon[i].second) + ")");
    for (auto [u, v] : canon) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.m_ = static_cast<int>(canon.size());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

SigmaTwo sigma2(const Graph& g) {
    const int n = g.vertex_count();
    std::optional<int> best;
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) == n - 1) continue;  // adjacent to everything
        auto it = g.neighbors(u).begin();
        auto end = g.neighbors(u).end();
        for (int v = u + 1; v < n; ++v) {
            while (it != end && *it < v) ++it;
            if (it != end && *it == v) continue;
            int s = g.degree(u) + g.degree(v);
            if (!best || s < *best) best = s;
        }
    }
    return best;
}

std::vector<int> bfs_distances(const Graph& g, const std::vector<int>& sources) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    std::vector<int> seeds = sources;
    std::sort(seeds.begin(), seeds.end());
    for (int s : seeds) {
        if (dist[s] != 0) {
            dist[s] = 0;
            q.push(s);
        }
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (dist[v] == -1) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

LayerDecomposition bfs_layers(const Graph& g, const std::vector<int>& base) {
    if (base.empty()) throw std::invalid_argument("bfs_layers: empty base set");
    for (int v : base)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("bfs_layers: base vertex out of range");
    LayerDecomposition ld;
    ld.base = base;
    std::sort(ld.base.begin(), ld.base.end());
    ld.base.erase(std::unique(ld.base.begin(), ld.base.end()), ld.base.end());
    ld.depth = bfs_distances(g, ld.base);
    int maxd = 0;
    for (int d : ld.depth) maxd = std::max(maxd, d);
    ld.layers.assign(maxd + 1, {});
    for (int v = 0; v < g.vertex_count(); ++v)
        if (ld.depth[v] >= 0) ld.layers[ld.depth[v]].push_back(v);
    return ld;
}

std::vector<int> descend_to_set(const Graph& g, const std::vector<int>& dist, int v) {
    if (dist[v] < 0) throw std::invalid_argument("descend_to_set: vertex unreachable from set");
    std::vector<int> path{v};
    int cur = v;
    while (dist[cur] > 0) {
        int next = -1;
        for (int w : g.neighbors(cur)) {  // ascending, so smallest id wins
            if (dist[w] == dist[cur] - 1) {
                next = w;
                break;
            }
        }
        path.push_back(next);
        cur = next;
    }
    return path;
}

bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, {0});
    for (int d : dist)
        if (d < 0) return false;
    return true;
}

std::vector<int> eccentricities(const Graph& g, Exec exec) {
    const int n = g.vertex_count();
    std::vector<int> ecc(n, 0);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int s = 0; s < n; ++s) {
            auto dist = bfs_distances(g, {s});
            int e = 0;
            for (int d : dist) e = std::max(e, d);
            ecc[s] = e;
        }
    } else {
        for (int s = 0; s < n; ++s) {
            auto dist = bfs_distances(g, {s});
            int e = 0;
            for (int d : dist) e = std::max(e, d);
            ecc[s] = e;
        }
    }
    return ecc;
}

GraphMetrics graph_metrics(const Graph& g, Exec exec) {
    GraphMetrics m;
    m.connected = is_connected(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) m.pendants.push_back(v);
    if (m.connected) {
        m.eccentricities = eccentricities(g, exec);
        m.diameter = *std::max_element(m.eccentricities.begin(), m.eccentricities.end());
    }
    return m;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<int> verts = s;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : verts)
        for (int v : g.neighbors(u))
            if (u < v && local[v] >= 0) edges.emplace_back(local[u], local[v]);
    InducedSubgraph out;
    out.graph = Graph::from_edges(static_cast<int>(verts.size()), edges);
    out.to_original = std::move(verts);
    return out;
}

std::vector<std::pair<int, int>> spanning_tree(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("spanning_tree: graph is disconnected");
    std::vector<std::pair<int, int>> tree;
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<int> q;
    seen[0] = 1;
    q.push(0);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                tree.emplace_back(std::min(u, v), std::max(u, v));
                q.push(v);
            }
        }
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

}  // namespace rainbow
