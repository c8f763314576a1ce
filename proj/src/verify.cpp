#include "rainbow/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace rainbow {

namespace {

// Color-set state for the path search. Fast path for palettes <= 64,
// word-array fallback beyond that.
struct SmallSet {
    std::uint64_t bits = 0;
    explicit SmallSet(int) {}
    bool test(int c) const { return (bits >> c) & 1u; }
    void set(int c) { bits |= 1ULL << c; }
    void clear(int c) { bits &= ~(1ULL << c); }
};

struct WideSet {
    std::vector<std::uint64_t> w;
    explicit WideSet(int palette) : w(static_cast<std::size_t>(palette + 63) / 64, 0) {}
    bool test(int c) const { return (w[c >> 6] >> (c & 63)) & 1u; }
    void set(int c) { w[c >> 6] |= 1ULL << (c & 63); }
    void clear(int c) { w[c >> 6] &= ~(1ULL << (c & 63)); }
};

using ColorAdj = std::vector<std::vector<std::pair<int, int>>>;  // (neighbor, color idx)

// Depth-limited search for a walk with pairwise-distinct edge colors.
// A walk with distinct colors always contains a rainbow path (delete the
// loops), so vertex revisits need no bookkeeping. Neighbors at distance
// d-1 toward the target are tried first.
template <class CS>
struct EdgePathSearch {
    const ColorAdj& adj;
    const std::vector<int>& dist;  // distances to dst
    int dst;
    long long budget;

    bool dfs(int u, int remaining, CS& used) {
        if (u == dst) return true;
        int d = dist[u];
        if (d < 0 || d > remaining) return false;
        if (--budget < 0)
            throw std::runtime_error("is_rainbow_connected: search budget exceeded");
        for (int delta = -1; delta <= 1; ++delta) {
            for (auto [v, c] : adj[u]) {
                if (dist[v] != d + delta) continue;
                if (used.test(c)) continue;
                used.set(c);
                bool ok = dfs(v, remaining - 1, used);
                used.clear(c);
                if (ok) return true;
            }
        }
        return false;
    }
};

// Same idea for the vertex version: state tracks colors of internal
// vertices consumed so far; the endpoints' colors do not matter. An
// uncolored vertex (idx -1) cannot serve as an internal vertex.
template <class CS>
struct VertexPathSearch {
    const std::vector<std::vector<int>>& adj;
    const std::vector<int>& vcol;  // normalized color idx, -1 uncolored
    const std::vector<int>& dist;  // distances to dst
    int dst;
    long long budget;

    bool dfs(int u, int remaining, CS& used) {
        int d = dist[u];
        if (d < 0) return false;
        if (--budget < 0)
            throw std::runtime_error("is_rainbow_vertex_connected: search budget exceeded");
        for (int delta = -1; delta <= 1; ++delta) {
            for (int v : adj[u]) {
                if (dist[v] != d + delta) continue;
                if (v == dst) return true;
                int c = vcol[v];
                if (c < 0 || used.test(c)) continue;
                if (remaining < dist[v]) continue;  // v plus dist[v]-1 more internals
                used.set(c);
                bool ok = dfs(v, remaining - 1, used);
                used.clear(c);
                if (ok) return true;
            }
        }
        return false;
    }
};

template <class CS>
bool edge_pair_connected(const ColorAdj& adj, const std::vector<int>& dist, int src, int dst,
                         int palette, long long budget) {
    int d = dist[src];
    if (d < 0) return false;
    if (d <= 1) return true;  // an edge is always a rainbow path
    int lens[3] = {d, std::min(d + 2, palette), palette};
    for (int i = 0; i < 3; ++i) {
        if (i > 0 && lens[i] == lens[i - 1]) continue;
        EdgePathSearch<CS> search{adj, dist, dst, budget};
        CS used(palette);
        if (search.dfs(src, lens[i], used)) return true;
    }
    return false;
}

template <class CS>
bool vertex_pair_connected(const std::vector<std::vector<int>>& adj,
                           const std::vector<int>& vcol, const std::vector<int>& dist, int src,
                           int dst, int palette, long long budget) {
    int d = dist[src];
    if (d < 0) return false;
    if (d <= 1) return true;
    // budgets count internal vertices
    int lens[3] = {d - 1, std::min(d + 1, palette), palette};
    for (int i = 0; i < 3; ++i) {
        if (i > 0 && lens[i] <= lens[i - 1]) continue;
        VertexPathSearch<CS> search{adj, vcol, dist, dst, budget};
        CS used(std::max(palette, 1));
        if (search.dfs(src, lens[i], used)) return true;
    }
    return false;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g, Exec exec) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> dist(n);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int v = 0; v < n; ++v) dist[v] = bfs_distances(g, {v});
    } else {
        for (int v = 0; v < n; ++v) dist[v] = bfs_distances(g, {v});
    }
    return dist;
}

// Pairs ordered by decreasing distance (unreachable first); the witness of
// a failed verification is the first failing pair in this order, which is
// deterministic regardless of execution policy.
std::vector<std::pair<int, int>> ordered_pairs(const std::vector<std::vector<int>>& dist, int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    auto rank = [&](const std::pair<int, int>& p) {
        int d = dist[p.first][p.second];
        return d < 0 ? INT32_MAX : d;
    };
    std::stable_sort(pairs.begin(), pairs.end(),
                     [&](const auto& a, const auto& b) { return rank(a) > rank(b); });
    return pairs;
}

template <class Check>
Verdict run_pair_checks(const std::vector<std::pair<int, int>>& pairs, Exec exec, Check check) {
    const long long total = static_cast<long long>(pairs.size());
    std::atomic<long long> first_fail{total};
    std::string error;
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long long i = 0; i < total; ++i) {
            if (i >= first_fail.load(std::memory_order_relaxed)) continue;
            bool ok = true;
            try {
                ok = check(pairs[i].first, pairs[i].second);
            } catch (const std::exception& e) {
#pragma omp critical
                error = e.what();
                ok = false;
            }
            if (!ok) {
                long long cur = first_fail.load();
                while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {
                }
            }
        }
    } else {
        for (long long i = 0; i < total; ++i) {
            if (!check(pairs[i].first, pairs[i].second)) {
                first_fail = i;
                break;
            }
        }
    }
    if (!error.empty()) throw std::runtime_error(error);
    Verdict v;
    v.ok = first_fail.load() >= total;
    if (!v.ok) v.witness = pairs[static_cast<std::size_t>(first_fail.load())];
    return v;
}

}  // namespace

Verdict is_rainbow_connected(const Graph& g, const EdgeColoring& col, VerifyOptions opt) {
    const int n = g.vertex_count();
    auto edges = g.edges();
    std::map<int, int> palette_map;  // sorted ids -> dense index
    for (auto [u, v] : edges) {
        int c = col.get(u, v);
        if (c < 0)
            throw std::invalid_argument("is_rainbow_connected: coloring is not total on E(g)");
        palette_map.emplace(c, 0);
    }
    int next = 0;
    for (auto& [id, idx] : palette_map) idx = next++;
    const int palette = next;

    ColorAdj adj(n);
    for (auto [u, v] : edges) {
        int c = palette_map[col.get(u, v)];
        adj[u].emplace_back(v, c);
        adj[v].emplace_back(u, c);
    }

    auto dist = all_pairs_distances(g, opt.exec);
    auto pairs = ordered_pairs(dist, n);

    if (palette == static_cast<int>(edges.size())) {
        // All edges distinctly colored: every path is rainbow, so the
        // verdict reduces to reachability.
        for (auto& p : pairs)
            if (dist[p.first][p.second] < 0) return {false, p};
        return {true, {-1, -1}};
    }

    auto check = [&](int u, int v) {
        const auto& drow = dist[v];
        if (palette <= 64)
            return edge_pair_connected<SmallSet>(adj, drow, u, v, palette,
                                                 opt.node_budget_per_pair);
        return edge_pair_connected<WideSet>(adj, drow, u, v, palette, opt.node_budget_per_pair);
    };
    return run_pair_checks(pairs, opt.exec, check);
}

bool has_rainbow_path(const Graph& g, const EdgeColoring& col, int u, int v, long long budget) {
    const int n = g.vertex_count();
    std::map<int, int> palette_map;
    auto edges = g.edges();
    for (auto [a, b] : edges) {
        int c = col.get(a, b);
        if (c < 0) throw std::invalid_argument("has_rainbow_path: coloring is not total");
        palette_map.emplace(c, 0);
    }
    int next = 0;
    for (auto& [id, idx] : palette_map) idx = next++;
    ColorAdj adj(n);
    for (auto [a, b] : edges) {
        int c = palette_map[col.get(a, b)];
        adj[a].emplace_back(b, c);
        adj[b].emplace_back(a, c);
    }
    auto dist = bfs_distances(g, {v});
    if (next <= 64) return edge_pair_connected<SmallSet>(adj, dist, u, v, next, budget);
    return edge_pair_connected<WideSet>(adj, dist, u, v, next, budget);
}

Verdict is_rainbow_vertex_connected(const Graph& g, const VertexColoring& col,
                                    VerifyOptions opt) {
    const int n = g.vertex_count();
    if (static_cast<int>(col.color.size()) != n)
        throw std::invalid_argument("is_rainbow_vertex_connected: coloring size mismatch");
    std::map<int, int> palette_map;
    for (int c : col.color)
        if (c > 0) palette_map.emplace(c, 0);
    int next = 0;
    for (auto& [id, idx] : palette_map) idx = next++;
    const int palette = next;

    std::vector<int> vcol(n, -1);
    for (int v = 0; v < n; ++v)
        if (col.color[v] > 0) vcol[v] = palette_map[col.color[v]];

    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);

    auto dist = all_pairs_distances(g, opt.exec);
    auto pairs = ordered_pairs(dist, n);

    auto check = [&](int u, int v) {
        const auto& drow = dist[v];
        if (palette <= 64)
            return vertex_pair_connected<SmallSet>(adj, vcol, drow, u, v, palette,
                                                   opt.node_budget_per_pair);
        return vertex_pair_connected<WideSet>(adj, vcol, drow, u, v, palette,
                                              opt.node_budget_per_pair);
    };
    return run_pair_checks(pairs, opt.exec, check);
}

namespace {

struct Deadline {
    std::chrono::steady_clock::time_point end;
    long long counter = 0;
    const char* what;

    void tick() {
        if ((++counter & 1023) == 0 && std::chrono::steady_clock::now() > end)
            throw std::runtime_error(std::string(what) + ": time budget exceeded");
    }
};

struct RcSearch {
    const Graph& g;
    std::vector<std::pair<int, int>> edges;
    int k = 0;
    std::vector<int> col;
    Deadline* deadline;

    bool assign(std::size_t idx, int max_used) {
        if (idx == edges.size()) {
            deadline->tick();
            EdgeColoring ec;
            for (std::size_t i = 0; i < edges.size(); ++i)
                ec.set(edges[i].first, edges[i].second, col[i]);
            VerifyOptions o;
            o.exec = Exec::Serial;
            return is_rainbow_connected(g, ec, o).ok;
        }
        int top = std::min(max_used + 1, k);
        for (int c = 1; c <= top; ++c) {
            col[idx] = c;
            if (assign(idx + 1, std::max(max_used, c))) return true;
        }
        return false;
    }
};

struct RvcSearch {
    const Graph& g;
    int k = 0;
    std::vector<int> col;
    Deadline* deadline;

    bool assign(int v, int max_used) {
        if (v == g.vertex_count()) {
            deadline->tick();
            VertexColoring vc(g.vertex_count());
            vc.color = col;
            VerifyOptions o;
            o.exec = Exec::Serial;
            return is_rainbow_vertex_connected(g, vc, o).ok;
        }
        int top = std::min(max_used + 1, k);
        for (int c = 1; c <= top; ++c) {
            col[v] = c;
            if (assign(v + 1, std::max(max_used, c))) return true;
        }
        return false;
    }
};

}  // namespace

int exact_rc(const Graph& g, OracleLimits limits) {
    if (!is_connected(g)) throw std::invalid_argument("exact_rc: graph is disconnected");
    if (g.edge_count() > limits.max_edges)
        throw std::invalid_argument("exact_rc: edge limit exceeded (" +
                                    std::to_string(g.edge_count()) + " > " +
                                    std::to_string(limits.max_edges) + ")");
    const int m = g.edge_count();
    if (m == 0) return 0;
    auto metrics = graph_metrics(g, Exec::Serial);
    Deadline deadline{std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(limits.time_budget_s)),
                      0, "exact_rc"};
    for (int k = std::max(*metrics.diameter, 1); k <= m; ++k) {
        RcSearch s{g, g.edges(), k, std::vector<int>(m, 0), &deadline};
        if (s.assign(0, 0)) return k;
    }
    return m;  // all-distinct coloring always rainbow-connects
}

int exact_rvc(const Graph& g, OracleLimits limits) {
    if (!is_connected(g)) throw std::invalid_argument("exact_rvc: graph is disconnected");
    const int n = g.vertex_count();
    if (n > limits.max_vertices)
        throw std::invalid_argument("exact_rvc: vertex limit exceeded (" + std::to_string(n) +
                                    " > " + std::to_string(limits.max_vertices) + ")");
    auto metrics = graph_metrics(g, Exec::Serial);
    Deadline deadline{std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(limits.time_budget_s)),
                      0, "exact_rvc"};
    int k0 = std::max(*metrics.diameter - 1, 0);
    for (int k = k0; k <= n; ++k) {
        if (k == 0) {
            VertexColoring empty(n);
            VerifyOptions o;
            o.exec = Exec::Serial;
            if (is_rainbow_vertex_connected(g, empty, o).ok) return 0;
            continue;
        }
        RvcSearch s{g, k, std::vector<int>(n, 0), &deadline};
        if (s.assign(0, 0)) return k;
    }
    throw std::logic_error("exact_rvc: search failed to terminate");
}

}  // namespace rainbow
