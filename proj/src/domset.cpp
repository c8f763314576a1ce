#include "rainbow/domset.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace rainbow {

const char* stage_name(Stage s) {
    switch (s) {
        case Stage::One: return "Stage1";
        case Stage::Two: return "Stage2";
        case Stage::Three: return "Stage3";
        case Stage::Four: return "Stage4";
    }
    return "?";
}

namespace {

int pendant_count(const Graph& g) {
    int c = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) ++c;
    return c;
}

// Max degree first, then smallest id.
int best_of(const Graph& g, const std::vector<int>& candidates) {
    int best = -1;
    for (int v : candidates)
        if (best < 0 || g.degree(v) > g.degree(best)) best = v;
    return best;
}

// Members of `pool` having a nonadjacent partner inside the pool.
std::vector<int> with_nonadjacent_partner(const Graph& g, const std::vector<int>& pool) {
    std::vector<int> out;
    for (int u : pool) {
        for (int v : pool) {
            if (v != u && !g.has_edge(u, v)) {
                out.push_back(u);
                break;
            }
        }
    }
    return out;
}

std::vector<int> count_neighbors_in(const Graph& g, const std::vector<int>& verts,
                                    const std::vector<char>& mask) {
    std::vector<int> counts;
    counts.reserve(verts.size());
    for (int u : verts) {
        int c = 0;
        for (int w : g.neighbors(u)) c += mask[w];
        counts.push_back(c);
    }
    return counts;
}

bool induced_connected(const Graph& g, const std::vector<int>& set) {
    if (set.empty()) return false;
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : set) in[v] = 1;
    std::vector<int> stack{set[0]};
    std::vector<char> seen(g.vertex_count(), 0);
    seen[set[0]] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u)) {
            if (in[v] && !seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == set.size();
}

struct SetBuilder {
    std::vector<char> in;
    std::vector<int> members;

    explicit SetBuilder(int n) : in(n, 0) {}

    void add(int v) {
        if (!in[v]) {
            in[v] = 1;
            members.push_back(v);
        }
    }
    std::vector<int> sorted() const {
        auto out = members;
        std::sort(out.begin(), out.end());
        return out;
    }
};

}  // namespace

DomSetAudit stage1(const Graph& g) {
    const int n = g.vertex_count();
    if (!is_connected(g)) throw std::invalid_argument("stage1: graph is disconnected");
    auto s2 = sigma2(g);
    if (!s2)
        throw std::invalid_argument("stage1: graph is complete (rc is trivially 1; sigma2 undefined)");
    if (pendant_count(g) > 1)
        throw std::invalid_argument("stage1: graph has more than one pendant vertex");

    // seed: max-degree vertex among those with a nonadjacent partner
    int seed = -1;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) continue;
        if (seed < 0 || g.degree(v) > g.degree(seed)) seed = v;
    }
    SetBuilder d(n);
    d.add(seed);

    int k1 = 0;
    int tail_steps = 0;
    for (;;) {
        auto dist = bfs_distances(g, d.members);
        std::vector<int> n3;
        for (int v = 0; v < n; ++v)
            if (dist[v] == 3) n3.push_back(v);
        if (n3.empty()) break;
        auto eligible = with_nonadjacent_partner(g, n3);
        int pick;
        if (!eligible.empty()) {
            pick = best_of(g, eligible);  // d(pick) >= d(partner) by maximality
            ++k1;
        } else {
            pick = best_of(g, n3);  // G[N^3] is a clique; absorb it through one vertex
            ++tail_steps;
        }
        auto path = descend_to_set(g, dist, pick);
        d.add(path[0]);
        d.add(path[1]);
        d.add(path[2]);
        assert(induced_connected(g, d.members));
    }

    DomSetAudit audit;
    audit.set = d.sorted();
    audit.stage = Stage::One;
    audit.k1 = k1;
    audit.layers = bfs_layers(g, audit.set);

    const int n2 = static_cast<int>(audit.layers.layer(2).size());
    // growth accounting: each loop iteration raised |D u N^1(D)| by at
    // least sigma2/2 + 1, and |D u N^1(D)| = n - |N^2| at completion
    if (Rational(k1 + 1) * Rational(*s2 + 2, 2) > Rational(n - n2))
        throw std::logic_error("stage1: growth accounting violated");
    audit.bound_value = Rational(6LL * (n - n2 - 2), *s2 + 2) + Rational(1);
    if (Rational(static_cast<std::int64_t>(audit.set.size())) > audit.bound_value)
        throw std::logic_error("stage1: size bound violated");
    (void)tail_steps;
    return audit;
}

namespace {

// Shared skeleton of Stages 2/3/4: repeatedly absorb a pair {u, u1} where
// u is a strength-deficient N^2 vertex with a nonadjacent deficient
// partner, then one final pair from the leftover deficient clique.
DomSetAudit repair_stage(const Graph& g, const DomSetAudit& d, Stage stage, int strength,
                         const Rational& bound) {
    const int n = g.vertex_count();
    {
        auto layers = bfs_layers(g, d.set);
        bool dominated = true;
        for (int v = 0; v < n; ++v)
            if (layers.depth[v] < 0 || layers.depth[v] > 2) dominated = false;
        if (!dominated || !induced_connected(g, d.set))
            throw std::invalid_argument(std::string(stage_name(stage)) +
                                        ": input is not a connected two-step dominating set");
    }

    SetBuilder dom(n);
    for (int v : d.set) dom.add(v);
    int k2 = 0;

    auto deficient_class = [&](const std::vector<int>& dist) {
        std::vector<char> n1mask(n, 0);
        for (int v = 0; v < n; ++v)
            if (dist[v] == 1) n1mask[v] = 1;
        std::vector<int> cls;
        for (int v = 0; v < n; ++v) {
            if (dist[v] != 2) continue;
            int c = 0;
            for (int w : g.neighbors(v)) c += n1mask[w];
            if (c <= strength - 1) cls.push_back(v);
        }
        return cls;
    };

    for (;;) {
        auto dist = bfs_distances(g, dom.members);
        auto cls = deficient_class(dist);
        auto eligible = with_nonadjacent_partner(g, cls);
        if (eligible.empty()) {
            // the leftover deficient vertices form a clique; one absorbed
            // vertex drags the rest into N^1
            if (!cls.empty()) {
                int w = best_of(g, cls);
                auto path = descend_to_set(g, dist, w);
                dom.add(path[0]);
                dom.add(path[1]);
            }
            break;
        }
        int u = best_of(g, eligible);
        auto path = descend_to_set(g, dist, u);
        dom.add(path[0]);
        dom.add(path[1]);
        ++k2;
        assert(induced_connected(g, dom.members));
    }

    if (stage == Stage::Two) {
        // the single pendant (if any) must end up inside the set
        for (int p = 0; p < n; ++p) {
            if (g.degree(p) != 1 || dom.in[p]) continue;
            auto dist = bfs_distances(g, dom.members);
            auto path = descend_to_set(g, dist, p);
            for (std::size_t i = 0; i + 1 < path.size(); ++i) dom.add(path[i]);
        }
    }

    DomSetAudit out;
    out.set = dom.sorted();
    out.stage = stage;
    out.k1 = d.k1;
    out.k2 = k2;
    out.layers = bfs_layers(g, out.set);
    out.bound_value = bound;
    if (Rational(static_cast<std::int64_t>(out.set.size())) > bound)
        throw std::logic_error(std::string(stage_name(stage)) + ": size bound violated");

    // certify the strength postcondition
    {
        std::vector<char> n1mask(n, 0);
        for (int v : out.layers.layer(1)) n1mask[v] = 1;
        auto counts = count_neighbors_in(g, out.layers.layer(2), n1mask);
        for (int c : counts)
            if (c < strength)
                throw std::logic_error(std::string(stage_name(stage)) +
                                       ": strength postcondition violated");
    }
    return out;
}

}  // namespace

DomSetAudit stage2(const Graph& g, const DomSetAudit& d) {
    if (pendant_count(g) > 1)
        throw std::invalid_argument("stage2: graph has more than one pendant vertex");
    auto s2 = sigma2(g);
    if (!s2) throw std::invalid_argument("stage2: sigma2 undefined");
    Rational bound = Rational(6LL * (g.vertex_count() - 2), *s2 + 2) + Rational(2);
    return repair_stage(g, d, Stage::Two, 2, bound);
}

DomSetAudit stage3(const Graph& g, const DomSetAudit& d) {
    auto s2 = sigma2(g);
    if (!s2 || *s2 < 12) throw std::invalid_argument("stage3: requires sigma2 >= 12");
    int strength = (*s2 + 5) / 6;  // ceil(sigma2/6)
    Rational bound = Rational(6LL * (g.vertex_count() - 2), *s2 + 2) + Rational(2);
    return repair_stage(g, d, Stage::Three, strength, bound);
}

DomSetAudit stage4(const Graph& g, const DomSetAudit& d) {
    auto s2 = sigma2(g);
    if (!s2 || *s2 < 9) throw std::invalid_argument("stage4: requires sigma2 >= 9");
    int strength = (*s2 + 3) / 4;  // ceil(sigma2/4)
    Rational bound = Rational(8LL * (g.vertex_count() - 2), *s2 + 2) + Rational(2);
    return repair_stage(g, d, Stage::Four, strength, bound);
}

std::string AuditReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << c.property << ": " << (c.pass ? "pass" : "FAIL");
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    }
    return os.str();
}

AuditReport audit_domset(const Graph& g, const std::vector<int>& set, Stage kind) {
    AuditReport rep;
    const int n = g.vertex_count();

    bool valid = !set.empty();
    for (int v : set)
        if (v < 0 || v >= n) valid = false;
    rep.checks.push_back({"valid-set", valid, valid ? "" : "empty or out-of-range ids"});
    if (!valid) return rep;

    bool gconn = is_connected(g);
    rep.checks.push_back({"graph-connected", gconn, ""});

    bool dconn = induced_connected(g, set);
    rep.checks.push_back({"induced-connected", dconn, ""});

    auto layers = bfs_layers(g, set);
    int worst = -1, witness = -1;
    for (int v = 0; v < n; ++v) {
        int dpt = layers.depth[v] < 0 ? INT32_MAX : layers.depth[v];
        if (dpt > worst) {
            worst = dpt;
            witness = v;
        }
    }
    bool twostep = gconn && worst <= 2;
    rep.checks.push_back({"two-step-domination", twostep,
                          twostep ? ""
                                  : "vertex " + std::to_string(witness) + " at distance " +
                                        (worst == INT32_MAX ? "inf" : std::to_string(worst))});

    auto s2 = sigma2(g);
    std::vector<char> n1mask(n, 0);
    for (int v : layers.layer(1)) n1mask[v] = 1;
    auto n2verts = layers.layer(2);
    auto counts = count_neighbors_in(g, n2verts, n1mask);

    if (kind == Stage::Two) {
        bool pend = true;
        std::string pdetail;
        std::vector<char> inset(n, 0);
        for (int v : set) inset[v] = 1;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 1 && !inset[v]) {
                pend = false;
                pdetail = "pendant " + std::to_string(v) + " outside set";
            }
        rep.checks.push_back({"pendants-contained", pend, pdetail});
    }
    if (kind != Stage::One) {
        int need = 2;
        if (kind == Stage::Three) need = s2 ? (*s2 + 5) / 6 : 0;
        if (kind == Stage::Four) need = s2 ? (*s2 + 3) / 4 : 0;
        bool strong = true;
        std::string sdetail;
        for (std::size_t i = 0; i < n2verts.size(); ++i)
            if (counts[i] < need) {
                strong = false;
                sdetail = "vertex " + std::to_string(n2verts[i]) + " has " +
                          std::to_string(counts[i]) + " < " + std::to_string(need);
                break;
            }
        const char* label = kind == Stage::Two ? "two-way-strength" : "k-strength";
        rep.checks.push_back({label, strong, sdetail});
    }

    if (!s2) {
        rep.checks.push_back({"size-bound", false, "sigma2 undefined (complete graph)"});
        return rep;
    }
    Rational bound;
    switch (kind) {
        case Stage::One:
            bound = Rational(6LL * (n - static_cast<int>(n2verts.size()) - 2), *s2 + 2) +
                    Rational(1);
            break;
        case Stage::Two:
        case Stage::Three:
            bound = Rational(6LL * (n - 2), *s2 + 2) + Rational(2);
            break;
        case Stage::Four:
            bound = Rational(8LL * (n - 2), *s2 + 2) + Rational(2);
            break;
    }
    bool fits = Rational(static_cast<std::int64_t>(set.size())) <= bound;
    rep.checks.push_back({"size-bound", fits,
                          "|D|=" + std::to_string(set.size()) + " vs " + bound.str()});
    return rep;
}

}  // namespace rainbow
