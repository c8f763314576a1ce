#pragma once

#include <string>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

enum class Stage { One, Two, Three, Four };

const char* stage_name(Stage s);

// A dominating set with provenance: which stage built it, the iteration
// counts, the size bound it is claimed to satisfy, and the layer
// decomposition at completion. Every stage checks its own bound before
// returning.
struct DomSetAudit {
    std::vector<int> set;  // sorted
    Stage stage = Stage::One;
    int k1 = 0;  // Stage-1 growth iterations
    int k2 = 0;  // Stage-2/3/4 repair iterations
    Rational bound_value;
    LayerDecomposition layers;
};

// Grows a connected two-step dominating set from a max-degree seed by
// absorbing shortest-path triples from the third neighborhood layer.
DomSetAudit stage1(const Graph& g);

// Upgrades a Stage-1 set to a connected two-way two-step dominating set:
// all pendants inside, every N^2 vertex with >= 2 neighbors in N^1.
DomSetAudit stage2(const Graph& g, const DomSetAudit& d);

// Upgrades a Stage-1 set until every N^2 vertex has >= ceil(sigma2/6)
// neighbors in N^1. Requires sigma2 >= 12.
DomSetAudit stage3(const Graph& g, const DomSetAudit& d);

// Same with strength ceil(sigma2/4) and requirement sigma2 >= 9.
DomSetAudit stage4(const Graph& g, const DomSetAudit& d);

struct AuditCheck {
    std::string property;
    bool pass = false;
    std::string detail;
};

struct AuditReport {
    std::vector<AuditCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::string summary() const;
};

// Recomputes everything from scratch: connectivity of G[D], domination
// depth, the stage-specific condition, and the stage's size bound as an
// exact rational inequality.
AuditReport audit_domset(const Graph& g, const std::vector<int>& set, Stage kind);

}  // namespace rainbow
