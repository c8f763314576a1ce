#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rainbow/rational.hpp"

namespace rainbow {

// Per-instance accounting record for the coloring pipelines. Rendered as
// "key: value" lines; bounds are exact rationals so they survive
// serialization. runtime_ms is the one field excluded from determinism
// comparisons.
struct BoundReport {
    std::string task;    // "rc" or "rvc"
    std::string branch;  // dispatch branch taken
    int n = 0;
    std::optional<int> sigma2;
    int domset_size = 0;
    int n1_size = 0;
    int n2_size = 0;
    int d1_size = 0;
    int d2_size = 0;
    int k1 = 0;
    int k2 = 0;
    int palette_size = 0;
    std::optional<Rational> implemented_bound;
    std::optional<Rational> statement_bound;
    bool verified = false;
    std::uint64_t seed = 0;
    long long resample_iterations = -1;
    std::optional<bool> lll_holds;
    double runtime_ms = 0;

    std::string render() const;
};

}  // namespace rainbow
