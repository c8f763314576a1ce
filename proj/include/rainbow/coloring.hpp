#pragma once

#include <cstdint>
#include <set>
#include <unordered_map>
#include <vector>

namespace rainbow {

// Total map edge -> color id (positive ints). Keys are normalized to u < v.
class EdgeColoring {
public:
    void set(int u, int v, int color) { colors_[key(u, v)] = color; }

    bool has(int u, int v) const { return colors_.count(key(u, v)) > 0; }

    int get(int u, int v) const {
        auto it = colors_.find(key(u, v));
        return it == colors_.end() ? -1 : it->second;
    }

    std::size_t size() const { return colors_.size(); }

    int palette_size() const {
        std::set<int> ids;
        for (const auto& [k, c] : colors_) ids.insert(c);
        return static_cast<int>(ids.size());
    }

    int max_color() const {
        int m = 0;
        for (const auto& [k, c] : colors_) m = std::max(m, c);
        return m;
    }

    const std::unordered_map<std::uint64_t, int>& raw() const { return colors_; }

    static std::uint64_t key(int u, int v) {
        if (u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    }
    static std::pair<int, int> unkey(std::uint64_t k) {
        return {static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu)};
    }

private:
    std::unordered_map<std::uint64_t, int> colors_;
};

// Partial map vertex -> color id; 0 means uncolored.
struct VertexColoring {
    std::vector<int> color;  // size n, entries >= 0

    explicit VertexColoring(int n = 0) : color(n, 0) {}

    int palette_size() const {
        std::set<int> ids;
        for (int c : color)
            if (c > 0) ids.insert(c);
        return static_cast<int>(ids.size());
    }
};

}  // namespace rainbow
