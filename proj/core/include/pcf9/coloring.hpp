#pragma once

#include <vector>

namespace pcf9 {

inline constexpr int kUnassigned = 0;

// Total or partial vertex coloring with palette 1..k; 0 marks unassigned.
struct Coloring {
    int k = 0;
    std::vector<int> colors;

    Coloring() = default;
    Coloring(int palette, int n) : k(palette), colors(n, kUnassigned) {}

    bool assigned(int v) const { return colors[v] != kUnassigned; }
    bool total() const {
        for (int c : colors)
            if (c == kUnassigned) return false;
        return true;
    }
    int size() const { return static_cast<int>(colors.size()); }
};

} // namespace pcf9
