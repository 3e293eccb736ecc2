#pragma once

#include <vector>

namespace qlie::detail {

// Visits every integer tuple v with lo[s] <= v[s] <= hi[s]; the empty box
// yields one empty tuple.
template <typename F>
void for_each_box(const std::vector<int>& lo, const std::vector<int>& hi, F&& f) {
    std::vector<int> v(lo);
    for (std::size_t s = 0; s < v.size(); ++s)
        if (lo[s] > hi[s]) return;
    if (lo.empty()) {
        f(v);
        return;
    }
    while (true) {
        f(v);
        std::size_t s = 0;
        while (s < v.size() && v[s] == hi[s]) {
            v[s] = lo[s];
            ++s;
        }
        if (s == v.size()) return;
        ++v[s];
    }
}

}  // namespace qlie::detail
