#pragma once

#include <cstdint>
#include <map>
#include <utility>

namespace hyperbetti {

// Graded Betti numbers beta_{i,j} of an ideal, ideal-indexed throughout:
// beta_{0,j} counts minimal generators of degree j.  (The quotient-ring
// convention is shifted by one homological degree.)  Only nonzero entries
// are stored.
class BettiTable {
public:
    using Key = std::pair<int, int>; // (homological index i, internal degree j)

    std::int64_t at(int i, int j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? 0 : it->second;
    }

    void add(int i, int j, std::int64_t v) {
        if (v == 0) return;
        auto [it, inserted] = entries_.insert({{i, j}, v});
        if (!inserted) {
            it->second += v;
            if (it->second == 0) entries_.erase(it);
        }
    }

    void set(int i, int j, std::int64_t v) {
        entries_.erase({i, j});
        add(i, j, v);
    }

    const std::map<Key, std::int64_t>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    bool operator==(const BettiTable&) const = default;

private:
    std::map<Key, std::int64_t> entries_;
};

struct TableInvariants {
    int reg = 1;   // regularity; convention reg(0) = 1
    int pdim = -1; // projective dimension; convention pdim(0) = -1
};

inline TableInvariants table_invariants(const BettiTable& t) {
    TableInvariants inv;
    if (t.empty()) return inv;
    bool first = true;
    for (const auto& [key, value] : t.entries()) {
        auto [i, j] = key;
        if (first || j - i > inv.reg) inv.reg = j - i;
        if (first || i > inv.pdim) inv.pdim = i;
        first = false;
    }
    return inv;
}

// Linear resolution: every nonzero beta_{i,j} has j = i + d.
inline bool has_linear_resolution(const BettiTable& t, int d) {
    for (const auto& [key, value] : t.entries())
        if (key.second != key.first + d) return false;
    return true;
}

// Linear first syzygies: beta_{1,j} = 0 unless j = d + 1.
inline bool has_linear_first_syzygies(const BettiTable& t, int d) {
    for (const auto& [key, value] : t.entries())
        if (key.first == 1 && key.second != d + 1) return false;
    return true;
}

// Degree support window for the edge ideal of a d-uniform hypergraph on n
// vertices: nonzero entries satisfy i + d <= j <= min(n, d * (i + 1)).
inline bool degree_bounds_ok(const BettiTable& t, int d, int n) {
    for (const auto& [key, value] : t.entries()) {
        auto [i, j] = key;
        if (j < i + d) return false;
        if (j > n || j > d * (i + 1)) return false;
    }
    return true;
}

} // namespace hyperbetti
