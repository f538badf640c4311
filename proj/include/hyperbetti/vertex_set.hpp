#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace hyperbetti {

// Subset of a vertex ground set {0, ..., n-1}, stored as a 64-bit mask.
// Everything at desk scale fits in 64 vertices; Hypergraph::build enforces
// the bound.  Value semantics, cheap to copy, usable as a hash or map key.
class VertexSet {
public:
    static constexpr int max_vertices = 64;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    constexpr VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) bits_ |= bit(v);
    }

    static constexpr VertexSet full(int n) {
        return VertexSet(n >= max_vertices ? ~0ull : (1ull << n) - 1);
    }

    // Next set of the same cardinality in increasing bit order (Gosper's
    // hack).  The result may overflow past the intended ground set; callers
    // compare against 1 << n to stop.
    static constexpr VertexSet next_same_size(VertexSet s) {
        std::uint64_t mask = s.bits();
        std::uint64_t low = mask & (~mask + 1);
        std::uint64_t ripple = mask + low;
        return VertexSet(ripple | (((mask ^ ripple) >> 2) / low));
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr bool contains(int v) const { return (bits_ & bit(v)) != 0; }
    constexpr bool contains(VertexSet other) const {
        return (other.bits_ & ~bits_) == 0;
    }
    constexpr bool subset_of(VertexSet other) const { return other.contains(*this); }
    constexpr bool intersects(VertexSet other) const {
        return (bits_ & other.bits_) != 0;
    }

    constexpr VertexSet& add(int v) { bits_ |= bit(v); return *this; }
    constexpr VertexSet& remove(int v) { bits_ &= ~bit(v); return *this; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;

    // Smallest element; only meaningful on nonempty sets.
    constexpr int first() const { return std::countr_zero(bits_); }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    // Iterates the elements in increasing order.
    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        std::uint64_t rest_;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    static constexpr std::uint64_t bit(int v) { return 1ull << v; }

    std::uint64_t bits_ = 0;
};

// Lexicographic order on the sorted element lists, so {0,3} < {1,2} and a
// proper prefix sorts first.  The smallest element of the symmetric
// difference decides: whichever side owns it comes first.
constexpr bool lex_less(VertexSet a, VertexSet b) {
    std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    std::uint64_t low = diff & (~diff + 1);
    return (a.bits() & low) != 0;
}

// Canonical edge order: by cardinality, then lexicographically.
constexpr bool canonical_less(VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

struct VertexSetHash {
    std::size_t operator()(VertexSet s) const noexcept {
        std::uint64_t x = s.bits();
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdull;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

} // namespace hyperbetti
