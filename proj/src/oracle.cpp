#include "hyperbetti/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

namespace hyperbetti {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

namespace {

using Mask = std::uint32_t;
using Column = std::vector<std::pair<int, int>>; // (row, coeff), sorted by row

int mod_inverse(int a, int p) {
    // p is prime, so a^(p-2) works.
    std::int64_t base = a % p, result = 1;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<int>(result);
}

// Incremental sparse Gaussian elimination over F_p.  Columns arrive one at a
// time; each is reduced against the pivots found so far, and survivors
// become new pivots.  Pivot columns are normalized to leading coefficient 1.
class FpRank {
public:
    explicit FpRank(int p) : p_(p) {}

    int rank() const { return rank_; }

    void add_column(Column col) {
        while (!col.empty()) {
            auto [row, coeff] = col.front();
            auto it = pivots_.find(row);
            if (it == pivots_.end()) {
                if (coeff != 1) {
                    std::int64_t inv = mod_inverse(coeff, p_);
                    for (auto& [r, c] : col) c = static_cast<int>(inv * c % p_);
                }
                pivots_.emplace(row, std::move(col));
                ++rank_;
                return;
            }
            col = combine(col, it->second, p_ - coeff);
        }
    }

private:
    // col + scale * other, both sorted; zeros dropped.
    Column combine(const Column& col, const Column& other, int scale) const {
        Column out;
        out.reserve(col.size() + other.size());
        std::size_t a = 0, b = 0;
        while (a < col.size() || b < other.size()) {
            if (b == other.size() || (a < col.size() && col[a].first < other[b].first)) {
                out.push_back(col[a++]);
            } else if (a == col.size() || other[b].first < col[a].first) {
                int c = static_cast<int>(static_cast<std::int64_t>(scale) * other[b].second % p_);
                if (c != 0) out.push_back({other[b].first, c});
                ++b;
            } else {
                int c = static_cast<int>(
                    (col[a].second + static_cast<std::int64_t>(scale) * other[b].second) % p_);
                if (c != 0) out.push_back({col[a].first, c});
                ++a;
                ++b;
            }
        }
        return out;
    }

    int p_;
    int rank_ = 0;
    std::unordered_map<int, Column> pivots_;
};

int row_index(const std::vector<Mask>& layer, Mask face) {
    auto it = std::lower_bound(layer.begin(), layer.end(), face);
    return static_cast<int>(it - layer.begin());
}

// Sign of dropping generator g from S: (-1)^k with k the 1-based position of
// g among the elements of S.
int face_coeff(Mask s, int g, int p) {
    int pos = std::popcount(s & ((1u << g) - 1)) + 1;
    return (pos & 1) ? p - 1 : 1;
}

// Homology dimensions of a chain complex handed over as cardinality layers
// plus a face filter; dims[c] = dim H(layer c).
//
// keep_face decides whether the face S \ {g} appears in the differential:
// the covering route keeps faces with unchanged lcm, the complement route
// keeps everything (faces of a non-covering set never cover).
template <typename KeepFace>
std::vector<int> layered_homology(const std::vector<std::vector<Mask>>& layers, int p,
                                  KeepFace keep_face) {
    std::vector<int> ranks(layers.size() + 1, 0);
    for (std::size_t c = 1; c < layers.size(); ++c) {
        if (layers[c].empty() || layers[c - 1].empty()) continue;
        FpRank elim(p);
        for (Mask s : layers[c]) {
            Column col;
            for (Mask rest = s; rest;) {
                int g = std::countr_zero(rest);
                rest &= rest - 1;
                Mask face = s & ~(1u << g);
                if (!keep_face(face)) continue;
                col.push_back({row_index(layers[c - 1], face), face_coeff(s, g, p)});
            }
            std::sort(col.begin(), col.end());
            elim.add_column(std::move(col));
        }
        ranks[c] = elim.rank();
    }
    std::vector<int> dims(layers.size(), 0);
    for (std::size_t c = 0; c < layers.size(); ++c)
        dims[c] = static_cast<int>(layers[c].size()) - ranks[c] - ranks[c + 1];
    return dims;
}

} // namespace

BettiTable taylor_betti(const MonomialIdeal& ideal, int p, OracleOptions opts) {
    if (!is_prime(p))
        fail(errc::bad_field_char, "field characteristic must be prime, got " + std::to_string(p));
    int s = static_cast<int>(ideal.gens.size());
    BettiTable table;
    if (s == 0) return table;
    if (s > opts.generator_cap)
        fail(errc::too_many_generators,
             std::to_string(s) + " generators exceed the cap of " +
                 std::to_string(opts.generator_cap));

    std::size_t total = std::size_t{1} << s;
    std::vector<std::uint64_t> lcm(total, 0);
    for (std::size_t m = 1; m < total; ++m) {
        std::size_t low = m & (~m + 1);
        lcm[m] = lcm[m ^ low] |
                 ideal.gens[static_cast<std::size_t>(std::countr_zero(low))].bits();
    }

    std::unordered_map<std::uint64_t, std::vector<Mask>> strands;
    for (std::size_t m = 1; m < total; ++m)
        strands[lcm[m]].push_back(static_cast<Mask>(m));

    for (auto& [degree_bits, covering] : strands) {
        std::uint64_t v = degree_bits;
        int j = std::popcount(v);

        Mask gmask = 0;
        for (int g = 0; g < s; ++g)
            if ((ideal.gens[static_cast<std::size_t>(g)].bits() & ~v) == 0) gmask |= 1u << g;
        std::size_t inside = std::size_t{1} << std::popcount(gmask);
        std::size_t complement_size = inside - covering.size(); // includes the empty set

        bool use_covering = opts.route == StrandRoute::covering ||
                            (opts.route == StrandRoute::smaller_side &&
                             covering.size() <= complement_size);

        if (use_covering) {
            // Strand of the reduced Taylor complex itself, graded by |S|.
            std::vector<std::vector<Mask>> layers(static_cast<std::size_t>(s) + 1);
            for (Mask m : covering) layers[static_cast<std::size_t>(std::popcount(m))].push_back(m);
            for (auto& layer : layers) std::sort(layer.begin(), layer.end());
            auto keep = [&](Mask face) { return face != 0 && lcm[face] == v; };
            std::vector<int> dims = layered_homology(layers, p, keep);
            // H at cardinality i gives beta_{i-1, j}.
            for (std::size_t c = 1; c < dims.size(); ++c)
                if (dims[c] > 0) table.add(static_cast<int>(c) - 1, j, dims[c]);
        } else {
            // Reduced homology of the complex of non-covering subsets, with
            // the empty set as the augmentation cell; H at cardinality c
            // gives beta_{c, j} directly.
            std::vector<std::vector<Mask>> layers(static_cast<std::size_t>(s) + 1);
            for (Mask sub = gmask;; sub = (sub - 1) & gmask) {
                if (sub == 0 || lcm[sub] != v)
                    layers[static_cast<std::size_t>(std::popcount(sub))].push_back(sub);
                if (sub == 0) break;
            }
            for (auto& layer : layers) std::sort(layer.begin(), layer.end());
            auto keep = [](Mask) { return true; };
            std::vector<int> dims = layered_homology(layers, p, keep);
            for (std::size_t c = 0; c < dims.size(); ++c)
                if (dims[c] > 0) table.add(static_cast<int>(c), j, dims[c]);
        }
    }

    // Generator sanity: minimal generators must reappear as beta_{0,*}.
    std::map<int, std::int64_t> by_degree;
    for (Monomial g : ideal.gens) ++by_degree[g.size()];
    for (const auto& [deg, count] : by_degree)
        if (table.at(0, deg) != count)
            fail(errc::internal_check_failed,
                 "strand homology lost a minimal generator in degree " + std::to_string(deg));

    return table;
}

CharCompareResult char_compare(const MonomialIdeal& ideal, int p1, int p2,
                               OracleOptions opts) {
    BettiTable a = taylor_betti(ideal, p1, opts);
    BettiTable b = taylor_betti(ideal, p2, opts);
    CharCompareResult result;
    auto ai = a.entries().begin();
    auto bi = b.entries().begin();
    while (ai != a.entries().end() || bi != b.entries().end()) {
        if (bi == b.entries().end() || (ai != a.entries().end() && ai->first < bi->first)) {
            result.diffs.push_back({ai->first.first, ai->first.second, ai->second, 0});
            ++ai;
        } else if (ai == a.entries().end() || bi->first < ai->first) {
            result.diffs.push_back({bi->first.first, bi->first.second, 0, bi->second});
            ++bi;
        } else {
            if (ai->second != bi->second)
                result.diffs.push_back({ai->first.first, ai->first.second, ai->second, bi->second});
            ++ai;
            ++bi;
        }
    }
    result.equal = result.diffs.empty();
    return result;
}

} // namespace hyperbetti
