#pragma once

#include <tuple>
#include <vector>

#include "hyperbetti/betti_table.hpp"
#include "hyperbetti/ideal.hpp"

namespace hyperbetti {

// Per-multidegree strategy for the strand homology.  Both routes compute the
// same numbers; "smaller_side" picks whichever basis is smaller per strand
// and is the default.  The forced modes exist so tests can pin them against
// each other.
enum class StrandRoute { smaller_side, covering, complement };

struct OracleOptions {
    int generator_cap = 18;
    StrandRoute route = StrandRoute::smaller_side;
};

// Graded Betti numbers of a squarefree monomial ideal over a field of prime
// characteristic p, read off the Taylor complex: one basis element e_S per
// nonempty subset S of the generators, graded by deg lcm(S), differential
// keeping exactly the faces with the same lcm.  Homology is computed one
// multidegree strand at a time by exact rank over F_p; per-degree results
// are the sums over strands of that degree.
BettiTable taylor_betti(const MonomialIdeal& ideal, int p, OracleOptions opts = {});

struct CharCompareResult {
    bool equal = true;
    // (i, j, value at p1, value at p2) for every differing entry.
    std::vector<std::tuple<int, int, std::int64_t, std::int64_t>> diffs;
};

CharCompareResult char_compare(const MonomialIdeal& ideal, int p1, int p2,
                               OracleOptions opts = {});

bool is_prime(int p);

} // namespace hyperbetti
