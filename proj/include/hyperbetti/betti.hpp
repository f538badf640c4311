#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperbetti/betti_table.hpp"
#include "hyperbetti/hypergraph.hpp"
#include "hyperbetti/ideal.hpp"
#include "hyperbetti/oracle.hpp"
#include "hyperbetti/structure.hpp"

namespace hyperbetti {

// How much precondition re-checking the recursion performs.  `root` checks
// uniformity, proper connection and the triangulated property once up front;
// `full` re-checks them at every recursion node and also confirms each chosen
// edge against both splitting criteria.  `off` trusts the caller.
enum class VerifyMode { off, root, full };

struct RecursionOptions {
    VerifyMode verify = VerifyMode::root;
    int triangulated_cap = 14; // exact-check cap forwarded to structure tests
};

// One unfolding step: a splitting edge e with certificate z, the neighbor
// count t, and the two smaller hypergraphs the recursion descends into.
struct SplitDecomposition {
    VertexSet edge;
    int z = -1;
    int t = 0;
    Hypergraph rest; // h minus the edge
    Hypergraph far;  // edges at distance >= d+1 from it
};

// Chooses the splitting edge the recursion uses: the lowest vertex whose
// closed neighborhood induces a d-complete sub-hypergraph, then the first
// edge through it.  Requires a triangulated hypergraph with an edge.
SplitDecomposition split_step(const Hypergraph& h, const RecursionOptions& opts = {});

// Graded Betti numbers by the splitting-edge recursion.  Exact for
// triangulated properly-connected d-uniform hypergraphs, independently of
// the field, and cross-checked against the homology oracle by the test
// suites.
BettiTable recursive_betti(const Hypergraph& h, const RecursionOptions& opts = {});

// Whether recursive_betti accepts h: edgeless, or uniform, properly
// connected (automatic for graphs) and triangulated.
bool recursion_applies(const Hypergraph& h);

enum class RegPdimStrategy { recursive, oracle };

// Regularity and projective dimension.  The recursive strategy runs a
// lighter recursion carrying only the two numbers; the oracle strategy reads
// them off a homology table at characteristic p.
TableInvariants reg_pdim(const Hypergraph& h, RegPdimStrategy strategy,
                         int p = 2, const RecursionOptions& opts = {});

// beta_{i,j}(I(H)) = beta_{i,j}((x^e)) + beta_{i,j}(I(H\e)) +
// beta_{i-1,j}((x^e) n I(H\e)), all four tables from the oracle.  Fails with
// not_a_splitting_edge when e is not one.
struct EkIdentityReport {
    bool ok = true;
    std::string detail;
};

EkIdentityReport ek_identity_check(const Hypergraph& h, VertexSet e, int p = 2);

struct RegBounds {
    int lower = 1;                  // (d-1)c + 1 from the disjointness count
    std::optional<int> upper;       // alpha' + 1, graphs only
    int c = 0;                      // max pairwise (d+1)-disjoint edges
};

RegBounds reg_bounds(const Hypergraph& h);

// Verifies beta_{i-1, d*i} = number of i-element pairwise (d+1)-disjoint
// edge sets for every i >= 1, against the oracle table.
struct StrandCountReport {
    bool ok = true;
    std::string detail;
};

StrandCountReport strand_count_check(const Hypergraph& h, int p = 2);

struct LinearityReport {
    bool linear_first_syzygies = false;
    bool linear_resolution = false;
    bool diameter_small = false; // diam(H) <= d
    bool triangulated = false;
};

// Computes the three linearity views and enforces the theorems tying them
// together: first syzygies are linear iff the diameter is at most d, and for
// triangulated hypergraphs all three notions coincide.  A violation throws
// property_violation.
LinearityReport linearity_report(const Hypergraph& h, int p = 2);

// Linear resolution of I(G) iff the complement graph is chordal.
struct FrobergReport {
    bool linear_resolution = false;
    bool complement_chordal = false;
    bool ok = true;
};

FrobergReport froberg_check(const Hypergraph& g, int p = 2);

// Cover-height inequalities between I(G) and its Alexander dual, with the
// sharper chain in the unmixed case, plus the duality identities
// reg(I) = pdim(I^dual) + 1 and reg(I^dual) = pdim(I) + 1.
struct KonigReport {
    bool ok = true;
    std::string detail;
    bool unmixed = false;
    int height = 0;
};

KonigReport konig_check(const Hypergraph& g, int p = 2);

} // namespace hyperbetti
