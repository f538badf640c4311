#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperbetti/betti.hpp"
#include "hyperbetti/hypergraph.hpp"

namespace hyperbetti {

struct CheckOptions {
    int n = 8;
    int trials = 50;
    std::uint64_t seed = 1;
    int p = 2;
    std::string kind = "graph"; // graph | chordal | v-tree | pc-uniform
    bool exhaustive = false;    // all labeled graphs on n vertices instead of random ones
    VerifyMode verify = VerifyMode::root;
    // Self-test hook: adds 1 to one oracle entry so the harness can prove it
    // reports violations (exit code 3) rather than only ever passing.
    bool mutate_oracle = false;
};

struct CheckResult {
    bool ok = true;
    int instances = 0; // hypergraphs examined
    int checks = 0;    // individual assertions that ran
    int skipped = 0;   // instances outside the suite's hypotheses
    std::string detail;
    std::optional<Hypergraph> reproducer; // minimized failing instance
};

// Suite names accepted by run_check, "all" included.
const std::vector<std::string>& check_suites();

// Runs one property suite over generated instances.  On the first violation
// the failing instance is shrunk by greedy edge removal and returned; ok
// stays true when every assertion passes.  Unknown suite names fail with
// bad_argument.
CheckResult run_check(const std::string& suite, const CheckOptions& opts);

} // namespace hyperbetti
