#pragma once

#include <string>

#include "hyperbetti/hypergraph.hpp"

namespace hyperbetti {

// Reads either of the two instance formats, sniffed by the first
// non-whitespace character ('{' means JSON).
//
// Text format, one item per line, '#' starts a comment:
//   vertices: a b c d     (optional, fixes the vertex order, must come first)
//   edge: a b c
// Without a vertices line, labels are registered in first-appearance order.
//
// JSON format: {"vertices": ["a", ...], "edges": [["a","b"], ...]}, where
// "vertices" is optional with the same auto-registration rule.
//
// Malformed input fails with parse_error carrying the line number; the
// simplicity checks of Hypergraph::build apply afterwards.
Hypergraph parse_hypergraph(const std::string& text);

// Same, reading from a file; "-" means stdin.
Hypergraph parse_hypergraph_file(const std::string& path);

// Canonical text form: always a vertices line, then edges in canonical
// order.  parse(render(h)) == h exactly.
std::string render_text(const Hypergraph& h);

// Canonical JSON form with the same round-trip guarantee.
std::string render_json(const Hypergraph& h);

} // namespace hyperbetti
