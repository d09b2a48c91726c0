#pragma once

#include <functional>
#include <optional>

#include "ohc/pattern.hpp"

namespace ohc {

struct OracleOptions {
    int limit = 14;   // refuse instances above this order
    int threads = 0;  // 0 = library default
};

struct OracleStats {
    long nodes = 0;  // search-tree nodes of the serial-equivalent run
};

// Exact decision: does g contain a copy of the oriented cycle c?
// Complete backtracking over position-0 hosts with forward-checking
// pruning; a returned embedding always validates, absence is a proof.
// The parallel entry point splits on the position-0 host and merges
// deterministically (lowest starting vertex wins), so results and node
// counts match oracle_embed_serial exactly.
std::optional<Embedding> oracle_embed(const Digraph& g, const CyclePattern& c,
                                      const OracleOptions& opt = {},
                                      OracleStats* stats = nullptr);

// Single-threaded reference implementation, kept for testing and benchmarks.
std::optional<Embedding> oracle_embed_serial(const Digraph& g, const CyclePattern& c,
                                             const OracleOptions& opt = {},
                                             OracleStats* stats = nullptr);

// All 2^n direction sequences, or one representative per orbit under
// rotation and reversal-of-traversal (which flips every direction).
void enumerate_patterns(int n, bool up_to_symmetry,
                        const std::function<void(const CyclePattern&)>& emit);

std::vector<CyclePattern> all_patterns(int n, bool up_to_symmetry);

}  // namespace ohc
