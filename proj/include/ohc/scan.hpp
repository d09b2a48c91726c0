#pragma once

#include <string>
#include <vector>

#include "ohc/digraph.hpp"

namespace ohc {

// One oracle verdict for a (family instance, pattern) pair.
struct ScanRow {
    std::string family;
    std::string params;
    std::string pattern_class;
    std::string pattern;
    bool exists = false;
    long nodes_expanded = 0;
    double millis = 0;
    bool skipped = false;  // instance above the oracle limit
};

struct ScanRequest {
    std::string family;           // two_cliques | complete | complete_bipartite |
                                  // f1 | f2 | random
    std::vector<int> sizes;       // n (or m for the f families)
    int seeds = 1;                // random family: seeds 0..seeds-1
    int delta = -1;               // random family: -1 = ceil(n/2)
    std::string patterns = "all";  // all | non_antidirected | antidirected
    int oracle_limit = 14;
    int threads = 0;
    std::string resource_dir = "resources";
};

std::vector<ScanRow> threshold_scan(const ScanRequest& req);

std::string scan_csv(const std::vector<ScanRow>& rows);

}  // namespace ohc
