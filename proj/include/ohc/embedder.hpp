#pragma once

#include "ohc/covers.hpp"
#include "ohc/structure.hpp"

namespace ohc {

enum class EmbedStrategy { Auto, Extremal, Oracle };

enum class EmbedStatus {
    Found,
    NotFoundProven,           // exact oracle exhausted the search space
    AntidirectedUnsupported,  // antidirected patterns go to the oracle only
    OracleLimitExceeded,
    ConstructorFailed,        // "unable", never a nonexistence claim
};

const char* to_string(EmbedStatus s);

struct EmbedOptions {
    EmbedStrategy strategy = EmbedStrategy::Auto;
    int oracle_limit = 14;
    int threads = 0;
    uint64_t seed = 1;
};

struct EmbedResult {
    EmbedStatus status = EmbedStatus::ConstructorFailed;
    std::optional<Embedding> embedding;
    std::string failure_stage;
    ClassTag classification = ClassTag::ExpanderCandidate;
    bool used_oracle = false;
    double classify_ms = 0, construct_ms = 0, total_ms = 0;
};

EmbedResult embed_cycle(const Digraph& g, const CyclePattern& c,
                        const ConstantsProfile& p, const EmbedOptions& opt = {});

// Extends a checked exceptional cover to a full embedding through the
// residual balanced bipartite digraph.
Result<Embedding> complete_from_cover(const Digraph& g, const ExceptionalCover& cover,
                                      const CyclePattern& c,
                                      const VertexPartition& part);

// Full ST-extremal pipeline: linking split, greedy prefixes over the
// exceptional vertices, dense completion inside the two halves.
Result<Embedding> embed_st_pipeline(const Digraph& g, const VertexPartition& part,
                                    const CyclePattern& c, const ConstantsProfile& p);

std::string embed_result_to_json(const EmbedResult& r, bool with_timings = false);

}  // namespace ohc
