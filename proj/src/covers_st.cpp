#include "covers_internal.hpp"
#include "ohc/embedder.hpp"

namespace ohc {

Result<Embedding> embed_st_pipeline(const Digraph& g, const VertexPartition& part,
                                    const CyclePattern& c, const ConstantsProfile& p) {
    (void)g; (void)part; (void)c; (void)p;
    return Result<Embedding>::fail("st_pipeline", "unimplemented");
}

Result<STLinking> linking_ST(const Digraph& g, const VertexPartition& part,
                             const CyclePattern& c, const ConstantsProfile& p) {
    (void)g; (void)part; (void)c; (void)p;
    return Result<STLinking>::fail("linking_ST", "unimplemented");
}

}  // namespace ohc
