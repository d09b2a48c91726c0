#include "covers_internal.hpp"

namespace ohc {

Result<std::pair<OrientedPath, OrientedPath>> useful_links(
    const Digraph& g, const VertexPartition& part, const std::vector<Dir>& frag1,
    bool frag1_ab, const std::vector<Dir>& frag2, bool frag2_ab,
    const ConstantsProfile& p) {
    (void)g; (void)part; (void)frag1; (void)frag1_ab; (void)frag2; (void)frag2_ab; (void)p;
    return Result<std::pair<OrientedPath, OrientedPath>>::fail("useful_links", "unimplemented");
}

Result<ExceptionalCover> exceptional_cover_ABST(const Digraph& g,
                                                const VertexPartition& part,
                                                const CyclePattern& c,
                                                const ConstantsProfile& p) {
    (void)g; (void)part; (void)c; (void)p;
    return Result<ExceptionalCover>::fail("excover_ABST", "unimplemented");
}

}  // namespace ohc
