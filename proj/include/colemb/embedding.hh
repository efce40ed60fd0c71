#pragma once

#include <colemb/host.hh>
#include <colemb/pattern.hh>

#include <vector>

namespace colemb
{
    /// Injection from pattern vertices to host vertices: image[u] is the host vertex of u.
    struct Embedding
    {
        std::vector<int> image;

        auto operator==(const Embedding &) const -> bool = default;
    };

    enum class ViolationKind
    {
        monochrome_cherry,
        repeated_color_pair,
        overlap_pair
    };

    auto violation_kind_name(ViolationKind kind) -> const char *;

    /// Two pattern edges whose images carry the same color. For graphs the support is
    /// (u1, u2, u3) for a cherry with apex u2, or (u1, u2, u3, u4) for disjoint edges u1u2, u3u4;
    /// for hypergraphs it is the sorted union of the two edges.
    struct Violation
    {
        ViolationKind kind = ViolationKind::monochrome_cherry;
        int first_edge = -1;
        int second_edge = -1;
        int overlap = 0;
        std::vector<int> support;
        std::vector<int> images;
        ColorId color = -1;
    };

    /// Builds the violation record for pattern edges first < second under the given images.
    auto make_violation(const Pattern & pattern, const ColoredHost & host, const std::vector<int> & image,
        int first, int second) -> Violation;

    /// Pattern vertex -> host part it must be mapped into. Multipartite hosts use the pattern's own
    /// partition (part i into host part i) or, for unpartitioned patterns, a greedy one; hypergraph
    /// hosts have a single part. Throws part-overflow when some part does not fit.
    auto align_parts(const Pattern & pattern, const HostShape & shape) -> std::vector<int>;
}
