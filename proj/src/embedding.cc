#include <colemb/embedding.hh>
#include <colemb/errors.hh>

#include <algorithm>
#include <string>

using std::vector;

namespace colemb
{
    auto violation_kind_name(ViolationKind kind) -> const char *
    {
        switch (kind) {
        case ViolationKind::monochrome_cherry: return "monochromeCherry";
        case ViolationKind::repeated_color_pair: return "repeatedColorPair";
        case ViolationKind::overlap_pair: return "overlapPair";
        }
        return "unknown";
    }

    auto make_violation(const Pattern & pattern, const ColoredHost & host, const vector<int> & image, int first,
        int second) -> Violation
    {
        auto & e = pattern.edges()[first];
        auto & f = pattern.edges()[second];
        Violation v;
        v.first_edge = first;
        v.second_edge = second;
        v.overlap = sorted_intersection_size(e, f);
        if (pattern.uniformity() == 2 && host.shape().kind == HostKind::multipartite) {
            if (v.overlap == 1) {
                v.kind = ViolationKind::monochrome_cherry;
                int apex = (e[0] == f[0] || e[0] == f[1]) ? e[0] : e[1];
                int a = e[0] == apex ? e[1] : e[0];
                int b = f[0] == apex ? f[1] : f[0];
                v.support = {std::min(a, b), apex, std::max(a, b)};
            }
            else {
                v.kind = ViolationKind::repeated_color_pair;
                v.support = {e[0], e[1], f[0], f[1]};
            }
        }
        else {
            v.kind = ViolationKind::overlap_pair;
            v.support = e;
            v.support.insert(v.support.end(), f.begin(), f.end());
            std::sort(v.support.begin(), v.support.end());
            v.support.erase(std::unique(v.support.begin(), v.support.end()), v.support.end());
        }
        for (auto u : v.support)
            v.images.push_back(image[u]);
        vector<int> mapped;
        for (auto u : e)
            mapped.push_back(image[u]);
        v.color = host.color_of_set(mapped);
        return v;
    }

    auto align_parts(const Pattern & pattern, const HostShape & shape) -> vector<int>
    {
        shape.validate();
        if (pattern.uniformity() != shape.uniformity())
            throw Error(ErrorCode::invalid_argument, "pattern uniformity " + std::to_string(pattern.uniformity()) +
                    " does not match host uniformity " + std::to_string(shape.uniformity()));
        if (shape.kind == HostKind::hypergraph) {
            if (pattern.vertex_count() > shape.n)
                throw Error(ErrorCode::part_overflow, "pattern has " + std::to_string(pattern.vertex_count()) +
                        " vertices but the host only " + std::to_string(shape.n));
            return vector<int>(pattern.vertex_count(), 0);
        }
        if (pattern.has_parts()) {
            if (pattern.part_count() > shape.m)
                throw Error(ErrorCode::part_overflow, "pattern uses " + std::to_string(pattern.part_count()) +
                        " parts but the host has " + std::to_string(shape.m));
            auto sizes = pattern.part_sizes();
            for (std::size_t i = 0; i < sizes.size(); ++i)
                if (sizes[i] > shape.n)
                    throw Error(ErrorCode::part_overflow, "pattern part " + std::to_string(i) + " has " +
                            std::to_string(sizes[i]) + " vertices but host parts have " + std::to_string(shape.n));
            return *pattern.parts();
        }
        auto parts = greedy_partition(pattern, shape.m, shape.n);
        if (! parts)
            throw Error(ErrorCode::part_overflow, "no greedy partition of the pattern fits the host parts");
        return *parts;
    }
}
