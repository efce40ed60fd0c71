#pragma once

#include <colemb/embedding.hh>
#include <colemb/host.hh>
#include <colemb/pattern.hh>

#include <functional>
#include <set>
#include <vector>

namespace colemb::testing
{
    /// Every part-respecting injection of the pattern, by plain recursion over host vertices.
    inline auto for_each_injection(const Pattern & pattern, const HostShape & shape,
        const std::function<void(const std::vector<int> &)> & visit) -> void
    {
        auto target = align_parts(pattern, shape);
        std::vector<int> image(pattern.vertex_count(), -1);
        std::vector<bool> used(shape.vertex_count(), false);
        std::function<void(int)> recurse = [&](int u) {
            if (u == pattern.vertex_count()) {
                visit(image);
                return;
            }
            for (int w = 0; w < shape.vertex_count(); ++w)
                if (! used[w] && shape.part_of(w) == target[u]) {
                    used[w] = true;
                    image[u] = w;
                    recurse(u + 1);
                    used[w] = false;
                }
        };
        recurse(0);
    }

    /// Direct definition: proper iff no two edges sharing a vertex have equal image colors,
    /// rainbow iff all image colors differ.
    inline auto image_is_good(const Pattern & pattern, const ColoredHost & host, const std::vector<int> & image,
        bool rainbow) -> bool
    {
        auto & edges = pattern.edges();
        std::vector<ColorId> colors;
        for (auto & e : edges) {
            std::vector<int> mapped;
            for (auto u : e)
                mapped.push_back(image[u]);
            colors.push_back(host.color_of_set(mapped));
            if (colors.back() < 0)
                return false;
        }
        for (std::size_t a = 0; a < edges.size(); ++a)
            for (std::size_t b = a + 1; b < edges.size(); ++b) {
                if (colors[a] != colors[b])
                    continue;
                if (rainbow)
                    return false;
                std::set<int> ea(edges[a].begin(), edges[a].end());
                for (auto u : edges[b])
                    if (ea.count(u))
                        return false;
            }
        return true;
    }

    inline auto exists_by_enumeration(const Pattern & pattern, const ColoredHost & host, bool rainbow) -> bool
    {
        bool found = false;
        for_each_injection(pattern, host.shape(), [&](const std::vector<int> & image) {
            if (! found && image_is_good(pattern, host, image, rainbow))
                found = true;
        });
        return found;
    }
}
