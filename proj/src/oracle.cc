#include <colemb/errors.hh>
#include <colemb/oracle.hh>

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

using std::uint64_t;
using std::vector;

namespace colemb
{
    namespace
    {
        auto image_color(const ColoredHost & host, const Edge & edge, const vector<int> & image, vector<int> & mapped)
            -> ColorId
        {
            mapped.resize(edge.size());
            for (std::size_t j = 0; j < edge.size(); ++j)
                mapped[j] = image[edge[j]];
            return host.color_of_set(mapped);
        }
    }

    auto validate(const Embedding & embedding, const Pattern & pattern, const ColoredHost & host) -> ValidationReport
    {
        ValidationReport report;
        auto & shape = host.shape();
        auto & image = embedding.image;
        if (static_cast<int>(image.size()) != pattern.vertex_count())
            throw Error(ErrorCode::invalid_argument, "embedding has " + std::to_string(image.size()) +
                    " entries for a pattern with " + std::to_string(pattern.vertex_count()) + " vertices");

        vector<int> first_user(shape.vertex_count(), -1);
        for (int u = 0; u < pattern.vertex_count(); ++u) {
            int w = image[u];
            if (w < 0 || w >= shape.vertex_count()) {
                report.injective = false;
                report.part_respecting = false;
                report.structure_witnesses.emplace_back(u, w);
                continue;
            }
            if (first_user[w] >= 0) {
                report.injective = false;
                report.structure_witnesses.emplace_back(u, w);
            }
            else
                first_user[w] = u;
            if (pattern.has_parts() && shape.kind == HostKind::multipartite &&
                shape.part_of(w) != (*pattern.parts())[u]) {
                report.part_respecting = false;
                report.structure_witnesses.emplace_back(u, w);
            }
        }
        if (! report.injective || ! report.part_respecting) {
            report.properly_colored = false;
            report.rainbow = false;
            return report;
        }

        auto & edges = pattern.edges();
        vector<int> mapped;
        std::unordered_map<ColorId, vector<int>> by_color;
        for (int i = 0; i < pattern.edge_count(); ++i) {
            auto c = image_color(host, edges[i], image, mapped);
            if (c < 0) {
                // an edge landing inside one host part has no color at all
                report.part_respecting = false;
                report.structure_witnesses.emplace_back(edges[i][0], image[edges[i][0]]);
                continue;
            }
            by_color[c].push_back(i);
        }
        if (! report.part_respecting) {
            report.properly_colored = false;
            report.rainbow = false;
            return report;
        }

        for (auto & [color, members] : by_color)
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b) {
                    auto v = make_violation(pattern, host, image, members[a], members[b]);
                    if (v.overlap > 0)
                        report.properly_colored = false;
                    report.rainbow = false;
                    report.witnesses.push_back(std::move(v));
                }
        std::sort(report.witnesses.begin(), report.witnesses.end(), [](const Violation & a, const Violation & b) {
            return std::pair(a.first_edge, a.second_edge) < std::pair(b.first_edge, b.second_edge);
        });
        return report;
    }

    auto injection_count(const Pattern & pattern, const HostShape & shape) -> uint64_t
    {
        constexpr auto cap = std::numeric_limits<uint64_t>::max();
        auto target = align_parts(pattern, shape);
        vector<int> per_part(shape.part_count(), 0);
        for (auto p : target)
            ++per_part[p];
        uint64_t total = 1;
        for (auto count : per_part)
            for (int j = 0; j < count; ++j) {
                uint64_t factor = shape.part_size() - j;
                if (total > cap / factor)
                    return cap;
                total *= factor;
            }
        return total;
    }

    auto exists_colored_copy(const Pattern & pattern, const ColoredHost & host, EventMode mode, uint64_t limit)
        -> ExistenceResult
    {
        auto & shape = host.shape();
        auto target = align_parts(pattern, shape);
        auto estimate = injection_count(pattern, shape);
        if (estimate > limit)
            throw Error(ErrorCode::too_large, "search space has " + std::to_string(estimate) +
                    " injections, limit is " + std::to_string(limit));

        int count = pattern.vertex_count();
        vector<int> order(count);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
            [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
        vector<int> position(count);
        for (int i = 0; i < count; ++i)
            position[order[i]] = i;

        // edges become checkable at the position of their last vertex in the search order
        auto & edges = pattern.edges();
        vector<vector<int>> closing(count);
        for (int i = 0; i < pattern.edge_count(); ++i) {
            int last = 0;
            for (auto u : edges[i])
                last = std::max(last, position[u]);
            closing[last].push_back(i);
        }

        ExistenceResult result;
        vector<int> image(count, -1);
        vector<bool> used(shape.vertex_count(), false);
        vector<ColorId> edge_color(pattern.edge_count(), -1);
        std::unordered_map<ColorId, vector<int>> by_color;
        vector<int> mapped;

        auto conflicts = [&](int edge, ColorId c) {
            auto found = by_color.find(c);
            if (found == by_color.end())
                return false;
            for (auto other : found->second)
                if (mode == EventMode::rainbow || sorted_intersection_size(edges[edge], edges[other]) > 0)
                    return true;
            return false;
        };

        auto search = [&](auto & self, int depth) -> bool {
            if (depth == count)
                return true;
            int u = order[depth];
            int begin = shape.part_begin(target[u]);
            for (int w = begin; w < begin + shape.part_size(); ++w) {
                if (used[w])
                    continue;
                ++result.nodes;
                image[u] = w;
                std::size_t placed = 0;
                bool ok = true;
                for (auto e : closing[depth]) {
                    auto c = image_color(host, edges[e], image, mapped);
                    if (c < 0 || conflicts(e, c)) {
                        ok = false;
                        break;
                    }
                    edge_color[e] = c;
                    by_color[c].push_back(e);
                    ++placed;
                }
                if (ok) {
                    used[w] = true;
                    if (self(self, depth + 1))
                        return true;
                    used[w] = false;
                }
                for (std::size_t j = 0; j < placed; ++j) {
                    auto e = closing[depth][j];
                    by_color[edge_color[e]].pop_back();
                }
                image[u] = -1;
            }
            return false;
        };

        if (search(search, 0)) {
            result.exists = true;
            result.witness = Embedding{image};
        }
        return result;
    }

    auto cross_check(const Pattern & pattern, const ColoredHost & host, const EmbedConfig & config, int seeds)
        -> CrossCheckReport
    {
        CrossCheckReport report;
        report.oracle_exists = exists_colored_copy(pattern, host, config.mode).exists;
        report.seeds = seeds;
        for (int s = 0; s < seeds; ++s) {
            auto run = config;
            run.seed = config.seed + static_cast<uint64_t>(s);
            auto result = embed(pattern, host, run);
            if (! result.success)
                continue;
            ++report.embed_successes;
            if (! report.oracle_exists || ! validate(result.embedding, pattern, host).valid(config.mode))
                ++report.unsound;
        }
        report.consistent = report.unsound == 0;
        return report;
    }
}
