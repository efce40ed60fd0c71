#include <colemb/certify.hh>
#include <colemb/embedding.hh>
#include <colemb/errors.hh>

#include <algorithm>
#include <map>
#include <string>

using std::string;
using std::vector;

namespace colemb
{
    namespace
    {
        auto part_members(const HostShape & shape, int part) -> vector<int>
        {
            vector<int> members(shape.part_size());
            for (int i = 0; i < shape.part_size(); ++i)
                members[i] = shape.part_begin(part) + i;
            return members;
        }

        auto graph_events(const Pattern & pattern, const ColoredHost & host, EventMode mode, long long limit)
            -> vector<BadEvent>
        {
            auto & shape = host.shape();
            auto target = align_parts(pattern, shape);
            auto cherries = enumerate_cherries(pattern);
            vector<PatternQuadruple> quadruples;
            if (mode == EventMode::rainbow)
                quadruples = enumerate_quadruples(pattern);

            long double n = shape.n;
            long double candidates = cherries.size() * n * n * n + quadruples.size() * n * n * n * n;
            if (candidates > limit)
                throw Error(ErrorCode::too_large, "event enumeration would scan " +
                        std::to_string(static_cast<long long>(candidates)) + " candidates");

            vector<BadEvent> events;
            for (auto & ch : cherries) {
                auto p1 = part_members(shape, target[ch.u1]);
                auto p2 = part_members(shape, target[ch.u2]);
                auto p3 = part_members(shape, target[ch.u3]);
                for (auto v2 : p2)
                    for (auto v1 : p1) {
                        auto c = host.pair_color(v1, v2);
                        for (auto v3 : p3)
                            if (v3 != v1 && host.pair_color(v2, v3) == c)
                                events.push_back({EventClass::cherry, 1, {ch.u1, ch.u2, ch.u3}, {v1, v2, v3}});
                    }
            }
            for (auto & q : quadruples) {
                auto p1 = part_members(shape, target[q.u1]);
                auto p2 = part_members(shape, target[q.u2]);
                auto p3 = part_members(shape, target[q.u3]);
                auto p4 = part_members(shape, target[q.u4]);
                for (auto v1 : p1)
                    for (auto v2 : p2) {
                        auto c = host.pair_color(v1, v2);
                        for (auto v3 : p3) {
                            if (v3 == v1 || v3 == v2)
                                continue;
                            for (auto v4 : p4)
                                if (v4 != v1 && v4 != v2 && host.pair_color(v3, v4) == c)
                                    events.push_back(
                                        {EventClass::quadruple, 0, {q.u1, q.u2, q.u3, q.u4}, {v1, v2, v3, v4}});
                        }
                    }
            }
            return events;
        }

        auto hyper_events(const Pattern & pattern, const ColoredHost & host, EventMode mode, long long limit)
            -> vector<BadEvent>
        {
            auto & shape = host.shape();
            align_parts(pattern, shape);
            int r = shape.r, n = shape.n;
            vector<OverlapPair> pairs;
            for (int i = (mode == EventMode::rainbow ? 0 : 1); i < r; ++i) {
                auto more = enumerate_overlap_pairs(pattern, i);
                pairs.insert(pairs.end(), more.begin(), more.end());
            }
            long double candidates = 0;
            for (auto & p : pairs) {
                long double count = 1;
                for (int j = 0; j < 2 * r - p.overlap; ++j)
                    count *= n - j;
                candidates += count;
            }
            if (candidates > limit)
                throw Error(ErrorCode::too_large, "event enumeration would scan " +
                        std::to_string(static_cast<long long>(candidates)) + " candidates");

            vector<BadEvent> events;
            for (auto & p : pairs) {
                auto & e = pattern.edges()[p.first];
                auto & f = pattern.edges()[p.second];
                vector<int> support = e;
                support.insert(support.end(), f.begin(), f.end());
                std::sort(support.begin(), support.end());
                support.erase(std::unique(support.begin(), support.end()), support.end());
                auto position = [&](int u) {
                    return static_cast<int>(std::lower_bound(support.begin(), support.end(), u) - support.begin());
                };
                vector<int> e_at, f_at;
                for (auto u : e)
                    e_at.push_back(position(u));
                for (auto u : f)
                    f_at.push_back(position(u));

                // all injective maps support -> [n], depth-first
                int size = static_cast<int>(support.size());
                vector<int> images(size, -1);
                vector<bool> used(n, false);
                vector<int> mapped(r);
                auto recurse = [&](auto & self, int depth) -> void {
                    if (depth == size) {
                        for (int j = 0; j < r; ++j)
                            mapped[j] = images[e_at[j]];
                        auto ce = host.color_of_set(mapped);
                        for (int j = 0; j < r; ++j)
                            mapped[j] = images[f_at[j]];
                        if (ce == host.color_of_set(mapped))
                            events.push_back({EventClass::hyper_overlap, p.overlap, support, images});
                        return;
                    }
                    for (int v = 0; v < n; ++v)
                        if (! used[v]) {
                            used[v] = true;
                            images[depth] = v;
                            self(self, depth + 1);
                            used[v] = false;
                        }
                };
                recurse(recurse, 0);
            }
            return events;
        }

        // supports hold at most 2r vertices, so a quadratic scan beats sorting
        auto meets(const vector<int> & a, const vector<int> & b) -> bool
        {
            for (auto x : a)
                for (auto y : b)
                    if (x == y)
                        return true;
            return false;
        }

        auto class_name(const BadEvent & event) -> string
        {
            switch (event.kind) {
            case EventClass::cherry: return "cherry";
            case EventClass::quadruple: return "quadruple";
            case EventClass::hyper_overlap: return "overlap" + std::to_string(event.overlap);
            }
            return "unknown";
        }
    }

    auto enumerate_bad_events(const Pattern & pattern, const ColoredHost & host, EventMode mode, long long limit)
        -> vector<BadEvent>
    {
        if (host.shape().kind == HostKind::multipartite)
            return graph_events(pattern, host, mode, limit);
        return hyper_events(pattern, host, mode, limit);
    }

    auto enumerate_intersecting_exact(const BadEvent & event, const vector<BadEvent> & family, HostKind host_kind,
        int r) -> vector<ClassCount>
    {
        vector<string> classes;
        if (host_kind == HostKind::multipartite)
            classes = {"cherry", "quadruple"};
        else
            for (int i = 0; i < r; ++i)
                classes.push_back("overlap" + std::to_string(i));

        std::map<string, long long> counts;
        for (auto & c : classes) {
            counts[c + "/G"] = 0;
            counts[c + "/K"] = 0;
        }

        // tally by class index first; the string labels are only built once at the end
        std::map<std::pair<EventClass, int>, std::pair<long long, long long>> tally;
        for (auto & other : family) {
            if (other == event)
                continue;
            if (meets(event.pattern_vertices, other.pattern_vertices))
                ++tally[{other.kind, other.overlap}].first;
            else if (meets(event.host_vertices, other.host_vertices))
                ++tally[{other.kind, other.overlap}].second;
        }
        for (auto & [key, value] : tally) {
            BadEvent probe;
            probe.kind = key.first;
            probe.overlap = key.second;
            auto name = class_name(probe);
            counts[name + "/G"] += value.first;
            counts[name + "/K"] += value.second;
        }

        vector<ClassCount> result;
        for (auto & c : classes) {
            result.push_back({c + "/G", counts[c + "/G"]});
            result.push_back({c + "/K", counts[c + "/K"]});
        }
        return result;
    }
}
