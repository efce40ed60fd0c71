#include <colemb/errors.hh>
#include <colemb/pattern.hh>

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

using std::optional;
using std::vector;

namespace colemb
{
    Pattern::Pattern(int vertex_count, int uniformity, vector<Edge> edges, optional<vector<int>> parts) :
        _vertex_count(vertex_count),
        _uniformity(uniformity),
        _edges(std::move(edges)),
        _parts(std::move(parts))
    {
        if (vertex_count < 0)
            throw Error(ErrorCode::invalid_argument, "negative vertex count");
        if (uniformity < 2)
            throw Error(ErrorCode::invalid_argument, "pattern uniformity must be at least 2");
        for (auto & e : _edges) {
            if (static_cast<int>(e.size()) != uniformity)
                throw Error(ErrorCode::invalid_argument,
                    "edge of size " + std::to_string(e.size()) + " in a " + std::to_string(uniformity) + "-uniform pattern");
            std::sort(e.begin(), e.end());
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] < 0 || e[i] >= vertex_count)
                    throw Error(ErrorCode::invalid_argument, "edge vertex out of range");
                if (i > 0 && e[i] == e[i - 1])
                    throw Error(ErrorCode::invalid_argument, "edge repeats a vertex");
            }
        }
        std::sort(_edges.begin(), _edges.end());
        if (std::adjacent_find(_edges.begin(), _edges.end()) != _edges.end())
            throw Error(ErrorCode::invalid_argument, "duplicate edge in pattern");

        if (_parts) {
            if (static_cast<int>(_parts->size()) != vertex_count)
                throw Error(ErrorCode::invalid_argument, "parts array must assign every vertex");
            for (auto p : *_parts)
                if (p < 0)
                    throw Error(ErrorCode::invalid_argument, "negative part index");
            for (auto & e : _edges)
                for (std::size_t i = 0; i < e.size(); ++i)
                    for (std::size_t j = i + 1; j < e.size(); ++j)
                        if ((*_parts)[e[i]] == (*_parts)[e[j]])
                            throw Error(ErrorCode::invalid_argument,
                                "part " + std::to_string((*_parts)[e[i]]) + " is not independent");
        }

        _incidence.resize(vertex_count);
        for (int i = 0; i < edge_count(); ++i)
            for (auto v : _edges[i])
                _incidence[v].push_back(i);
    }

    auto Pattern::part_count() const -> int
    {
        if (! _parts)
            return 1;
        return _parts->empty() ? 0 : *std::max_element(_parts->begin(), _parts->end()) + 1;
    }

    auto Pattern::part_sizes() const -> vector<int>
    {
        vector<int> sizes(part_count(), 0);
        if (! _parts)
            sizes[0] = _vertex_count;
        else
            for (auto p : *_parts)
                ++sizes[p];
        return sizes;
    }

    auto Pattern::neighbours(int v) const -> vector<int>
    {
        vector<int> result;
        for (auto e : _incidence[v])
            for (auto w : _edges[e])
                if (w != v)
                    result.push_back(w);
        std::sort(result.begin(), result.end());
        return result;
    }

    auto Pattern::with_parts(vector<int> parts) const -> Pattern
    {
        return Pattern(_vertex_count, _uniformity, _edges, std::move(parts));
    }

    auto Pattern::induced_prefix(int keep) const -> Pattern
    {
        keep = std::clamp(keep, 0, _vertex_count);
        vector<Edge> kept;
        for (auto & e : _edges)
            if (e.back() < keep)
                kept.push_back(e);
        optional<vector<int>> parts;
        if (_parts)
            parts.emplace(_parts->begin(), _parts->begin() + keep);
        return Pattern(keep, _uniformity, std::move(kept), std::move(parts));
    }

    auto max_set_degree(const Pattern & pattern, int size) -> long long
    {
        if (size < 0 || size > pattern.uniformity())
            throw Error(ErrorCode::invalid_argument, "set size outside 0..r");
        if (size == 0)
            return pattern.edge_count();
        if (pattern.edge_count() == 0)
            return 0;
        if (size == 1) {
            long long best = 0;
            for (int v = 0; v < pattern.vertex_count(); ++v)
                best = std::max<long long>(best, pattern.degree(v));
            return best;
        }
        std::map<vector<int>, long long> counts;
        vector<int> pick(size), subset(size);
        for (auto & e : pattern.edges()) {
            std::iota(pick.begin(), pick.end(), 0);
            do {
                for (int i = 0; i < size; ++i)
                    subset[i] = e[pick[i]];
                ++counts[subset];
            } while (next_combination(pick, pattern.uniformity()));
        }
        long long best = 0;
        for (auto & [_, c] : counts)
            best = std::max(best, c);
        return best;
    }

    auto degree_profile(const Pattern & pattern) -> DegreeProfile
    {
        DegreeProfile profile;
        for (int i = 0; i < pattern.uniformity(); ++i)
            profile.delta.push_back(max_set_degree(pattern, i));
        return profile;
    }

    auto check_linearity(const Pattern & pattern, int ell) -> bool
    {
        if (ell < 1 || ell > pattern.uniformity() - 1)
            throw Error(ErrorCode::invalid_argument, "ell must lie in 1..r-1");
        return max_set_degree(pattern, ell + 1) <= 1;
    }

    auto enumerate_cherries(const Pattern & pattern) -> vector<PatternCherry>
    {
        if (pattern.uniformity() != 2)
            throw Error(ErrorCode::invalid_argument, "cherries are defined for graphs");
        vector<PatternCherry> result;
        for (int apex = 0; apex < pattern.vertex_count(); ++apex) {
            auto around = pattern.neighbours(apex);
            for (std::size_t i = 0; i < around.size(); ++i)
                for (std::size_t j = i + 1; j < around.size(); ++j)
                    result.push_back({around[i], apex, around[j]});
        }
        return result;
    }

    auto enumerate_quadruples(const Pattern & pattern) -> vector<PatternQuadruple>
    {
        if (pattern.uniformity() != 2)
            throw Error(ErrorCode::invalid_argument, "quadruples are defined for graphs");
        vector<PatternQuadruple> result;
        auto & edges = pattern.edges();
        for (std::size_t a = 0; a < edges.size(); ++a)
            for (std::size_t b = a + 1; b < edges.size(); ++b) {
                auto & e = edges[a];
                auto & f = edges[b];
                if (e[0] == f[0] || e[0] == f[1] || e[1] == f[0] || e[1] == f[1])
                    continue;
                // lexicographic order on disjoint edges already gives e[0] < f[0]
                result.push_back({e[0], e[1], f[0], f[1]});
            }
        return result;
    }

    auto enumerate_overlap_pairs(const Pattern & pattern, int overlap) -> vector<OverlapPair>
    {
        if (overlap < 0 || overlap > pattern.uniformity() - 1)
            throw Error(ErrorCode::invalid_argument, "overlap must lie in 0..r-1");
        vector<OverlapPair> result;
        auto & edges = pattern.edges();
        for (std::size_t a = 0; a < edges.size(); ++a)
            for (std::size_t b = a + 1; b < edges.size(); ++b)
                if (sorted_intersection_size(edges[a], edges[b]) == overlap)
                    result.push_back({static_cast<int>(a), static_cast<int>(b), overlap});
        return result;
    }

    auto greedy_partition(const Pattern & pattern, int part_count, int capacity) -> optional<vector<int>>
    {
        vector<int> parts(pattern.vertex_count(), -1);
        vector<int> sizes(part_count, 0);
        for (int v = 0; v < pattern.vertex_count(); ++v) {
            vector<bool> blocked(part_count, false);
            for (auto e : pattern.incident_edges(v))
                for (auto w : pattern.edges()[e])
                    if (w != v && parts[w] >= 0)
                        blocked[parts[w]] = true;
            int chosen = -1;
            for (int p = 0; p < part_count && chosen < 0; ++p)
                if (! blocked[p] && sizes[p] < capacity)
                    chosen = p;
            if (chosen < 0)
                return std::nullopt;
            parts[v] = chosen;
            ++sizes[chosen];
        }
        return parts;
    }

    auto make_path(int vertices) -> Pattern
    {
        vector<Edge> edges;
        for (int i = 0; i + 1 < vertices; ++i)
            edges.push_back({i, i + 1});
        return Pattern(vertices, 2, std::move(edges));
    }

    auto make_cycle(int vertices) -> Pattern
    {
        if (vertices < 3)
            throw Error(ErrorCode::invalid_argument, "a cycle needs at least 3 vertices");
        vector<Edge> edges;
        for (int i = 0; i < vertices; ++i)
            edges.push_back({i, (i + 1) % vertices});
        return Pattern(vertices, 2, std::move(edges));
    }

    auto make_bipartite_cycle(int vertices) -> Pattern
    {
        if (vertices < 4 || vertices % 2 != 0)
            throw Error(ErrorCode::invalid_argument, "a bipartite cycle needs an even length of at least 4");
        vector<int> parts(vertices);
        for (int i = 0; i < vertices; ++i)
            parts[i] = i % 2;
        return make_cycle(vertices).with_parts(std::move(parts));
    }

    auto make_complete(int vertices) -> Pattern
    {
        vector<Edge> edges;
        for (int a = 0; a < vertices; ++a)
            for (int b = a + 1; b < vertices; ++b)
                edges.push_back({a, b});
        return Pattern(vertices, 2, std::move(edges));
    }

    auto make_star(int leaves) -> Pattern
    {
        vector<Edge> edges;
        for (int i = 1; i <= leaves; ++i)
            edges.push_back({0, i});
        return Pattern(leaves + 1, 2, std::move(edges));
    }

    auto make_matching(int edge_count) -> Pattern
    {
        vector<Edge> edges;
        for (int i = 0; i < edge_count; ++i)
            edges.push_back({2 * i, 2 * i + 1});
        return Pattern(2 * edge_count, 2, std::move(edges));
    }

    auto make_overlapping_cycle(int vertices, int r, int ell) -> Pattern
    {
        if (r < 2 || ell < 1 || ell > r - 1)
            throw Error(ErrorCode::invalid_argument, "need r >= 2 and 1 <= ell <= r-1");
        if (vertices <= r || vertices % (r - ell) != 0)
            throw Error(ErrorCode::invalid_argument, "vertex count must exceed r and be divisible by r - ell");
        vector<Edge> edges;
        for (int start = 0; start < vertices; start += r - ell) {
            Edge e;
            for (int j = 0; j < r; ++j)
                e.push_back((start + j) % vertices);
            edges.push_back(std::move(e));
        }
        return Pattern(vertices, r, std::move(edges));
    }
}
