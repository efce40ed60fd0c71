#pragma once

#include <colemb/host.hh>

#include <optional>
#include <vector>

namespace colemb
{
    /// A simple r-uniform hypergraph (r = 2 for graphs) to be embedded, optionally with an
    /// m-partition into independent parts. Vertices are ordered by index and edges are kept as
    /// sorted tuples in lexicographic order; both orders are the fixed orders used for bad events.
    class Pattern
    {
    public:
        Pattern(int vertex_count, int uniformity, std::vector<Edge> edges,
            std::optional<std::vector<int>> parts = std::nullopt);

        auto vertex_count() const -> int { return _vertex_count; }
        auto uniformity() const -> int { return _uniformity; }
        auto edges() const -> const std::vector<Edge> & { return _edges; }
        auto edge_count() const -> int { return static_cast<int>(_edges.size()); }
        auto has_parts() const -> bool { return _parts.has_value(); }
        auto parts() const -> const std::optional<std::vector<int>> & { return _parts; }
        auto part_count() const -> int;
        auto part_sizes() const -> std::vector<int>;

        /// Edge indices containing v.
        auto incident_edges(int v) const -> const std::vector<int> & { return _incidence[v]; }
        auto degree(int v) const -> int { return static_cast<int>(_incidence[v].size()); }
        /// Graphs only: sorted neighbours of v.
        auto neighbours(int v) const -> std::vector<int>;

        auto with_parts(std::vector<int> parts) const -> Pattern;
        /// Sub-hypergraph induced on vertices [0, keep).
        auto induced_prefix(int keep) const -> Pattern;

    private:
        int _vertex_count;
        int _uniformity;
        std::vector<Edge> _edges;
        std::optional<std::vector<int>> _parts;
        std::vector<std::vector<int>> _incidence;
    };

    /// delta[i] is the maximum i-degree for i in 0..r-1; delta[0] is the edge count.
    struct DegreeProfile
    {
        std::vector<long long> delta;

        auto max_degree() const -> long long { return delta.size() > 1 ? delta[1] : 0; }
    };

    auto degree_profile(const Pattern & pattern) -> DegreeProfile;

    /// Maximum number of edges containing a vertex set of the given size (0 <= size <= r).
    auto max_set_degree(const Pattern & pattern, int size) -> long long;

    /// True iff every (ell+1)-subset lies in at most one edge.
    auto check_linearity(const Pattern & pattern, int ell) -> bool;

    /// Path u1 - u2 - u3 with apex u2 and u1 < u3.
    struct PatternCherry
    {
        int u1, u2, u3;
        auto operator==(const PatternCherry &) const -> bool = default;
    };

    /// Disjoint edges u1u2 and u3u4 with u1 < u2, u3 < u4, u1 < u3.
    struct PatternQuadruple
    {
        int u1, u2, u3, u4;
        auto operator==(const PatternQuadruple &) const -> bool = default;
    };

    /// Edge indices first < second (in the lexicographic edge order) with the given overlap.
    struct OverlapPair
    {
        int first, second;
        int overlap;
        auto operator==(const OverlapPair &) const -> bool = default;
    };

    auto enumerate_cherries(const Pattern & pattern) -> std::vector<PatternCherry>;
    auto enumerate_quadruples(const Pattern & pattern) -> std::vector<PatternQuadruple>;
    auto enumerate_overlap_pairs(const Pattern & pattern, int overlap) -> std::vector<OverlapPair>;

    /// First-fit partition into at most part_count independent parts of at most capacity vertices.
    auto greedy_partition(const Pattern & pattern, int part_count, int capacity) -> std::optional<std::vector<int>>;

    auto make_path(int vertices) -> Pattern;
    auto make_cycle(int vertices) -> Pattern;
    /// Even cycle with its bipartition (vertex parity) attached.
    auto make_bipartite_cycle(int vertices) -> Pattern;
    auto make_complete(int vertices) -> Pattern;
    /// Star with centre 0 and leaves 1..leaves.
    auto make_star(int leaves) -> Pattern;
    /// Edges {2i, 2i+1}.
    auto make_matching(int edges) -> Pattern;
    /// Cyclic r-graph on `vertices` whose consecutive edges share exactly ell vertices.
    auto make_overlapping_cycle(int vertices, int r, int ell) -> Pattern;
}
