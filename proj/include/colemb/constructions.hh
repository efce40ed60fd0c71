#pragma once

#include <colemb/host.hh>
#include <colemb/pattern.hh>

#include <array>
#include <ostream>
#include <vector>

namespace colemb
{
    auto is_prime(long long value) -> bool;

    /// PG(2, q) over the integers mod a prime q. Points and lines are the nonzero vectors of F_q^3
    /// whose first nonzero coordinate is 1, in lexicographic order; point p lies on line l iff p.l = 0.
    struct ProjectivePlane
    {
        int q = 0;
        std::vector<std::array<int, 3>> points;
        std::vector<std::array<int, 3>> line_vectors;
        /// Sorted point ids on each line.
        std::vector<std::vector<int>> lines;

        auto on_line(int point, int line) const -> bool;
    };

    auto build_projective_plane(int q) -> ProjectivePlane;

    /// Layout of the plane pattern: points, lines, then the cliques T_1..T_N and S_1..S_N with
    /// N = q^2 + q, each clique holding m - 1 vertices.
    struct PlanePatternLayout
    {
        int q = 0;
        int m = 0;
        int point_begin = 0;
        int line_begin = 0;
        int t_begin = 0;
        int s_begin = 0;
        int vertex_count = 0;
    };

    auto plane_pattern_layout(int q, int m) -> PlanePatternLayout;

    /// Points go to part 0 and lines to part 1; consecutive points p_{i-1}, p_i are both joined to the
    /// clique T_i (parts 1..m-1) and consecutive lines to S_i (parts 0, 2..m-1); p_i ~ l_j on incidence.
    auto build_plane_pattern(int q, int m) -> Pattern;

    /// A multipartite coloring together with the split of every part into clusters.
    struct ClusteredColoring
    {
        ColoredHost host;
        int clusters_per_part = 0;
        /// cluster[v] is the index of v's cluster inside its part.
        std::vector<int> cluster;
        std::vector<int> cluster_sizes;
    };

    /// Each part splits into q^2 + q clusters, the first n mod (q^2 + q) one vertex larger. For x in
    /// an earlier part than y, the edge xy gets the color (x, cluster of y).
    auto build_fan_coloring(int q, int m, int n) -> ClusteredColoring;

    /// K_n^(r) colored by the first ell vertices of each sorted edge.
    auto build_first_ell_coloring(int n, int r, int ell) -> ColoredHost;

    struct DesignHypergraph
    {
        int r = 0;
        int ell = 0;
        int m = 0;
        std::vector<Edge> edges;

        auto as_pattern() const -> Pattern;
    };

    /// K_m for (r, ell) = (2, 1); the Bose Steiner triple system for (3, 1) and m = 3 mod 6.
    auto build_design(int r, int ell, int m) -> DesignHypergraph;

    /// Root 0, first level 1..n1, then for each (r-1)-subset S of the first level in lexicographic
    /// order its n1 children. Edges are {root} + S and S + {child}.
    auto build_tree_pattern(int r, int n1) -> Pattern;

    /// Vertices split into consecutive blocks of r + 1; an edge is colored by the multiset of its
    /// vertices' block indices.
    auto build_block_coloring(int n, int r) -> ColoredHost;

    /// 0/1 incidence matrices with a header row; rows are points (or vertices), columns lines (or edges).
    auto write_incidence_csv(std::ostream & out, const ProjectivePlane & plane) -> void;
    auto write_incidence_csv(std::ostream & out, const DesignHypergraph & design) -> void;
}
