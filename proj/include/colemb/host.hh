#pragma once

#include <colemb/combinatorics.hh>

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace colemb
{
    enum class HostKind
    {
        multipartite,
        hypergraph
    };

    /// A balanced complete multipartite graph K_{m (x) n} or a complete r-uniform hypergraph K_n^(r).
    /// Multipartite vertices are numbered part-major: part i holds [i n, (i+1) n).
    struct HostShape
    {
        HostKind kind = HostKind::multipartite;
        int m = 2;
        int n = 1;
        int r = 2;

        static auto multipartite(int m, int n) -> HostShape { return {HostKind::multipartite, m, n, 2}; }
        static auto hypergraph(int n, int r) -> HostShape { return {HostKind::hypergraph, 1, n, r}; }

        auto validate() const -> void;
        auto vertex_count() const -> int;
        auto uniformity() const -> int { return kind == HostKind::multipartite ? 2 : r; }
        auto part_count() const -> int { return kind == HostKind::multipartite ? m : 1; }
        auto part_of(int v) const -> int { return kind == HostKind::multipartite ? v / n : 0; }
        auto part_begin(int part) const -> int { return kind == HostKind::multipartite ? part * n : 0; }
        auto part_size() const -> int { return n; }
        auto edge_count() const -> std::uint64_t;

        auto operator==(const HostShape &) const -> bool = default;
    };

    using Edge = std::vector<int>;
    using ColorId = std::int32_t;

    auto is_host_edge(const HostShape & shape, std::span<const int> sorted) -> bool;

    /// Every legal edge of the shape exactly once, sorted tuples in lexicographic order.
    auto build_host(const HostShape & shape) -> std::vector<Edge>;

    auto for_each_host_edge(const HostShape & shape, const std::function<void(std::span<const int>)> & visit) -> void;

    /// Immutable colored complete host. Colors are relabelled to a dense range [0, color_count())
    /// preserving the order of the raw labels supplied at construction.
    class ColoredHost
    {
    public:
        /// raw_colors are given per edge in the canonical order of build_host.
        ColoredHost(HostShape shape, std::span<const std::int64_t> raw_colors);

        static auto from_function(HostShape shape, const std::function<std::int64_t(std::span<const int>)> & color_of)
            -> ColoredHost;

        /// Edges in any order; every legal edge must appear exactly once.
        static auto from_edges(HostShape shape, const std::vector<Edge> & edges, std::span<const std::int64_t> colors)
            -> ColoredHost;

        auto shape() const -> const HostShape & { return _shape; }
        auto vertex_count() const -> int { return _shape.vertex_count(); }
        auto edge_count() const -> std::uint64_t { return _edge_count; }
        auto color_count() const -> int { return _color_count; }

        /// Color of a sorted legal edge; throws on a non-edge.
        auto color(std::span<const int> sorted) const -> ColorId;
        /// Color of an unordered vertex set; returns -1 for non-edges.
        auto color_of_set(std::span<const int> vertices) const -> ColorId;
        /// Graph hosts only: color of the pair {a, b}, or -1 when ab is not an edge.
        auto pair_color(int a, int b) const -> ColorId
        {
            if (a == b)
                return -1;
            auto hi = a > b ? a : b, lo = a > b ? b : a;
            return _slot_color[static_cast<std::size_t>(hi) * (hi - 1) / 2 + lo];
        }

        auto edges() const -> std::vector<Edge> { return build_host(_shape); }
        /// Colors aligned with edges().
        auto colors() const -> std::vector<ColorId>;

    private:
        ColoredHost(HostShape shape);
        auto slot_of(std::span<const int> sorted) const -> std::uint64_t;
        auto assign(std::span<const std::int64_t> raw_colors_by_slot_order, const std::vector<std::uint64_t> & slots) -> void;

        HostShape _shape;
        std::shared_ptr<const BinomialTable> _binomials;
        std::vector<ColorId> _slot_color;
        std::uint64_t _edge_count = 0;
        int _color_count = 0;
    };

    struct BoundednessReport
    {
        int k_local = 0;
        int k_global = 0;
        std::vector<int> per_color_sizes;
    };

    auto measure_boundedness(const ColoredHost & host) -> BoundednessReport;

    enum class BoundType
    {
        local,
        global
    };

    /// Global mode chunks a seeded random edge permutation into blocks of target_k edges.
    /// Local mode greedily reuses recent colors while every endpoint stays below target_k incidences.
    auto random_bounded_coloring(const HostShape & shape, int target_k, BoundType mode, std::uint64_t seed)
        -> ColoredHost;

    auto monochromatic_coloring(const HostShape & shape) -> ColoredHost;
    auto rainbow_coloring(const HostShape & shape) -> ColoredHost;

    using LatinSquare = std::vector<std::vector<int>>;

    auto is_latin_square(const LatinSquare & square) -> bool;
    auto cyclic_latin_square(int order) -> LatinSquare;
    /// Rows map to part 0, columns to part 1; the color of edge (i, n + j) is square[i][j].
    auto latin_square_to_coloring(const LatinSquare & square) -> ColoredHost;
    auto coloring_to_latin_square(const ColoredHost & host) -> LatinSquare;
}
