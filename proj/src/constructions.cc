#include <colemb/combinatorics.hh>
#include <colemb/constructions.hh>
#include <colemb/errors.hh>

#include <algorithm>
#include <stdexcept>
#include <string>

using std::int64_t;
using std::vector;

namespace colemb
{
    auto is_prime(long long value) -> bool
    {
        if (value < 2)
            return false;
        for (long long d = 2; d * d <= value; ++d)
            if (value % d == 0)
                return false;
        return true;
    }

    auto ProjectivePlane::on_line(int point, int line) const -> bool
    {
        auto & p = points[point];
        auto & l = line_vectors[line];
        return (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0;
    }

    auto build_projective_plane(int q) -> ProjectivePlane
    {
        if (! is_prime(q))
            throw Error(ErrorCode::not_prime, "projective planes are built for prime orders only, got " + std::to_string(q));
        ProjectivePlane plane;
        plane.q = q;
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c) {
                    int lead = a != 0 ? a : (b != 0 ? b : c);
                    if (lead == 1)
                        plane.points.push_back({a, b, c});
                }
        plane.line_vectors = plane.points;
        int size = static_cast<int>(plane.points.size());
        plane.lines.resize(size);
        for (int l = 0; l < size; ++l)
            for (int p = 0; p < size; ++p)
                if (plane.on_line(p, l))
                    plane.lines[l].push_back(p);

        for (auto & line : plane.lines)
            if (static_cast<int>(line.size()) != q + 1)
                throw std::logic_error("projective plane line has the wrong size");
        for (int a = 0; a < size; ++a)
            for (int b = a + 1; b < size; ++b)
                if (sorted_intersection_size(plane.lines[a], plane.lines[b]) != 1)
                    throw std::logic_error("projective plane lines do not meet in one point");
        return plane;
    }

    auto plane_pattern_layout(int q, int m) -> PlanePatternLayout
    {
        PlanePatternLayout layout;
        layout.q = q;
        layout.m = m;
        int size = q * q + q + 1;
        int clusters = q * q + q;
        layout.point_begin = 0;
        layout.line_begin = size;
        layout.t_begin = 2 * size;
        layout.s_begin = layout.t_begin + clusters * (m - 1);
        layout.vertex_count = layout.s_begin + clusters * (m - 1);
        return layout;
    }

    auto build_plane_pattern(int q, int m) -> Pattern
    {
        if (m < 2)
            throw Error(ErrorCode::invalid_argument, "the plane pattern needs m >= 2");
        auto plane = build_projective_plane(q);
        auto layout = plane_pattern_layout(q, m);
        int size = static_cast<int>(plane.points.size());
        int clusters = q * q + q;

        vector<int> parts(layout.vertex_count, 0);
        vector<Edge> edges;
        for (int j = 0; j < size; ++j)
            parts[layout.line_begin + j] = 1;
        for (int i = 0; i < clusters; ++i)
            for (int a = 0; a < m - 1; ++a) {
                // T cliques avoid the point part, S cliques avoid the line part
                parts[layout.t_begin + i * (m - 1) + a] = a + 1;
                parts[layout.s_begin + i * (m - 1) + a] = a == 0 ? 0 : a + 1;
            }

        for (int l = 0; l < size; ++l)
            for (auto p : plane.lines[l])
                edges.push_back({layout.point_begin + p, layout.line_begin + l});
        auto add_clique = [&](int begin, int left, int right) {
            for (int a = 0; a < m - 1; ++a) {
                for (int b = a + 1; b < m - 1; ++b)
                    edges.push_back({begin + a, begin + b});
                edges.push_back({left, begin + a});
                edges.push_back({right, begin + a});
            }
        };
        for (int i = 1; i <= clusters; ++i) {
            add_clique(layout.t_begin + (i - 1) * (m - 1), layout.point_begin + i - 1, layout.point_begin + i);
            add_clique(layout.s_begin + (i - 1) * (m - 1), layout.line_begin + i - 1, layout.line_begin + i);
        }
        return Pattern(layout.vertex_count, 2, std::move(edges), std::move(parts));
    }

    auto build_fan_coloring(int q, int m, int n) -> ClusteredColoring
    {
        if (! is_prime(q))
            throw Error(ErrorCode::not_prime, "fan colorings follow prime-order planes, got q = " + std::to_string(q));
        if (m < 2)
            throw Error(ErrorCode::invalid_argument, "fan colorings need m >= 2");
        if (n < 3 * q * q)
            throw Error(ErrorCode::invalid_argument, "fan colorings need n >= 3q^2 = " + std::to_string(3 * q * q));
        int clusters = q * q + q;
        int base = n / clusters, extra = n % clusters;

        vector<int> cluster_of_offset(n);
        vector<int> sizes(clusters);
        for (int j = 0, offset = 0; j < clusters; ++j) {
            sizes[j] = base + (j < extra ? 1 : 0);
            for (int t = 0; t < sizes[j]; ++t)
                cluster_of_offset[offset++] = j;
        }

        auto shape = HostShape::multipartite(m, n);
        auto host = ColoredHost::from_function(shape, [&](std::span<const int> e) -> int64_t {
            // e[0] lies in the earlier part; the fan is (e[0], part of e[1], cluster of e[1])
            int y_part = e[1] / n;
            int y_cluster = cluster_of_offset[e[1] % n];
            return (static_cast<int64_t>(e[0]) * m + y_part) * clusters + y_cluster;
        });

        vector<int> cluster(shape.vertex_count());
        for (int v = 0; v < shape.vertex_count(); ++v)
            cluster[v] = cluster_of_offset[v % n];
        return {std::move(host), clusters, std::move(cluster), std::move(sizes)};
    }

    auto build_first_ell_coloring(int n, int r, int ell) -> ColoredHost
    {
        if (ell < 1 || ell > r - 1 || r > n)
            throw Error(ErrorCode::invalid_argument, "need 1 <= ell <= r-1 <= n-1");
        auto shape = HostShape::hypergraph(n, r);
        return ColoredHost::from_function(shape, [&](std::span<const int> e) -> int64_t {
            int64_t code = 0;
            for (int j = 0; j < ell; ++j)
                code = code * n + e[j];
            return code;
        });
    }

    auto DesignHypergraph::as_pattern() const -> Pattern { return Pattern(m, r, edges); }

    auto build_design(int r, int ell, int m) -> DesignHypergraph
    {
        DesignHypergraph design{r, ell, m, {}};
        if (r == 2 && ell == 1 && m >= 3) {
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    design.edges.push_back({a, b});
            return design;
        }
        if (r == 3 && ell == 1 && m % 6 == 3) {
            // Bose: points (x, i) for x in Z_t, i in Z_3, with the idempotent commutative
            // quasigroup x o y = (x + y) (t + 1) / 2 mod t
            int t = m / 3;
            auto id = [&](int x, int i) { return x + i * t; };
            auto op = [&](int x, int y) { return static_cast<int>((static_cast<long long>(x + y) * ((t + 1) / 2)) % t); };
            for (int x = 0; x < t; ++x)
                design.edges.push_back({id(x, 0), id(x, 1), id(x, 2)});
            for (int i = 0; i < 3; ++i)
                for (int x = 0; x < t; ++x)
                    for (int y = x + 1; y < t; ++y)
                        design.edges.push_back({id(x, i), id(y, i), id(op(x, y), (i + 1) % 3)});
            for (auto & e : design.edges)
                std::sort(e.begin(), e.end());
            std::sort(design.edges.begin(), design.edges.end());
            return design;
        }
        throw Error(ErrorCode::unsupported_parameters, "no design generator for r = " + std::to_string(r) +
                ", ell = " + std::to_string(ell) + ", m = " + std::to_string(m));
    }

    auto build_tree_pattern(int r, int n1) -> Pattern
    {
        if (r < 2 || n1 < r - 1)
            throw Error(ErrorCode::invalid_argument, "the tree pattern needs r >= 2 and n1 >= r-1");
        auto tuples = binomial(n1, r - 1);
        int64_t total = 1 + n1 + static_cast<int64_t>(tuples) * n1;
        if (total > 10'000'000)
            throw Error(ErrorCode::too_large, "tree pattern would have " + std::to_string(total) + " vertices");

        vector<Edge> edges;
        vector<int> subset(r - 1);
        for (int j = 0; j < r - 1; ++j)
            subset[j] = j;
        int next_child = 1 + n1;
        do {
            Edge up{0};
            for (auto s : subset)
                up.push_back(1 + s);
            edges.push_back(up);
            for (int c = 0; c < n1; ++c) {
                Edge down(up.begin() + 1, up.end());
                down.push_back(next_child++);
                edges.push_back(std::move(down));
            }
        } while (next_combination(subset, n1));
        return Pattern(static_cast<int>(total), r, std::move(edges));
    }

    auto build_block_coloring(int n, int r) -> ColoredHost
    {
        if (r < 2 || r > n)
            throw Error(ErrorCode::invalid_argument, "need 2 <= r <= n");
        if (n % (r + 1) != 0)
            throw Error(ErrorCode::divisibility, std::to_string(r + 1) + " does not divide n = " + std::to_string(n));
        int blocks = n / (r + 1);
        auto shape = HostShape::hypergraph(n, r);
        return ColoredHost::from_function(shape, [&](std::span<const int> e) -> int64_t {
            // sorted vertices give non-decreasing block indices, so the tuple is the multiset
            int64_t code = 0;
            for (auto v : e)
                code = code * blocks + v / (r + 1);
            return code;
        });
    }

    auto write_incidence_csv(std::ostream & out, const ProjectivePlane & plane) -> void
    {
        out << "point";
        for (std::size_t l = 0; l < plane.lines.size(); ++l)
            out << ",L" << l;
        out << '\n';
        for (std::size_t p = 0; p < plane.points.size(); ++p) {
            out << 'P' << p;
            for (std::size_t l = 0; l < plane.lines.size(); ++l)
                out << ',' << (plane.on_line(static_cast<int>(p), static_cast<int>(l)) ? 1 : 0);
            out << '\n';
        }
    }

    auto write_incidence_csv(std::ostream & out, const DesignHypergraph & design) -> void
    {
        out << "vertex";
        for (std::size_t e = 0; e < design.edges.size(); ++e)
            out << ",E" << e;
        out << '\n';
        for (int v = 0; v < design.m; ++v) {
            out << 'V' << v;
            for (auto & e : design.edges)
                out << ',' << (std::binary_search(e.begin(), e.end(), v) ? 1 : 0);
            out << '\n';
        }
    }
}
