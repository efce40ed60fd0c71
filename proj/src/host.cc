#include <colemb/errors.hh>
#include <colemb/host.hh>

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>

using std::int64_t;
using std::span;
using std::string;
using std::uint64_t;
using std::vector;

namespace colemb
{
    namespace
    {
        constexpr uint64_t max_slot_count = 40'000'000;

        // Flattened lexicographic edge list, uniformity() ints per edge.
        auto flat_edges(const HostShape & shape) -> vector<int>
        {
            vector<int> flat;
            flat.reserve(shape.edge_count() * shape.uniformity());
            for_each_host_edge(shape, [&](span<const int> e) { flat.insert(flat.end(), e.begin(), e.end()); });
            return flat;
        }
    }

    auto HostShape::validate() const -> void
    {
        if (kind == HostKind::multipartite) {
            if (m < 2)
                throw Error(ErrorCode::invalid_shape, "multipartite host needs m >= 2, got " + std::to_string(m));
            if (n < 1)
                throw Error(ErrorCode::invalid_shape, "part size must be positive");
            if (r != 2)
                throw Error(ErrorCode::invalid_shape, "multipartite hosts are graphs (r = 2)");
        }
        else {
            if (r < 2)
                throw Error(ErrorCode::invalid_shape, "uniformity must be at least 2");
            if (r > n)
                throw Error(ErrorCode::invalid_shape,
                    "uniformity " + std::to_string(r) + " exceeds vertex count " + std::to_string(n));
        }
    }

    auto HostShape::vertex_count() const -> int
    {
        return kind == HostKind::multipartite ? m * n : n;
    }

    auto HostShape::edge_count() const -> uint64_t
    {
        if (kind == HostKind::multipartite)
            return binomial(m, 2) * static_cast<uint64_t>(n) * n;
        return binomial(n, r);
    }

    auto is_host_edge(const HostShape & shape, span<const int> sorted) -> bool
    {
        if (static_cast<int>(sorted.size()) != shape.uniformity())
            return false;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] < 0 || sorted[i] >= shape.vertex_count())
                return false;
            if (i > 0 && sorted[i - 1] >= sorted[i])
                return false;
        }
        if (shape.kind == HostKind::multipartite)
            return shape.part_of(sorted[0]) != shape.part_of(sorted[1]);
        return true;
    }

    auto for_each_host_edge(const HostShape & shape, const std::function<void(span<const int>)> & visit) -> void
    {
        shape.validate();
        if (shape.kind == HostKind::multipartite) {
            int total = shape.vertex_count();
            int pair[2];
            for (int a = 0; a < total; ++a)
                for (int b = shape.part_begin(shape.part_of(a) + 1); b < total; ++b) {
                    pair[0] = a;
                    pair[1] = b;
                    visit(span<const int>(pair, 2));
                }
            return;
        }
        vector<int> combination(shape.r);
        std::iota(combination.begin(), combination.end(), 0);
        do
            visit(combination);
        while (next_combination(combination, shape.n));
    }

    auto build_host(const HostShape & shape) -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(shape.edge_count());
        for_each_host_edge(shape, [&](span<const int> e) { result.emplace_back(e.begin(), e.end()); });
        return result;
    }

    ColoredHost::ColoredHost(HostShape shape) :
        _shape(shape)
    {
        _shape.validate();
        int total = _shape.vertex_count();
        int r = _shape.uniformity();
        auto slots = binomial(total, r);
        if (slots > max_slot_count)
            throw Error(ErrorCode::too_large, "host has " + std::to_string(slots) + " vertex subsets of size " +
                    std::to_string(r) + "; limit is " + std::to_string(max_slot_count));
        _binomials = std::make_shared<BinomialTable>(total, r);
        _slot_color.assign(slots, -1);
        _edge_count = _shape.edge_count();
    }

    ColoredHost::ColoredHost(HostShape shape, span<const int64_t> raw_colors) :
        ColoredHost(shape)
    {
        if (raw_colors.size() != _edge_count)
            throw Error(ErrorCode::invalid_argument, "expected " + std::to_string(_edge_count) + " colors, got " +
                    std::to_string(raw_colors.size()));
        vector<uint64_t> slots;
        slots.reserve(_edge_count);
        for_each_host_edge(_shape, [&](span<const int> e) { slots.push_back(slot_of(e)); });
        assign(raw_colors, slots);
    }

    auto ColoredHost::from_function(HostShape shape, const std::function<int64_t(span<const int>)> & color_of)
        -> ColoredHost
    {
        vector<int64_t> raw;
        raw.reserve(shape.edge_count());
        for_each_host_edge(shape, [&](span<const int> e) { raw.push_back(color_of(e)); });
        return ColoredHost(shape, raw);
    }

    auto ColoredHost::from_edges(HostShape shape, const vector<Edge> & edges, span<const int64_t> colors)
        -> ColoredHost
    {
        ColoredHost host(shape);
        if (edges.size() != colors.size())
            throw Error(ErrorCode::invalid_argument, "edge and color arrays differ in length");
        if (edges.size() != host._edge_count)
            throw Error(ErrorCode::invalid_argument, "a colored host needs all " + std::to_string(host._edge_count) +
                    " edges, got " + std::to_string(edges.size()));
        vector<uint64_t> slots;
        slots.reserve(edges.size());
        vector<bool> seen(host._slot_color.size(), false);
        for (auto edge : edges) {
            std::sort(edge.begin(), edge.end());
            if (! is_host_edge(shape, edge))
                throw Error(ErrorCode::invalid_argument, "not an edge of the host shape");
            auto slot = host.slot_of(edge);
            if (seen[slot])
                throw Error(ErrorCode::invalid_argument, "edge listed twice");
            seen[slot] = true;
            slots.push_back(slot);
        }
        host.assign(colors, slots);
        return host;
    }

    auto ColoredHost::slot_of(span<const int> sorted) const -> uint64_t
    {
        return colex_rank(sorted, *_binomials);
    }

    auto ColoredHost::assign(span<const int64_t> raw, const vector<uint64_t> & slots) -> void
    {
        vector<int64_t> distinct(raw.begin(), raw.end());
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        _color_count = static_cast<int>(distinct.size());
        for (std::size_t i = 0; i < slots.size(); ++i)
            _slot_color[slots[i]] = static_cast<ColorId>(
                std::lower_bound(distinct.begin(), distinct.end(), raw[i]) - distinct.begin());
    }

    auto ColoredHost::color(span<const int> sorted) const -> ColorId
    {
        if (! is_host_edge(_shape, sorted))
            throw Error(ErrorCode::invalid_argument, "not an edge of the host");
        return _slot_color[slot_of(sorted)];
    }

    auto ColoredHost::color_of_set(span<const int> vertices) const -> ColorId
    {
        int buffer[16];
        vector<int> heap;
        int * sorted = buffer;
        if (vertices.size() > 16) {
            heap.resize(vertices.size());
            sorted = heap.data();
        }
        std::copy(vertices.begin(), vertices.end(), sorted);
        std::sort(sorted, sorted + vertices.size());
        span<const int> s(sorted, vertices.size());
        if (! is_host_edge(_shape, s))
            return -1;
        return _slot_color[slot_of(s)];
    }

    auto ColoredHost::colors() const -> vector<ColorId>
    {
        vector<ColorId> result;
        result.reserve(_edge_count);
        for_each_host_edge(_shape, [&](span<const int> e) { result.push_back(_slot_color[slot_of(e)]); });
        return result;
    }

    auto measure_boundedness(const ColoredHost & host) -> BoundednessReport
    {
        BoundednessReport report;
        auto r = host.shape().uniformity();
        auto flat = flat_edges(host.shape());
        auto colors = host.colors();

        report.per_color_sizes.assign(host.color_count(), 0);
        for (auto c : colors)
            ++report.per_color_sizes[c];
        if (! report.per_color_sizes.empty())
            report.k_global = *std::max_element(report.per_color_sizes.begin(), report.per_color_sizes.end());

        // bucket edges by color, then count incidences per vertex inside each bucket
        vector<std::size_t> start(host.color_count() + 1, 0);
        for (auto c : colors)
            ++start[c + 1];
        std::partial_sum(start.begin(), start.end(), start.begin());
        vector<std::size_t> order(colors.size());
        auto fill = start;
        for (std::size_t e = 0; e < colors.size(); ++e)
            order[fill[colors[e]]++] = e;

        vector<int> incidences(host.vertex_count(), 0);
        vector<int> touched;
        for (int c = 0; c < host.color_count(); ++c) {
            for (auto i = start[c]; i < start[c + 1]; ++i)
                for (int j = 0; j < r; ++j) {
                    auto v = flat[order[i] * r + j];
                    if (incidences[v]++ == 0)
                        touched.push_back(v);
                    report.k_local = std::max(report.k_local, incidences[v]);
                }
            for (auto v : touched)
                incidences[v] = 0;
            touched.clear();
        }
        return report;
    }

    auto random_bounded_coloring(const HostShape & shape, int target_k, BoundType mode, uint64_t seed) -> ColoredHost
    {
        if (target_k < 1)
            throw Error(ErrorCode::invalid_argument, "target k must be at least 1");
        shape.validate();
        auto edge_count = static_cast<std::size_t>(shape.edge_count());
        std::mt19937_64 rng(seed);
        vector<std::size_t> order(edge_count);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);

        vector<int64_t> raw(edge_count, 0);
        if (mode == BoundType::global) {
            for (std::size_t i = 0; i < edge_count; ++i)
                raw[order[i]] = static_cast<int64_t>(i / target_k);
            return ColoredHost(shape, raw);
        }

        constexpr std::size_t window = 64;
        auto r = shape.uniformity();
        auto flat = flat_edges(shape);
        auto total = static_cast<uint64_t>(shape.vertex_count());
        std::unordered_map<uint64_t, int> incidences;
        std::deque<int64_t> recent;
        int64_t next_color = 0;
        auto fits = [&](std::size_t e, int64_t c) {
            for (int j = 0; j < r; ++j) {
                auto it = incidences.find(static_cast<uint64_t>(c) * total + flat[e * r + j]);
                if (it != incidences.end() && it->second >= target_k)
                    return false;
            }
            return true;
        };
        for (auto e : order) {
            int64_t chosen = -1;
            for (auto c : recent)
                if (fits(e, c)) {
                    chosen = c;
                    break;
                }
            if (chosen < 0) {
                chosen = next_color++;
                recent.push_back(chosen);
                if (recent.size() > window)
                    recent.pop_front();
            }
            raw[e] = chosen;
            for (int j = 0; j < r; ++j)
                ++incidences[static_cast<uint64_t>(chosen) * total + flat[e * r + j]];
        }
        return ColoredHost(shape, raw);
    }

    auto monochromatic_coloring(const HostShape & shape) -> ColoredHost
    {
        return ColoredHost::from_function(shape, [](span<const int>) { return int64_t{0}; });
    }

    auto rainbow_coloring(const HostShape & shape) -> ColoredHost
    {
        int64_t next = 0;
        return ColoredHost::from_function(shape, [&](span<const int>) { return next++; });
    }
}
