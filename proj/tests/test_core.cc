#include "support.hh"

#include <colemb/errors.hh>
#include <colemb/io.hh>

#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace colemb;

namespace
{
    // Independent boundedness measurement straight from the definitions.
    auto naive_bounds(const ColoredHost & host) -> std::pair<int, int>
    {
        std::map<ColorId, int> sizes;
        std::map<std::pair<ColorId, int>, int> incidences;
        auto edges = host.edges();
        auto colors = host.colors();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            ++sizes[colors[i]];
            for (auto v : edges[i])
                ++incidences[{colors[i], v}];
        }
        int local = 0, global = 0;
        for (auto & [c, s] : sizes)
            global = std::max(global, s);
        for (auto & [key, count] : incidences)
            local = std::max(local, count);
        return {local, global};
    }
}

TEST_CASE("host shapes enumerate their edges")
{
    auto k23 = HostShape::multipartite(2, 3);
    CHECK(k23.vertex_count() == 6);
    CHECK(k23.edge_count() == 9);
    CHECK(build_host(k23).size() == 9);
    CHECK(build_host(k23).front() == Edge{0, 3});
    CHECK(k23.part_of(4) == 1);

    auto k333 = HostShape::multipartite(3, 3);
    CHECK(k333.edge_count() == 27);
    CHECK(build_host(k333).size() == 27);

    auto hyper = HostShape::hypergraph(6, 3);
    CHECK(hyper.edge_count() == 20);
    auto edges = build_host(hyper);
    CHECK(edges.size() == 20);
    CHECK(std::is_sorted(edges.begin(), edges.end()));

    CHECK_FALSE(is_host_edge(k23, std::vector<int>{0, 1}));
    CHECK(is_host_edge(k23, std::vector<int>{2, 3}));
}

TEST_CASE("invalid shapes are rejected")
{
    CHECK_THROWS_AS(HostShape::multipartite(1, 3).validate(), Error);
    CHECK_THROWS_AS(HostShape::hypergraph(2, 3).validate(), Error);
    try {
        HostShape::hypergraph(2, 3).validate();
    }
    catch (const Error & e) {
        CHECK(e.code() == ErrorCode::invalid_shape);
    }
}

TEST_CASE("colors are normalized preserving order")
{
    auto shape = HostShape::multipartite(2, 2);
    std::vector<std::int64_t> raw{50, -7, 50, 1000};
    ColoredHost host(shape, raw);
    CHECK(host.color_count() == 3);
    CHECK(host.colors() == std::vector<ColorId>{1, 0, 1, 2});
    CHECK(host.pair_color(0, 2) == 1);
    CHECK(host.pair_color(3, 0) == 0);
    CHECK(host.pair_color(0, 1) == -1);
    CHECK(host.color_of_set(std::vector<int>{3, 1}) == 2);
    CHECK_THROWS_AS(host.color(std::vector<int>{0, 1}), Error);
}

TEST_CASE("from_edges accepts any order and rejects incomplete input")
{
    auto shape = HostShape::hypergraph(4, 3);
    std::vector<Edge> edges{{3, 2, 1}, {0, 1, 2}, {0, 1, 3}, {0, 2, 3}};
    std::vector<std::int64_t> colors{9, 1, 2, 3};
    auto host = ColoredHost::from_edges(shape, edges, colors);
    CHECK(host.color(std::vector<int>{1, 2, 3}) == 3);
    CHECK(host.color(std::vector<int>{0, 1, 2}) == 0);

    std::vector<Edge> repeated{{0, 1, 2}, {0, 1, 2}, {0, 1, 3}, {0, 2, 3}};
    CHECK_THROWS_AS(ColoredHost::from_edges(shape, repeated, colors), Error);
    std::vector<Edge> short_list{{0, 1, 2}};
    std::vector<std::int64_t> one{1};
    CHECK_THROWS_AS(ColoredHost::from_edges(shape, short_list, one), Error);
}

TEST_CASE("boundedness of Latin square colorings")
{
    auto z3 = latin_square_to_coloring(cyclic_latin_square(3));
    auto report = measure_boundedness(z3);
    CHECK(report.k_local == 1);
    CHECK(report.k_global == 3);

    auto z2 = latin_square_to_coloring({{0, 1}, {1, 0}});
    CHECK(measure_boundedness(z2).k_local == 1);
    CHECK(measure_boundedness(z2).k_global == 2);

    CHECK_THROWS_AS(latin_square_to_coloring({{0, 1}, {0, 1}}), Error);
    CHECK(coloring_to_latin_square(z3) == cyclic_latin_square(3));
}

TEST_CASE("monochromatic and rainbow colorings")
{
    auto shape = HostShape::multipartite(3, 2);
    auto mono = measure_boundedness(monochromatic_coloring(shape));
    CHECK(mono.k_global == 12);
    CHECK(mono.k_local == 4);
    auto rainbow = measure_boundedness(rainbow_coloring(shape));
    CHECK(rainbow.k_global == 1);
    CHECK(rainbow.k_local == 1);
}

TEST_CASE("random bounded colorings respect their target and agree with the naive measure")
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        for (int k : {1, 2, 3, 5})
            for (auto shape : {HostShape::multipartite(2, 7), HostShape::multipartite(3, 4), HostShape::hypergraph(8, 3)}) {
                auto global = random_bounded_coloring(shape, k, BoundType::global, seed);
                auto local = random_bounded_coloring(shape, k, BoundType::local, seed);
                auto g = measure_boundedness(global);
                auto l = measure_boundedness(local);
                CHECK(g.k_global <= k);
                CHECK(l.k_local <= k);
                CHECK(naive_bounds(global) == std::pair(g.k_local, g.k_global));
                CHECK(naive_bounds(local) == std::pair(l.k_local, l.k_global));
            }
    auto a = random_bounded_coloring(HostShape::multipartite(2, 6), 2, BoundType::local, 42);
    auto b = random_bounded_coloring(HostShape::multipartite(2, 6), 2, BoundType::local, 42);
    CHECK(a.colors() == b.colors());
}

TEST_CASE("local bound never exceeds global bound")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto shape = HostShape::multipartite(2 + trial % 3, 2 + trial % 5);
        std::uniform_int_distribution<int> pick(0, 3);
        auto host = ColoredHost::from_function(shape, [&](std::span<const int>) { return std::int64_t{pick(rng)}; });
        auto report = measure_boundedness(host);
        CHECK(report.k_local <= report.k_global);
    }
}

TEST_CASE("pattern degree data")
{
    auto c6 = make_cycle(6);
    auto profile = degree_profile(c6);
    CHECK(profile.delta == std::vector<long long>{6, 2});
    CHECK(profile.max_degree() == 2);
    CHECK(enumerate_cherries(c6).size() == 6);
    CHECK(enumerate_quadruples(c6).size() == 9);

    auto star = make_star(4);
    CHECK(degree_profile(star).max_degree() == 4);
    CHECK(enumerate_cherries(star).size() == 6);
    CHECK(enumerate_quadruples(star).empty());
    CHECK(enumerate_cherries(make_matching(3)).empty());

    auto tight = make_overlapping_cycle(6, 3, 2);
    CHECK(tight.edge_count() == 6);
    CHECK(max_set_degree(tight, 1) == 3);
    CHECK(max_set_degree(tight, 2) == 2);
    CHECK(check_linearity(tight, 2));
    CHECK_FALSE(check_linearity(tight, 1));

    auto loose = make_overlapping_cycle(6, 3, 1);
    CHECK(loose.edge_count() == 3);
    CHECK(check_linearity(loose, 1));
    CHECK(enumerate_overlap_pairs(loose, 1).size() == 3);
    CHECK(enumerate_overlap_pairs(loose, 0).empty());
}

TEST_CASE("cherry and quadruple enumeration matches a pair scan")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + trial % 5;
        std::vector<Edge> edges;
        std::bernoulli_distribution coin(0.4);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (coin(rng))
                    edges.push_back({a, b});
        Pattern p(n, 2, edges);
        std::size_t sharing = 0, disjoint = 0;
        for (std::size_t a = 0; a < p.edges().size(); ++a)
            for (std::size_t b = a + 1; b < p.edges().size(); ++b)
                (sorted_intersection_size(p.edges()[a], p.edges()[b]) ? sharing : disjoint)++;
        CHECK(enumerate_cherries(p).size() == sharing);
        CHECK(enumerate_quadruples(p).size() == disjoint);
        CHECK(enumerate_overlap_pairs(p, 1).size() == sharing);
    }
}

TEST_CASE("pattern validation")
{
    CHECK_THROWS_AS(Pattern(3, 2, {{0, 0}}), Error);
    CHECK_THROWS_AS(Pattern(3, 2, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Pattern(3, 2, {{0, 3}}), Error);
    CHECK_THROWS_AS(Pattern(3, 2, {{0, 1}}, std::vector<int>{0, 0, 1}), Error);
    Pattern ok(3, 2, {{1, 0}}, std::vector<int>{0, 1, 1});
    CHECK(ok.edges().front() == Edge{0, 1});
    CHECK(ok.part_sizes() == std::vector<int>{1, 2});
}

TEST_CASE("greedy partition produces independent parts within capacity")
{
    auto c7 = make_cycle(7);
    auto parts = greedy_partition(c7, 3, 3);
    REQUIRE(parts.has_value());
    CHECK_NOTHROW(c7.with_parts(*parts));
    CHECK_FALSE(greedy_partition(make_complete(4), 3, 4).has_value());
    CHECK_FALSE(greedy_partition(c7, 2, 10).has_value());
}

TEST_CASE("align_parts")
{
    auto c6 = make_bipartite_cycle(6);
    CHECK(align_parts(c6, HostShape::multipartite(2, 3)) == *c6.parts());
    CHECK_THROWS_AS(align_parts(c6, HostShape::multipartite(2, 2)), Error);
    try {
        align_parts(c6, HostShape::multipartite(2, 2));
    }
    catch (const Error & e) {
        CHECK(e.code() == ErrorCode::part_overflow);
    }
    CHECK(align_parts(make_cycle(5), HostShape::multipartite(3, 2)).size() == 5);
    CHECK_THROWS_AS(align_parts(make_cycle(5), HostShape::hypergraph(4, 2)), Error);
    CHECK_THROWS_AS(align_parts(make_cycle(5), HostShape::hypergraph(8, 3)), Error);
}

TEST_CASE("host JSON and text round trips")
{
    auto host = random_bounded_coloring(HostShape::multipartite(3, 3), 2, BoundType::local, 9);
    auto json = host_to_json(host);
    auto back = host_from_json(json);
    CHECK(back.shape() == host.shape());
    CHECK(back.colors() == host.colors());

    std::stringstream text;
    write_host_text(text, host);
    auto from_text = read_host(text);
    CHECK(from_text.colors() == host.colors());

    std::stringstream json_stream(json.dump());
    CHECK(read_host(json_stream).colors() == host.colors());

    std::stringstream bad("# hypergraph 5 3\n0 1 2 7\n");
    CHECK_THROWS_AS(read_host(bad), Error);
    std::stringstream garbage("{\"shape\": 3}");
    CHECK_THROWS_AS(read_host(garbage), Error);
}

TEST_CASE("pattern, embedding and Latin CSV serialization")
{
    auto p = make_bipartite_cycle(4);
    auto back = pattern_from_json(pattern_to_json(p));
    CHECK(back.edges() == p.edges());
    CHECK(back.parts() == p.parts());
    CHECK_FALSE(pattern_from_json(pattern_to_json(make_path(3))).has_parts());

    Embedding e{{3, 1, 2}};
    CHECK(embedding_from_json(embedding_to_json(e)) == e);
    CHECK(embedding_from_json(Json{{"embedding", {3, 1, 2}}}) == e);

    std::stringstream csv;
    write_latin_csv(csv, cyclic_latin_square(4));
    CHECK(read_latin_csv(csv) == cyclic_latin_square(4));
    std::stringstream broken("0,1\n1,x\n");
    CHECK_THROWS_AS(read_latin_csv(broken), Error);
}
