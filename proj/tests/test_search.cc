#include "support.hh"

#include <colemb/constructions.hh>
#include <colemb/embedder.hh>
#include <colemb/errors.hh>
#include <colemb/negdep.hh>
#include <colemb/oracle.hh>

#include <boost/math/distributions/chi_squared.hpp>
#include <doctest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace colemb;

namespace
{
    auto is_injective_and_respecting(const Embedding & e, const std::vector<int> & target, const HostShape & shape)
        -> bool
    {
        std::set<int> seen;
        for (std::size_t u = 0; u < e.image.size(); ++u) {
            if (! seen.insert(e.image[u]).second)
                return false;
            if (shape.part_of(e.image[u]) != target[u])
                return false;
        }
        return true;
    }

    // cyclic Latin square of order 4 as a locally 1-bounded coloring of K_{2 x 4}
    auto latin_double() -> ColoredHost { return latin_square_to_coloring(cyclic_latin_square(4)); }
}

TEST_CASE("injection spaces and canonical events")
{
    InjectionSpace space{{2, 2}, {3, 3}};
    CHECK(space.size() == 36);
    CHECK(enumerate_injections(space).size() == 36);
    CHECK(all_single_pair_events(space).size() == 12);
    CHECK(space.x_part(3) == 1);
    CHECK(space.y_part(2) == 0);

    CanonicalEvent a{{{0, 0}}}, b{{{0, 1}}}, c{{{1, 0}}}, d{{{1, 1}}};
    CHECK(events_conflict(a, b));
    CHECK(events_conflict(a, c));
    CHECK_FALSE(events_conflict(a, d));
    CHECK(events_s_intersect(a, b));
    CHECK_FALSE(events_s_intersect(a, d));

    CHECK_THROWS_AS(validate_event(space, CanonicalEvent{{{0, 3}}}), Error);
    CHECK_THROWS_AS(validate_event(space, CanonicalEvent{{{0, 0}, {1, 0}}}), Error);
    CHECK_THROWS_AS(enumerate_injections(InjectionSpace{{5}, {9}}, 1000), Error);
}

TEST_CASE("conflicting events are disjoint")
{
    InjectionSpace space{{2, 2}, {3, 3}};
    auto injections = enumerate_injections(space);
    auto events = all_single_pair_events(space);
    for (auto & a : events)
        for (auto & b : events)
            if (events_conflict(a, b))
                for (auto & s : injections)
                    CHECK_FALSE((s[a.pairs[0].first] == a.pairs[0].second && s[b.pairs[0].first] == b.pairs[0].second));
}

TEST_CASE("negative dependency on tiny spaces")
{
    auto report = verify_negative_dependency({{2, 2}, {3, 3}}, all_single_pair_events({{2, 2}, {3, 3}}));
    CHECK(report.injections == 36);
    CHECK(report.ok());
    CHECK(report.checks > 0);

    // a lone event conditioned on nothing has P(B | true) = P(B)
    auto single = verify_negative_dependency({{2}, {3}}, {CanonicalEvent{{{0, 1}}}});
    CHECK(single.ok());
    CHECK(single.checks == 1);

    // multi-pair events on a lopsided space, with sampled larger conditioning sets
    InjectionSpace space{{3, 1}, {4, 2}};
    std::vector<CanonicalEvent> events;
    for (int y1 = 0; y1 < 4; ++y1)
        for (int y2 = 0; y2 < 4; ++y2)
            if (y1 != y2)
                events.push_back({{{0, y1}, {1, y2}}});
    events.push_back({{{3, 4}}});
    events.push_back({{{2, 3}, {3, 5}}});
    NegDepConfig config;
    config.exhaustive_size = 3;
    config.sampled_subsets = 200;
    auto wide = verify_negative_dependency(space, events, config);
    CHECK(wide.ok());
    CHECK(wide.skipped_null > 0);
}

TEST_CASE("sample_injection is uniform on the smallest space")
{
    // one vertex per part, parts of size 2: four injections, each with probability 1/4
    Pattern pattern(2, 2, {{0, 1}}, std::vector<int>{0, 1});
    auto host = rainbow_coloring(HostShape::multipartite(2, 2));
    std::mt19937_64 rng(123);
    std::map<std::pair<int, int>, int> counts;
    constexpr int samples = 100000;
    for (int i = 0; i < samples; ++i) {
        auto e = sample_injection(pattern, host, rng);
        ++counts[{e.image[0], e.image[1]}];
    }
    CHECK(counts.size() == 4);
    double statistic = 0;
    for (auto & [key, observed] : counts) {
        double expected = samples / 4.0;
        statistic += (observed - expected) * (observed - expected) / expected;
    }
    boost::math::chi_squared distribution(3);
    CHECK(boost::math::cdf(boost::math::complement(distribution, statistic)) > 0.01);

    CHECK(sample_injection(Pattern(0, 2, {}), host, std::uint64_t{1}).image.empty());
    auto full = sample_injection(make_bipartite_cycle(4), host, std::uint64_t{5});
    CHECK(is_injective_and_respecting(full, {0, 1, 0, 1}, host.shape()));
}

TEST_CASE("swap resampling keeps a valid injection and a uniform marginal")
{
    auto shape = HostShape::multipartite(3, 4);
    auto host = rainbow_coloring(shape);
    auto pattern = make_cycle(9);
    auto target = align_parts(pattern, shape);
    std::mt19937_64 rng(99);
    auto e = sample_injection(pattern, host, rng);
    SwapResampler resampler(shape, target, e);
    std::uniform_int_distribution<int> pick(0, pattern.vertex_count() - 1);
    for (int step = 0; step < 20000; ++step) {
        int support[3] = {pick(rng), pick(rng), pick(rng)};
        resampler.resample(support, rng);
        if (step % 97 == 0)
            REQUIRE(is_injective_and_respecting(e, target, shape));
    }
    CHECK(is_injective_and_respecting(e, target, shape));

    // with |U_i| = n a resampled vertex ends anywhere in its part uniformly
    Pattern pair(2, 2, {{0, 1}}, std::vector<int>{0, 1});
    auto small = rainbow_coloring(HostShape::multipartite(2, 1 + 2));
    std::map<int, int> where;
    for (int trial = 0; trial < 30000; ++trial) {
        Embedding start{{0, 3}};
        Violation v;
        v.support = {0};
        resample(start, v, pair, small, rng);
        ++where[start.image[0]];
    }
    CHECK(where.size() == 3);
    for (auto & [w, count] : where)
        CHECK(std::abs(count - 10000) < 600);

    // swapping with itself changes nothing
    Embedding fixed{{0, 1}};
    Pattern lone(2, 2, {{0, 1}}, std::vector<int>{0, 1});
    auto tiny = rainbow_coloring(HostShape::multipartite(2, 1));
    Violation v;
    v.support = {0, 1};
    resample(fixed, v, lone, tiny, rng);
    CHECK(fixed.image == std::vector<int>{0, 1});
}

TEST_CASE("violation detection")
{
    auto shape = HostShape::multipartite(2, 3);
    auto c6 = make_bipartite_cycle(6);
    auto rainbow = rainbow_coloring(shape);
    auto mono = monochromatic_coloring(shape);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        auto e = sample_injection(c6, rainbow, rng);
        CHECK_FALSE(find_violation(e, c6, rainbow, EventMode::rainbow).has_value());
        auto v = find_violation(e, c6, mono, EventMode::proper);
        REQUIRE(v.has_value());
        CHECK(v->kind == ViolationKind::monochrome_cherry);
        CHECK(v->first_edge == 0);
        CHECK(v->support.size() == 3);
    }

    // a 2-bounded coloring: find_violation agrees with the direct definition on all 36 bijections
    auto two = ColoredHost::from_function(shape, [](std::span<const int> e) { return std::int64_t{(e[0] + e[1]) % 2}; });
    CHECK(measure_boundedness(two).k_local <= 2);
    int checked = 0;
    testing::for_each_injection(c6, shape, [&](const std::vector<int> & image) {
        ++checked;
        for (auto mode : {EventMode::proper, EventMode::rainbow}) {
            bool good = testing::image_is_good(c6, two, image, mode == EventMode::rainbow);
            auto v = find_violation(Embedding{image}, c6, two, mode);
            CHECK(good == ! v.has_value());
            if (v) {
                std::vector<int> a, b;
                for (auto u : c6.edges()[v->first_edge])
                    a.push_back(image[u]);
                for (auto u : c6.edges()[v->second_edge])
                    b.push_back(image[u]);
                CHECK(two.color_of_set(a) == two.color_of_set(b));
                CHECK(v->color == two.color_of_set(a));
            }
        }
    });
    CHECK(checked == 36);

    // random scan order still reports genuine violations
    for (int i = 0; i < 20; ++i) {
        auto e = sample_injection(c6, mono, rng);
        ViolationScanner scanner(c6, mono, EventMode::rainbow);
        auto v = scanner.find(e.image, ScanOrder::random, &rng);
        REQUIRE(v.has_value());
        CHECK(v->overlap == 1);
    }
}

TEST_CASE("quadruple violations in rainbow mode")
{
    auto host = latin_square_to_coloring(cyclic_latin_square(4));
    auto matching = make_matching(2).with_parts({0, 1, 0, 1});
    // edges (0,4) and (1,7): symbols 0 and (1+3)%4 = 0
    Embedding e{{0, 4, 1, 7}};
    auto v = find_violation(e, matching, host, EventMode::rainbow);
    REQUIRE(v.has_value());
    CHECK(v->kind == ViolationKind::repeated_color_pair);
    CHECK(v->support == std::vector<int>{0, 1, 2, 3});
    CHECK_FALSE(find_violation(e, matching, host, EventMode::proper).has_value());
}

TEST_CASE("embedder basics")
{
    auto shape = HostShape::multipartite(2, 4);
    auto c8 = make_bipartite_cycle(8);
    EmbedConfig config;
    config.seed = 17;

    auto rainbow = rainbow_coloring(shape);
    auto first = embed(c8, rainbow, config);
    CHECK(first.success);
    CHECK(first.resamples == 0);
    CHECK(first.restarts_used == 1);

    // cyclic Latin square on K_{2 x 4}: properly colored Hamilton cycles exist
    auto latin = latin_double();
    auto result = embed(c8, latin, config);
    REQUIRE(result.success);
    CHECK(validate(result.embedding, c8, latin).properly_colored);
    CHECK(exists_colored_copy(c8, latin, EventMode::proper).exists);

    // locally 1-bounded host: first sample already succeeds in proper mode
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        config.seed = seed;
        CHECK(embed(c8, latin, config).resamples == 0);
    }

    // triangle into a monochromatic K_{3 x 1}: every cherry is monochromatic
    auto tiny = monochromatic_coloring(HostShape::multipartite(3, 1));
    config.max_resamples = 50;
    config.restarts = 3;
    auto failure = embed(make_cycle(3), tiny, config);
    CHECK_FALSE(failure.success);
    CHECK(failure.resamples == 50);
    CHECK(failure.total_resamples == 150);
    CHECK(failure.restarts_used == 3);
    REQUIRE(failure.last_violation.has_value());
    CHECK(failure.last_violation->kind == ViolationKind::monochrome_cherry);

    CHECK_THROWS_AS(embed(make_bipartite_cycle(10), latin, config), Error);
}

TEST_CASE("embedder runs are reproducible")
{
    auto shape = HostShape::multipartite(2, 12);
    auto host = random_bounded_coloring(shape, 3, BoundType::global, 8);
    auto pattern = make_bipartite_cycle(24);
    EmbedConfig config;
    config.mode = EventMode::rainbow;
    config.seed = 4;
    config.record_transcript = true;
    config.max_resamples = 200;
    config.restarts = 4;
    auto a = embed(pattern, host, config);
    auto b = embed(pattern, host, config);
    CHECK(a.transcript == b.transcript);
    CHECK(a.embedding == b.embedding);
    CHECK_FALSE(a.transcript.empty());

    config.parallel = true;
    auto c = embed(pattern, host, config);
    CHECK(c.transcript == a.transcript);
    CHECK(c.success == a.success);
    CHECK(c.embedding == a.embedding);
    CHECK(restart_seed(4, 0) != restart_seed(4, 1));
}

TEST_CASE("default budget counts event supports")
{
    CHECK(count_event_supports(make_cycle(6), EventMode::proper) == 6);
    CHECK(count_event_supports(make_cycle(6), EventMode::rainbow) == 15);
    CHECK(count_event_supports(make_matching(3), EventMode::proper) == 0);
    EmbedConfig config;
    config.seed = 1;
    auto result = embed(make_matching(2), rainbow_coloring(HostShape::multipartite(2, 2)), config);
    CHECK(result.max_resamples == 1);
}

TEST_CASE("validate reports")
{
    auto shape = HostShape::multipartite(2, 2);
    auto matching = make_matching(2).with_parts({0, 1, 0, 1});
    auto rainbow = rainbow_coloring(shape);
    auto ok = validate(Embedding{{0, 2, 1, 3}}, matching, rainbow);
    CHECK(ok.injective);
    CHECK(ok.part_respecting);
    CHECK(ok.properly_colored);
    CHECK(ok.rainbow);
    CHECK(ok.witnesses.empty());

    auto mono = monochromatic_coloring(shape);
    auto bad = validate(Embedding{{0, 2, 1, 3}}, matching, mono);
    CHECK(bad.properly_colored);
    CHECK_FALSE(bad.rainbow);
    CHECK(bad.witnesses.size() == 1);

    // C_4 = 0-1-2-3 with parts 0,1,0,1 into K_{2 x 2} colored by the row: c(i, 2 + j) = i
    auto c4 = make_bipartite_cycle(4);
    auto by_row = ColoredHost::from_function(shape, [](std::span<const int> e) { return std::int64_t{e[0]}; });
    auto report = validate(Embedding{{0, 2, 1, 3}}, c4, by_row);
    // edges 01 -> (0,2) red, 03 -> (0,3) red, 12 -> (1,2) blue, 23 -> (1,3) blue
    CHECK_FALSE(report.properly_colored);
    CHECK_FALSE(report.rainbow);
    REQUIRE(report.witnesses.size() == 2);
    CHECK(report.witnesses[0].first_edge == 0);
    CHECK(report.witnesses[0].second_edge == 1);
    CHECK(report.witnesses[0].kind == ViolationKind::monochrome_cherry);
    CHECK(report.witnesses[0].support == std::vector<int>{1, 0, 3});

    auto collide = validate(Embedding{{0, 2, 0, 3}}, matching, rainbow);
    CHECK_FALSE(collide.injective);
    CHECK_FALSE(collide.rainbow);
    auto wrong_part = validate(Embedding{{2, 0, 1, 3}}, matching, rainbow);
    CHECK_FALSE(wrong_part.part_respecting);
    CHECK_FALSE(wrong_part.structure_witnesses.empty());
}

TEST_CASE("existence oracle")
{
    // Latin transversals: none in the cyclic square of order 4, some in order 5
    for (int order : {3, 4, 5}) {
        auto host = latin_square_to_coloring(cyclic_latin_square(order));
        std::vector<Edge> edges;
        std::vector<int> parts(2 * order, 0);
        for (int i = 0; i < order; ++i) {
            edges.push_back({i, order + i});
            parts[order + i] = 1;
        }
        Pattern matching(2 * order, 2, edges, parts);
        auto result = exists_colored_copy(matching, host, EventMode::rainbow);
        CHECK(result.exists == (order % 2 == 1));
        CHECK(result.exists == testing::exists_by_enumeration(matching, host, true));
        if (result.exists)
            CHECK(validate(*result.witness, matching, host).rainbow);
    }

    // first-vertex coloring of K_6: no properly colored K_4
    auto first = build_first_ell_coloring(6, 2, 1);
    CHECK_FALSE(exists_colored_copy(make_complete(4), first, EventMode::proper).exists);
    CHECK(exists_colored_copy(make_path(3), first, EventMode::proper).exists);

    auto rainbow = rainbow_coloring(HostShape::multipartite(3, 3));
    CHECK(exists_colored_copy(make_cycle(7), rainbow, EventMode::rainbow).exists);

    CHECK_THROWS_AS(exists_colored_copy(make_bipartite_cycle(24), latin_square_to_coloring(cyclic_latin_square(12)),
                        EventMode::proper, 1000),
        Error);
    CHECK(injection_count(make_bipartite_cycle(4), HostShape::multipartite(2, 3)) == 36);
}

TEST_CASE("existence oracle agrees with enumeration on random tiny instances")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + trial % 2;
        auto mode = trial % 3 == 0 ? EventMode::rainbow : EventMode::proper;
        auto host = random_bounded_coloring(HostShape::multipartite(2, n), 1 + trial % 3,
            mode == EventMode::rainbow ? BoundType::global : BoundType::local, rng());
        auto pattern = trial % 2 ? make_bipartite_cycle(2 * n) : make_bipartite_cycle(4);
        bool expected = testing::exists_by_enumeration(pattern, host, mode == EventMode::rainbow);
        CHECK(exists_colored_copy(pattern, host, mode).exists == expected);
    }
}

TEST_CASE("existence is invariant under relabeling within parts")
{
    int order = 5;
    auto host = latin_square_to_coloring(cyclic_latin_square(order));
    auto pattern = make_bipartite_cycle(6);
    // rows shifted by s and columns by -s fix every symbol of the cyclic square
    for (int shift = 0; shift < order; ++shift) {
        auto relabeled = ColoredHost::from_function(host.shape(), [&](std::span<const int> e) {
            int a = (e[0] + shift) % order, b = order + (e[1] - order + order - shift) % order;
            return std::int64_t{host.pair_color(a, b)};
        });
        CHECK(relabeled.colors() == host.colors());
    }
    // arbitrary within-part permutations give isomorphic colored hosts
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        auto structured = random_bounded_coloring(HostShape::multipartite(2, 4), 2, BoundType::local, rng());
        std::vector<int> perm(8);
        std::iota(perm.begin(), perm.begin() + 4, 0);
        std::iota(perm.begin() + 4, perm.end(), 4);
        std::shuffle(perm.begin(), perm.begin() + 4, rng);
        std::shuffle(perm.begin() + 4, perm.end(), rng);
        auto relabeled = ColoredHost::from_function(structured.shape(),
            [&](std::span<const int> e) { return std::int64_t{structured.pair_color(perm[e[0]], perm[e[1]])}; });
        for (auto mode : {EventMode::proper, EventMode::rainbow})
            CHECK(exists_colored_copy(make_bipartite_cycle(8), relabeled, mode).exists ==
                exists_colored_copy(make_bipartite_cycle(8), structured, mode).exists);
    }
    // six edges cannot be rainbow with five symbols, while proper copies exist
    CHECK_FALSE(exists_colored_copy(pattern, host, EventMode::rainbow).exists);
    CHECK(exists_colored_copy(pattern, host, EventMode::proper).exists);
}

TEST_CASE("cross checks")
{
    EmbedConfig config;
    config.seed = 100;
    auto report = cross_check(make_bipartite_cycle(8), latin_double(), config, 50);
    CHECK(report.consistent);
    CHECK(report.oracle_exists);
    CHECK(report.embed_successes == 50);

    config.max_resamples = 20;
    config.restarts = 2;
    auto negative = cross_check(make_cycle(3), monochromatic_coloring(HostShape::multipartite(3, 1)), config, 5);
    CHECK_FALSE(negative.oracle_exists);
    CHECK(negative.embed_successes == 0);
    CHECK(negative.consistent);

    auto positive = cross_check(make_cycle(5), rainbow_coloring(HostShape::multipartite(3, 2)), config, 5);
    CHECK(positive.oracle_exists);
    CHECK(positive.embed_successes == 5);
}

TEST_CASE("brute force embedding matches embed on globally 1-bounded hosts")
{
    auto host = rainbow_coloring(HostShape::multipartite(2, 3));
    auto pattern = make_bipartite_cycle(6);
    auto found = brute_force_embed(pattern, host, EventMode::proper);
    REQUIRE(found.has_value());
    EmbedConfig config;
    config.seed = 3;
    CHECK(embed(pattern, host, config).success);
}
