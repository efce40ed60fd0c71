#include <colemb/combinatorics.hh>
#include <colemb/errors.hh>
#include <colemb/negdep.hh>

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <random>
#include <string>

using std::uint64_t;
using std::vector;

namespace colemb
{
    namespace
    {
        auto part_of(const vector<int> & sizes, int id) -> int
        {
            for (std::size_t i = 0; i < sizes.size(); ++i) {
                if (id < sizes[i])
                    return static_cast<int>(i);
                id -= sizes[i];
            }
            return -1;
        }

        using Bits = vector<uint64_t>;

        auto popcount(const Bits & bits) -> uint64_t
        {
            uint64_t total = 0;
            for (auto w : bits)
                total += std::popcount(w);
            return total;
        }
    }

    auto InjectionSpace::validate() const -> void
    {
        if (x_sizes.size() != y_sizes.size() || x_sizes.empty())
            throw Error(ErrorCode::invalid_argument, "injection spaces need the same positive number of parts on both sides");
        for (std::size_t i = 0; i < x_sizes.size(); ++i)
            if (x_sizes[i] < 0 || x_sizes[i] > y_sizes[i])
                throw Error(ErrorCode::part_overflow, "part " + std::to_string(i) + " has " +
                        std::to_string(x_sizes[i]) + " domain points but " + std::to_string(y_sizes[i]) + " targets");
    }

    auto InjectionSpace::x_count() const -> int { return std::accumulate(x_sizes.begin(), x_sizes.end(), 0); }
    auto InjectionSpace::y_count() const -> int { return std::accumulate(y_sizes.begin(), y_sizes.end(), 0); }
    auto InjectionSpace::x_part(int x) const -> int { return part_of(x_sizes, x); }
    auto InjectionSpace::y_part(int y) const -> int { return part_of(y_sizes, y); }

    auto InjectionSpace::size() const -> uint64_t
    {
        constexpr auto cap = std::numeric_limits<uint64_t>::max();
        uint64_t total = 1;
        for (std::size_t i = 0; i < x_sizes.size(); ++i)
            for (int j = 0; j < x_sizes[i]; ++j) {
                uint64_t factor = y_sizes[i] - j;
                if (factor == 0)
                    return 0;
                if (total > cap / factor)
                    return cap;
                total *= factor;
            }
        return total;
    }

    auto validate_event(const InjectionSpace & space, const CanonicalEvent & event) -> void
    {
        for (std::size_t a = 0; a < event.pairs.size(); ++a) {
            auto [x, y] = event.pairs[a];
            if (x < 0 || x >= space.x_count() || y < 0 || y >= space.y_count())
                throw Error(ErrorCode::invalid_argument, "event pair out of range");
            if (space.x_part(x) != space.y_part(y))
                throw Error(ErrorCode::invalid_argument, "event pair " + std::to_string(x) + " -> " +
                        std::to_string(y) + " crosses parts");
            for (std::size_t b = 0; b < a; ++b)
                if (event.pairs[b].first == x || event.pairs[b].second == y)
                    throw Error(ErrorCode::invalid_argument, "event is not a partial bijection");
        }
    }

    auto events_conflict(const CanonicalEvent & a, const CanonicalEvent & b) -> bool
    {
        for (auto [x1, y1] : a.pairs)
            for (auto [x2, y2] : b.pairs)
                if ((x1 == x2) != (y1 == y2))
                    return true;
        return false;
    }

    auto events_s_intersect(const CanonicalEvent & a, const CanonicalEvent & b) -> bool
    {
        for (auto [x1, y1] : a.pairs)
            for (auto [x2, y2] : b.pairs)
                if (x1 == x2 || y1 == y2)
                    return true;
        return false;
    }

    auto all_single_pair_events(const InjectionSpace & space) -> vector<CanonicalEvent>
    {
        space.validate();
        vector<CanonicalEvent> events;
        for (int x = 0; x < space.x_count(); ++x)
            for (int y = 0; y < space.y_count(); ++y)
                if (space.x_part(x) == space.y_part(y))
                    events.push_back({{{x, y}}});
        return events;
    }

    auto enumerate_injections(const InjectionSpace & space, uint64_t limit) -> vector<vector<int>>
    {
        space.validate();
        auto total = space.size();
        if (total > limit)
            throw Error(ErrorCode::too_large, "injection space has " + std::to_string(total) +
                    " elements, limit is " + std::to_string(limit));

        int xs = space.x_count();
        vector<int> x_begin, y_begin;
        for (int i = 0, xb = 0, yb = 0; i < static_cast<int>(space.x_sizes.size()); ++i) {
            x_begin.push_back(xb);
            y_begin.push_back(yb);
            xb += space.x_sizes[i];
            yb += space.y_sizes[i];
        }

        vector<vector<int>> result;
        result.reserve(total);
        vector<int> image(xs, -1);
        vector<bool> used(space.y_count(), false);
        auto recurse = [&](auto & self, int x) -> void {
            if (x == xs) {
                result.push_back(image);
                return;
            }
            int part = space.x_part(x);
            for (int y = y_begin[part]; y < y_begin[part] + space.y_sizes[part]; ++y)
                if (! used[y]) {
                    used[y] = true;
                    image[x] = y;
                    self(self, x + 1);
                    used[y] = false;
                }
        };
        recurse(recurse, 0);
        return result;
    }

    auto verify_negative_dependency(const InjectionSpace & space, const vector<CanonicalEvent> & events,
        const NegDepConfig & config) -> NegDepReport
    {
        for (auto & event : events)
            validate_event(space, event);
        auto injections = enumerate_injections(space, config.injection_limit);

        NegDepReport report;
        report.injections = injections.size();
        std::size_t words = (injections.size() + 63) / 64;

        vector<Bits> holds(events.size(), Bits(words, 0));
        for (std::size_t s = 0; s < injections.size(); ++s)
            for (std::size_t e = 0; e < events.size(); ++e) {
                bool all = true;
                for (auto [x, y] : events[e].pairs)
                    if (injections[s][x] != y) {
                        all = false;
                        break;
                    }
                if (all)
                    holds[e][s / 64] |= uint64_t{1} << (s % 64);
            }
        Bits full(words, ~uint64_t{0});
        if (injections.size() % 64 != 0)
            full.back() = (uint64_t{1} << (injections.size() % 64)) - 1;

        std::mt19937_64 rng(config.seed);
        uint64_t total = injections.size();
        Bits avoid(words);

        for (std::size_t i = 0; i < events.size(); ++i) {
            uint64_t event_count = popcount(holds[i]);
            vector<int> others;
            for (std::size_t j = 0; j < events.size(); ++j)
                if (j != i && ! events_conflict(events[i], events[j]))
                    others.push_back(static_cast<int>(j));

            auto check = [&](const vector<int> & chosen) {
                avoid = full;
                for (auto c : chosen) {
                    auto j = others[c];
                    for (std::size_t w = 0; w < words; ++w)
                        avoid[w] &= ~holds[j][w];
                }
                uint64_t avoid_count = popcount(avoid);
                ++report.checks;
                if (avoid_count == 0) {
                    ++report.skipped_null;
                    return;
                }
                uint64_t both = 0;
                for (std::size_t w = 0; w < words; ++w)
                    both += std::popcount(avoid[w] & holds[i][w]);
                // P(B | A) <= P(B) rearranged to integers: |B and A| |S| <= |B| |A|.
                if (Integer(both) * total > Integer(event_count) * avoid_count) {
                    NegDepViolation v;
                    v.event = static_cast<int>(i);
                    for (auto c : chosen)
                        v.conditioned.push_back(others[c]);
                    v.conditional = Rational(Integer(both), Integer(avoid_count));
                    v.unconditional = Rational(Integer(event_count), Integer(total));
                    report.violations.push_back(std::move(v));
                }
            };

            int n_others = static_cast<int>(others.size());
            int exhaustive = std::min(config.exhaustive_size, n_others);
            for (int size = 0; size <= exhaustive; ++size) {
                vector<int> chosen(size);
                std::iota(chosen.begin(), chosen.end(), 0);
                do
                    check(chosen);
                while (size > 0 && next_combination(chosen, n_others));
            }
            if (n_others > exhaustive)
                for (int t = 0; t < config.sampled_subsets; ++t) {
                    std::uniform_int_distribution<int> pick_size(exhaustive + 1, n_others);
                    vector<int> pool(n_others);
                    std::iota(pool.begin(), pool.end(), 0);
                    std::shuffle(pool.begin(), pool.end(), rng);
                    pool.resize(pick_size(rng));
                    std::sort(pool.begin(), pool.end());
                    check(pool);
                }
        }
        return report;
    }
}
