#pragma once

#include <colemb/rational.hh>

#include <cstdint>
#include <utility>
#include <vector>

namespace colemb
{
    /// Part-respecting injections X -> Y where part i of X maps into part i of Y. Both sides
    /// are numbered part-major, so part i of X holds ids [sum of earlier x_sizes, ... + x_sizes[i]).
    struct InjectionSpace
    {
        std::vector<int> x_sizes;
        std::vector<int> y_sizes;

        auto validate() const -> void;
        auto x_count() const -> int;
        auto y_count() const -> int;
        auto x_part(int x) const -> int;
        auto y_part(int y) const -> int;
        /// Number of part-respecting injections, saturating at UINT64_MAX.
        auto size() const -> std::uint64_t;
    };

    /// Omega(T, U, tau): all injections sigma with sigma(x) = y for every pair (x, y).
    struct CanonicalEvent
    {
        std::vector<std::pair<int, int>> pairs;

        auto operator==(const CanonicalEvent &) const -> bool = default;
    };

    /// Throws invalid-argument unless the pairs form a part-respecting partial bijection.
    auto validate_event(const InjectionSpace & space, const CanonicalEvent & event) -> void;

    /// Some x is sent to two different points, or two different points are sent to the same y.
    auto events_conflict(const CanonicalEvent & a, const CanonicalEvent & b) -> bool;
    /// The events share a domain point or a range point.
    auto events_s_intersect(const CanonicalEvent & a, const CanonicalEvent & b) -> bool;

    /// Every event {x -> y} with x and y in the same part, ordered by x then y.
    auto all_single_pair_events(const InjectionSpace & space) -> std::vector<CanonicalEvent>;

    /// All injections in lexicographic order of the image vector.
    auto enumerate_injections(const InjectionSpace & space, std::uint64_t limit = 1'000'000)
        -> std::vector<std::vector<int>>;

    struct NegDepConfig
    {
        std::uint64_t injection_limit = 1'000'000;
        /// Conditioning sets up to this size are enumerated exhaustively.
        int exhaustive_size = 4;
        /// Larger conditioning sets are sampled uniformly by size then by subset, this many per event.
        int sampled_subsets = 0;
        std::uint64_t seed = 1;
    };

    struct NegDepViolation
    {
        int event = -1;
        std::vector<int> conditioned;
        Rational conditional;
        Rational unconditional;
    };

    struct NegDepReport
    {
        std::uint64_t injections = 0;
        std::uint64_t checks = 0;
        /// Conditioning sets whose joint avoidance has probability zero.
        std::uint64_t skipped_null = 0;
        std::vector<NegDepViolation> violations;

        auto ok() const -> bool { return violations.empty(); }
    };

    /// Checks P(B_i | no B_j for j in J) <= P(B_i) for every event i and every set J of other events
    /// that do not conflict with B_i, by counting over the whole injection space.
    auto verify_negative_dependency(const InjectionSpace & space, const std::vector<CanonicalEvent> & events,
        const NegDepConfig & config = {}) -> NegDepReport;
}
