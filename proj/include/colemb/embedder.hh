#pragma once

#include <colemb/certify.hh>
#include <colemb/embedding.hh>

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace colemb
{
    enum class ScanOrder
    {
        first_found,
        random
    };

    /// Uniform part-respecting injection: an independent partial Fisher-Yates shuffle per host part.
    auto sample_injection(const Pattern & pattern, const ColoredHost & host, std::mt19937_64 & rng) -> Embedding;
    auto sample_injection(const Pattern & pattern, const ColoredHost & host, std::uint64_t seed) -> Embedding;

    /// Pattern edge pairs that form bad events in the given mode: pairs sharing a vertex in proper
    /// mode, all pairs in rainbow mode.
    auto count_event_supports(const Pattern & pattern, EventMode mode) -> std::uint64_t;

    /// Finds every violated edge pair by bucketing image edges by color. first_found returns the
    /// least (first, second) pair among overlapping pairs, then among disjoint pairs in rainbow mode;
    /// random draws uniformly from the violated pairs of the earliest non-empty of those two groups.
    class ViolationScanner
    {
    public:
        ViolationScanner(const Pattern & pattern, const ColoredHost & host, EventMode mode);

        auto find(const std::vector<int> & image, ScanOrder order = ScanOrder::first_found,
            std::mt19937_64 * rng = nullptr) -> std::optional<Violation>;

    private:
        const Pattern & _pattern;
        const ColoredHost & _host;
        EventMode _mode;
        std::vector<std::pair<ColorId, int>> _colored;
        std::vector<int> _mapped;
        std::vector<std::pair<int, int>> _candidates;
    };

    auto find_violation(const Embedding & embedding, const Pattern & pattern, const ColoredHost & host,
        EventMode mode) -> std::optional<Violation>;

    /// Keeps an injection together with the inverse map so that swaps cost O(1).
    class SwapResampler
    {
    public:
        /// target[u] is the host part of pattern vertex u.
        SwapResampler(const HostShape & shape, std::vector<int> target, Embedding & embedding);

        /// For each support vertex in order: pick w uniformly in its part and swap images with w's
        /// preimage, if any.
        auto resample(std::span<const int> support, std::mt19937_64 & rng) -> void;

    private:
        const HostShape & _shape;
        std::vector<int> _target;
        Embedding & _embedding;
        std::vector<int> _occupant;
    };

    auto resample(Embedding & embedding, const Violation & violation, const Pattern & pattern,
        const ColoredHost & host, std::mt19937_64 & rng) -> void;

    struct EmbedConfig
    {
        EventMode mode = EventMode::proper;
        /// Resample budget per restart; 0 selects 100 times the number of event supports.
        std::uint64_t max_resamples = 0;
        int restarts = 10;
        std::uint64_t seed = 0;
        ScanOrder scan_order = ScanOrder::first_found;
        bool parallel = false;
        bool record_transcript = false;
    };

    struct EmbedResult
    {
        bool success = false;
        Embedding embedding;
        /// Resamples of the successful restart, or of the last restart on failure.
        std::uint64_t resamples = 0;
        std::uint64_t total_resamples = 0;
        int restarts_used = 0;
        std::uint64_t max_resamples = 0;
        std::optional<Violation> last_violation;
        std::uint64_t seed = 0;
        std::vector<std::string> transcript;
    };

    /// Seed of restart i, derived from the run seed so that results do not depend on scheduling.
    auto restart_seed(std::uint64_t seed, int restart) -> std::uint64_t;

    auto embed(const Pattern & pattern, const ColoredHost & host, const EmbedConfig & config) -> EmbedResult;

    /// Exact search through the backtracking oracle.
    auto brute_force_embed(const Pattern & pattern, const ColoredHost & host, EventMode mode)
        -> std::optional<Embedding>;
}
