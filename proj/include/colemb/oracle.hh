#pragma once

#include <colemb/certify.hh>
#include <colemb/embedder.hh>
#include <colemb/embedding.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace colemb
{
    struct ValidationReport
    {
        bool injective = true;
        bool part_respecting = true;
        bool properly_colored = true;
        bool rainbow = true;
        /// Repeated images, or vertices mapped outside their part, as (pattern vertex, image).
        std::vector<std::pair<int, int>> structure_witnesses;
        /// Every pair of pattern edges whose images share a color.
        std::vector<Violation> witnesses;

        auto valid(EventMode mode) const -> bool
        {
            return injective && part_respecting && (mode == EventMode::rainbow ? rainbow : properly_colored);
        }
    };

    /// Full scan over all pattern edge pairs. Part alignment follows align_parts.
    auto validate(const Embedding & embedding, const Pattern & pattern, const ColoredHost & host)
        -> ValidationReport;

    struct ExistenceResult
    {
        bool exists = false;
        std::optional<Embedding> witness;
        std::uint64_t nodes = 0;
    };

    /// Product over parts of n (n-1) ... (n - |U_i| + 1), saturating at UINT64_MAX.
    auto injection_count(const Pattern & pattern, const HostShape & shape) -> std::uint64_t;

    /// Exact decision by backtracking over part-respecting injections, pattern vertices in
    /// descending degree order, pruning at the first color conflict. Refuses with too-large when
    /// the unpruned injection count exceeds the limit.
    auto exists_colored_copy(const Pattern & pattern, const ColoredHost & host, EventMode mode,
        std::uint64_t limit = 100'000'000) -> ExistenceResult;

    struct CrossCheckReport
    {
        bool oracle_exists = false;
        int seeds = 0;
        int embed_successes = 0;
        /// Embedder successes whose embedding failed validation or contradicted the oracle.
        int unsound = 0;
        bool consistent = true;
    };

    /// Runs the embedder for seeds base, base+1, ... and checks every outcome against the oracle.
    auto cross_check(const Pattern & pattern, const ColoredHost & host, const EmbedConfig & config, int seeds)
        -> CrossCheckReport;
}
