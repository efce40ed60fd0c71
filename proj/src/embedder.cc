#include <colemb/embedder.hh>
#include <colemb/errors.hh>
#include <colemb/oracle.hh>

#include <algorithm>
#include <limits>
#include <numeric>
#include <thread>

using std::uint64_t;
using std::vector;

namespace colemb
{
    namespace
    {
        auto sample_with_target(const HostShape & shape, const vector<int> & target, std::mt19937_64 & rng)
            -> Embedding
        {
            Embedding e;
            e.image.assign(target.size(), -1);
            vector<vector<int>> by_part(shape.part_count());
            for (std::size_t u = 0; u < target.size(); ++u)
                by_part[target[u]].push_back(static_cast<int>(u));
            vector<int> pool(shape.part_size());
            for (int part = 0; part < shape.part_count(); ++part) {
                auto & members = by_part[part];
                if (members.empty())
                    continue;
                std::iota(pool.begin(), pool.end(), shape.part_begin(part));
                // partial Fisher-Yates: the first |members| slots become a uniform injection
                for (std::size_t i = 0; i < members.size(); ++i) {
                    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
                    std::swap(pool[i], pool[pick(rng)]);
                    e.image[members[i]] = pool[i];
                }
            }
            return e;
        }

        auto describe(const Violation & v) -> std::string
        {
            std::string line = std::string(violation_kind_name(v.kind)) + " edges " + std::to_string(v.first_edge) +
                " " + std::to_string(v.second_edge) + " color " + std::to_string(v.color) + " images";
            for (auto w : v.images)
                line += " " + std::to_string(w);
            return line;
        }

        struct RestartOutcome
        {
            bool success = false;
            Embedding embedding;
            uint64_t resamples = 0;
            std::optional<Violation> last_violation;
            vector<std::string> transcript;
        };

        auto run_restart(const Pattern & pattern, const ColoredHost & host, const vector<int> & target,
            const EmbedConfig & config, uint64_t budget, int index) -> RestartOutcome
        {
            RestartOutcome out;
            auto seed = restart_seed(config.seed, index);
            std::mt19937_64 rng(seed);
            if (config.record_transcript)
                out.transcript.push_back("restart " + std::to_string(index) + " seed " + std::to_string(seed));
            out.embedding = sample_with_target(host.shape(), target, rng);
            ViolationScanner scanner(pattern, host, config.mode);
            SwapResampler resampler(host.shape(), target, out.embedding);
            while (true) {
                auto violation = scanner.find(out.embedding.image, config.scan_order, &rng);
                if (! violation) {
                    out.success = true;
                    if (config.record_transcript)
                        out.transcript.push_back("success after " + std::to_string(out.resamples) + " resamples");
                    return out;
                }
                if (out.resamples >= budget) {
                    if (config.record_transcript)
                        out.transcript.push_back("budget exhausted at " + describe(*violation));
                    out.last_violation = std::move(violation);
                    return out;
                }
                if (config.record_transcript)
                    out.transcript.push_back("resample " + std::to_string(out.resamples) + " " + describe(*violation));
                resampler.resample(violation->support, rng);
                ++out.resamples;
                out.last_violation = std::move(violation);
            }
        }
    }

    auto sample_injection(const Pattern & pattern, const ColoredHost & host, std::mt19937_64 & rng) -> Embedding
    {
        return sample_with_target(host.shape(), align_parts(pattern, host.shape()), rng);
    }

    auto sample_injection(const Pattern & pattern, const ColoredHost & host, uint64_t seed) -> Embedding
    {
        std::mt19937_64 rng(seed);
        return sample_injection(pattern, host, rng);
    }

    auto count_event_supports(const Pattern & pattern, EventMode mode) -> uint64_t
    {
        uint64_t edges = pattern.edge_count();
        if (mode == EventMode::rainbow)
            return edges * (edges - (edges > 0)) / 2;
        uint64_t total = 0;
        for (int i = 1; i < pattern.uniformity(); ++i)
            total += enumerate_overlap_pairs(pattern, i).size();
        return total;
    }

    ViolationScanner::ViolationScanner(const Pattern & pattern, const ColoredHost & host, EventMode mode) :
        _pattern(pattern),
        _host(host),
        _mode(mode)
    {
        _colored.reserve(pattern.edge_count());
        _mapped.resize(pattern.uniformity());
    }

    auto ViolationScanner::find(const vector<int> & image, ScanOrder order, std::mt19937_64 * rng)
        -> std::optional<Violation>
    {
        auto & edges = _pattern.edges();
        bool graph = _host.shape().kind == HostKind::multipartite;
        _colored.clear();
        for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
            ColorId c;
            if (graph)
                c = _host.pair_color(image[edges[i][0]], image[edges[i][1]]);
            else {
                for (std::size_t j = 0; j < edges[i].size(); ++j)
                    _mapped[j] = image[edges[i][j]];
                c = _host.color_of_set(_mapped);
            }
            if (c >= 0)
                _colored.emplace_back(c, i);
        }
        std::sort(_colored.begin(), _colored.end());

        constexpr int none = std::numeric_limits<int>::max();
        std::pair<int, int> best_overlap{none, none}, best_disjoint{none, none};
        bool random = order == ScanOrder::random && rng != nullptr;
        vector<std::pair<int, int>> disjoint;
        _candidates.clear();

        for (std::size_t lo = 0; lo < _colored.size();) {
            auto hi = lo;
            while (hi < _colored.size() && _colored[hi].first == _colored[lo].first)
                ++hi;
            for (auto a = lo; a < hi; ++a)
                for (auto b = a + 1; b < hi; ++b) {
                    std::pair<int, int> p{_colored[a].second, _colored[b].second};
                    bool overlapping = sorted_intersection_size(edges[p.first], edges[p.second]) > 0;
                    if (! overlapping && _mode == EventMode::proper)
                        continue;
                    if (random)
                        (overlapping ? _candidates : disjoint).push_back(p);
                    else if (overlapping)
                        best_overlap = std::min(best_overlap, p);
                    else
                        best_disjoint = std::min(best_disjoint, p);
                }
            lo = hi;
        }

        std::pair<int, int> chosen{none, none};
        if (random) {
            auto & group = _candidates.empty() ? disjoint : _candidates;
            if (! group.empty()) {
                std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
                chosen = group[pick(*rng)];
            }
        }
        else
            chosen = best_overlap.first != none ? best_overlap : best_disjoint;
        if (chosen.first == none)
            return std::nullopt;
        return make_violation(_pattern, _host, image, chosen.first, chosen.second);
    }

    auto find_violation(const Embedding & embedding, const Pattern & pattern, const ColoredHost & host,
        EventMode mode) -> std::optional<Violation>
    {
        ViolationScanner scanner(pattern, host, mode);
        return scanner.find(embedding.image);
    }

    SwapResampler::SwapResampler(const HostShape & shape, vector<int> target, Embedding & embedding) :
        _shape(shape),
        _target(std::move(target)),
        _embedding(embedding),
        _occupant(shape.vertex_count(), -1)
    {
        for (std::size_t u = 0; u < _embedding.image.size(); ++u)
            _occupant[_embedding.image[u]] = static_cast<int>(u);
    }

    auto SwapResampler::resample(std::span<const int> support, std::mt19937_64 & rng) -> void
    {
        auto & image = _embedding.image;
        for (auto u : support) {
            int begin = _shape.part_begin(_target[u]);
            std::uniform_int_distribution<int> pick(begin, begin + _shape.part_size() - 1);
            int w = pick(rng);
            int old = image[u];
            if (w == old)
                continue;
            int other = _occupant[w];
            if (other >= 0)
                image[other] = old;
            _occupant[old] = other;
            image[u] = w;
            _occupant[w] = u;
        }
    }

    auto resample(Embedding & embedding, const Violation & violation, const Pattern & pattern,
        const ColoredHost & host, std::mt19937_64 & rng) -> void
    {
        SwapResampler resampler(host.shape(), align_parts(pattern, host.shape()), embedding);
        resampler.resample(violation.support, rng);
    }

    auto restart_seed(uint64_t seed, int restart) -> uint64_t
    {
        // splitmix64 finaliser over the pair (seed, restart)
        uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<uint64_t>(restart) + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    auto embed(const Pattern & pattern, const ColoredHost & host, const EmbedConfig & config) -> EmbedResult
    {
        if (config.restarts < 1)
            throw Error(ErrorCode::invalid_argument, "restarts must be at least 1");
        auto target = align_parts(pattern, host.shape());
        auto budget = config.max_resamples;
        if (budget == 0)
            budget = std::max<uint64_t>(1, 100 * count_event_supports(pattern, config.mode));

        EmbedResult result;
        result.seed = config.seed;
        result.max_resamples = budget;

        auto absorb = [&](RestartOutcome & out, int index) {
            result.restarts_used = index + 1;
            result.resamples = out.resamples;
            result.total_resamples += out.resamples;
            result.last_violation = std::move(out.last_violation);
            result.embedding = std::move(out.embedding);
            for (auto & line : out.transcript)
                result.transcript.push_back(std::move(line));
            result.success = out.success;
        };

        int workers = config.parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
        for (int first = 0; first < config.restarts; first += workers) {
            int batch = std::min(workers, config.restarts - first);
            vector<RestartOutcome> outcomes(batch);
            if (batch == 1)
                outcomes[0] = run_restart(pattern, host, target, config, budget, first);
            else {
                vector<std::thread> threads;
                for (int t = 0; t < batch; ++t)
                    threads.emplace_back([&, t] {
                        outcomes[t] = run_restart(pattern, host, target, config, budget, first + t);
                    });
                for (auto & thread : threads)
                    thread.join();
            }
            // the lowest-index success wins, so the result matches a sequential run
            for (int t = 0; t < batch; ++t) {
                absorb(outcomes[t], first + t);
                if (result.success)
                    return result;
            }
        }
        return result;
    }

    auto brute_force_embed(const Pattern & pattern, const ColoredHost & host, EventMode mode)
        -> std::optional<Embedding>
    {
        return exists_colored_copy(pattern, host, mode).witness;
    }
}
