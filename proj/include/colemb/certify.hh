#pragma once

#include <colemb/host.hh>
#include <colemb/pattern.hh>
#include <colemb/rational.hh>

#include <string>
#include <vector>

namespace colemb
{
    enum class EventMode
    {
        proper,
        rainbow
    };

    enum class EventClass
    {
        cherry,
        quadruple,
        hyper_overlap
    };

    enum class Theorem
    {
        proper,
        rainbow,
        hyper_proper,
        hyper_rainbow
    };

    /// Exact upper bound on the probability of one canonical bad event under a uniform
    /// part-respecting injection into parts of size n. For hyper_overlap the bound is
    /// 1 / (n (n-1) ... (n - 2r + overlap + 1)).
    auto event_probability(EventClass event_class, long long n, int r = 2, int overlap = 0) -> Rational;

    /// The hypothesis data of one of the embedding theorems. Graph mode (host = multipartite)
    /// reads delta; hypergraph mode reads r, ell, delta (the 1-degree) and delta_ell.
    struct EventFamilySpec
    {
        EventMode mode = EventMode::proper;
        BoundType bound = BoundType::local;
        HostKind host = HostKind::multipartite;
        long long m = 2;
        long long n = 0;
        int r = 2;
        int ell = 1;
        long long delta = 0;
        long long delta_ell = 0;
        long long k = 1;

        auto validate() const -> void;
        auto theorem() const -> Theorem;
    };

    struct ClassBound
    {
        std::string label;
        Rational count;
        Rational probability;
    };

    /// Closed-form counts of bad events intersecting a fixed event, one entry per class.
    /// Graph labels: cherry/G, cherry/K, quadruple/G, quadruple/K. Hypergraph labels:
    /// overlap<i>/G and overlap<i>/K for each overlap class i of the family.
    auto intersection_count_bounds(const EventFamilySpec & spec) -> std::vector<ClassBound>;

    /// c1 (proper) and c2 (rainbow) of the hypergraph thresholds k <= c n^{r-ell} / (delta_1 delta_ell).
    struct HyperConstants
    {
        Rational proper;
        Rational rainbow;
    };

    /// Smallest host size for which the default hypergraph constants are certified.
    auto hyper_minimum_n(int r) -> long long;
    auto default_hyper_constants(int r, int ell) -> HyperConstants;

    struct ThresholdInput
    {
        long long n = 0;
        long long delta = 0;
        int r = 2;
        int ell = 1;
        long long delta_ell = 0;
    };

    auto threshold_k(Theorem theorem, const ThresholdInput & input) -> long long;
    auto threshold_k(Theorem theorem, const ThresholdInput & input, const HyperConstants & constants) -> long long;

    struct CertificateTerm
    {
        std::string label;
        Rational count_bound;
        Rational probability;
        Rational contribution;
    };

    struct LLLCertificate
    {
        Theorem theorem = Theorem::proper;
        Rational per_event_prob_bound;
        /// Sum of count_bound * probability over all classes.
        Rational neighborhood_sum_exact;
        /// Closed-form relaxation of the exact sum that decides the verdict (always >= the exact sum).
        Rational neighborhood_sum_bound;
        bool passes = false;
        long long threshold_k = 0;
        std::vector<CertificateTerm> breakdown;
    };

    auto certify(const EventFamilySpec & spec) -> LLLCertificate;

    auto theorem_name(Theorem theorem) -> std::string;
    auto parse_theorem(const std::string & name) -> Theorem;

    // Exact enumeration of bad-event families on small instances.

    /// A canonical bad event: pattern support mapped onto host vertices with a color coincidence.
    /// Cherries list (u1, u2, u3); quadruples (u1, u2, u3, u4); hypergraph events list the sorted
    /// union of the two pattern edges. host_vertices[i] is the image of pattern_vertices[i].
    struct BadEvent
    {
        EventClass kind = EventClass::cherry;
        int overlap = 0;
        std::vector<int> pattern_vertices;
        std::vector<int> host_vertices;

        auto operator==(const BadEvent &) const -> bool = default;
    };

    /// Every canonical bad event of the family (cherries and, in rainbow mode, quadruples for graphs;
    /// overlap classes 1..r-1, plus 0 in rainbow mode, for hypergraphs). Pattern vertices are confined to the
    /// host parts chosen by align_parts.
    auto enumerate_bad_events(const Pattern & pattern, const ColoredHost & host, EventMode mode,
        long long limit = 10'000'000) -> std::vector<BadEvent>;

    struct ClassCount
    {
        std::string label;
        long long count = 0;
    };

    /// Events of the family other than `event` which intersect it, split by class with the same labels
    /// as intersection_count_bounds. Pattern-side intersection takes precedence over host-side.
    auto enumerate_intersecting_exact(const BadEvent & event, const std::vector<BadEvent> & family,
        HostKind host_kind, int r = 2) -> std::vector<ClassCount>;
}
