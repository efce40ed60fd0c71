#include <colemb/certify.hh>
#include <colemb/errors.hh>

#include <stdexcept>

using std::string;
using std::vector;

namespace colemb
{
    namespace
    {
        auto power(long long base, long long exponent) -> Integer
        {
            Integer result = 1;
            for (long long i = 0; i < exponent; ++i)
                result *= base;
            return result;
        }

        // Overlap classes that can occur as bad events: proper colorings only forbid overlapping
        // pairs (1..ell, since the pattern has no two edges sharing ell+1 vertices); rainbow adds 0.
        auto hyper_classes(EventMode mode, int ell) -> vector<int>
        {
            vector<int> classes;
            for (int i = (mode == EventMode::rainbow ? 0 : 1); i <= ell; ++i)
                classes.push_back(i);
            return classes;
        }

        auto inverse_factorial_sum(const vector<int> & classes) -> Rational
        {
            Rational sum = 0;
            for (auto i : classes)
                sum += Rational(1) / Rational(factorial(i));
            return sum;
        }

        // Stand-in for the i-degree in the count of overlap-i events: the 1-degree itself for i = 1,
        // otherwise the cascade delta_i <= n^{ell-i} delta_ell.
        auto cascade_degree(const EventFamilySpec & spec, int i) -> Integer
        {
            if (i == 1)
                return Integer(spec.delta);
            return power(spec.n, spec.ell - i) * spec.delta_ell;
        }

        auto hyper_rate(int r, const vector<int> & classes) -> Rational
        {
            // Each overlap-i class contributes at most 2 * 2r * (r!/i!) * D1 * Di * n^r * k events of
            // probability 1/(n)_{2r-i}; with Di <= n^{ell-i} Dell and n^{2r-i} <= 2 (n)_{2r-i} the class
            // sum is at most 8r (r!/i!) * D1 Dell k / n^{r-ell}.
            return Rational(8 * r) * Rational(factorial(r)) * inverse_factorial_sum(classes);
        }
    }

    auto event_probability(EventClass event_class, long long n, int r, int overlap) -> Rational
    {
        switch (event_class) {
        case EventClass::cherry:
            if (n < 2)
                throw Error(ErrorCode::degenerate_dims, "cherry events need n >= 2");
            return Rational(1) / Rational(Integer(n) * n * (n - 1));
        case EventClass::quadruple:
            if (n < 2)
                throw Error(ErrorCode::degenerate_dims, "quadruple events need n >= 2");
            return Rational(1) / Rational(Integer(n) * n * (n - 1) * (n - 1));
        case EventClass::hyper_overlap: {
            if (r < 2 || overlap < 0 || overlap > r - 1)
                throw Error(ErrorCode::invalid_argument, "overlap must lie in 0..r-1");
            long long factors = 2LL * r - overlap;
            if (n - factors + 1 <= 0)
                throw Error(ErrorCode::degenerate_dims,
                    "overlap-" + std::to_string(overlap) + " events need n >= " + std::to_string(factors));
            return Rational(1) / Rational(falling_factorial(n, factors));
        }
        }
        throw std::logic_error("unknown event class");
    }

    auto EventFamilySpec::validate() const -> void
    {
        if (k < 1)
            throw Error(ErrorCode::invalid_argument, "k must be at least 1");
        if (mode == EventMode::rainbow && bound != BoundType::global)
            throw Error(ErrorCode::invalid_argument, "rainbow families need a global bound");
        if (n < 1)
            throw Error(ErrorCode::degenerate_dims, "n must be positive");
        if (host == HostKind::multipartite) {
            if (m < 2)
                throw Error(ErrorCode::degenerate_dims, "multipartite hosts need m >= 2");
            if (delta < 1)
                throw Error(ErrorCode::degenerate_dims, "maximum degree must be at least 1");
            return;
        }
        if (r < 2 || ell < 1 || ell > r - 1)
            throw Error(ErrorCode::invalid_argument, "need r >= 2 and 1 <= ell <= r-1");
        if (delta < 1 || delta_ell < 1)
            throw Error(ErrorCode::degenerate_dims, "degrees must be at least 1");
        if (delta_ell > delta || Integer(delta) > power(n, ell - 1) * delta_ell)
            throw Error(ErrorCode::invalid_argument,
                "inconsistent degrees: need delta_ell <= delta_1 <= n^(ell-1) delta_ell");
    }

    auto EventFamilySpec::theorem() const -> Theorem
    {
        if (host == HostKind::multipartite)
            return mode == EventMode::proper ? Theorem::proper : Theorem::rainbow;
        return mode == EventMode::proper ? Theorem::hyper_proper : Theorem::hyper_rainbow;
    }

    auto intersection_count_bounds(const EventFamilySpec & spec) -> vector<ClassBound>
    {
        spec.validate();
        vector<ClassBound> result;
        Integer n = spec.n, k = spec.k, d = spec.delta;
        if (spec.host == HostKind::multipartite) {
            auto cherry_p = event_probability(EventClass::cherry, spec.n);
            if (spec.mode == EventMode::proper) {
                // apex or either leaf of the fixed support, 3/2 D(D-1) pattern cherries, n^2 k host cherries
                Rational cherries = Rational(9, 2) * Rational(d * (d - 1) * n * n * k);
                result.push_back({"cherry/G", cherries, cherry_p});
                result.push_back({"cherry/K", cherries, cherry_p});
            }
            else {
                auto quad_p = event_probability(EventClass::quadruple, spec.n);
                Rational cherries = Rational(6 * d * (d - 1) * n * n * k);
                Rational quadruples = Rational(4 * d * d * n * n * n * k);
                result.push_back({"cherry/G", cherries, cherry_p});
                result.push_back({"cherry/K", cherries, cherry_p});
                result.push_back({"quadruple/G", quadruples, quad_p});
                result.push_back({"quadruple/K", quadruples, quad_p});
            }
            return result;
        }

        int r = spec.r;
        for (auto i : hyper_classes(spec.mode, spec.ell)) {
            Rational per_vertex = Rational(factorial(r)) / Rational(factorial(i));
            Rational count = Rational(2 * r) * per_vertex * Rational(d * cascade_degree(spec, i) * power(spec.n, r) * k);
            auto p = event_probability(EventClass::hyper_overlap, spec.n, r, i);
            result.push_back({"overlap" + std::to_string(i) + "/G", count, p});
            result.push_back({"overlap" + std::to_string(i) + "/K", count, p});
        }
        return result;
    }

    auto hyper_minimum_n(int r) -> long long
    {
        return 2LL * r * (2LL * r - 1);
    }

    auto default_hyper_constants(int r, int ell) -> HyperConstants
    {
        if (r < 2 || ell < 1 || ell > r - 1)
            throw Error(ErrorCode::invalid_argument, "need r >= 2 and 1 <= ell <= r-1");
        HyperConstants constants;
        constants.proper = Rational(1) / (Rational(4) * hyper_rate(r, hyper_classes(EventMode::proper, ell)));
        constants.rainbow = Rational(1) / (Rational(4) * hyper_rate(r, hyper_classes(EventMode::rainbow, ell)));
        return constants;
    }

    auto threshold_k(Theorem theorem, const ThresholdInput & input) -> long long
    {
        if (theorem == Theorem::hyper_proper || theorem == Theorem::hyper_rainbow)
            return threshold_k(theorem, input, default_hyper_constants(input.r, input.ell));
        return threshold_k(theorem, input, HyperConstants{});
    }

    auto threshold_k(Theorem theorem, const ThresholdInput & input, const HyperConstants & constants) -> long long
    {
        if (input.n < 0)
            throw Error(ErrorCode::degenerate_dims, "n must be non-negative");
        if (input.delta < 1)
            throw Error(ErrorCode::degenerate_dims, "maximum degree must be at least 1");
        Rational value;
        switch (theorem) {
        case Theorem::proper:
            value = Rational(input.n) / Rational(Integer(48) * input.delta * input.delta);
            break;
        case Theorem::rainbow:
            value = Rational(input.n) / Rational(Integer(110) * input.delta * input.delta);
            break;
        case Theorem::hyper_proper:
        case Theorem::hyper_rainbow: {
            if (input.r < 2 || input.ell < 1 || input.ell > input.r - 1)
                throw Error(ErrorCode::invalid_argument, "need r >= 2 and 1 <= ell <= r-1");
            if (input.delta_ell < 1)
                throw Error(ErrorCode::degenerate_dims, "ell-degree must be at least 1");
            auto & c = theorem == Theorem::hyper_proper ? constants.proper : constants.rainbow;
            value = c * Rational(power(input.n, input.r - input.ell)) /
                Rational(Integer(input.delta) * input.delta_ell);
            break;
        }
        }
        return floor_to_integer(value).convert_to<long long>();
    }

    auto certify(const EventFamilySpec & spec) -> LLLCertificate
    {
        spec.validate();
        LLLCertificate certificate;
        certificate.theorem = spec.theorem();
        Integer n = spec.n, k = spec.k, d = spec.delta;

        if (spec.host == HostKind::multipartite) {
            long long minimum = spec.mode == EventMode::proper ? 4 : 5;
            if (spec.n < minimum)
                throw Error(ErrorCode::degenerate_dims, "this certificate needs n >= " + std::to_string(minimum));
            certificate.per_event_prob_bound = event_probability(EventClass::cherry, spec.n);
            // proper: 2 (9/2) D(D-1) n^2 k / (n^2 (n-1)) < 12 D^2 k / n using n/(n-1) <= 4/3
            // rainbow: the four classes sum below (12 * 5/4 + 8 * 25/16) D^2 k / n for n >= 5
            Rational rate = spec.mode == EventMode::proper ? Rational(12) : Rational(55, 2);
            certificate.neighborhood_sum_bound = rate * Rational(d * d * k) / Rational(n);
        }
        else {
            if (spec.n < hyper_minimum_n(spec.r))
                throw Error(ErrorCode::degenerate_dims,
                    "hypergraph certificates need n >= 2r(2r-1) = " + std::to_string(hyper_minimum_n(spec.r)));
            certificate.per_event_prob_bound = event_probability(EventClass::hyper_overlap, spec.n, spec.r, spec.ell);
            auto rate = hyper_rate(spec.r, hyper_classes(spec.mode, spec.ell));
            certificate.neighborhood_sum_bound =
                rate * Rational(d * spec.delta_ell * k) / Rational(power(spec.n, spec.r - spec.ell));
        }

        for (auto & bound : intersection_count_bounds(spec)) {
            auto contribution = bound.count * bound.probability;
            certificate.neighborhood_sum_exact += contribution;
            certificate.breakdown.push_back({bound.label, bound.count, bound.probability, contribution});
        }
        if (certificate.neighborhood_sum_exact > certificate.neighborhood_sum_bound)
            throw std::logic_error("closed-form relaxation fell below the exact class sum");

        Rational quarter(1, 4);
        certificate.passes =
            certificate.per_event_prob_bound <= quarter && certificate.neighborhood_sum_bound <= quarter;
        certificate.threshold_k = threshold_k(certificate.theorem,
            ThresholdInput{spec.n, spec.delta, spec.r, spec.ell, spec.delta_ell});
        return certificate;
    }

    auto theorem_name(Theorem theorem) -> string
    {
        switch (theorem) {
        case Theorem::proper: return "proper";
        case Theorem::rainbow: return "rainbow";
        case Theorem::hyper_proper: return "hyperProper";
        case Theorem::hyper_rainbow: return "hyperRainbow";
        }
        return "unknown";
    }

    auto parse_theorem(const string & name) -> Theorem
    {
        if (name == "proper")
            return Theorem::proper;
        if (name == "rainbow")
            return Theorem::rainbow;
        if (name == "hyperProper")
            return Theorem::hyper_proper;
        if (name == "hyperRainbow")
            return Theorem::hyper_rainbow;
        throw Error(ErrorCode::invalid_argument, "unknown theorem '" + name + "'");
    }
}
