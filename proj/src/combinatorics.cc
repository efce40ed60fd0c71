#include <colemb/combinatorics.hh>
#include <colemb/errors.hh>
#include <colemb/rational.hh>

#include <algorithm>
#include <limits>

using std::uint64_t;
using std::vector;

namespace colemb
{
    auto error_code_name(ErrorCode code) -> const char *
    {
        switch (code) {
        case ErrorCode::invalid_shape: return "invalid-shape";
        case ErrorCode::invalid_argument: return "invalid-argument";
        case ErrorCode::not_latin: return "not-latin";
        case ErrorCode::part_overflow: return "part-overflow";
        case ErrorCode::too_large: return "too-large";
        case ErrorCode::degenerate_dims: return "degenerate-dims";
        case ErrorCode::not_prime: return "not-prime";
        case ErrorCode::unsupported_parameters: return "unsupported-parameters";
        case ErrorCode::divisibility: return "divisibility";
        case ErrorCode::parse_error: return "parse-error";
        }
        return "error";
    }

    BinomialTable::BinomialTable(int max_n, int max_k) :
        _max_n(max_n),
        _max_k(max_k),
        _rows(static_cast<std::size_t>(max_n + 1) * (max_k + 1), 0)
    {
        constexpr auto saturated = std::numeric_limits<uint64_t>::max();
        for (int n = 0; n <= max_n; ++n) {
            _rows[n * (max_k + 1)] = 1;
            for (int k = 1; k <= std::min(n, max_k); ++k) {
                auto a = _rows[(n - 1) * (max_k + 1) + k - 1];
                auto b = k <= n - 1 ? _rows[(n - 1) * (max_k + 1) + k] : 0;
                _rows[n * (max_k + 1) + k] = (a > saturated - b) ? saturated : a + b;
            }
        }
    }

    auto binomial(std::int64_t n, std::int64_t k) -> uint64_t
    {
        if (k < 0 || n < 0 || k > n)
            return 0;
        k = std::min(k, n - k);
        unsigned __int128 result = 1;
        for (std::int64_t i = 1; i <= k; ++i) {
            result = result * static_cast<unsigned __int128>(n - k + i) / i;
            if (result > std::numeric_limits<uint64_t>::max())
                return std::numeric_limits<uint64_t>::max();
        }
        return static_cast<uint64_t>(result);
    }

    auto colex_rank(std::span<const int> sorted, const BinomialTable & table) -> uint64_t
    {
        uint64_t rank = 0;
        for (std::size_t i = 0; i < sorted.size(); ++i)
            rank += table(sorted[i], static_cast<int>(i) + 1);
        return rank;
    }

    auto next_combination(vector<int> & combination, int n) -> bool
    {
        int k = static_cast<int>(combination.size());
        for (int i = k - 1; i >= 0; --i) {
            if (combination[i] < n - k + i) {
                ++combination[i];
                for (int j = i + 1; j < k; ++j)
                    combination[j] = combination[j - 1] + 1;
                return true;
            }
        }
        return false;
    }

    auto sorted_intersection_size(std::span<const int> a, std::span<const int> b) -> int
    {
        int count = 0;
        auto i = a.begin(), j = b.begin();
        while (i != a.end() && j != b.end()) {
            if (*i < *j)
                ++i;
            else if (*j < *i)
                ++j;
            else {
                ++count;
                ++i;
                ++j;
            }
        }
        return count;
    }

    auto to_string(const Rational & value) -> std::string
    {
        auto num = boost::multiprecision::numerator(value);
        auto den = boost::multiprecision::denominator(value);
        if (den == 1)
            return num.str();
        return num.str() + "/" + den.str();
    }

    auto floor_to_integer(const Rational & value) -> Integer
    {
        Integer num = boost::multiprecision::numerator(value);
        Integer den = boost::multiprecision::denominator(value);
        Integer q = num / den;
        if (num < 0 && q * den != num)
            q -= 1;
        return q;
    }

    auto falling_factorial(std::int64_t n, std::int64_t count) -> Integer
    {
        Integer result = 1;
        for (std::int64_t i = 0; i < count; ++i)
            result *= Integer(n - i);
        return result;
    }

    auto factorial(std::int64_t n) -> Integer
    {
        return falling_factorial(n, n);
    }
}
