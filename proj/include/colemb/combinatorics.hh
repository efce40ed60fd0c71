#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace colemb
{
    /// Pascal's triangle with rows 0..max_n and columns 0..max_k, saturating at UINT64_MAX.
    class BinomialTable
    {
    public:
        BinomialTable(int max_n, int max_k);

        auto operator()(int n, int k) const -> std::uint64_t
        {
            if (k < 0 || n < 0 || k > n)
                return 0;
            return _rows[n * (_max_k + 1) + k];
        }

    private:
        int _max_n;
        int _max_k;
        std::vector<std::uint64_t> _rows;
    };

    auto binomial(std::int64_t n, std::int64_t k) -> std::uint64_t;

    /// Colex rank of a strictly increasing tuple: sum over positions i of C(c_i, i+1).
    auto colex_rank(std::span<const int> sorted, const BinomialTable & table) -> std::uint64_t;

    /// Advances a strictly increasing combination of {0..n-1} in lexicographic order.
    auto next_combination(std::vector<int> & combination, int n) -> bool;

    auto sorted_intersection_size(std::span<const int> a, std::span<const int> b) -> int;
}
