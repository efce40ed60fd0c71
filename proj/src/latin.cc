#include <colemb/errors.hh>
#include <colemb/host.hh>

#include <algorithm>
#include <set>

using std::int64_t;
using std::vector;

namespace colemb
{
    auto is_latin_square(const LatinSquare & square) -> bool
    {
        auto n = square.size();
        if (n == 0)
            return false;
        std::set<int> symbols;
        for (auto & row : square) {
            if (row.size() != n)
                return false;
            symbols.insert(row.begin(), row.end());
        }
        if (symbols.size() != n)
            return false;
        for (std::size_t i = 0; i < n; ++i) {
            std::set<int> in_row(square[i].begin(), square[i].end()), in_column;
            for (std::size_t j = 0; j < n; ++j)
                in_column.insert(square[j][i]);
            if (in_row.size() != n || in_column.size() != n)
                return false;
        }
        return true;
    }

    auto cyclic_latin_square(int order) -> LatinSquare
    {
        if (order < 1)
            throw Error(ErrorCode::invalid_argument, "Latin square order must be positive");
        LatinSquare square(order, vector<int>(order));
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j)
                square[i][j] = (i + j) % order;
        return square;
    }

    auto latin_square_to_coloring(const LatinSquare & square) -> ColoredHost
    {
        if (! is_latin_square(square))
            throw Error(ErrorCode::not_latin, "some row or column repeats a symbol");
        int n = static_cast<int>(square.size());
        return ColoredHost::from_function(HostShape::multipartite(2, n),
            [&](std::span<const int> e) { return int64_t{square[e[0]][e[1] - n]}; });
    }

    auto coloring_to_latin_square(const ColoredHost & host) -> LatinSquare
    {
        auto & shape = host.shape();
        if (shape.kind != HostKind::multipartite || shape.m != 2)
            throw Error(ErrorCode::invalid_argument, "only K_{n,n} colorings correspond to square arrays");
        int n = shape.n;
        LatinSquare square(n, vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                square[i][j] = host.pair_color(i, n + j);
        return square;
    }
}
