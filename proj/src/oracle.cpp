#include <vdw/oracle.hpp>
#include <vdw/error.hpp>

#include <stdexcept>
#include <vector>

namespace vdw
{
    namespace
    {
        class Backtracker
        {
            public:
                Backtracker(Number limit, int k, std::int64_t budget) :
                    _limit(limit), _k(k), _budget(budget), _colors(static_cast<std::size_t>(limit) + 1, 0)
                {
                }

                // Explores proper prefixes up to the limit; true as soon as one
                // of full length is found.
                auto search() -> bool
                {
                    if (_limit == 0)
                        return true;
                    _colors[1] = 0;
                    return place(1);
                }

                [[nodiscard]] auto stats() const -> const SearchStats & { return _stats; }

                [[nodiscard]] auto coloring() const -> Coloring
                {
                    return Coloring{std::vector<std::uint8_t>(_colors.begin() + 1, _colors.end())};
                }

            private:
                Number _limit;
                int _k;
                std::int64_t _budget;
                std::vector<std::uint8_t> _colors;
                SearchStats _stats;

                // true if some AP ending at x is monochromatic
                auto closes_mono(Number x) const -> bool
                {
                    const auto c = _colors[static_cast<std::size_t>(x)];
                    for (Number d = 1 ; x - (_k - 1) * d >= 1 ; ++d) {
                        int i = 1;
                        for ( ; i < _k ; ++i)
                            if (_colors[static_cast<std::size_t>(x - i * d)] != c)
                                break;
                        if (i == _k)
                            return true;
                    }
                    return false;
                }

                // position x has just been colored
                auto place(Number x) -> bool
                {
                    if (++_stats.nodes_expanded > _budget)
                        throw Error(ErrorCode::budget_exceeded, "backtracking node budget exhausted");
                    if (closes_mono(x))
                        return false;
                    if (x > _stats.max_depth_reached)
                        _stats.max_depth_reached = x;
                    if (x == _limit)
                        return true;
                    for (std::uint8_t c = 0 ; c < 2 ; ++c) {
                        _colors[static_cast<std::size_t>(x + 1)] = c;
                        if (place(x + 1))
                            return true;
                    }
                    return false;
                }
        };
    }

    auto exists_proper(Number n, int k, std::int64_t node_budget) -> SearchResult
    {
        require_valid_k(k);
        if (n < 0)
            throw std::invalid_argument("n must be non-negative");
        auto start = std::chrono::steady_clock::now();

        Backtracker search{n, k, node_budget};
        SearchResult result;
        if (search.search())
            result.coloring = search.coloring();
        result.stats = search.stats();
        result.stats.elapsed = std::chrono::steady_clock::now() - start;
        return result;
    }

    auto exact_w(int k, Number n_max, SearchStats * stats, std::int64_t node_budget) -> Number
    {
        if (k != 3 && k != 4)
            throw std::invalid_argument("exact_w supports k in {3, 4}");
        if (n_max < k)
            throw std::invalid_argument("n_max must be at least k");
        auto start = std::chrono::steady_clock::now();

        // one exhaustive pass: the deepest proper prefix is the longest proper coloring
        Backtracker search{n_max, k, node_budget};
        const bool reached = search.search();
        if (stats) {
            *stats = search.stats();
            stats->elapsed = std::chrono::steady_clock::now() - start;
        }
        if (reached)
            throw Error(ErrorCode::not_resolved, "[" + std::to_string(n_max) + "] admits a proper coloring");
        return search.stats().max_depth_reached + 1;
    }
}
