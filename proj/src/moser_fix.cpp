#include <vdw/moser_fix.hpp>
#include <vdw/bitstream.hpp>
#include <vdw/error.hpp>

#include <functional>
#include <sstream>
#include <stdexcept>

namespace vdw
{
    auto FixForest::dump() const -> std::string
    {
        std::ostringstream out;
        auto write = [&] (auto & self, std::size_t idx) -> void {
            const auto & node = nodes[idx];
            out << "(" << node.ap.a << "," << node.ap.d << "," << int{node.prior_color} << " [";
            for (std::size_t i = 0 ; i < node.children.size() ; ++i) {
                if (i)
                    out << " ";
                self(self, node.children[i]);
            }
            out << "])";
        };
        for (auto root : roots) {
            write(write, root);
            out << "\n";
        }
        return out.str();
    }

    auto moser_domain_size(int k) -> Number
    {
        require_valid_k(k);
        if (k > 60)
            throw std::invalid_argument("k too large");
        return static_cast<Number>((std::uint64_t{1} << (k - 1)) / (4 * static_cast<std::uint64_t>(k)));
    }

    auto moser_budget(Number n, int k) -> std::int64_t
    {
        return (n * n + k - 1) / k + 100;
    }

    namespace
    {
        class Engine
        {
            public:
                using BitSource = std::function<std::optional<std::uint8_t> ()>;

                Engine(Number n, int k, std::int64_t budget, bool check, BitSource draw) :
                    _n(n),
                    _k(k),
                    _budget(budget),
                    _check(check),
                    _coloring(n),
                    _draw(std::move(draw))
                {
                    run();
                }

                auto take(MoserResult & result) -> void
                {
                    result.n = _n;
                    result.k = _k;
                    result.forest = std::move(_forest);
                    result.bits = std::move(_bits);
                    result.outcome = _failed ? Outcome::failed : Outcome::proper;
                    if (! _failed) {
                        if (! verify_proper(_coloring, _k).proper)
                            throw std::logic_error("resampler finished with an improper coloring");
                        result.coloring = std::move(_coloring);
                    }
                }

            private:
                Number _n;
                int _k;
                std::int64_t _budget;
                bool _check;
                Coloring _coloring;
                FixForest _forest;
                std::vector<std::uint8_t> _bits;
                BitSource _draw;
                bool _failed = false;

                struct Frame
                {
                    std::size_t node;
                    std::vector<bool> was_mono;
                };

                auto draw(std::uint8_t & bit) -> bool
                {
                    auto b = _draw();
                    if (! b)
                        return false;
                    bit = *b;
                    _bits.push_back(bit);
                    return true;
                }

                auto mono_snapshot() const -> std::vector<bool>
                {
                    std::vector<bool> mono;
                    for (const auto & ap : enumerate_kaps(_n, _k))
                        mono.push_back(is_monochromatic(_coloring, ap));
                    return mono;
                }

                auto smallest_mono_intersecting(const Kap & e) const -> std::optional<Kap>
                {
                    std::optional<Kap> best;
                    for (int i = 0 ; i < _k ; ++i)
                        for_each_kap_through(e.at(i), _n, _k, [&] (const Kap & ap) {
                            if ((! best || ap < *best) && is_monochromatic(_coloring, ap))
                                best = ap;
                        });
                    return best;
                }

                // Records the call and recolors; false means the budget or the
                // bit supply ran out.
                auto call(const Kap & e, std::optional<std::size_t> parent, std::vector<Frame> & stack) -> bool
                {
                    if (_forest.total_calls() >= _budget)
                        return false;

                    FixNode node{e, _coloring.color(e.a), parent, {}};
                    const std::size_t idx = _forest.nodes.size();
                    _forest.nodes.push_back(node);
                    if (parent)
                        _forest.nodes[*parent].children.push_back(idx);
                    else
                        _forest.roots.push_back(idx);

                    Frame frame{idx, {}};
                    if (_check)
                        frame.was_mono = mono_snapshot();

                    for (int i = 0 ; i < _k ; ++i) {
                        std::uint8_t bit = 0;
                        if (! draw(bit))
                            return false;
                        _coloring.set(e.at(i), bit);
                    }
                    stack.push_back(std::move(frame));
                    return true;
                }

                auto fix(const Kap & root) -> bool
                {
                    std::vector<Frame> stack;
                    if (! call(root, std::nullopt, stack))
                        return false;
                    while (! stack.empty()) {
                        const Kap e = _forest.nodes[stack.back().node].ap;
                        if (auto next = smallest_mono_intersecting(e)) {
                            if (! call(*next, stack.back().node, stack))
                                return false;
                            continue;
                        }
                        if (_check) {
                            auto now = mono_snapshot();
                            const auto & before = stack.back().was_mono;
                            for (std::size_t i = 0 ; i < now.size() ; ++i)
                                if (now[i] && ! before[i])
                                    throw std::logic_error("FIX made a previously non-monochromatic AP monochromatic");
                        }
                        stack.pop_back();
                    }
                    return true;
                }

                auto run() -> void
                {
                    for (Number x = 1 ; x <= _n ; ++x) {
                        std::uint8_t bit = 0;
                        if (! draw(bit)) {
                            _failed = true;
                            return;
                        }
                        _coloring.set(x, bit);
                    }

                    const auto aps = enumerate_kaps(_n, _k);
                    for (std::size_t i = 0 ; i < aps.size() ; ++i) {
                        if (is_monochromatic(_coloring, aps[i]) && ! fix(aps[i])) {
                            _failed = true;
                            return;
                        }
                        if (_check)
                            for (std::size_t j = 0 ; j <= i ; ++j)
                                if (is_monochromatic(_coloring, aps[j]))
                                    throw std::logic_error("MAIN left an already processed AP monochromatic");
                    }
                }
        };
    }

    auto construct_moser(int k, std::uint64_t seed, const MoserOptions & options) -> MoserResult
    {
        auto start = std::chrono::steady_clock::now();
        const Number n = moser_domain_size(k);

        MoserResult result;
        if (n < k) {
            result.k = k;
            result.n = n < 1 ? 1 : n;
            result.seed = seed;
            result.outcome = Outcome::proper;
            result.coloring = Coloring(result.n);
            result.elapsed = std::chrono::steady_clock::now() - start;
            return result;
        }

        BitStream stream{seed};
        Engine engine{n, k, options.budget.value_or(moser_budget(n, k)), options.check_claims,
            [&stream] () -> std::optional<std::uint8_t> { return stream.next_bit(); }};
        engine.take(result);
        result.seed = seed;
        result.elapsed = std::chrono::steady_clock::now() - start;
        return result;
    }

    auto run_moser_on_bits(Number n, int k, std::span<const std::uint8_t> bits, const MoserOptions & options) -> MoserResult
    {
        require_valid_k(k);
        if (n < 0)
            throw std::invalid_argument("n must be non-negative");
        auto start = std::chrono::steady_clock::now();
        std::size_t pos = 0;
        Engine engine{n, k, options.budget.value_or(moser_budget(n, k)), options.check_claims,
            [&] () -> std::optional<std::uint8_t> {
                if (pos == bits.size())
                    return std::nullopt;
                return bits[pos++];
            }};
        MoserResult result;
        engine.take(result);
        result.elapsed = std::chrono::steady_clock::now() - start;
        return result;
    }

    auto recover_bits(Number n, int k, const FixForest & forest, const Coloring & final) -> std::vector<std::uint8_t>
    {
        require_valid_k(k);
        if (final.n() != n)
            throw Error(ErrorCode::inconsistent_trace, "final coloring has the wrong length");

        const auto calls = static_cast<std::size_t>(forest.total_calls());
        const std::size_t total = static_cast<std::size_t>(n) + calls * static_cast<std::size_t>(k);
        constexpr std::uint8_t unknown = 2;
        std::vector<std::uint8_t> value(total, unknown);

        auto pin = [&] (std::size_t symbol, std::uint8_t bit) {
            if (value[symbol] != unknown && value[symbol] != bit)
                throw Error(ErrorCode::inconsistent_trace, "bit " + std::to_string(symbol) + " receives conflicting values");
            value[symbol] = bit;
        };

        // symbol currently written at each position; initial bits are 0..n-1
        std::vector<std::size_t> written(static_cast<std::size_t>(n));
        for (std::size_t x = 0 ; x < written.size() ; ++x)
            written[x] = x;

        for (std::size_t i = 0 ; i < calls ; ++i) {
            const auto & node = forest.nodes[i];
            if (node.ap.k != k || ! node.ap.fits(n))
                throw Error(ErrorCode::inconsistent_trace, "call " + std::to_string(i) + " names an AP outside [n]");
            for (int j = 0 ; j < k ; ++j) {
                auto pos = static_cast<std::size_t>(node.ap.at(j) - 1);
                pin(written[pos], node.prior_color);
                written[pos] = static_cast<std::size_t>(n) + i * static_cast<std::size_t>(k) + static_cast<std::size_t>(j);
            }
        }
        for (std::size_t x = 0 ; x < written.size() ; ++x)
            pin(written[x], final.bits()[x]);

        for (std::size_t s = 0 ; s < total ; ++s)
            if (value[s] == unknown)
                throw Error(ErrorCode::inconsistent_trace, "bit " + std::to_string(s) + " is not determined by the trace");

        // the recovered string must drive the algorithm through the same trace
        MoserOptions replay_options;
        replay_options.budget = forest.total_calls();
        auto replay = run_moser_on_bits(n, k, value, replay_options);
        if (! replay.proper() || replay.forest != forest || *replay.coloring != final || replay.bits.size() != total)
            throw Error(ErrorCode::inconsistent_trace, "recovered bits do not reproduce the recorded run");

        return value;
    }
}
