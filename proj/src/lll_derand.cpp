#include <vdw/lll_derand.hpp>
#include <vdw/bitstream.hpp>
#include <vdw/error.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vdw
{
    // ---- subtree counting ----------------------------------------------------

    auto root_subtree_codes(int x, int s) -> std::vector<std::string>
    {
        if (x < 1 || s < 0 || x * s > 24)
            throw std::invalid_argument("root subtree enumeration needs x >= 1, s >= 0, x*s <= 24");

        std::vector<std::string> codes;
        std::string code;
        // open[i] = unexplored child slots of the i-th node on the DFS path
        std::vector<int> open{x};

        auto rec = [&] (auto & self, int ones_left) -> void {
            while (! open.empty() && open.back() == 0)
                open.pop_back();
            if (open.empty()) {
                if (ones_left == 0) {
                    auto last = code.find_last_of('1');
                    codes.push_back(last == std::string::npos ? std::string{} : code.substr(0, last + 1));
                }
                return;
            }

            auto saved = open;
            --open.back();

            code.push_back('0');
            self(self, ones_left);
            code.pop_back();
            open = saved;
            --open.back();

            if (ones_left > 0) {
                code.push_back('1');
                open.push_back(x);
                self(self, ones_left - 1);
                code.pop_back();
            }
            open = saved;
        };
        rec(rec, s);
        return codes;
    }

    auto enumerate_root_subtrees(int x, int s) -> std::int64_t
    {
        return static_cast<std::int64_t>(root_subtree_codes(x, s).size());
    }

    // ---- labeled trees -------------------------------------------------------

    namespace
    {
        auto label_numbers(const Kap & ap) -> std::vector<Number>
        {
            std::vector<Number> v;
            for (int i = 0 ; i < ap.k ; ++i)
                v.push_back(ap.at(i));
            return v;
        }

        auto meets(const std::vector<Number> & set, const Kap & ap) -> bool
        {
            return std::any_of(set.begin(), set.end(), [&] (Number x) { return ap.contains(x); });
        }
    }

    auto LabeledTree::size() const -> std::size_t
    {
        std::size_t total = 0;
        for (const auto & level : levels)
            total += level.size();
        return total;
    }

    auto LabeledTree::well_formed() const -> bool
    {
        if (root_label.empty() || ! std::is_sorted(root_label.begin(), root_label.end())
                || std::adjacent_find(root_label.begin(), root_label.end()) != root_label.end())
            return false;

        for (std::size_t l = 0 ; l < levels.size() ; ++l) {
            const auto & level = levels[l];
            if (level.empty() || ! std::is_sorted(level.begin(), level.end(),
                        [] (const Node & a, const Node & b) { return a.label < b.label; }))
                return false;
            for (std::size_t i = 0 ; i < level.size() ; ++i) {
                const auto & node = level[i];
                if (l == 0) {
                    if (node.parent != 0 || ! meets(root_label, node.label))
                        return false;
                }
                else if (node.parent >= levels[l - 1].size() || ! node.label.intersects(levels[l - 1][node.parent].label))
                    return false;
                for (std::size_t j = i + 1 ; j < level.size() ; ++j)
                    if (node.label.intersects(level[j].label))
                        return false;
            }
        }
        return true;
    }

    auto LabeledTree::to_string() const -> std::string
    {
        std::ostringstream out;
        out << "{";
        for (std::size_t i = 0 ; i < root_label.size() ; ++i)
            out << (i ? "," : "") << root_label[i];
        out << "}";
        for (const auto & level : levels) {
            out << " |";
            for (const auto & node : level)
                out << " " << node.parent << ":(" << node.label.a << "," << node.label.d << ")";
        }
        return out.str();
    }

    auto tree_work_estimate(Number n, int k, int t) -> double
    {
        return static_cast<double>(count_kaps(n, k)) * std::pow(2.0, k) * std::pow(static_cast<double>(n) * k, 2.0 * t);
    }

    namespace
    {
        class TreeEnumerator
        {
            public:
                TreeEnumerator(Number n, int k, int t, std::int64_t work_bound) :
                    _n(n), _k(k), _t(t), _work_bound(work_bound)
                {
                }

                auto run() -> std::vector<LabeledTree>
                {
                    std::set<std::vector<Number>> roots;
                    for (const auto & ap : enumerate_kaps(_n, _k)) {
                        const auto numbers = label_numbers(ap);
                        for (std::uint32_t mask = 1 ; mask < (std::uint32_t{1} << _k) ; ++mask) {
                            std::vector<Number> subset;
                            for (int i = 0 ; i < _k ; ++i)
                                if (mask & (std::uint32_t{1} << i))
                                    subset.push_back(numbers[static_cast<std::size_t>(i)]);
                            roots.insert(std::move(subset));
                            visit();
                        }
                    }

                    for (const auto & root : roots) {
                        _tree.root_label = root;
                        _tree.levels.clear();
                        extend(0);
                    }
                    return std::move(_out);
                }

            private:
                Number _n;
                int _k;
                int _t;
                std::int64_t _work_bound;
                std::int64_t _work = 0;
                LabeledTree _tree;
                std::vector<LabeledTree> _out;

                auto visit() -> void
                {
                    if (++_work > _work_bound)
                        throw Error(ErrorCode::scale_exceeded, "tree enumeration exceeded the work bound");
                }

                // (ap, parent) pairs for the next level, sorted by ap then parent
                auto candidates() const -> std::vector<LabeledTree::Node>
                {
                    std::vector<LabeledTree::Node> result;
                    if (_tree.levels.empty()) {
                        for (auto x : _tree.root_label)
                            for_each_kap_through(x, _n, _k, [&] (const Kap & ap) { result.push_back({ap, 0}); });
                    }
                    else {
                        const auto & last = _tree.levels.back();
                        for (std::size_t p = 0 ; p < last.size() ; ++p)
                            for (int i = 0 ; i < _k ; ++i)
                                for_each_kap_through(last[p].label.at(i), _n, _k, [&] (const Kap & ap) { result.push_back({ap, p}); });
                    }
                    std::sort(result.begin(), result.end());
                    result.erase(std::unique(result.begin(), result.end()), result.end());
                    return result;
                }

                // Grows one more level below the current deepest one.
                auto extend(std::size_t used) -> void
                {
                    const auto cands = candidates();
                    std::vector<LabeledTree::Node> level;
                    choose(cands, 0, level, used);
                }

                auto choose(const std::vector<LabeledTree::Node> & cands, std::size_t from,
                        std::vector<LabeledTree::Node> & level, std::size_t used) -> void
                {
                    for (std::size_t i = from ; i < cands.size() ; ++i) {
                        visit();
                        const auto & cand = cands[i];
                        // one parent per AP on a level: skip to strictly larger APs
                        if (! level.empty() && ! (level.back().label < cand.label))
                            continue;
                        if (std::any_of(level.begin(), level.end(), [&] (const auto & other) { return other.label.intersects(cand.label); }))
                            continue;

                        level.push_back(cand);
                        const std::size_t total = used + level.size();

                        _tree.levels.push_back(level);
                        if (total >= static_cast<std::size_t>(_t))
                            _out.push_back(_tree);
                        if (total < static_cast<std::size_t>(2 * _t))
                            extend(total);
                        _tree.levels.pop_back();

                        if (total < static_cast<std::size_t>(2 * _t))
                            choose(cands, i + 1, level, used);
                        level.pop_back();
                    }
                }
        };
    }

    auto enumerate_trees(Number n, int k, int t, std::int64_t work_bound) -> std::vector<LabeledTree>
    {
        require_valid_k(k);
        if (k > 30)
            throw std::invalid_argument("tree enumeration supports k <= 30");
        if (t < 1)
            throw std::invalid_argument("tree size parameter t must be at least 1");
        if (n < k)
            return {};
        if (tree_work_estimate(n, k, t) > static_cast<double>(work_bound))
            throw Error(ErrorCode::scale_exceeded, "stage-1 estimate count_kaps * 2^k * (nk)^(2t) exceeds the work bound");
        return TreeEnumerator{n, k, t, work_bound}.run();
    }

    // ---- table ---------------------------------------------------------------

    Table::Table(Number n, int cols, Cell fill) :
        _n(n),
        _cols(cols),
        _entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(cols), fill)
    {
        if (n < 0 || cols < 1)
            throw std::invalid_argument("table needs n >= 0 and at least one column");
    }

    auto Table::entry_index(Number x, int col) const -> std::size_t
    {
        if (x < 1 || x > _n || col < 1)
            throw std::out_of_range("table entry out of range");
        if (col > _cols)
            throw Error(ErrorCode::column_overflow, "column " + std::to_string(col) + " exceeds table width " + std::to_string(_cols));
        return static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(_cols) + static_cast<std::size_t>(col - 1);
    }

    auto Table::at(Number x, int col) const -> Cell
    {
        return _entries[entry_index(x, col)];
    }

    auto Table::set(Number x, int col, Cell c) -> void
    {
        _entries[entry_index(x, col)] = c;
    }

    auto Table::is_final() const -> bool
    {
        return std::none_of(_entries.begin(), _entries.end(), [] (Cell c) { return c == Cell::half; });
    }

    auto Table::dump() const -> std::string
    {
        std::string out = "vdw-table v1 n=" + std::to_string(_n) + " cols=" + std::to_string(_cols) + "\n";
        for (std::size_t i = 0 ; i < _entries.size() ; ++i) {
            out.push_back(_entries[i] == Cell::half ? '*' : static_cast<char>('0' + static_cast<int>(_entries[i])));
            if ((i + 1) % static_cast<std::size_t>(_cols) == 0)
                out.push_back('\n');
        }
        return out;
    }

    namespace
    {
        // Table entries read by each node of a tree, root first.
        auto tree_reads(const LabeledTree & tree, const Table & table) -> std::vector<std::vector<std::size_t>>
        {
            std::vector<int> below(static_cast<std::size_t>(table.n()) + 1, 0);
            std::vector<std::vector<std::size_t>> reads;

            auto read_level = [&] (const std::vector<std::vector<Number>> & labels) {
                for (const auto & label : labels) {
                    std::vector<std::size_t> entries;
                    for (auto x : label)
                        entries.push_back(table.entry_index(x, 1 + below[static_cast<std::size_t>(x)]));
                    reads.push_back(std::move(entries));
                }
                for (const auto & label : labels)
                    for (auto x : label)
                        ++below[static_cast<std::size_t>(x)];
            };

            for (auto l = tree.levels.size() ; l-- > 0 ; ) {
                std::vector<std::vector<Number>> labels;
                for (const auto & node : tree.levels[l])
                    labels.push_back(label_numbers(node.label));
                read_level(labels);
            }
            read_level({tree.root_label});
            std::reverse(reads.begin(), reads.end());
            return reads;
        }

        // P(label monochromatic) with entries given by cells.
        template <typename CellAt>
        auto label_probability(const std::vector<std::size_t> & entries, CellAt && cell_at) -> Dyadic
        {
            bool seen[2] = {false, false};
            int undecided = 0;
            for (auto e : entries) {
                Cell c = cell_at(e);
                if (c == Cell::half)
                    ++undecided;
                else
                    seen[static_cast<int>(c)] = true;
            }
            if (seen[0] && seen[1])
                return Dyadic{};
            if (! seen[0] && ! seen[1])
                return Dyadic::inverse_power_of_two(undecided - 1);
            return Dyadic::inverse_power_of_two(undecided);
        }

        template <typename CellAt>
        auto tree_probability(const std::vector<std::vector<std::size_t>> & reads, CellAt && cell_at) -> Dyadic
        {
            Dyadic p{1};
            for (const auto & entries : reads) {
                p *= label_probability(entries, cell_at);
                if (p.is_zero())
                    break;
            }
            return p;
        }
    }

    auto consistency_probability(const LabeledTree & tree, const Table & table, int k) -> Dyadic
    {
        require_valid_k(k);
        const auto reads = tree_reads(tree, table);
        return tree_probability(reads, [&] (std::size_t e) {
            return table.at(static_cast<Number>(e / static_cast<std::size_t>(table.cols())) + 1,
                    static_cast<int>(e % static_cast<std::size_t>(table.cols())) + 1);
        });
    }

    auto expected_consistent_trees(const std::vector<LabeledTree> & trees, const Table & table, int k) -> Dyadic
    {
        Dyadic total;
        for (const auto & tree : trees)
            total += consistency_probability(tree, table, k);
        return total;
    }

    auto build_table(Number n, int k, int t, const std::vector<LabeledTree> & trees, const TableObserver & observer) -> Table
    {
        require_valid_k(k);
        if (t < 1)
            throw std::invalid_argument("tree size parameter t must be at least 1");

        const int cols = 2 * t + 1;
        Table table{n, cols, Cell::half};
        std::vector<Cell> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(cols), Cell::half);

        std::vector<std::vector<std::vector<std::size_t>>> reads;
        reads.reserve(trees.size());
        std::vector<std::vector<std::size_t>> touching(cells.size());
        for (std::size_t i = 0 ; i < trees.size() ; ++i) {
            reads.push_back(tree_reads(trees[i], table));
            std::vector<std::size_t> seen;
            for (const auto & entries : reads.back())
                seen.insert(seen.end(), entries.begin(), entries.end());
            std::sort(seen.begin(), seen.end());
            seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
            for (auto e : seen)
                touching[e].push_back(i);
        }

        auto cell_at = [&] (std::size_t e) { return cells[e]; };
        std::vector<Dyadic> prob;
        prob.reserve(trees.size());
        Dyadic expectation;
        for (const auto & r : reads) {
            prob.push_back(tree_probability(r, cell_at));
            expectation += prob.back();
        }

        if (expectation >= Dyadic{1})
            throw Error(ErrorCode::initial_expectation_too_high,
                    "expected number of consistent trees starts at " + expectation.to_string() + " (" + std::to_string(expectation.to_double()) + "), needs < 1");

        for (Number x = 1 ; x <= n ; ++x)
            for (int col = 1 ; col <= cols ; ++col) {
                const auto e = table.entry_index(x, col);
                Dyadic old_part, part[2];
                std::vector<Dyadic> next[2];
                for (auto tree : touching[e])
                    old_part += prob[tree];
                for (int c = 0 ; c < 2 ; ++c) {
                    cells[e] = static_cast<Cell>(c);
                    for (auto tree : touching[e]) {
                        next[c].push_back(tree_probability(reads[tree], cell_at));
                        part[c] += next[c].back();
                    }
                }

                const int choice = part[1] < part[0] ? 1 : 0;
                cells[e] = static_cast<Cell>(choice);
                table.set(x, col, static_cast<Cell>(choice));
                for (std::size_t i = 0 ; i < touching[e].size() ; ++i)
                    prob[touching[e][i]] = next[choice][i];

                const Dyadic before = expectation;
                if (part[choice] > old_part)
                    throw std::logic_error("table construction increased the expectation");
                expectation = expectation - old_part + part[choice];
                if (observer)
                    observer(x, col, before, expectation);
            }

        if (! expectation.is_zero())
            throw std::logic_error("completed table still has consistent trees");
        return table;
    }

    // ---- stage 3 -------------------------------------------------------------

    auto GuidedRunResult::max_columns_used() const -> std::int64_t
    {
        std::int64_t most = 0;
        for (auto c : recolor_counts)
            most = std::max(most, c);
        return recolor_counts.empty() ? 0 : most + 1;
    }

    auto guided_recolor(const ColorSource & colors, Number n, int k, std::int64_t col_budget) -> GuidedRunResult
    {
        require_valid_k(k);
        if (col_budget < 1)
            throw std::invalid_argument("column budget must be at least 1");

        GuidedRunResult result;
        result.recolor_counts.assign(static_cast<std::size_t>(n), 0);

        Coloring coloring{n};
        for (Number x = 1 ; x <= n ; ++x)
            coloring.set(x, colors(x, 1));

        std::set<Kap> mono;
        for (const auto & ap : enumerate_kaps(n, k))
            if (is_monochromatic(coloring, ap))
                mono.insert(ap);

        while (! mono.empty()) {
            const Kap e = *mono.begin();
            for (int i = 0 ; i < k ; ++i)
                if (result.recolor_counts[static_cast<std::size_t>(e.at(i) - 1)] + 1 >= col_budget) {
                    result.outcome = GuidedOutcome::colors_exhausted;
                    return result;
                }

            for (int i = 0 ; i < k ; ++i) {
                const Number x = e.at(i);
                auto & used = result.recolor_counts[static_cast<std::size_t>(x - 1)];
                ++used;
                coloring.set(x, colors(x, used + 1));
            }
            ++result.total_recolorings;

            for (int i = 0 ; i < k ; ++i)
                for_each_kap_through(e.at(i), n, k, [&] (const Kap & ap) {
                    if (is_monochromatic(coloring, ap))
                        mono.insert(ap);
                    else
                        mono.erase(ap);
                });
        }

        if (! verify_proper(coloring, k).proper)
            throw std::logic_error("guided recoloring finished with an improper coloring");
        result.outcome = GuidedOutcome::proper;
        result.coloring = std::move(coloring);
        return result;
    }

    auto guided_recolor(const Table & table, Number n, int k, std::int64_t col_budget) -> GuidedRunResult
    {
        if (! table.is_final())
            throw std::invalid_argument("guided recoloring needs a table without undecided entries");
        if (table.n() < n)
            throw std::invalid_argument("table has fewer rows than n");
        return guided_recolor([&] (Number x, std::int64_t col) {
                    if (col > table.cols())
                        throw Error(ErrorCode::column_overflow, "column " + std::to_string(col) + " exceeds table width");
                    return static_cast<std::uint8_t>(table.at(x, static_cast<int>(col)));
                }, n, k, col_budget);
    }

    // ---- pipelines -----------------------------------------------------------

    auto det_lll_parameters(int k, double epsilon) -> LllParameters
    {
        require_valid_k(k);
        if (! (epsilon > 0.0 && epsilon < 1.0))
            throw std::invalid_argument("epsilon must lie in (0, 1)");
        if (k > 60)
            throw std::invalid_argument("k too large");

        LllParameters params;
        const long double size = std::pow(2.0L, (k - 1) * (1.0L - epsilon)) / (std::numbers::e_v<long double> * k);
        params.n = static_cast<Number>(std::floor(size));

        // work in log2 to stay finite: log2(n^2 2^k t) - (k-1) eps t < log2(1/3)
        const long double base = 2.0L * std::log2(std::max<long double>(1.0L, static_cast<long double>(params.n))) + k;
        for (int t = 1 ; ; ++t)
            if (base + std::log2(static_cast<long double>(t)) - (k - 1) * static_cast<long double>(epsilon) * t < -std::log2(3.0L)) {
                params.t = t;
                break;
            }
        return params;
    }

    auto construct_det_lll(int k, double epsilon, std::optional<LllParameters> overrides, std::int64_t work_bound) -> DetLllResult
    {
        require_valid_k(k);
        DetLllResult result;
        result.parameters = overrides ? *overrides : det_lll_parameters(k, epsilon);
        const auto [n, t] = result.parameters;
        if (n < 0 || t < 1)
            throw std::invalid_argument("need n >= 0 and t >= 1");

        if (n < k) {
            result.coloring = Coloring{n};
            return result;
        }

        const auto trees = enumerate_trees(n, k, t, work_bound);
        result.trees = trees.size();

        Table table = build_table(n, k, t, trees, [&] (Number x, int col, const Dyadic & before, const Dyadic &) {
            if (x == 1 && col == 1)
                result.initial_expectation = before;
        });

        auto run = guided_recolor(table, n, k, 2 * t + 1);
        if (! run.proper())
            throw std::logic_error("table-guided recoloring ran out of columns");
        result.coloring = std::move(*run.coloring);
        result.recolorings = run.total_recolorings;
        result.max_columns_used = run.max_columns_used();
        result.table = std::move(table);
        return result;
    }

    auto mt_domain_size(int k) -> Number
    {
        require_valid_k(k);
        if (k > 60)
            throw std::invalid_argument("k too large");
        const long double size = std::ldexp(1.0L, k - 1) / (std::numbers::e_v<long double> * k);
        return static_cast<Number>(std::floor(size)) - 1;
    }

    auto mt_column_budget(Number n, int k) -> std::int64_t
    {
        const long double work = static_cast<long double>(n) * k;
        return static_cast<std::int64_t>(std::ceil(std::pow(work, 1.01L))) + 1;
    }

    auto construct_mt_randomized(int k, std::uint64_t seed) -> ConstructResult
    {
        if (k < 12)
            throw std::invalid_argument("construct_mt_randomized requires k >= 12");
        auto start = std::chrono::steady_clock::now();

        ConstructResult result;
        result.k = k;
        result.seed = seed;
        result.n = mt_domain_size(k);

        std::vector<BitStream> streams;
        streams.reserve(static_cast<std::size_t>(result.n));
        for (Number x = 1 ; x <= result.n ; ++x)
            streams.emplace_back(derive_seed(seed, static_cast<std::uint64_t>(x)));

        std::uint64_t drawn = 0;
        auto colors = [&] (Number x, std::int64_t col) -> std::uint8_t {
            auto & stream = streams[static_cast<std::size_t>(x - 1)];
            if (static_cast<std::uint64_t>(col) != stream.position() + 1)
                throw std::logic_error("random color stream read out of order");
            ++drawn;
            return stream.next_bit();
        };

        auto run = guided_recolor(colors, result.n, k, mt_column_budget(result.n, k));
        result.bits_consumed = drawn;
        result.steps = run.total_recolorings;
        if (run.proper()) {
            result.outcome = Outcome::proper;
            result.coloring = std::move(run.coloring);
        }
        else
            result.outcome = Outcome::failed;
        result.elapsed = std::chrono::steady_clock::now() - start;
        return result;
    }
}
