#pragma once

#include <vdw/ap.hpp>
#include <vdw/cell.hpp>
#include <vdw/dyadic.hpp>
#include <vdw/prob_construct.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace vdw
{
    /// Number of subtrees of the infinite x-ary tree that contain the root and
    /// have exactly s non-root nodes, by exhaustive enumeration (x * s <= 24).
    [[nodiscard]] auto enumerate_root_subtrees(int x, int s) -> std::int64_t;

    /// The DFS codes of those subtrees: '1' for stepping into an existing
    /// child, '0' for an absent one, stopping at the last non-root node.
    [[nodiscard]] auto root_subtree_codes(int x, int s) -> std::vector<std::string>;

    /// A candidate witness tree. The root carries a non-empty subset of some
    /// k-AP; every other node carries a k-AP. The tree is stored level by
    /// level; within a level nodes are sorted by label, which makes the
    /// representation canonical (labels on one level are pairwise disjoint,
    /// hence distinct).
    struct LabeledTree
    {
        struct Node
        {
            Kap label;
            /// index into the previous level (0 for children of the root)
            std::size_t parent = 0;

            friend constexpr auto operator<=>(const Node &, const Node &) = default;
        };

        std::vector<Number> root_label;
        std::vector<std::vector<Node>> levels;

        [[nodiscard]] auto size() const -> std::size_t;
        [[nodiscard]] auto depth() const -> std::size_t { return levels.size(); }

        /// Checks the structural conditions: non-empty sorted root label,
        /// children meet their parent's label, labels on one level are
        /// disjoint, every level non-empty and sorted. Size bounds are not
        /// part of this check.
        [[nodiscard]] auto well_formed() const -> bool;

        [[nodiscard]] auto to_string() const -> std::string;

        friend auto operator<=>(const LabeledTree &, const LabeledTree &) = default;
        friend auto operator==(const LabeledTree &, const LabeledTree &) -> bool = default;
    };

    constexpr std::int64_t default_work_bound = 100'000'000;

    /// Upper estimate count_kaps(n,k) * 2^k * (nk)^(2t) of the stage-1 work.
    [[nodiscard]] auto tree_work_estimate(Number n, int k, int t) -> double;

    /// Every tree whose root is a non-empty subset of a k-AP of [n], whose
    /// other nodes are k-APs of [n] meeting their parent, with disjoint labels
    /// per level and between t and 2t non-root nodes. Throws
    /// vdw::Error(scale_exceeded) when the estimate or the actual number of
    /// candidate visits exceeds work_bound.
    [[nodiscard]] auto enumerate_trees(Number n, int k, int t, std::int64_t work_bound = default_work_bound) -> std::vector<LabeledTree>;

    /// Color table: for each number x, columns 1..cols of colors.
    class Table
    {
        public:
            Table(Number n, int cols, Cell fill = Cell::half);

            [[nodiscard]] auto n() const -> Number { return _n; }
            [[nodiscard]] auto cols() const -> int { return _cols; }

            /// Throws vdw::Error(column_overflow) when col > cols.
            [[nodiscard]] auto at(Number x, int col) const -> Cell;
            auto set(Number x, int col, Cell c) -> void;

            [[nodiscard]] auto is_final() const -> bool;

            /// "vdw-table v1 n=<n> cols=<c>" then one row of c characters per
            /// number; undecided entries print as '*'.
            [[nodiscard]] auto dump() const -> std::string;

            [[nodiscard]] auto entry_index(Number x, int col) const -> std::size_t;

            friend auto operator==(const Table &, const Table &) -> bool = default;

        private:
            Number _n;
            int _cols;
            std::vector<Cell> _entries;
    };

    /// Probability that every label of the tree is monochromatic when numbers
    /// are filled from the table leaf-to-root: number x on a node reads
    /// column 1 + (nodes on deeper levels whose label contains x), and
    /// undecided entries are fair coins.
    [[nodiscard]] auto consistency_probability(const LabeledTree & tree, const Table & table, int k) -> Dyadic;

    /// Sum of consistency probabilities over the trees.
    [[nodiscard]] auto expected_consistent_trees(const std::vector<LabeledTree> & trees, const Table & table, int k) -> Dyadic;

    /// Called after each table entry is decided with (x, column, expectation
    /// before, expectation after).
    using TableObserver = std::function<void (Number, int, const Dyadic &, const Dyadic &)>;

    /// Decides the entries of an n x (2t+1) table row by row, each to the color
    /// minimizing the expected number of consistent trees (ties to 0). Throws
    /// vdw::Error(initial_expectation_too_high) if that expectation starts at
    /// 1 or more.
    [[nodiscard]] auto build_table(Number n, int k, int t, const std::vector<LabeledTree> & trees, const TableObserver & observer = {}) -> Table;

    enum class GuidedOutcome
    {
        proper,
        colors_exhausted
    };

    struct GuidedRunResult
    {
        GuidedOutcome outcome = GuidedOutcome::colors_exhausted;
        std::optional<Coloring> coloring;
        /// recolorings per number, index x-1
        std::vector<std::int64_t> recolor_counts;
        std::int64_t total_recolorings = 0;

        [[nodiscard]] auto proper() const -> bool { return outcome == GuidedOutcome::proper; }
        [[nodiscard]] auto max_columns_used() const -> std::int64_t;
    };

    /// Source of the color of number x at column col; columns of one number
    /// are requested in increasing order starting at 1.
    using ColorSource = std::function<std::uint8_t (Number, std::int64_t)>;

    /// Starts from column 1 and, while a monochromatic k-AP exists, moves every
    /// number of the lex-smallest one to its next column. Stops with
    /// colors_exhausted as soon as a number would need column col_budget + 1.
    [[nodiscard]] auto guided_recolor(const ColorSource & colors, Number n, int k, std::int64_t col_budget) -> GuidedRunResult;

    /// guided_recolor reading a final table.
    [[nodiscard]] auto guided_recolor(const Table & table, Number n, int k, std::int64_t col_budget) -> GuidedRunResult;

    struct LllParameters
    {
        Number n = 0;
        int t = 0;
    };

    /// n = floor(2^((k-1)(1-eps)) / (e k)); t = least t >= 1 with
    /// n^2 2^k t 2^(-(k-1) eps t) < 1/3.
    [[nodiscard]] auto det_lll_parameters(int k, double epsilon) -> LllParameters;

    struct DetLllResult
    {
        Coloring coloring;
        LllParameters parameters;
        std::size_t trees = 0;
        Dyadic initial_expectation;
        std::int64_t recolorings = 0;
        std::int64_t max_columns_used = 0;
        /// absent when n < k
        std::optional<Table> table;
    };

    /// Tree enumeration, table construction and table-guided recoloring.
    /// With overrides the given (n, t) are used instead of the parameters
    /// derived from (k, epsilon). When n < k the all-zeros coloring is
    /// returned directly.
    [[nodiscard]] auto construct_det_lll(int k, double epsilon, std::optional<LllParameters> overrides = std::nullopt,
            std::int64_t work_bound = default_work_bound) -> DetLllResult;

    /// floor(2^(k-1) / (e k)) - 1
    [[nodiscard]] auto mt_domain_size(int k) -> Number;

    /// ceil((n k)^1.01) + 1
    [[nodiscard]] auto mt_column_budget(Number n, int k) -> std::int64_t;

    /// Stage-3 recoloring with fresh random colors: number x draws its
    /// successive colors from its own BitStream seeded derive_seed(seed, x).
    [[nodiscard]] auto construct_mt_randomized(int k, std::uint64_t seed) -> ConstructResult;
}
