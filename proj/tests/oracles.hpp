#pragma once

// Independent reference implementations used only by the tests. They favor
// the most literal formulation over speed.

#include <vdw/ap.hpp>
#include <vdw/cell.hpp>
#include <vdw/lll_derand.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle
{
    using vdw::Kap;
    using vdw::Number;

    inline auto members(const Kap & ap) -> std::set<Number>
    {
        std::set<Number> s;
        for (int i = 0 ; i < ap.k ; ++i)
            s.insert(ap.a + i * ap.d);
        return s;
    }

    inline auto disjoint(const std::set<Number> & x, const std::set<Number> & y) -> bool
    {
        return std::none_of(x.begin(), x.end(), [&] (Number v) { return y.count(v) > 0; });
    }

    /// Every (a, d) with all k terms inside [n], from the full a x d square.
    inline auto kaps(Number n, int k) -> std::vector<Kap>
    {
        std::vector<Kap> out;
        for (Number a = 1 ; a <= n ; ++a)
            for (Number d = 1 ; d <= n ; ++d) {
                bool inside = true;
                for (int i = 0 ; i < k ; ++i)
                    inside = inside && a + i * d <= n;
                if (inside)
                    out.push_back(Kap{a, d, k});
            }
        return out;
    }

    inline auto mono(const std::vector<std::uint8_t> & c, const Kap & ap) -> bool
    {
        for (Number x : members(ap))
            if (c[static_cast<std::size_t>(x - 1)] != c[static_cast<std::size_t>(ap.a - 1)])
                return false;
        return true;
    }

    inline auto proper(const std::vector<std::uint8_t> & c, int k) -> bool
    {
        for (const auto & ap : kaps(static_cast<Number>(c.size()), k))
            if (mono(c, ap))
                return false;
        return true;
    }

    inline auto binomial(std::int64_t n, std::int64_t r) -> std::int64_t
    {
        if (r < 0 || r > n)
            return 0;
        std::int64_t v = 1;
        for (std::int64_t i = 1 ; i <= r ; ++i)
            v = v * (n - r + i) / i;
        return v;
    }

    /// Rooted subtrees of the infinite x-ary tree with s non-root nodes:
    /// C(x(s+1), s+1) / ((x-1)(s+1) + 1).
    inline auto fuss_catalan(std::int64_t x, std::int64_t s) -> std::int64_t
    {
        return binomial(x * (s + 1), s + 1) / ((x - 1) * (s + 1) + 1);
    }

    /// Expected number of monochromatic k-APs by direct summation over APs
    /// with floating point; for cross-checking the exact potential.
    inline auto expected_mono(const std::vector<vdw::Cell> & cells, int k) -> double
    {
        auto p1 = [&] (Number x) {
            auto c = cells[static_cast<std::size_t>(x - 1)];
            return c == vdw::Cell::half ? 0.5 : (c == vdw::Cell::one ? 1.0 : 0.0);
        };
        double total = 0;
        for (const auto & ap : kaps(static_cast<Number>(cells.size()), k)) {
            double all1 = 1, all0 = 1;
            for (Number x : members(ap)) {
                all1 *= p1(x);
                all0 *= 1 - p1(x);
            }
            total += all1 + all0;
        }
        return total;
    }

    /// Generate-and-filter: every parent array over every label sequence,
    /// kept when the structural conditions hold, then brought to the level
    /// sorted canonical form.
    inline auto trees(Number n, int k, int t) -> std::set<vdw::LabeledTree>
    {
        std::set<vdw::LabeledTree> out;
        const auto aps = kaps(n, k);
        if (aps.empty())
            return out;

        std::set<std::vector<Number>> roots;
        for (const auto & ap : aps) {
            auto m = members(ap);
            std::vector<Number> v(m.begin(), m.end());
            for (std::uint32_t mask = 1 ; mask < (1u << k) ; ++mask) {
                std::vector<Number> r;
                for (int i = 0 ; i < k ; ++i)
                    if (mask >> i & 1)
                        r.push_back(v[static_cast<std::size_t>(i)]);
                roots.insert(r);
            }
        }

        for (const auto & root : roots)
            for (int s = t ; s <= 2 * t ; ++s) {
                // parent[i] in {-1 (root), 0..i-1}; labels[i] any k-AP
                std::vector<int> parent(static_cast<std::size_t>(s), -1);
                std::vector<std::size_t> label(static_cast<std::size_t>(s), 0);
                std::function<void (int)> rec = [&] (int i) {
                    if (i == s) {
                        std::vector<int> depth(static_cast<std::size_t>(s));
                        for (int j = 0 ; j < s ; ++j)
                            depth[j] = parent[j] < 0 ? 1 : depth[parent[j]] + 1;
                        std::set<Number> root_set(root.begin(), root.end());
                        for (int j = 0 ; j < s ; ++j) {
                            auto mine = members(aps[label[j]]);
                            const auto up = parent[j] < 0 ? root_set : members(aps[label[parent[j]]]);
                            if (disjoint(mine, up))
                                return;
                            for (int q = 0 ; q < j ; ++q)
                                if (depth[q] == depth[j] && ! disjoint(mine, members(aps[label[q]])))
                                    return;
                        }
                        int max_depth = *std::max_element(depth.begin(), depth.end());
                        vdw::LabeledTree tree;
                        tree.root_label = root;
                        tree.levels.resize(static_cast<std::size_t>(max_depth));
                        std::vector<std::vector<int>> at(static_cast<std::size_t>(max_depth));
                        for (int j = 0 ; j < s ; ++j)
                            at[depth[j] - 1].push_back(j);
                        std::map<int, std::size_t> position;
                        for (auto & lv : at) {
                            std::sort(lv.begin(), lv.end(), [&] (int x, int y) { return aps[label[x]] < aps[label[y]]; });
                            for (std::size_t q = 0 ; q < lv.size() ; ++q)
                                position[lv[q]] = q;
                        }
                        for (int d = 0 ; d < max_depth ; ++d)
                            for (int j : at[d])
                                tree.levels[d].push_back({aps[label[j]], parent[j] < 0 ? 0 : position[parent[j]]});
                        out.insert(tree);
                        return;
                    }
                    for (int p = -1 ; p < i ; ++p)
                        for (std::size_t l = 0 ; l < aps.size() ; ++l) {
                            parent[i] = p;
                            label[i] = l;
                            rec(i + 1);
                        }
                };
                rec(0);
            }
        return out;
    }

    /// Colors every node of the tree from fixed table rows: deepest level
    /// first, each number reading its next unused column. Returns whether
    /// every label came out monochromatic.
    inline auto consistent(const vdw::LabeledTree & tree, const std::vector<std::vector<std::uint8_t>> & rows) -> bool
    {
        std::map<Number, std::size_t> used;
        auto color_of = [&] (Number x) { return rows[static_cast<std::size_t>(x - 1)][used[x]]; };
        bool ok = true;
        for (auto lv = tree.levels.rbegin() ; lv != tree.levels.rend() ; ++lv) {
            for (const auto & node : *lv) {
                auto m = members(node.label);
                std::set<std::uint8_t> seen;
                for (Number x : m)
                    seen.insert(color_of(x));
                ok = ok && seen.size() == 1;
            }
            for (const auto & node : *lv)
                for (Number x : members(node.label))
                    ++used[x];
        }
        std::set<std::uint8_t> seen;
        for (Number x : tree.root_label)
            seen.insert(color_of(x));
        return ok && seen.size() == 1;
    }

    /// Rows of a table with every undecided entry replaced by a coin flip.
    inline auto sample_rows(const vdw::Table & table, std::mt19937_64 & rng) -> std::vector<std::vector<std::uint8_t>>
    {
        std::vector<std::vector<std::uint8_t>> rows(static_cast<std::size_t>(table.n()));
        for (Number x = 1 ; x <= table.n() ; ++x)
            for (int c = 1 ; c <= table.cols() ; ++c) {
                auto cell = table.at(x, c);
                rows[static_cast<std::size_t>(x - 1)].push_back(cell == vdw::Cell::half ? static_cast<std::uint8_t>(rng() & 1) : static_cast<std::uint8_t>(cell));
            }
        return rows;
    }

    inline auto monte_carlo(const vdw::LabeledTree & tree, const vdw::Table & table, int samples, std::uint64_t seed) -> double
    {
        std::mt19937_64 rng{seed};
        int hits = 0;
        for (int i = 0 ; i < samples ; ++i)
            hits += consistent(tree, sample_rows(table, rng)) ? 1 : 0;
        return static_cast<double>(hits) / samples;
    }

    /// GF(2^p) product by shift-and-add with reduction by `modulus` (bit p set).
    inline auto gf_mul(std::uint64_t a, std::uint64_t b, std::uint64_t modulus, int p) -> std::uint64_t
    {
        std::uint64_t r = 0;
        while (b) {
            if (b & 1)
                r ^= a;
            b >>= 1;
            a <<= 1;
            if (a >> p & 1)
                a ^= modulus;
        }
        return r;
    }

    /// Constant terms of g^1, g^2, ..., g^len by repeated multiplication.
    inline auto power_constant_terms(std::uint64_t g, std::uint64_t modulus, int p, std::size_t len) -> std::string
    {
        std::string s;
        std::uint64_t v = 1;
        for (std::size_t j = 0 ; j < len ; ++j) {
            v = gf_mul(v, g, modulus, p);
            s.push_back(static_cast<char>('0' + (v & 1)));
        }
        return s;
    }

    inline auto order_by_walking(std::uint64_t g, std::uint64_t modulus, int p) -> std::uint64_t
    {
        std::uint64_t v = g, order = 1;
        while (v != 1) {
            v = gf_mul(v, g, modulus, p);
            ++order;
        }
        return order;
    }
}
