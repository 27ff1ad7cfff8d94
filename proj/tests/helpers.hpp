#ifndef ECL_TEST_HELPERS_HPP
#define ECL_TEST_HELPERS_HPP

#include "ecl/coloring.hpp"
#include "ecl/generators.hpp"
#include "ecl/multigraph.hpp"

namespace ecl::test {

// Independent density oracle: scan every subset with |S| >= 2, no pruning,
// same witness tie-break (smaller |S|, then smaller mask).
struct NaiveDensity {
    int omega = 0;
    VertexSet witness = 0;
};

inline NaiveDensity naive_density(const Multigraph& g)
{
    NaiveDensity best;
    int best_size = 0;
    for (VertexSet s = 1; s <= g.all_vertices(); ++s) {
        int size = set_size(s);
        if (size < 2)
            continue;
        int e = 0;
        for (auto [u, v] : g.edges())
            if (set_contains(s, u) && set_contains(s, v))
                ++e;
        if (e == 0)
            continue;
        int val = (e + size / 2 - 1) / (size / 2);
        if (val > best.omega || (val == best.omega && size < best_size)) {
            best.omega = val;
            best.witness = s;
            best_size = size;
        }
    }
    return best;
}

// Independent chromatic index for tiny graphs: try every k from 1 upward,
// coloring edges left to right with plain recursion.
inline bool tiny_colorable(const Multigraph& g, int k, std::vector<int>& col,
                           std::size_t idx)
{
    if (idx == col.size())
        return true;
    auto [u, v] = g.endpoints(static_cast<int>(idx));
    for (int c = 1; c <= k; ++c) {
        bool clash = false;
        for (std::size_t f = 0; f < idx && !clash; ++f) {
            auto [a, b] = g.endpoints(static_cast<int>(f));
            if (col[f] == c && (a == u || a == v || b == u || b == v))
                clash = true;
        }
        if (clash)
            continue;
        col[idx] = c;
        if (tiny_colorable(g, k, col, idx + 1))
            return true;
        col[idx] = 0;
    }
    return false;
}

inline int tiny_chromatic_index(const Multigraph& g)
{
    for (int k = 1;; ++k) {
        std::vector<int> col(g.m(), 0);
        if (tiny_colorable(g, k, col, 0))
            return k;
    }
}

// Random proper partial coloring: visit edges in random order, color each
// with probability `fill` using a random allowed color if one exists.
inline PartialColoring random_partial_coloring(const Multigraph& g, int k,
                                               SplitMix64& rng,
                                               double fill = 0.6)
{
    PartialColoring phi = empty_coloring(g, k);
    std::vector<int> order(g.m());
    for (int e = 0; e < g.m(); ++e)
        order[e] = e;
    for (int i = g.m() - 1; i > 0; --i)
        std::swap(order[i], order[rng.below(i + 1)]);
    for (int e : order) {
        if (!rng.chance(fill))
            continue;
        auto [u, v] = g.endpoints(e);
        std::uint64_t used = 0;
        for (int x : {u, v})
            for (int f : g.incident_edges(x))
                if (phi.color[f])
                    used |= std::uint64_t{1} << phi.color[f];
        std::vector<int> allowed;
        for (int c = 1; c <= k; ++c)
            if (!(used & (std::uint64_t{1} << c)))
                allowed.push_back(c);
        if (!allowed.empty())
            phi.color[e] = allowed[rng.below(allowed.size())];
    }
    return phi;
}

inline Multigraph connected_sample(int max_n, int max_mult, SplitMix64& rng)
{
    int n = 2 + static_cast<int>(rng.below(max_n - 1));
    double prob = 0.3 + 0.5 * (rng.below(100) / 100.0);
    return random_multigraph(n, prob, max_mult, rng.next());
}

} // namespace ecl::test

#endif
