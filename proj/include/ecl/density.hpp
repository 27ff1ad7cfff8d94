#ifndef ECL_DENSITY_HPP
#define ECL_DENSITY_HPP

#include "ecl/multigraph.hpp"

namespace ecl {

struct DensityResult {
    int omega = 0;
    VertexSet witness = 0;
    int witness_edges = 0;
    int fractional_index = 0; // max{Delta, omega}
};

namespace detail {

// ceil(e / floor(|S|/2)); caller guarantees |S| >= 2.
inline int subset_density(int edges_inside, int subset_size)
{
    int half = subset_size / 2;
    return (edges_inside + half - 1) / half;
}

} // namespace detail

// omega(G) = max over vertex subsets S, |S| >= 2, of ceil(e(S)/floor(|S|/2)).
// Witness ties: smaller |S|, then smaller bitmask.
//
// With prune_even_sizes, only |S| = 2 and odd |S| >= 3 are scanned: removing
// a minimum-degree vertex from an even-size S never decreases the ratio, so
// every size-minimal maximizer already has odd size or size 2.
inline DensityResult density(const Multigraph& g, bool prune_even_sizes = true,
                             bool force = false)
{
    if (g.m() == 0)
        throw std::invalid_argument("density: undefined for edgeless graph");
    if (g.n() > 26 && !force)
        throw ScaleGuardError("density: n > 26 requires force (2^n subsets)");

    DensityResult best;
    int best_size = 0;
    const VertexSet full = g.all_vertices();
    for (VertexSet s = 3; s <= full; ++s) {
        int size = set_size(s);
        if (size < 2)
            continue;
        if (prune_even_sizes && size > 2 && size % 2 == 0)
            continue;
        int e = induced_edge_count(g, s);
        if (e == 0)
            continue;
        int val = detail::subset_density(e, size);
        if (val > best.omega || (val == best.omega && size < best_size)) {
            best.omega = val;
            best.witness = s;
            best.witness_edges = e;
            best_size = size;
        }
    }
    best.fractional_index = std::max(stats(g).max_degree, best.omega);
    return best;
}

// Cross-oracle assertion omega(G) <= chi'(G).
inline bool density_lower_bound_check(const Multigraph& g, int chi)
{
    return density(g).omega <= chi;
}

} // namespace ecl

#endif
