#ifndef ECL_ORACLES_HPP
#define ECL_ORACLES_HPP

#include "ecl/coloring.hpp"
#include "ecl/density.hpp"
#include "ecl/ordering.hpp"

namespace ecl {

struct OracleResult {
    int chi_prime = 0;
    PartialColoring optimal; // complete proper coloring with chi_prime colors
};

inline bool validate_coloring(const Multigraph& g, const PartialColoring& phi)
{
    for (int v = 0; v < g.n(); ++v) {
        std::uint64_t seen = 0;
        for (int e : g.incident_edges(v)) {
            int c = phi.color[e];
            if (c == 0)
                continue;
            if (c < 1 || c > phi.k)
                return false;
            if (seen & (std::uint64_t{1} << c))
                return false;
            seen |= std::uint64_t{1} << c;
        }
    }
    return true;
}

namespace detail {

// Edge freeness from first principles (pairwise adjacency scan); shares
// nothing with the pruned admissibility path it is used to validate.
inline bool naive_edge_free(const Multigraph& g, const PartialColoring& phi,
                            int e, int i)
{
    if (phi.color[e] != 0)
        return false;
    auto [u, v] = g.endpoints(e);
    for (int f = 0; f < g.m(); ++f) {
        if (phi.color[f] != i || f == e)
            continue;
        auto [a, b] = g.endpoints(f);
        if (a == u || a == v || b == u || b == v)
            return false;
    }
    return true;
}

struct EdgeColorSearch {
    const Multigraph& g;
    int k;
    std::vector<int> order;          // edge ids, most-constrained first
    std::vector<int> color;          // per edge, 0 = unassigned
    std::vector<std::uint64_t> used; // per vertex, bitmask of colors
    std::vector<int> remaining;      // per vertex, uncolored incident edges

    bool feasible(int v) const
    {
        std::uint64_t full = (std::uint64_t{1} << (k + 1)) - 2;
        return __builtin_popcountll(full & ~used[v]) >= remaining[v];
    }

    bool solve(std::size_t idx, int max_used)
    {
        if (idx == order.size())
            return true;
        int e = order[idx];
        auto [u, v] = g.endpoints(e);
        // New colors only in increasing order (symmetry breaking).
        int limit = std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            std::uint64_t bit = std::uint64_t{1} << c;
            if ((used[u] | used[v]) & bit)
                continue;
            color[e] = c;
            used[u] |= bit;
            used[v] |= bit;
            --remaining[u];
            --remaining[v];
            if (feasible(u) && feasible(v)
                && solve(idx + 1, std::max(max_used, c)))
                return true;
            color[e] = 0;
            used[u] &= ~bit;
            used[v] &= ~bit;
            ++remaining[u];
            ++remaining[v];
        }
        return false;
    }
};

inline std::optional<std::vector<int>> k_edge_colorable(const Multigraph& g,
                                                        int k)
{
    if (k > 62)
        throw std::invalid_argument("k_edge_colorable: k too large");
    EdgeColorSearch search{g, k, {}, {}, {}, {}};
    if (is_connected(g)) {
        search.order = reorder(g).edge_order;
    } else {
        search.order.resize(g.m());
        std::iota(search.order.begin(), search.order.end(), 0);
    }
    search.color.assign(g.m(), 0);
    search.used.assign(g.n(), 0);
    search.remaining.assign(g.n(), 0);
    for (int v = 0; v < g.n(); ++v)
        search.remaining[v] = g.degree(v);
    if (!search.solve(0, 0))
        return std::nullopt;
    return search.color;
}

} // namespace detail

// Exact chromatic index by iterated k-colorability from the lower bound
// max{Delta, omega} up to the Vizing bound Delta + p.
inline OracleResult chromatic_index(const Multigraph& g, bool force = false)
{
    if (g.m() == 0)
        throw std::invalid_argument("chromatic_index: empty graph");
    if (g.m() > 40 && !force)
        throw ScaleGuardError("chromatic_index: m > 40 requires force");

    GraphStats st = stats(g);
    int lower = std::max(st.max_degree, density(g, true, force).omega);
    int upper = st.max_degree + st.max_multiplicity;
    for (int k = lower; k <= upper; ++k) {
        if (auto colors = detail::k_edge_colorable(g, k)) {
            OracleResult res;
            res.chi_prime = k;
            res.optimal = PartialColoring{k, std::move(*colors)};
            return res;
        }
    }
    // Unreachable: Vizing guarantees upper is colorable.
    throw std::logic_error("chromatic_index: no coloring within Vizing bound");
}

// Admissibility by scanning every S subseteq V with zero pruning.
inline std::optional<AdmissibilityViolation>
naive_admissible(const Multigraph& g, const PartialColoring& phi,
                 FreeVertexMode mode = FreeVertexMode::witness_anywhere)
{
    if (g.n() > 20)
        throw ScaleGuardError("naive_admissible: n > 20");

    // Tabulate edge freeness once (computed definitionally); the subset
    // scan itself stays a full 2^n sweep with zero pruning.
    std::vector<std::uint64_t> free_table(g.m(), 0);
    for (int e = 0; e < g.m(); ++e)
        for (int i = 1; i <= phi.k; ++i)
            if (detail::naive_edge_free(g, phi, e, i))
                free_table[e] |= std::uint64_t{1} << i;

    std::optional<AdmissibilityViolation> best;
    int best_size = 0;
    const VertexSet full = g.all_vertices();
    for (VertexSet s = 1; s <= full; ++s) {
        int size = set_size(s);
        if (best && size >= best_size)
            continue;
        int un = 0;
        for (int e = 0; e < g.m(); ++e) {
            auto [u, v] = g.endpoints(e);
            if (!phi.is_colored(e) && set_contains(s, u)
                && set_contains(s, v))
                ++un;
        }
        if (un == 0)
            continue;
        int cov = 0;
        for (int i = 1; i <= phi.k; ++i) {
            int free_count = 0;
            for (int x = 0; x < g.n(); ++x) {
                if (!set_contains(s, x))
                    continue;
                bool is_free = false;
                for (int e : g.incident_edges(x)) {
                    auto [u, v] = g.endpoints(e);
                    if (mode == FreeVertexMode::witness_inside
                        && !(set_contains(s, u) && set_contains(s, v)))
                        continue;
                    if (free_table[e] & (std::uint64_t{1} << i)) {
                        is_free = true;
                        break;
                    }
                }
                free_count += is_free;
            }
            cov += free_count / 2;
        }
        if (cov < un) {
            best = AdmissibilityViolation{s, cov, un};
            best_size = size;
        }
    }
    return best;
}

} // namespace ecl

#endif
