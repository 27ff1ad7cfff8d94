#ifndef ECL_ORDERING_HPP
#define ECL_ORDERING_HPP

#include <numeric>
#include <optional>
#include <random>

#include "ecl/multigraph.hpp"

namespace ecl {

struct EdgeOrder {
    std::vector<int> vertex_order; // x_1..x_n as vertex ids
    std::vector<int> edge_order;   // e_1..e_m as edge ids
    std::vector<int> rank;         // edge id -> position in edge_order
};

// Number of edges from z into `placed` (parallel edges each count).
inline int back_degree(const Multigraph& g, int z, VertexSet placed)
{
    int count = 0;
    for (int e : g.incident_edges(z)) {
        auto [u, v] = g.endpoints(e);
        if (set_contains(placed, u == z ? v : u))
            ++count;
    }
    return count;
}

namespace detail {

// Max-back vertex order then lexicographic edge order. Ties are broken by
// `priority` (lower wins); the deterministic default is the identity.
inline EdgeOrder reorder_with_priority(const Multigraph& g,
                                       const std::vector<int>& vertex_priority,
                                       const std::vector<int>& edge_priority)
{
    if (g.m() == 0)
        throw std::invalid_argument("reorder: empty graph");
    if (!is_connected(g))
        throw std::invalid_argument("reorder: graph must be connected");

    const int n = g.n();
    EdgeOrder order;
    order.vertex_order.reserve(n);
    VertexSet placed = 0;
    for (int i = 0; i < n; ++i) {
        int best = -1, best_back = -1, best_deg = -1;
        for (int z = 0; z < n; ++z) {
            if (set_contains(placed, z))
                continue;
            // x_1: maximal degree; x_i: maximal back degree, then degree.
            int back = i == 0 ? 0 : back_degree(g, z, placed);
            int deg = g.degree(z);
            if (best == -1 || back > best_back
                || (back == best_back
                    && (deg > best_deg
                        || (deg == best_deg
                            && vertex_priority[z] < vertex_priority[best])))) {
                best = z;
                best_back = back;
                best_deg = deg;
            }
        }
        order.vertex_order.push_back(best);
        placed |= set_of(best);
    }

    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i)
        pos[order.vertex_order[i]] = i;

    order.edge_order.resize(g.m());
    std::iota(order.edge_order.begin(), order.edge_order.end(), 0);
    auto key = [&](int e) {
        auto [u, v] = g.endpoints(e);
        auto [lo, hi] = std::minmax(pos[u], pos[v]);
        return std::tuple(lo, hi, edge_priority[e]);
    };
    std::sort(order.edge_order.begin(), order.edge_order.end(),
              [&](int a, int b) { return key(a) < key(b); });

    order.rank.resize(g.m());
    for (int i = 0; i < g.m(); ++i)
        order.rank[order.edge_order[i]] = i;
    return order;
}

} // namespace detail

inline EdgeOrder reorder(const Multigraph& g)
{
    std::vector<int> vp(g.n()), ep(g.m());
    std::iota(vp.begin(), vp.end(), 0);
    std::iota(ep.begin(), ep.end(), 0);
    return detail::reorder_with_priority(g, vp, ep);
}

// Tie-break sensitivity probe: ties resolved by a seeded random priority
// instead of the lowest-id rule.
inline EdgeOrder reorder_randomized(const Multigraph& g, std::uint64_t seed)
{
    std::vector<int> vp(g.n()), ep(g.m());
    std::iota(vp.begin(), vp.end(), 0);
    std::iota(ep.begin(), ep.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(vp.begin(), vp.end(), rng);
    std::shuffle(ep.begin(), ep.end(), rng);
    return detail::reorder_with_priority(g, vp, ep);
}

} // namespace ecl

#endif
