#ifndef ECL_COLORING_HPP
#define ECL_COLORING_HPP

#include <functional>
#include <optional>

#include "ecl/multigraph.hpp"
#include "ecl/ordering.hpp"

namespace ecl {

// How a vertex of S earns i-freeness: the witnessing i-free edge may be
// anywhere (the definitions read verbatim), or must lie inside S.
enum class FreeVertexMode { witness_anywhere, witness_inside };

// Partial proper edge-coloring over palette [1, k]; 0 means uncolored.
struct PartialColoring {
    int k = 0;
    std::vector<int> color;

    bool is_colored(int e) const { return color[e] != 0; }
    int colored_count() const
    {
        int c = 0;
        for (int x : color)
            c += x != 0;
        return c;
    }
    bool is_complete() const
    {
        return colored_count() == static_cast<int>(color.size());
    }
};

inline PartialColoring empty_coloring(const Multigraph& g, int k)
{
    if (k < 1)
        throw std::invalid_argument("coloring: palette size must be >= 1");
    if (k > 62)
        throw std::invalid_argument("coloring: palette size must be <= 62");
    return PartialColoring{k, std::vector<int>(g.m(), 0)};
}

// e is i-free: uncolored and no edge sharing an endpoint carries color i.
inline bool is_free_edge(const Multigraph& g, const PartialColoring& phi,
                         int e, int i)
{
    if (phi.is_colored(e))
        return false;
    auto [u, v] = g.endpoints(e);
    for (int x : {u, v})
        for (int f : g.incident_edges(x))
            if (phi.color[f] == i)
                return false;
    return true;
}

// { x in s : x is incident to an i-free edge }. In witness_inside mode the
// witnessing edge must have both endpoints in s.
inline VertexSet free_vertices(const Multigraph& g, const PartialColoring& phi,
                               int i, VertexSet s,
                               FreeVertexMode mode
                               = FreeVertexMode::witness_anywhere)
{
    VertexSet out = 0;
    for (int e = 0; e < g.m(); ++e) {
        if (!is_free_edge(g, phi, e, i))
            continue;
        auto [u, v] = g.endpoints(e);
        if (mode == FreeVertexMode::witness_inside
            && !(set_contains(s, u) && set_contains(s, v)))
            continue;
        out |= set_of(u) | set_of(v);
    }
    return out & s;
}

// cov_phi(S) = sum over colors i of floor(|i-free vertices in S| / 2).
inline int cover_value(const Multigraph& g, const PartialColoring& phi,
                       VertexSet s,
                       FreeVertexMode mode = FreeVertexMode::witness_anywhere)
{
    int cov = 0;
    for (int i = 1; i <= phi.k; ++i)
        cov += set_size(free_vertices(g, phi, i, s, mode)) / 2;
    return cov;
}

inline int uncolored_inside(const Multigraph& g, const PartialColoring& phi,
                            VertexSet s)
{
    int count = 0;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (!phi.is_colored(e) && set_contains(s, u) && set_contains(s, v))
            ++count;
    }
    return count;
}

// A subset S with cov_phi(S) < |E^un_phi(S)|.
struct AdmissibilityViolation {
    VertexSet subset = 0;
    int cover = 0;
    int uncolored_inside = 0;
};

namespace detail {

// Connectivity of the uncolored subgraph induced on s.
inline bool uncolored_connected(const Multigraph& g, const PartialColoring& phi,
                                VertexSet s)
{
    int start = __builtin_ctzll(s);
    VertexSet seen = set_of(start);
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : g.incident_edges(v)) {
            if (phi.is_colored(e))
                continue;
            auto [a, b] = g.endpoints(e);
            int w = a == v ? b : a;
            if (set_contains(s, w) && !set_contains(seen, w)) {
                seen |= set_of(w);
                stack.push_back(w);
            }
        }
    }
    return seen == s;
}

} // namespace detail

// Minimal violating subset if phi fails to cover some S, none otherwise.
// Ties: smaller |S|, then smaller bitmask.
//
// The scan is restricted to subsets whose vertices all meet an uncolored
// edge inside S and whose induced uncolored subgraph is connected; any
// violator contains such a violator of no larger size, so the minimal
// violation is unchanged (property-tested against the naive full scan).
inline std::optional<AdmissibilityViolation>
check_admissible(const Multigraph& g, const PartialColoring& phi,
                 FreeVertexMode mode = FreeVertexMode::witness_anywhere)
{
    const int k = phi.k;
    const std::uint64_t palette =
        (std::uint64_t{1} << (k + 1)) - 2; // bits 1..k

    // Colors present at each vertex, then per-edge free-color masks.
    std::vector<std::uint64_t> vertex_used(g.n(), 0);
    for (int e = 0; e < g.m(); ++e)
        if (phi.is_colored(e)) {
            auto [u, v] = g.endpoints(e);
            vertex_used[u] |= std::uint64_t{1} << phi.color[e];
            vertex_used[v] |= std::uint64_t{1} << phi.color[e];
        }

    std::vector<int> uncolored;
    std::vector<std::uint64_t> edge_free(g.m(), 0);
    VertexSet active = 0;
    for (int e = 0; e < g.m(); ++e) {
        if (phi.is_colored(e))
            continue;
        auto [u, v] = g.endpoints(e);
        edge_free[e] = palette & ~(vertex_used[u] | vertex_used[v]);
        active |= set_of(u) | set_of(v);
        uncolored.push_back(e);
    }
    if (active == 0)
        return std::nullopt;

    // witness_anywhere: i-free vertices do not depend on the subset.
    std::vector<VertexSet> global_free(k + 1, 0);
    if (mode == FreeVertexMode::witness_anywhere)
        for (int e : uncolored) {
            auto [u, v] = g.endpoints(e);
            for (std::uint64_t f = edge_free[e]; f; f &= f - 1)
                global_free[__builtin_ctzll(f)] |= set_of(u) | set_of(v);
        }
    std::vector<VertexSet> local_free(k + 1, 0);

    std::optional<AdmissibilityViolation> best;
    int best_size = 0;
    // Submasks of `active` in increasing numeric order.
    VertexSet s = 0;
    do {
        s = (s - active) & active;
        if (s == 0)
            break;
        int size = set_size(s);
        if (size < 2 || (best && size >= best_size))
            continue;
        int un = 0;
        VertexSet touched = 0;
        if (mode == FreeVertexMode::witness_inside)
            std::fill(local_free.begin(), local_free.end(), 0);
        for (int e : uncolored) {
            auto [u, v] = g.endpoints(e);
            if (set_contains(s, u) && set_contains(s, v)) {
                ++un;
                touched |= set_of(u) | set_of(v);
                if (mode == FreeVertexMode::witness_inside)
                    for (std::uint64_t f = edge_free[e]; f; f &= f - 1)
                        local_free[__builtin_ctzll(f)] |= set_of(u) | set_of(v);
            }
        }
        if (un == 0)
            continue;
        // Every vertex of s must meet an uncolored edge inside s.
        if (touched != s)
            continue;
        if (!detail::uncolored_connected(g, phi, s))
            continue;
        const auto& free_masks = mode == FreeVertexMode::witness_anywhere
                                     ? global_free
                                     : local_free;
        int cov = 0;
        for (int i = 1; i <= k; ++i)
            cov += set_size(free_masks[i] & s) / 2;
        if (cov < un) {
            best = AdmissibilityViolation{s, cov, un};
            best_size = size;
        }
    } while (s != active);
    return best;
}

// ext(phi, e, c): copy of phi with e colored c. Throws on misuse.
inline PartialColoring extend(const Multigraph& g, const PartialColoring& phi,
                              int e, int c)
{
    if (c < 1 || c > phi.k)
        throw std::invalid_argument("extend: color out of range");
    if (phi.is_colored(e))
        throw std::invalid_argument("extend: edge already colored");
    auto [u, v] = g.endpoints(e);
    for (int x : {u, v})
        for (int f : g.incident_edges(x))
            if (phi.color[f] == c)
                throw std::invalid_argument("extend: properness violated");
    PartialColoring out = phi;
    out.color[e] = c;
    return out;
}

// Why a candidate color was rejected at a greedy step.
struct ColorRejection {
    int color = 0;
    bool improper = false; // else rejected by the admissibility check
    std::optional<AdmissibilityViolation> violation;
};

struct TraceStep {
    int edge = 0;
    std::optional<int> color; // nullopt = halted at this edge
    std::vector<ColorRejection> rejections;
};

struct RunTrace {
    EdgeOrder order;
    std::vector<TraceStep> steps;
    PartialColoring final;
    bool complete = false;

    // For a halt, the recorded violation minimal over rejected colors.
    std::optional<AdmissibilityViolation> halt_violation() const
    {
        if (complete || steps.empty())
            return std::nullopt;
        std::optional<AdmissibilityViolation> best;
        for (const auto& rej : steps.back().rejections) {
            if (!rej.violation)
                continue;
            const auto& v = *rej.violation;
            if (!best || set_size(v.subset) < set_size(best->subset)
                || (set_size(v.subset) == set_size(best->subset)
                    && v.subset < best->subset))
                best = v;
        }
        return best;
    }
};

// Colors edges in the given order with the smallest color whose extension
// is proper and admissible; halts when no color qualifies. An instrument
// callback, when set, sees every accepted intermediate coloring.
inline RunTrace conditional_greedy(
    const Multigraph& g, int k, const EdgeOrder& order,
    FreeVertexMode mode = FreeVertexMode::witness_anywhere,
    const std::function<void(const PartialColoring&)>& instrument = {})
{
    if (g.m() == 0)
        throw std::invalid_argument("conditional_greedy: empty graph");
    if (!is_connected(g))
        throw std::invalid_argument("conditional_greedy: graph must be connected");
    if (k < 1)
        throw std::invalid_argument("conditional_greedy: palette must be >= 1");

    RunTrace trace;
    trace.order = order;
    PartialColoring phi = empty_coloring(g, k);
    for (int e : order.edge_order) {
        TraceStep step;
        step.edge = e;
        auto [u, v] = g.endpoints(e);
        for (int c = 1; c <= k && !step.color; ++c) {
            bool improper = false;
            for (int x : {u, v})
                for (int f : g.incident_edges(x))
                    if (phi.color[f] == c)
                        improper = true;
            if (improper) {
                step.rejections.push_back({c, true, std::nullopt});
                continue;
            }
            PartialColoring ext = phi;
            ext.color[e] = c;
            if (auto viol = check_admissible(g, ext, mode)) {
                step.rejections.push_back({c, false, viol});
                continue;
            }
            step.color = c;
            phi = std::move(ext);
            if (instrument)
                instrument(phi);
        }
        bool halted = !step.color.has_value();
        trace.steps.push_back(std::move(step));
        if (halted)
            break;
    }
    trace.final = std::move(phi);
    trace.complete = trace.final.is_complete();
    return trace;
}

inline RunTrace conditional_greedy(
    const Multigraph& g, int k,
    FreeVertexMode mode = FreeVertexMode::witness_anywhere)
{
    return conditional_greedy(g, k, reorder(g), mode);
}

} // namespace ecl

#endif
