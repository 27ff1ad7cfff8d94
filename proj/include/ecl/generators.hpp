#ifndef ECL_GENERATORS_HPP
#define ECL_GENERATORS_HPP

#include <string_view>

#include "ecl/multigraph.hpp"

namespace ecl {

// Small splitmix64 PRNG; kept local so instance generation is reproducible
// independent of the standard library's distribution implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound)
    {
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    // Bernoulli with 53-bit resolution.
    bool chance(double p) { return (next() >> 11) < p * 9007199254740992.0; }

private:
    std::uint64_t state_;
};

// Triangle with parallel-edge multiplicities p, q, r on its three sides.
inline Multigraph fat_triangle(int p, int q, int r)
{
    if (p < 1 || q < 1 || r < 1)
        throw std::invalid_argument("fat_triangle: multiplicities must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < p; ++i)
        edges.emplace_back(0, 1);
    for (int i = 0; i < q; ++i)
        edges.emplace_back(0, 2);
    for (int i = 0; i < r; ++i)
        edges.emplace_back(1, 2);
    return Multigraph(3, std::move(edges),
                      "fat_triangle(" + std::to_string(p) + ","
                          + std::to_string(q) + "," + std::to_string(r) + ")");
}

// Odd cycle with every ring edge repeated `mult` times.
inline Multigraph thick_ring(int length, int mult)
{
    if (length < 3 || length % 2 == 0)
        throw std::invalid_argument("thick_ring: length must be odd and >= 3");
    if (mult < 1)
        throw std::invalid_argument("thick_ring: multiplicity must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < length; ++i)
        for (int t = 0; t < mult; ++t)
            edges.emplace_back(i, (i + 1) % length);
    return Multigraph(length, std::move(edges),
                      "thick_ring(" + std::to_string(length) + ","
                          + std::to_string(mult) + ")");
}

// Connected G(n, p) base graph (resampled up to 200 times), then each base
// edge gets an independent uniform multiplicity in [1, max_mult].
inline Multigraph random_multigraph(int n, double edge_prob, int max_mult,
                                    std::uint64_t seed)
{
    if (n < 2)
        throw std::invalid_argument("random_multigraph: n must be >= 2");
    if (edge_prob < 0.0 || edge_prob > 1.0)
        throw std::invalid_argument("random_multigraph: probability in [0,1]");
    if (max_mult < 1)
        throw std::invalid_argument("random_multigraph: max_mult must be >= 1");

    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<std::pair<int, int>> base;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.chance(edge_prob))
                    base.emplace_back(u, v);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : base) {
            int mult = 1 + static_cast<int>(rng.below(max_mult));
            for (int t = 0; t < mult; ++t)
                edges.emplace_back(u, v);
        }
        Multigraph g(n, std::move(edges),
                     "random(n=" + std::to_string(n)
                         + ",seed=" + std::to_string(seed) + ")");
        if (g.m() > 0 && is_connected(g))
            return g;
    }
    throw std::runtime_error("random_multigraph: no connected sample after 200 "
                             "attempts (seed " + std::to_string(seed) + ")");
}

inline Multigraph named_instance(std::string_view name)
{
    auto complete = [](int n) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return edges;
    };
    if (name == "k2")
        return Multigraph(2, complete(2), "k2");
    if (name == "k3")
        return Multigraph(3, complete(3), "k3");
    if (name == "k4")
        return Multigraph(4, complete(4), "k4");
    if (name == "star3")
        return Multigraph(4, {{0, 1}, {0, 2}, {0, 3}}, "star3");
    if (name == "shannon")
        return fat_triangle(2, 2, 2);
    if (name == "petersen") {
        // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(5 + i, 5 + (i + 2) % 5);
            edges.emplace_back(i, i + 5);
        }
        return Multigraph(10, std::move(edges), "petersen");
    }
    throw std::invalid_argument("named_instance: unknown name '"
                                + std::string(name) + "'");
}

} // namespace ecl

#endif
