#include <catch_amalgamated.hpp>

#include "ecl/oracles.hpp"
#include "helpers.hpp"

using namespace ecl;

TEST_CASE("validate_coloring")
{
    Multigraph k3 = named_instance("k3");
    PartialColoring phi = empty_coloring(k3, 3);
    CHECK(validate_coloring(k3, phi)); // empty is vacuously proper
    phi.color = {1, 2, 3};
    CHECK(validate_coloring(k3, phi));
    phi.color = {1, 1, 0};
    CHECK_FALSE(validate_coloring(k3, phi)); // both edges at vertex 0
}

TEST_CASE("chromatic index on hand instances")
{
    CHECK(chromatic_index(named_instance("k2")).chi_prime == 1);
    CHECK(chromatic_index(named_instance("k3")).chi_prime == 3);
    CHECK(chromatic_index(named_instance("star3")).chi_prime == 3);
    CHECK(chromatic_index(named_instance("k4")).chi_prime == 3);
    CHECK(chromatic_index(named_instance("petersen")).chi_prime == 4);
    CHECK(chromatic_index(fat_triangle(2, 2, 2)).chi_prime == 6);
}

TEST_CASE("chromatic index witness is proper and uses chi distinct colors")
{
    SplitMix64 rng(13);
    for (int i = 0; i < 25; ++i) {
        Multigraph g = test::connected_sample(7, 3, rng);
        OracleResult res = chromatic_index(g, true);
        CHECK(res.optimal.is_complete());
        CHECK(validate_coloring(g, res.optimal));
        std::uint64_t used = 0;
        for (int c : res.optimal.color)
            used |= std::uint64_t{1} << c;
        CHECK(__builtin_popcountll(used) == res.chi_prime);
    }
}

TEST_CASE("chromatic index agrees with an independent tiny brute force")
{
    SplitMix64 rng(29);
    int done = 0;
    while (done < 20) {
        Multigraph g = test::connected_sample(6, 2, rng);
        if (g.m() > 9)
            continue;
        CHECK(chromatic_index(g).chi_prime == test::tiny_chromatic_index(g));
        ++done;
    }
}

TEST_CASE("sandwich bounds max{Delta,omega} <= chi' <= Delta + p")
{
    SplitMix64 rng(61);
    for (int i = 0; i < 30; ++i) {
        Multigraph g = test::connected_sample(7, 3, rng);
        GraphStats st = stats(g);
        int omega = density(g).omega;
        int chi = chromatic_index(g, true).chi_prime;
        CHECK(std::max(st.max_degree, omega) <= chi);
        CHECK(chi <= st.max_degree + st.max_multiplicity);
    }
}

TEST_CASE("naive_admissible on hand instances")
{
    Multigraph k3 = named_instance("k3");
    CHECK_FALSE(naive_admissible(k3, empty_coloring(k3, 3)).has_value());

    Multigraph star = named_instance("star3");
    PartialColoring phi = empty_coloring(star, 2);
    phi.color[0] = 1;
    auto viol = naive_admissible(star, phi);
    REQUIRE(viol.has_value());
    CHECK(viol->subset == 0b1101);
    CHECK(viol->cover == 1);
    CHECK(viol->uncolored_inside == 2);

    PartialColoring total = empty_coloring(k3, 3);
    total.color = {1, 2, 3};
    CHECK_FALSE(naive_admissible(k3, total).has_value());
}

TEST_CASE("pruned and naive admissibility agree on random partial colorings")
{
    SplitMix64 rng(101);
    for (int i = 0; i < 80; ++i) {
        Multigraph g = test::connected_sample(8, 3, rng);
        int k = 1 + static_cast<int>(
                    rng.below(stats(g).max_degree + stats(g).max_multiplicity));
        PartialColoring phi = test::random_partial_coloring(g, k, rng);
        for (auto mode : {FreeVertexMode::witness_anywhere,
                          FreeVertexMode::witness_inside}) {
            auto pruned = check_admissible(g, phi, mode);
            auto naive = naive_admissible(g, phi, mode);
            REQUIRE(pruned.has_value() == naive.has_value());
            if (pruned) {
                CHECK(pruned->subset == naive->subset);
                CHECK(pruned->cover == naive->cover);
                CHECK(pruned->uncolored_inside == naive->uncolored_inside);
            }
        }
    }
}

TEST_CASE("oracle scale guards")
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 41; ++i)
        edges.emplace_back(i % 20, (i % 20 + 1) % 21);
    // 41 edges trips the chi guard.
    Multigraph big(21, edges);
    CHECK_THROWS_AS(chromatic_index(big), ScaleGuardError);

    std::vector<std::pair<int, int>> path;
    for (int i = 0; i < 21; ++i)
        path.emplace_back(i, i + 1);
    Multigraph long_path(22, path);
    CHECK_THROWS_AS(naive_admissible(long_path, empty_coloring(long_path, 1)),
                    ScaleGuardError);
}
