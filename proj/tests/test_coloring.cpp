#include <catch_amalgamated.hpp>

#include "ecl/coloring.hpp"
#include "ecl/oracles.hpp"
#include "helpers.hpp"

using namespace ecl;

namespace {

PartialColoring k3_one_edge() // K3 with edge (0,1) -> color 1, k = 3
{
    Multigraph k3 = named_instance("k3");
    PartialColoring phi = empty_coloring(k3, 3);
    phi.color[0] = 1;
    return phi;
}

} // namespace

TEST_CASE("is_free_edge")
{
    Multigraph k3 = named_instance("k3");
    PartialColoring phi = k3_one_edge();
    CHECK_FALSE(is_free_edge(k3, phi, 1, 1)); // (0,2) touches the 1-colored edge
    CHECK(is_free_edge(k3, phi, 1, 2));

    PartialColoring total = empty_coloring(k3, 3);
    total.color = {1, 2, 3};
    for (int e = 0; e < 3; ++e)
        for (int i = 1; i <= 3; ++i)
            CHECK_FALSE(is_free_edge(k3, total, e, i));
}

TEST_CASE("free_vertices")
{
    Multigraph k3 = named_instance("k3");
    PartialColoring phi = k3_one_edge();
    CHECK(free_vertices(k3, phi, 2, 0b111) == 0b111);
    CHECK(free_vertices(k3, phi, 1, 0b111) == 0);

    Multigraph k2 = named_instance("k2");
    PartialColoring empty = empty_coloring(k2, 1);
    CHECK(free_vertices(k2, empty, 1, 0b11) == 0b11);
}

TEST_CASE("free_vertices strict mode requires the witness inside S")
{
    Multigraph star = named_instance("star3");
    PartialColoring phi = empty_coloring(star, 2);
    // Leaves 1 and 2: their only edges leave {1,2}.
    CHECK(free_vertices(star, phi, 1, 0b0110) == 0b0110);
    CHECK(free_vertices(star, phi, 1, 0b0110, FreeVertexMode::witness_inside)
          == 0);
}

TEST_CASE("cover_value")
{
    Multigraph k3 = named_instance("k3");
    PartialColoring empty = empty_coloring(k3, 3);
    CHECK(cover_value(k3, empty, 0b111) == 3);
    CHECK(cover_value(k3, k3_one_edge(), 0b111) == 2);
    CHECK(cover_value(k3, empty, 0) == 0);
}

TEST_CASE("uncolored_inside")
{
    Multigraph k3 = named_instance("k3");
    CHECK(uncolored_inside(k3, empty_coloring(k3, 3), 0b111) == 3);
    CHECK(uncolored_inside(k3, k3_one_edge(), 0b011) == 0);

    Multigraph star = named_instance("star3");
    PartialColoring phi = empty_coloring(star, 2);
    phi.color[0] = 1;
    CHECK(uncolored_inside(star, phi, 0b1101) == 2);
}

TEST_CASE("check_admissible")
{
    Multigraph k3 = named_instance("k3");
    CHECK_FALSE(check_admissible(k3, empty_coloring(k3, 3)).has_value());

    Multigraph star = named_instance("star3");
    PartialColoring phi = empty_coloring(star, 2);
    phi.color[0] = 1;
    auto viol = check_admissible(star, phi);
    REQUIRE(viol.has_value());
    CHECK(viol->subset == 0b1101); // {0, 2, 3}
    CHECK(viol->cover == 1);
    CHECK(viol->uncolored_inside == 2);

    PartialColoring total = empty_coloring(k3, 3);
    total.color = {1, 2, 3};
    CHECK_FALSE(check_admissible(k3, total).has_value());
}

TEST_CASE("extend")
{
    Multigraph k2 = named_instance("k2");
    PartialColoring phi = empty_coloring(k2, 1);
    PartialColoring ext = extend(k2, phi, 0, 1);
    CHECK(ext.color[0] == 1);
    CHECK(phi.color[0] == 0); // original untouched

    Multigraph k3 = named_instance("k3");
    PartialColoring one = k3_one_edge();
    CHECK_THROWS_AS(extend(k3, one, 1, 1), std::invalid_argument); // improper
    CHECK(extend(k3, one, 1, 2).color[1] == 2);
    CHECK_THROWS_AS(extend(k3, one, 0, 2), std::invalid_argument); // colored
    CHECK_THROWS_AS(extend(k3, one, 1, 4), std::invalid_argument); // range
}

TEST_CASE("conditional greedy on K3 colors edges 1,2,3")
{
    Multigraph k3 = named_instance("k3");
    RunTrace trace = conditional_greedy(k3, 3);
    REQUIRE(trace.complete);
    REQUIRE(trace.steps.size() == 3);
    CHECK(trace.steps[0].color == 1);
    CHECK(trace.steps[1].color == 2);
    CHECK(trace.steps[2].color == 3);
    CHECK(validate_coloring(k3, trace.final));
}

TEST_CASE("conditional greedy halts immediately on the star with k=2")
{
    Multigraph star = named_instance("star3");
    RunTrace trace = conditional_greedy(star, 2);
    CHECK_FALSE(trace.complete);
    REQUIRE(trace.steps.size() == 1);
    CHECK_FALSE(trace.steps[0].color.has_value());
    CHECK(trace.final.colored_count() == 0);
    auto viol = trace.halt_violation();
    REQUIRE(viol.has_value());
    CHECK(set_size(viol->subset) == 3);
    CHECK(viol->cover == 1);
    CHECK(viol->uncolored_inside == 2);
    // Both colors were rejected by the admissibility check, not properness.
    for (const auto& rej : trace.steps[0].rejections) {
        CHECK_FALSE(rej.improper);
        CHECK(rej.violation.has_value());
    }
}

TEST_CASE("conditional greedy trivial and conjecture instances")
{
    Multigraph k2 = named_instance("k2");
    RunTrace trace = conditional_greedy(k2, 1);
    CHECK(trace.complete);
    CHECK(trace.final.color[0] == 1);

    // Shannon triangle: chi' = 6 > Delta + 1 = 5, omega = 6.
    Multigraph sh = fat_triangle(2, 2, 2);
    trace = conditional_greedy(sh, 6);
    CHECK(trace.complete);
    CHECK(validate_coloring(sh, trace.final));
    for (int c : trace.final.color)
        CHECK((c >= 1 && c <= 6));
}

TEST_CASE("every accepted intermediate coloring is admissible")
{
    Multigraph sh = fat_triangle(2, 3, 2);
    int steps_seen = 0;
    conditional_greedy(sh, density(sh).omega, reorder(sh),
                       FreeVertexMode::witness_anywhere,
                       [&](const PartialColoring& phi) {
                           ++steps_seen;
                           CHECK_FALSE(naive_admissible(sh, phi).has_value());
                       });
    CHECK(steps_seen == sh.m());
}

TEST_CASE("coloring an edge never increases cover or uncolored count")
{
    SplitMix64 rng(31);
    for (int i = 0; i < 60; ++i) {
        Multigraph g = test::connected_sample(7, 3, rng);
        int k = stats(g).max_degree + stats(g).max_multiplicity;
        PartialColoring phi = test::random_partial_coloring(g, k, rng, 0.4);
        // Pick an extendable edge, if any.
        for (int e = 0; e < g.m(); ++e) {
            if (phi.is_colored(e))
                continue;
            auto [u, v] = g.endpoints(e);
            int c = 0;
            for (int cand = 1; cand <= k && !c; ++cand) {
                bool clash = false;
                for (int x : {u, v})
                    for (int f : g.incident_edges(x))
                        if (phi.color[f] == cand)
                            clash = true;
                if (!clash)
                    c = cand;
            }
            if (!c)
                continue;
            PartialColoring ext = extend(g, phi, e, c);
            VertexSet s = rng.next() & g.all_vertices();
            CHECK(cover_value(g, ext, s) <= cover_value(g, phi, s));
            CHECK(uncolored_inside(g, ext, s) <= uncolored_inside(g, phi, s));
            break;
        }
    }
}

TEST_CASE("greedy is deterministic")
{
    SplitMix64 rng(77);
    Multigraph g = test::connected_sample(7, 3, rng);
    int k = density(g).omega;
    RunTrace a = conditional_greedy(g, k);
    RunTrace b = conditional_greedy(g, k);
    REQUIRE(a.steps.size() == b.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        CHECK(a.steps[i].edge == b.steps[i].edge);
        CHECK(a.steps[i].color == b.steps[i].color);
    }
    CHECK(a.complete == b.complete);
    CHECK(a.final.color == b.final.color);
}

TEST_CASE("greedy preconditions")
{
    CHECK_THROWS_AS(conditional_greedy(build(2, {}), 1), std::invalid_argument);
    CHECK_THROWS_AS(conditional_greedy(build(4, {{0, 1}, {2, 3}}), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(conditional_greedy(named_instance("k2"), 0),
                    std::invalid_argument);
}
