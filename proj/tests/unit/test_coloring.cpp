#include "support/instances.hpp"

#include "hcolor/dynamics.hpp"

#include <doctest.h>

#include <numeric>

using namespace hcolor;
using namespace hcolor::testing;

TEST_SUITE("coloring") {

TEST_CASE("profile on the two-edge instance") {
    auto h = two_edge();
    Coloring x(4, {0, 0, 1, 0, 1});
    auto p = profile(h, x, 2);
    CHECK(p.y == std::vector<std::size_t>{1, 1});
    CHECK(p.blocked == std::vector<Color>{0});
    CHECK(p.available == std::vector<Color>{1, 2, 3});
}

TEST_CASE("constant coloring") {
    auto h = sunflower(3, 3);
    Coloring x(h.vertex_count(), 5, 0);
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        auto p = profile(h, x, v);
        CHECK(p.count(1) == h.degree(v));
        CHECK(p.count(2) == 0);
        CHECK(p.blocked == std::vector<Color>{0});
    }
}

TEST_CASE("rainbow edge blocks nothing") {
    auto h = single_edge();
    Coloring x(3, {0, 1, 2});
    auto p = profile(h, x, 0);
    CHECK(p.count(2) == 1);
    CHECK(p.blocked.empty());
    CHECK(p.available.size() == 3);
}

TEST_CASE("dimension mismatch and bad vertex") {
    auto h = two_edge();
    CHECK_THROWS_AS(profile(h, Coloring(4, 2), 0), DomainError);
    CHECK_THROWS_AS(profile(h, Coloring(5, 2), 5), DomainError);
    CHECK_THROWS_AS(is_proper(h, Coloring(3, 2)), DomainError);
    CHECK_THROWS_AS(Coloring(2, {0, 2}), DomainError);
}

TEST_CASE("is_proper") {
    auto h = single_edge();
    CHECK_FALSE(is_proper(h, Coloring(2, {0, 0, 0})));
    CHECK(is_proper(h, Coloring(2, {0, 0, 1})));
    auto empty = empty_graph(4);
    CHECK(is_proper(empty, Coloring(4, 1, 0)));
}

TEST_CASE("profile matches a brute-force recount on random instances") {
    Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t k = 3 + rng.uniform_below(3);
        const std::size_t n = k + 2 + rng.uniform_below(6);
        const auto q = static_cast<Color>(2 + rng.uniform_below(4));
        auto h = generate_random_simple(n, k, 1 + rng.uniform_below(3), rng.next());
        const auto edges = h.edge_list();
        for (int s = 0; s < 5; ++s) {
            auto x = random_initial(n, q, rng);
            const std::vector<Color> raw(x.colors().begin(), x.colors().end());
            for (Vertex v = 0; v < n; ++v) {
                auto p = profile(h, x, v);
                CHECK(p.y == brute_profile(edges, k, raw, v));
                CHECK(std::accumulate(p.y.begin(), p.y.end(), std::size_t{0}) == h.degree(v));
                const auto blocked = brute_blocked(edges, raw, v);
                CHECK(std::vector<Color>(blocked.begin(), blocked.end()) == p.blocked);
                CHECK(p.blocked.size() <= p.count(1));
                CHECK(p.available.size() + p.blocked.size() == q);
                CHECK(available_colors(h, x, v) == p.available);
                CHECK(edge_color_counts(h, x, v) == p.y);
            }
        }
    }
}

TEST_CASE("properness agrees with the punctured-edge view") {
    // X is proper iff no vertex v sees its own color blocked by an edge through v.
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto h = generate_random_simple(9, 3, 2, rng.next());
        auto x = random_initial(9, 2 + static_cast<Color>(rng.uniform_below(2)), rng);
        bool own_color_blocked = false;
        for (Vertex v = 0; v < 9; ++v) {
            auto b = profile(h, x, v).blocked;
            own_color_blocked |= std::binary_search(b.begin(), b.end(), x[v]);
        }
        CHECK(is_proper(h, x) == !own_color_blocked);
    }
}

TEST_CASE("hamming and min_available") {
    CHECK(hamming(Coloring(3, {0, 1, 2}), Coloring(3, {0, 2, 2})) == 1);
    CHECK(min_available(empty_graph(3), Coloring(3, 7, 0)) == 7);
    CHECK(min_available(single_edge(), Coloring(3, 2, 0)) == 1);
}

} // TEST_SUITE
