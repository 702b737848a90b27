#include "support/instances.hpp"

#include "hcolor/dynamics.hpp"
#include "hcolor/goodness.hpp"

#include <doctest.h>

#include <cmath>

using namespace hcolor;
using namespace hcolor::testing;

TEST_SUITE("goodness") {

TEST_CASE("default eps and mu sequence") {
    GoodnessParams p(3, 900, 100, 10);
    CHECK(p.eps() == Rational(1, 450));
    CHECK(p.mu_exact(1) == 2);
    CHECK(p.mu_exact(2) == 10);  // μ_{k-1} = Δ
    CHECK(p.bad_threshold(1) == 2);
    CHECK(p.c_k() == doctest::Approx(1800));
    CHECK(p.eps_sequence().size() == 1);

    GoodnessParams p5(5, 1000, 10, 4);
    auto seq = p5.eps_sequence();
    REQUIRE(seq.size() == 3);
    CHECK(seq[2] == pow_rational(Rational(1, 1250), 3));
    CHECK(p5.mu_exact(4) == 4);
}

TEST_CASE("scale 2 squares the factor per index") {
    GoodnessParams p(5, 1250, 10, 4);  // εq = 1
    auto p2 = p.with_scale(2);
    CHECK(p2.mu_exact(1) == 2);
    CHECK(p2.mu_exact(2) == 4);
    CHECK(p2.mu_exact(3) == 8);
    CHECK(p2.mu_exact(4) == 4);
}

TEST_CASE("thresholds are exact ceilings") {
    GoodnessOptions o;
    o.eps = Rational(1, 3);
    GoodnessParams p(3, 7, 5, 3, o);  // μ_1 = 7/3
    CHECK(p.bad_threshold(1) == 3);
    o.eps = Rational(2, 7);
    GoodnessParams q(3, 7, 5, 3, o);  // μ_1 = 2 exactly
    CHECK(q.bad_threshold(1) == 2);
}

TEST_CASE("classify: witness on sunflower with constant coloring") {
    auto h = sunflower(3, 3);
    GoodnessParams p(h, 900);
    auto g = classify_goodness(h, Coloring(h.vertex_count(), 900, 0), p);
    CHECK_FALSE(g.good);
    CHECK(g.vertex == 0);
    CHECK(g.i == 1);
    CHECK(g.y == 3);
    CHECK(g.mu == doctest::Approx(2.0));
}

TEST_CASE("classify: y_{v,1} >= μ_1 is bad, first witness by vertex") {
    // μ_1 = 2 at q = 900. Vertex 2 of a 3-edge star through 2 sees two monochromatic punctured edges.
    auto h = Hypergraph::from_edges(7, 3, {{0, 1, 2}, {2, 3, 4}, {2, 5, 6}});
    GoodnessParams p(h, 900);
    Coloring x(900, {5, 5, 1, 7, 7, 8, 9});
    auto g = classify_goodness(h, x, p);
    CHECK_FALSE(g.good);
    CHECK(g.vertex == 2);
    CHECK(g.y == 2);
}

TEST_CASE("classify: rainbow-per-edge coloring is good") {
    auto h = sunflower(4, 3);
    std::vector<Color> colors(h.vertex_count());
    for (Vertex v = 0; v < h.vertex_count(); ++v) colors[v] = v;
    Coloring x(900, colors);
    GoodnessParams p(h, 900);
    CHECK(classify_goodness(h, x, p).good);
    auto avail = goodness_implies_available(h, x, p);
    CHECK(avail.ok());
    CHECK(avail.min_available >= 898);
    CHECK(avail.bound == doctest::Approx(898.0));
}

TEST_CASE("availability: bad colorings are rejected, empty graphs keep all colors") {
    auto h = sunflower(3, 3);
    GoodnessParams p(h, 900);
    CHECK_THROWS_AS(goodness_implies_available(h, Coloring(h.vertex_count(), 900, 0), p), DomainError);

    auto empty = empty_graph(4);
    GoodnessParams pe(empty, 10);
    auto check = goodness_implies_available(empty, Coloring(4, 10, 3), pe);
    CHECK(check.min_available == 10);
}

TEST_CASE("availability bound holds for every good sample") {
    Rng rng(17);
    GoodnessOptions o;
    o.eps = Rational(1, 5);
    for (int trial = 0; trial < 50; ++trial) {
        auto h = generate_random_simple(30, 3, 6, rng.next());
        GoodnessParams p(h, 15, o);  // μ_1 = 3
        for (int s = 0; s < 20; ++s) {
            auto x = random_initial(30, 15, rng);
            if (!is_good(h, x, p)) continue;
            CHECK(goodness_implies_available(h, x, p).ok());
        }
    }
}

TEST_CASE("classification is monotone in the thresholds") {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto h = generate_random_simple(12, 4, 3, rng.next());
        auto x = random_initial(12, 3, rng);
        GoodnessOptions o;
        o.eps = Rational(1, 4);
        GoodnessParams small(h, 4, o);
        if (!is_good(h, x, small)) continue;
        for (unsigned s = 2; s <= 4; ++s) CHECK(is_good(h, x, small.with_scale(s)));
        o.eps = Rational(1, 2);
        CHECK(is_good(h, x, GoodnessParams(h, 4, o)));
    }
}

TEST_CASE("k = 2 has no goodness indices") {
    auto h = Hypergraph::from_edges(3, 2, {{0, 1}, {1, 2}});
    GoodnessParams p(h, 3);
    CHECK(classify_goodness(h, Coloring(3, 3, 0), p).good);
}

TEST_CASE("regime check") {
    GoodnessParams p(3, 10, 100, 100);
    auto r = regime_check(p);
    CHECK(r.degree_coefficient == 13500);
    CHECK(r.degree_coefficient == 500 * 27);
    CHECK(r.verdict == Regime::below_threshold);

    CHECK(regime_check(GoodnessParams(3, 201, 100, 100)).verdict == Regime::jerrum);
    CHECK(regime_check(GoodnessParams(3, 2 * 7 + 1, 10, 7)).verdict == Regime::jerrum);

    // k = 4: need Δ^{2/3} >= 250·64 so that 500k³Δ^{1/3} <= 2Δ.
    const std::size_t delta = 2'100'000;
    GoodnessParams in(4, 4'100'000, 1000, delta);
    auto rin = regime_check(in);
    CHECK(rin.verdict == Regime::paper);
    CHECK(rin.degree_threshold <= 4'100'000);
    CHECK(rin.log_threshold == doctest::Approx(3200 * std::log(1000.0)));
}

TEST_CASE("coefficient 10k/eps equals 500k^3 at the default eps") {
    for (std::size_t k = 3; k <= 12; ++k) {
        GoodnessParams p(k, 10, 10, 1);
        CHECK(regime_check(p).degree_coefficient == Rational(500 * k * k * k));
    }
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("1/8") == Rational(1, 8));
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
}

} // TEST_SUITE
