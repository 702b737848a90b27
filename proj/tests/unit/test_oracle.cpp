#include "support/instances.hpp"

#include "hcolor/dynamics.hpp"
#include "hcolor/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace hcolor;
using namespace hcolor::testing;

TEST_SUITE("oracle") {

TEST_CASE("encode/decode are inverse") {
    for (Code c = 0; c < 243; ++c) CHECK(encode(decode(c, 5, 3)) == c);
    CHECK(encode(Coloring(3, {1, 0, 2})) == 1 + 0 * 3 + 2 * 9);
}

TEST_CASE("proper counts") {
    CHECK(enumerate_proper(two_edge(), 2).count() == 18);
    CHECK(enumerate_proper(single_edge(), 2).count() == 6);
    CHECK(enumerate_proper(empty_graph(4), 3).count() == 81);
}

TEST_CASE("enumeration agrees with inclusion-exclusion") {
    for (const auto& [name, h] : corpus()) {
        if (h.edge_count() > 3) continue;
        for (Color q = 2; q <= 4; ++q) {
            INFO(name << " q=" << q);
            const auto r = enumerate_proper(h, q);
            CHECK(BigInt(r.count()) == inclusion_exclusion_count(h.vertex_count(), h.edge_list(), q));
            CHECK(std::is_sorted(r.proper.begin(), r.proper.end()));
        }
    }
}

TEST_CASE("enumeration members are proper and non-members are not") {
    auto h = Hypergraph::from_edges(7, 3, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
    auto r = enumerate_proper(h, 3);
    for (Code c : r.proper) CHECK(is_proper(h, decode(c, 7, 3)));
    Rng rng(4);
    for (int i = 0; i < 500; ++i) {
        const Code c = rng.uniform_below(r.omega_size);
        CHECK(r.index_of(c).has_value() == is_proper(h, decode(c, 7, 3)));
    }
}

TEST_CASE("multi-threaded enumeration equals single-threaded") {
    auto h = Hypergraph::from_edges(7, 3, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
    GoodnessParams p(h, 4, {.eps = Rational(1, 4)});
    auto one = enumerate_proper(h, 4, &p, {.budget = 1'000'000, .threads = 1});
    auto four = enumerate_proper(h, 4, &p, {.budget = 1'000'000, .threads = 4});
    CHECK(one.proper == four.proper);
    CHECK(one.good == four.good);
}

TEST_CASE("budget is enforced") {
    CHECK_THROWS_AS(enumerate_proper(empty_graph(30), 10), BudgetExceeded);
    CHECK_THROWS_AS(state_space_size(5, 10, 99'999), BudgetExceeded);
    CHECK(state_space_size(5, 10, 100'000) == 100'000);
}

TEST_CASE("exact tvd") {
    auto h = two_edge();
    auto q_set = enumerate_proper(h, 2);
    std::vector<double> uniform_q(32, 0.0);
    for (Code c : q_set.proper) uniform_q[c] = 1.0 / 18;
    CHECK(exact_tvd(q_set, uniform_q) == doctest::Approx(0.0).epsilon(1e-15));

    std::vector<double> point(32, 0.0);
    point[q_set.proper[3]] = 1.0;
    CHECK(exact_tvd(q_set, point) == doctest::Approx(17.0 / 18));

    std::vector<double> uniform_omega(32, 1.0 / 32);
    CHECK(exact_tvd(q_set, uniform_omega) == doctest::Approx(0.4375));

    std::vector<double> bad(32, 1.0 / 31);
    CHECK_THROWS_AS(exact_tvd(q_set, bad), DomainError);
    CHECK_THROWS_AS(exact_tvd(q_set, std::vector<double>(31, 1.0 / 31)), DomainError);
}

TEST_CASE("exact tvd from counts is exact") {
    auto q_set = enumerate_proper(two_edge(), 2);
    std::vector<std::uint64_t> counts(32, 1);
    CHECK(exact_tvd_counts(q_set, counts) == Rational(14, 32));
    std::vector<std::uint64_t> on_q(32, 0);
    for (Code c : q_set.proper) on_q[c] = 5;
    CHECK(exact_tvd_counts(q_set, on_q) == 0);
    std::vector<std::uint64_t> single(32, 0);
    single[q_set.proper[0]] = 1;
    CHECK(exact_tvd_counts(q_set, single) == Rational(17, 18));
}

TEST_CASE("total variation is a metric") {
    Rng rng(12);
    auto random_dist = [&](std::size_t size) {
        std::vector<double> d(size);
        double s = 0;
        for (auto& x : d) s += (x = rng.uniform_real());
        for (auto& x : d) x /= s;
        return d;
    };
    for (int i = 0; i < 200; ++i) {
        auto a = random_dist(16), b = random_dist(16), c = random_dist(16);
        CHECK(total_variation(a, a) == 0);
        CHECK(total_variation(a, b) == doctest::Approx(total_variation(b, a)));
        CHECK(total_variation(a, c) <= total_variation(a, b) + total_variation(b, c) + 1e-12);
        CHECK(total_variation(a, b) > 0);
        CHECK(total_variation(a, b) <= 1.0);
    }
}

TEST_CASE("move graph on the empty hypergraph is connected") {
    auto g = move_graph(empty_graph(3), 3);
    CHECK(g.nodes.size() == 27);
    CHECK(g.component_sizes.size() == 1);
    CHECK(g.giant_fraction() == 1.0);
    CHECK(g.symmetric());
}

TEST_CASE("move graph on a single edge with two colors") {
    // Q = the 6 non-constant colorings of {0,1,2}. From a coloring with two
    // vertices of one color, only the odd vertex can't flip (it would make the
    // edge monochromatic) and each of the pair can: so each node has degree 2
    // and the graph is a 6-cycle.
    auto g = move_graph(single_edge(), 2);
    REQUIRE(g.nodes.size() == 6);
    for (const auto& adj : g.adjacency) CHECK(adj.size() == 2);
    CHECK(g.component_sizes.size() == 1);
    CHECK(g.symmetric());
    CHECK(g.closure_violations == 0);
}

TEST_CASE("move graph symmetry and closure across the corpus") {
    for (const auto& [name, h] : corpus())
        for (Color q = 2; q <= 3; ++q) {
            INFO(name << " q=" << q);
            GoodnessParams p(h, q, {.eps = Rational(1, 2)});
            auto g = move_graph(h, q, &p);
            CHECK(g.symmetric());
            CHECK(g.closure_violations == 0);
            std::size_t total = 0;
            for (auto s : g.component_sizes) total += s;
            CHECK(total == g.nodes.size());
            CHECK(*g.good_in_giant <= *g.good_total);
        }
}

TEST_CASE("two colors can freeze the two-edge instance") {
    // (0,0,1,1,1)-type colorings with a blocked center still move elsewhere;
    // the component structure is reported, not asserted, beyond partition sanity.
    auto g = move_graph(two_edge(), 2);
    CHECK(g.nodes.size() == 18);
    CHECK(g.giant_size() >= 1);
    CHECK(g.giant_size() <= 18);
}

TEST_CASE("event probabilities") {
    auto h = two_edge();
    for (Color q = 2; q <= 4; ++q) {
        GoodnessParams p(h, q, {.eps = Rational(1, 2)});
        auto ev = event_probabilities(h, p, 2);
        for (const auto& pr : ev.pr_omega_be) CHECK(pr == Rational(BigInt(1), pow_int(q, 2)));
    }
    auto empty = empty_graph(4);
    GoodnessParams pe(empty, 3);
    auto ev = event_probabilities(empty, pe, 0);
    CHECK(ev.pr_omega_av == 0);
    CHECK(*ev.pr_q_av == 0);
    CHECK(ev.pr_omega_be.empty());
}

TEST_CASE("sunflower center tail: enumeration equals the binomial law") {
    // Each petal {0,a,b} has a monochromatic punctured pair with probability 1/q,
    // independently, so y_{0,1} ~ Binomial(d, 1/q).
    auto h = sunflower(3, 3);
    for (const auto& eps : {Rational(1, 3), Rational(2, 3), Rational(1, 1)}) {
        GoodnessParams p(h, 3, {.eps = eps});  // μ_1 = 1, 2, 3
        auto table = event_table(h, p);
        // Only the center can have y_1 >= 2; petal vertices have degree 1.
        const auto threshold = p.bad_threshold(1);
        const Rational tail = binomial_tail(3, Rational(1, 3), threshold);
        if (threshold >= 2) CHECK(Rational(BigInt(table.omega_bad_vertex[0]), BigInt(table.omega_size)) == tail);
    }
}

TEST_CASE("binomial tail") {
    CHECK(binomial_tail(3, Rational(1, 2), 0) == 1);
    CHECK(binomial_tail(3, Rational(1, 2), 2) == Rational(1, 2));
    CHECK(binomial_tail(4, Rational(1, 3), 4) == Rational(1, 81));
    CHECK(binomial_tail(4, Rational(1, 3), 5) == 0);
}

TEST_CASE("lll premise") {
    auto h = two_edge();
    auto r = lll_premise_check(h, 3);
    CHECK(r.theta == Rational(2, 9));
    CHECK(r.p == Rational(1, 9));
    CHECK(r.theta_at_most_half);
    // one dependent edge each: 2(1 - 2/9) = 14/9 >= 1
    CHECK(r.holds);

    auto isolated = single_edge();
    auto ri = lll_premise_check(isolated, 2);
    CHECK(ri.edges.at(0).dependent == 0);
    CHECK(ri.holds);

    // A heavy star at q = 2: θ = 1/2 and 2·(1/2)^5 < 1.
    auto star = sunflower(6, 3);
    CHECK_FALSE(lll_premise_check(star, 2).holds);
}

TEST_CASE("lll premise holds whenever q^{k-1} >= 8kΔ on generated instances") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto h = generate_random_simple(60, 3, 4, seed);
        const std::size_t need = 8 * 3 * h.max_degree();
        Color q = 2;
        while (static_cast<std::size_t>(q) * q < need) ++q;
        auto r = lll_premise_check(h, q);
        CHECK(r.holds);
        for (const auto& e : r.edges) CHECK(e.weight >= to_double(r.p));
    }
}

TEST_CASE("hss transfer") {
    auto empty = empty_graph(4);
    GoodnessParams pe(empty, 3);
    auto r = hss_transfer_check(empty, pe, 0);
    CHECK(r.lhs == 0);
    CHECK(r.rhs == 0);
    CHECK(r.holds);

    auto h = two_edge();
    for (Color q = 3; q <= 6; ++q) {
        GoodnessParams p(h, q, {.eps = Rational(1, q)});  // μ_1 = 1
        for (const auto& s : hss_transfer_sweep(h, p)) {
            INFO("q=" << q << " v=" << s.vertex);
            CHECK(s.premise_holds);
            CHECK(s.holds);
            if (s.rhs == 0) CHECK(s.lhs == 0);
        }
    }
}

TEST_CASE("tail bound") {
    GoodnessParams p(3, 900, 100, 40);
    auto b = appendix_b_bound(p, 1);
    const double eps_q = 2.0;
    CHECK(b.mu == doctest::Approx(2.0));
    CHECK(b.value == doctest::Approx(std::pow(2 * std::exp(1.0) * 40 / (eps_q * 900), eps_q)));
    CHECK_FALSE(b.vacuous);
    CHECK(b.exp_eps == doctest::Approx(std::exp(-2.0)));
    CHECK_THROWS_AS(appendix_b_bound(p, 2), DomainError);
    CHECK_THROWS_AS(appendix_b_bound(p, 0), DomainError);

    GoodnessParams small(3, 10, 10, 40, {.eps = Rational(1, 5)});
    CHECK(appendix_b_bound(small, 1).vacuous);
}

TEST_CASE("tail bound chain inequalities in the paper regime") {
    for (std::size_t k = 3; k <= 6; ++k) {
        for (std::size_t delta : {1'000'000ull, 50'000'000ull}) {
            const double coef = 500.0 * k * k * k;
            const auto q = static_cast<Color>(std::ceil(coef * std::pow(double(delta), 1.0 / double(k - 1))));
            if (q > 2 * delta) continue;
            GoodnessParams p(k, q, 1000, delta);
            REQUIRE(regime_check(p).verdict == Regime::paper);
            for (std::size_t i = 1; i + 2 <= k; ++i) {
                auto b = appendix_b_bound(p, i);
                CHECK(b.log10_value <= -2 * b.mu + 1e-9);
                CHECK(b.pow10_mu <= b.pow10_eps);
            }
            auto b1 = appendix_b_bound(p, 1);
            CHECK(b1.union_bound <= b1.exp_eps);
        }
    }
}

TEST_CASE("code dump") {
    std::ostringstream os;
    write_codes(os, std::vector<Code>{1, 5, 9});
    CHECK(os.str() == "1\n5\n9\n");
}

} // TEST_SUITE
