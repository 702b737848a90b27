#include "support/instances.hpp"

#include "hcolor/io.hpp"

#include <doctest.h>

#include <sstream>

using namespace hcolor;

TEST_SUITE("io") {

TEST_CASE("hypergraph round trip") {
    auto h = testing::two_edge();
    std::stringstream ss;
    write_hypergraph(ss, h);
    CHECK(ss.str() == "3 5 2\n0 1 2\n2 3 4\n");
    CHECK(read_hypergraph(ss) == h);
}

TEST_CASE("writer sorts edges lexicographically") {
    auto h = Hypergraph::from_edges(7, 3, {{4, 5, 6}, {0, 3, 4}, {0, 1, 2}});
    std::stringstream ss;
    write_hypergraph(ss, h);
    CHECK(ss.str() == "3 7 3\n0 1 2\n0 3 4\n4 5 6\n");
}

TEST_CASE("round trip of generated instances") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto h = generate_random_simple(60, 3, 4, seed);
        std::stringstream a;
        write_hypergraph(a, h);
        std::stringstream b;
        write_hypergraph(b, read_hypergraph(a));
        CHECK(a.str() == b.str());
    }
}

TEST_CASE("comments and blank lines are ignored; empty edge list is valid") {
    std::istringstream in("# header comment\n3 4 0\n\n# trailing\n");
    auto h = read_hypergraph(in);
    CHECK(h.edge_count() == 0);
    CHECK(h.vertex_count() == 4);
}

TEST_CASE("arity error carries the line number") {
    std::istringstream in("3 5 2\n0 1 2\n# note\n2 3\n");
    try {
        read_hypergraph(in);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(std::string(e.what()).find("arity") != std::string::npos);
    }
}

TEST_CASE("malformed input is rejected") {
    auto line_of = [](const std::string& text) -> std::size_t {
        std::istringstream in(text);
        try {
            read_hypergraph(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 999;
    };
    CHECK(line_of("3 5\n0 1 2\n") == 1);
    CHECK(line_of("3 x 1\n0 1 2\n") == 1);
    CHECK(line_of("3 5 2\n0 1 2\n") == 2);          // missing second edge
    CHECK(line_of("3 5 1\n0 1 9\n") == 2);          // vertex out of range
    CHECK(line_of("3 5 1\n0 1 1\n") == 2);          // duplicate vertex
    CHECK(line_of("3 5 1\n2 1 0\n") == 2);          // not ascending
    CHECK(line_of("3 5 2\n0 1 2\n1 2 3\n") == 3);   // simplicity, reported at the later edge
    CHECK(line_of("3 5 1\n0 1 2\n2 3 4\n") == 3);   // extra line
}

TEST_CASE("coloring round trip and validation") {
    Coloring x(4, {0, 3, 2, 1});
    std::stringstream ss;
    write_coloring(ss, x);
    CHECK(ss.str() == "4 4\n0 3 2 1\n");
    CHECK(read_coloring(ss) == x);

    std::istringstream bad("2 3\n0 1 2\n");
    CHECK_THROWS_AS(read_coloring(bad), ParseError);
    std::istringstream short_line("2 3\n0 1\n");
    CHECK_THROWS_AS(read_coloring(short_line), ParseError);
}

} // TEST_SUITE
