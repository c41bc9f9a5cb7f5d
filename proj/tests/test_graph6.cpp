#include "doctest.h"

#include <random>

#include <aspectra/graph.hpp>
#include <aspectra/graph6.hpp>

using namespace aspectra;

TEST_CASE("hand-decoded records") {
    // '@' = 64 encodes n=1 with an empty payload.
    const Graph k1 = parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);

    // 'A' = 65 gives n=2; '_' = 95 carries payload bits 100000, so the single
    // pair (0,1) is an edge.
    const Graph k2 = parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.adjacent(0, 1));

    // 'B' = 66 gives n=3; payload 100000 sets only the first pair (0,1).
    const Graph b = parse_graph6("B_");
    CHECK(b.order() == 3);
    CHECK(b.size() == 1);
    CHECK(b.adjacent(0, 1));
    CHECK_FALSE(b.adjacent(0, 2));
    CHECK_FALSE(b.adjacent(1, 2));
}

TEST_CASE("hand-encoded records") {
    CHECK(write_graph6(complete_graph(2)) == "A_");
    CHECK(write_graph6(empty_graph(1)) == "@");
    CHECK(write_graph6(make_graph(3, {{0, 1}})) == "B_");
    CHECK(write_graph6(complete_graph(3)) == "Bw");
    CHECK(write_graph6(complete_graph(4)) == "C~");
}

TEST_CASE("malformed records are rejected") {
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("?"), Graph6Error);           // n = 0
    CHECK_THROWS_AS(parse_graph6("B"), Graph6Error);           // missing payload
    CHECK_THROWS_AS(parse_graph6("A_x"), Graph6Error);         // trailing garbage
    CHECK_THROWS_AS(parse_graph6("A\x20"), Graph6Error);       // byte below 63
    CHECK_THROWS_AS(parse_graph6("A\x7f"), Graph6Error);       // byte above 126
    CHECK_THROWS_AS(parse_graph6("~~????"), Graph6Error);      // huge header
    CHECK_THROWS_AS(parse_graph6("~?"), Graph6Error);          // truncated header
}

TEST_CASE("payload length is validated exactly") {
    // n=5 has 10 pair bits = 2 payload bytes.
    const std::string five = write_graph6(complete_graph(5));
    CHECK(five.size() == 3);
    CHECK_THROWS_AS(parse_graph6(five.substr(0, 2)), Graph6Error);
    CHECK_THROWS_AS(parse_graph6(five + "?"), Graph6Error);
}

TEST_CASE("round-trip is the identity for every labeled graph up to order 7") {
    for (int n = 2; n <= 7; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        // Exhaustive through n=6; order 7 sampled on a fixed grid.
        const std::uint64_t step = n < 7 ? 1 : 257;
        for (std::uint64_t mask = 0; mask < total; mask += step) {
            const Graph g = from_edge_bitmask(n, mask);
            const Graph back = parse_graph6(write_graph6(g));
            if (!(back == g)) {
                REQUIRE(back == g);  // report only the first failure
            }
        }
    }
}

TEST_CASE("extended 4-byte header round-trips above 62 vertices") {
    std::mt19937 rng(20240811);
    for (int n : {63, 64, 100}) {
        std::vector<std::pair<int, int>> edges;
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int e = 0; e < 3 * n; ++e) {
            const int u = pick(rng), v = pick(rng);
            if (u != v) edges.emplace_back(u, v);
        }
        const Graph g = make_graph(n, edges);
        const std::string rec = write_graph6(g);
        CHECK(rec[0] == '~');
        CHECK(parse_graph6(rec) == g);
    }
}
