#include "doctest.h"
#include "helpers.hpp"
#include "hyperchip/hypergraph.hpp"

using namespace hyperchip;

TEST_CASE("running example parses") {
    auto h = testutil::h_star();
    CHECK(h.vertex_count() == 4);
    CHECK(h.edge_count() == 3);
    CHECK(h.nonsink_count() == 3);
    CHECK(h.label(h.sink()) == "4");
    CHECK(h.degree(h.vertex_index("1")) == 3);
    CHECK(h.degree(h.vertex_index("2")) == 2);
    CHECK(h.degree(h.vertex_index("3")) == 2);
    CHECK(h.degree(h.sink()) == 2);
}

TEST_CASE("serialization round-trips") {
    auto h = testutil::h_star();
    auto h2 = parse_hypergraph(serialize_hypergraph(h));
    CHECK(serialize_hypergraph(h2) == serialize_hypergraph(h));
}

TEST_CASE("validation rejects bad input") {
    CHECK_THROWS_AS(parse_hypergraph("not json"), invalid_input);
    CHECK_THROWS_AS(parse_hypergraph(R"({"vertices":["1","1"],"edges":[["1","1"]],"sink":"1"})"),
                    invalid_input);
    CHECK_THROWS_AS(parse_hypergraph(R"({"vertices":["1","2"],"edges":[["1","3"]],"sink":"2"})"),
                    invalid_input);
    CHECK_THROWS_AS(parse_hypergraph(R"({"vertices":["1","2"],"edges":[["1","2"]],"sink":"9"})"),
                    invalid_input);
    // disconnected
    CHECK_THROWS_AS(
        parse_hypergraph(R"({"vertices":["1","2","3"],"edges":[["1","2"]],"sink":"2"})"),
        invalid_input);
    // edge with a repeated vertex
    CHECK_THROWS_AS(parse_hypergraph(R"({"vertices":["1","2"],"edges":[["1","1"]],"sink":"2"})"),
                    invalid_input);
}

TEST_CASE("bipartite incidence of the running example") {
    auto h = testutil::h_star();
    auto b = bipartite_incidence(h);
    CHECK(b.edge_nodes == 3);
    CHECK(b.vertex_nodes == 4);
    CHECK(b.node_count() == 7);
    CHECK(b.incidences.size() == 9);
    CHECK(b.sink_node == b.vertex_node(h.sink()));
    for (int v = 0; v < h.vertex_count(); ++v)
        CHECK(static_cast<int>(b.adj[b.vertex_node(v)].size()) == h.degree(v));
}

TEST_CASE("degree in set on the running example") {
    auto h = testutil::h_star();
    // T = {1,2,3}: only e1 = {1,2,3} is inside T
    VertexSet t{0b111};
    CHECK(h.degree_in_set(t, 0) == 2);
    CHECK(h.degree_in_set(t, 1) == 1);
    CHECK(h.degree_in_set(t, 2) == 1);
    CHECK(h.degree_in_set(VertexSet::single(0), 0) == 3);
    CHECK_THROWS_AS(h.degree_in_set(VertexSet::single(0), 1), domain_error);
}

TEST_CASE("complete hypergraph generator") {
    auto k43 = complete_hypergraph(5, 3);  // K_5^3
    CHECK(k43.vertex_count() == 5);
    CHECK(k43.edge_count() == 10);
    auto k42 = complete_hypergraph(4, 2);
    CHECK(k42.edge_count() == 6);
    for (const auto& e : k42.edges()) CHECK(e.size() == 2);
}

TEST_CASE("repeated hyperedges are kept as distinct occurrences") {
    auto h = parse_hypergraph(
        R"({"vertices":["1","2"],"edges":[["1","2"],["1","2"]],"sink":"2"})");
    CHECK(h.edge_count() == 2);
    CHECK(h.degree(h.vertex_index("1")) == 2);
}
