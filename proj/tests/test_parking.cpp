#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "hyperchip/digraph.hpp"
#include "hyperchip/parking.hpp"

using namespace hyperchip;

namespace {

const std::set<Configuration> kStarSet{
    {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1},
    {0, 1, 1}, {2, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 1, 1}};

}  // namespace

TEST_CASE("recognition on the running example") {
    auto h = testutil::h_star();
    CHECK(is_parking_bruteforce(h, {2, 1, 0}));
    CHECK_FALSE(is_parking_bruteforce(h, {2, 1, 1}));
    CHECK(is_parking_bruteforce(h, {0, 0, 0}));
    CHECK(is_parking_burn(h, {1, 1, 1}));
    CHECK_FALSE(is_parking_burn(h, {2, 1, 1}));
    CHECK(is_parking_burn(h, {0, 0, 0}));
}

TEST_CASE("bounded sets") {
    auto h = testutil::h_star();
    auto b = bounded_sets(h, {2, 1, 1});
    CHECK(std::find(b.begin(), b.end(), VertexSet{0b111}) != b.end());
    CHECK(bounded_sets(h, {0, 0, 0}).empty());
    // entries at/above all degrees bound every nonempty subset
    CHECK(bounded_sets(h, {3, 2, 2}).size() == 7);
}

TEST_CASE("enumeration of the running example is the 11-set") {
    auto h = testutil::h_star();
    auto pf = enumerate_parking(h);
    CHECK(pf.size() == 11);
    CHECK(std::set<Configuration>(pf.begin(), pf.end()) == kStarSet);
    CHECK(std::is_sorted(pf.begin(), pf.end()));
}

TEST_CASE("enumeration equals the box brute force") {
    auto h = testutil::h_star();
    std::set<Configuration> brute;
    for (const auto& c : testutil::degree_box(h))
        if (is_parking_bruteforce(h, c)) brute.insert(c);
    auto pf = enumerate_parking(h);
    CHECK(std::set<Configuration>(pf.begin(), pf.end()) == brute);
}

TEST_CASE("single edge") {
    auto h = testutil::single_edge();
    CHECK(enumerate_parking(h) == std::vector<Configuration>{{0}});
    CHECK(enumerate_acyclic_orientations(h).size() == 1);
    CHECK(maximal_parking(h) == std::vector<Configuration>{{0}});
}

TEST_CASE("acyclic unique-source orientations of the running example") {
    auto h = testutil::h_star();
    auto os = enumerate_acyclic_orientations(h);
    CHECK(os.size() == 3);
    std::set<Configuration> images;
    for (const auto& o : os) images.insert(orientation_to_config(h, o));
    CHECK(images == std::set<Configuration>{{2, 1, 0}, {2, 0, 1}, {1, 1, 1}});
}

TEST_CASE("orientation to configuration by hand") {
    auto h = testutil::h_star();
    Orientation o{{h.vertex_index("3"), h.vertex_index("4"), h.vertex_index("4")}};
    CHECK(orientation_to_config(h, o) == Configuration{2, 1, 0});
}

TEST_CASE("maximal parking functions of the running example") {
    auto h = testutil::h_star();
    auto mx = maximal_parking(h);
    CHECK(std::set<Configuration>(mx.begin(), mx.end()) ==
          std::set<Configuration>{{2, 1, 0}, {2, 0, 1}, {1, 1, 1}});
    // same degree everywhere
    for (const auto& c : mx) CHECK(c[0] + c[1] + c[2] == 3);
}

TEST_CASE("star hypergraph orientations") {
    auto s = testutil::s_star();
    auto os = enumerate_acyclic_orientations(s);
    REQUIRE(os.size() == 1);
    for (int v : os.front().chosen) CHECK(v == s.sink());
    CHECK(orientation_to_config(s, os.front()) == Configuration{2, 1, 1});
    CHECK(maximal_parking(s) == std::vector<Configuration>{{2, 1, 1}});
    CHECK(enumerate_parking(s).size() == 12);
}

TEST_CASE("downward closure") {
    auto h = testutil::h_star();
    auto pf = enumerate_parking(h);
    std::set<Configuration> set(pf.begin(), pf.end());
    for (const auto& c : pf)
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] > 0) {
                Configuration low = c;
                --low[i];
                CHECK(set.count(low) == 1);
            }
}

TEST_CASE("2-regular hypergraph K4 matches the classical count") {
    auto k4 = complete_hypergraph(4, 2);
    auto pf = enumerate_parking(k4);
    CHECK(pf.size() == 16);
    // symmetric digraph of K4 agrees
    Digraph d;
    d.labels = k4.vertex_labels();
    d.sink = k4.sink();
    for (const auto& e : k4.edges()) {
        d.add_arc(e[0], e[1]);
        d.add_arc(e[1], e[0]);
    }
    CHECK(laplacian_determinant(reduced_laplacian(d)) == 16);
    auto gpf = digraph_parking_enumerate(d);
    CHECK(std::set<Configuration>(gpf.begin(), gpf.end()) ==
          std::set<Configuration>(pf.begin(), pf.end()));
}
