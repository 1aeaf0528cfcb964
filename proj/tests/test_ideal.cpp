#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "hyperchip/ideal.hpp"
#include "hyperchip/parking.hpp"

using namespace hyperchip;

TEST_CASE("generators of the running example") {
    auto h = testutil::h_star();
    auto gens = cut_ideal_generators(h);
    CHECK(gens.size() == 7);
    // T = {1} and T = {1,2,3}
    CHECK(std::find(gens.begin(), gens.end(), Monomial{3, 0, 0}) != gens.end());
    CHECK(std::find(gens.begin(), gens.end(), Monomial{2, 1, 1}) != gens.end());
}

TEST_CASE("singleton generators are plain degrees") {
    auto h = testutil::h_star();
    auto gens = cut_ideal_generators(h);
    for (int i = 0; i < h.nonsink_count(); ++i) {
        Monomial m(h.nonsink_count(), 0);
        m[i] = h.degree(h.nonsink_vertices()[i]);
        CHECK(gens[(1u << i) - 1] == m);
    }
}

TEST_CASE("minimal generators of the running example") {
    auto h = testutil::h_star();
    auto min = minimal_generators(cut_ideal_generators(h));
    CHECK(std::set<Monomial>(min.begin(), min.end()) ==
          std::set<Monomial>{{3, 0, 0}, {0, 2, 0}, {0, 0, 2}, {2, 1, 1}});
}

TEST_CASE("minimalization basics") {
    CHECK(minimal_generators({{1}, {2}}) == std::vector<Monomial>{{1}});
    CHECK(minimal_generators({{2, 1}}) == std::vector<Monomial>{{2, 1}});
    CHECK(minimal_generators({{1, 0}, {1, 0}}) == std::vector<Monomial>{{1, 0}});
}

TEST_CASE("standard monomials") {
    auto h = testutil::h_star();
    auto gens = cut_ideal_generators(h);
    CHECK(is_standard_monomial(gens, {2, 1, 0}));
    CHECK_FALSE(is_standard_monomial(gens, {3, 0, 0}));
    CHECK(is_standard_monomial(gens, {0, 0, 0}));
}

TEST_CASE("standard monomials are exactly the parking functions") {
    auto h = testutil::h_star();
    auto gens = cut_ideal_generators(h);
    auto min = minimal_generators(gens);
    for (const auto& c : testutil::degree_box(h)) {
        bool parking = is_parking_bruteforce(h, c);
        CHECK(is_standard_monomial(gens, c) == parking);
        CHECK(is_standard_monomial(min, c) == parking);
    }
}

TEST_CASE("minimal generators form an antichain") {
    auto h = testutil::s_star();
    auto min = minimal_generators(cut_ideal_generators(h));
    for (std::size_t i = 0; i < min.size(); ++i)
        for (std::size_t j = 0; j < min.size(); ++j) {
            if (i == j) continue;
            bool div = true;
            for (std::size_t k = 0; k < min[i].size(); ++k)
                if (min[i][k] > min[j][k]) div = false;
            CHECK_FALSE(div);
        }
}

TEST_CASE("monomial formatting") {
    CHECK(monomial_to_string({3, 0, 0}) == "x1^3");
    CHECK(monomial_to_string({2, 1, 1}) == "x1^2*x2^1*x3^1");
    CHECK(monomial_to_string({0, 0}) == "1");
}
