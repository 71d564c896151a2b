#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "schubkit/diagram.hpp"
#include "schubkit/errors.hpp"
#include "schubkit/perm.hpp"
#include "schubkit/poly.hpp"
#include "schubkit/support.hpp"

using namespace schubkit;

namespace {

std::vector<Permutation> symmetric_group(int n) {
    std::vector<Permutation> out;
    std::vector<int> line(static_cast<size_t>(n));
    std::iota(line.begin(), line.end(), 1);
    do {
        out.emplace_back(line);
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

}  // namespace

TEST_CASE("support of a polynomial") {
    const SupportSet s = support(schubert(parse_permutation("132")));
    CHECK(s.n_vars == 3);
    CHECK(support_size(s) == 2);
    CHECK(s.contains({1, 0, 0}));
    CHECK(s.contains({0, 1, 0}));
    CHECK_FALSE(s.contains({1, 1, 0}));
}

TEST_CASE("diagram route equals polynomial route on S_4") {
    for (const auto& w : symmetric_group(4))
        CHECK(schubert_support_via_diagrams(w) == support(schubert(w)));
}

TEST_CASE("weights dominated by explicit diagrams") {
    // single column {2,3} in 4 rows: three dominated sets, three weights
    const Diagram d = diagram_from_boxes(4, 4, {{2, 2}, {3, 2}});
    const SupportSet s = weights_dominated_by(d);
    CHECK(support_size(s) == 3);
    CHECK(s.contains({1, 1, 0, 0}));
    CHECK(s.contains({1, 0, 1, 0}));
    CHECK(s.contains({0, 1, 1, 0}));

    // dominant permutations have a single realized weight
    CHECK(support_size(weights_dominated_by(rothe(longest_element(5)))) == 1);
}

TEST_CASE("grothendieck support of a fireworks permutation") {
    const SupportSet s = grothendieck_support_fireworks(parse_permutation("132"));
    CHECK(support_size(s) == 3);
    CHECK(s.contains({1, 0, 0}));
    CHECK(s.contains({0, 1, 0}));
    CHECK(s.contains({1, 1, 0}));
    CHECK(grothendieck_support_fireworks(parse_permutation("132")) ==
          support(grothendieck(parse_permutation("132"))));

    CHECK_THROWS_AS(grothendieck_support_fireworks(parse_permutation("312")),
                    std::invalid_argument);
}

TEST_CASE("schubert supports are homogeneous so every point is minimal") {
    for (const auto& w : symmetric_group(4)) {
        const SupportSet s = schubert_support_via_diagrams(w);
        CHECK(minimal_elements(s).size() == s.points.size());
    }
}

TEST_CASE("row-count guards reject oversized grids") {
    std::vector<int> line(17);
    std::iota(line.begin(), line.end(), 1);
    std::reverse(line.begin(), line.end());
    CHECK_THROWS_AS(schubert_support_via_diagrams(Permutation(line)), budget_error);
}

TEST_CASE("rational hull membership") {
    const std::vector<ExponentVector> tri = {{0, 0}, {2, 0}, {0, 2}};
    CHECK(in_rational_hull({0, 0}, tri));
    CHECK(in_rational_hull({1, 1}, tri));  // midpoint of an edge
    CHECK(in_rational_hull({1, 0}, tri));
    CHECK_FALSE(in_rational_hull({2, 1}, tri));
    CHECK_FALSE(in_rational_hull({-1, 0}, tri));

    // hull of a single vertex
    const std::vector<ExponentVector> pt = {{3, 4}};
    CHECK(in_rational_hull({3, 4}, pt));
    CHECK_FALSE(in_rational_hull({3, 3}, pt));
}

TEST_CASE("schubitope lattice points of a segment") {
    // vertices (1,0,0) and (0,1,0); the only integer points are the endpoints
    const Diagram d = rothe(parse_permutation("132"));
    const SupportSet pts = schubitope_lattice_points(d);
    CHECK(support_size(pts) == 2);
    CHECK(saturation_check(d));
}

TEST_CASE("saturation on small rothe diagrams") {
    for (const auto& w : symmetric_group(4)) CHECK(saturation_check(rothe(w)));
    CHECK(saturation_check(rothe(parse_permutation("31542"))));
}

TEST_CASE("saturation on arbitrary small grids") {
    // a couple of non-Rothe diagrams in a 3x3 grid
    CHECK(saturation_check(diagram_from_boxes(3, 3, {{1, 1}, {3, 1}, {2, 2}})));
    CHECK(saturation_check(diagram_from_boxes(3, 3, {{2, 1}, {3, 3}})));
    CHECK(saturation_check(diagram_from_boxes(3, 3, {})));
}

TEST_CASE("lattice point budget") {
    CHECK_THROWS_AS(schubitope_lattice_points(rothe(parse_permutation("31542")), 3), budget_error);
}
