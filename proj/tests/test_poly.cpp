#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "schubkit/perm.hpp"
#include "schubkit/poly.hpp"

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

SparsePoly x(int n_vars, int i, int power = 1) {
    ExponentVector e(static_cast<size_t>(n_vars), 0);
    e[static_cast<size_t>(i) - 1] = power;
    return SparsePoly::monomial(e);
}

// Sparse integer polynomials with bounded degree, reproducible across runs.
std::vector<SparsePoly> random_corpus(int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> nv_dist(2, 5);
    std::uniform_int_distribution<int> terms_dist(1, 8);
    std::uniform_int_distribution<int> exp_dist(0, 3);
    std::uniform_int_distribution<int> coeff_dist(-9, 9);
    std::vector<SparsePoly> out;
    while (static_cast<int>(out.size()) < count) {
        const int nv = nv_dist(rng);
        SparsePoly f(nv);
        const int terms = terms_dist(rng);
        for (int t = 0; t < terms; ++t) {
            ExponentVector e(static_cast<size_t>(nv));
            do {
                for (auto& v : e) v = exp_dist(rng);
            } while (std::accumulate(e.begin(), e.end(), 0) > 6);
            int c = coeff_dist(rng);
            if (c == 0) c = 1;
            f.add_term(e, c);
        }
        if (!f.is_zero()) out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

TEST_CASE("sparse polynomial arithmetic") {
    const SparsePoly a = x(2, 1) + x(2, 2);
    const SparsePoly b = x(2, 1) - x(2, 2);
    const SparsePoly prod = a * b;
    CHECK(prod.coeff({2, 0}) == 1);
    CHECK(prod.coeff({0, 2}) == -1);
    CHECK(prod.coeff({1, 1}) == 0);
    CHECK(prod.term_count() == 2);

    SparsePoly z(2);
    z.add_term({1, 0}, 3);
    z.add_term({1, 0}, -3);
    CHECK(z.is_zero());

    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(a + SparsePoly(3), std::invalid_argument);
}

TEST_CASE("staircase monomial") {
    CHECK(staircase_monomial(3) == SparsePoly::monomial({2, 1, 0}));
    CHECK(staircase_monomial(1) == SparsePoly::constant(1, 1));
}

TEST_CASE("divided difference on monomials") {
    // (x1^2 x2 - x2^2 x1)/(x1 - x2) = x1 x2
    CHECK(divided_difference(SparsePoly::monomial({2, 1, 0}), 1) ==
          SparsePoly::monomial({1, 1, 0}));
    // (x1 - x2)/(x1 - x2) = 1
    CHECK(divided_difference(x(2, 1), 1) == SparsePoly::constant(2, 1));
    // symmetric input maps to zero
    CHECK(divided_difference(x(2, 1) * x(2, 2), 1).is_zero());
    CHECK(divided_difference(SparsePoly::constant(2, 7), 1).is_zero());
    CHECK_THROWS_AS(divided_difference(x(2, 1), 2), std::invalid_argument);
}

TEST_CASE("isobaric operator on monomials") {
    CHECK(isobaric_dd(SparsePoly::constant(2, 1), 1) == SparsePoly::constant(2, 1));
    CHECK(isobaric_dd(x(2, 1), 1) == SparsePoly::constant(2, 1));
    CHECK(isobaric_dd(SparsePoly::monomial({2, 1, 0}), 2) == SparsePoly::monomial({2, 0, 0}));
}

TEST_CASE("schubert polynomials for all of S_3") {
    const SparsePoly one = SparsePoly::constant(3, 1);
    CHECK(schubert(parse_permutation("123")) == one);
    CHECK(schubert(parse_permutation("132")) == x(3, 1) + x(3, 2));
    CHECK(schubert(parse_permutation("213")) == x(3, 1));
    CHECK(schubert(parse_permutation("231")) == x(3, 1) * x(3, 2));
    CHECK(schubert(parse_permutation("312")) == x(3, 1, 2));
    CHECK(schubert(parse_permutation("321")) == SparsePoly::monomial({2, 1, 0}));
}

TEST_CASE("grothendieck polynomials for all of S_3") {
    CHECK(grothendieck(parse_permutation("123")) == SparsePoly::constant(3, 1));
    CHECK(grothendieck(parse_permutation("132")) ==
          x(3, 1) + x(3, 2) - x(3, 1) * x(3, 2));
    CHECK(grothendieck(parse_permutation("213")) == x(3, 1));
    CHECK(grothendieck(parse_permutation("231")) == x(3, 1) * x(3, 2));
    CHECK(grothendieck(parse_permutation("312")) == x(3, 1, 2));
    CHECK(grothendieck(parse_permutation("321")) == SparsePoly::monomial({2, 1, 0}));
}

TEST_CASE("lowest degree part of grothendieck is schubert") {
    for (const auto& w : symmetric_group(5))
        CHECK(lowest_degree_part(grothendieck(w)) == schubert(w));
}

TEST_CASE("schubert coefficients are positive and grothendieck signs alternate") {
    for (const auto& w : symmetric_group(5)) {
        const long l = length(w);
        const SparsePoly s = schubert(w);
        for (const auto& [e, c] : s.terms()) {
            CHECK(c > 0);
            CHECK(std::accumulate(e.begin(), e.end(), 0L) == l);
        }
        const SparsePoly g = grothendieck(w);
        for (const auto& [e, c] : g.terms()) {
            const long deg = std::accumulate(e.begin(), e.end(), 0L);
            CHECK(deg >= l);
            // sign is (-1)^(deg - length)
            CHECK(((deg - l) % 2 == 0 ? c > 0 : c < 0));
        }
    }
}

TEST_CASE("ascent policy does not change the result") {
    for (const auto& w : symmetric_group(4)) {
        CHECK(schubert(w, AscentPolicy::Smallest) == schubert(w, AscentPolicy::Largest));
        CHECK(grothendieck(w, AscentPolicy::Smallest) == grothendieck(w, AscentPolicy::Largest));
    }
}

TEST_CASE("cache returns identical polynomials") {
    PolyCache cache;
    for (const auto& w : symmetric_group(4))
        CHECK(schubert(w, AscentPolicy::Smallest, &cache) == schubert(w));
    CHECK(cache.entry_count() == 24);

    PolyCache tiny(2);  // a full cache still computes correctly
    for (const auto& w : symmetric_group(4))
        CHECK(schubert(w, AscentPolicy::Smallest, &tiny) == schubert(w));
}

TEST_CASE("principal specialization") {
    CHECK(principal_specialization(schubert(parse_permutation("132"))) == 2);
    mpz_class best = 0;
    for (const auto& w : symmetric_group(3))
        best = std::max(best, principal_specialization(schubert(w)));
    CHECK(best == 2);
    for (const auto& w : symmetric_group(4)) CHECK(principal_specialization(schubert(w)) >= 1);
}

TEST_CASE("operator identities on a random corpus") {
    for (const auto& f : random_corpus(20, 20240817u)) {
        const int n = f.n_vars();
        for (int i = 1; i < n; ++i) {
            CHECK(divided_difference(divided_difference(f, i), i).is_zero());
            const SparsePoly pi = isobaric_dd(f, i);
            CHECK(isobaric_dd(pi, i) == pi);
        }
        for (int i = 1; i + 1 < n; ++i) {
            const auto lhs = divided_difference(divided_difference(divided_difference(f, i), i + 1), i);
            const auto rhs = divided_difference(divided_difference(divided_difference(f, i + 1), i), i + 1);
            CHECK(lhs == rhs);
            const auto plhs = isobaric_dd(isobaric_dd(isobaric_dd(f, i), i + 1), i);
            const auto prhs = isobaric_dd(isobaric_dd(isobaric_dd(f, i + 1), i), i + 1);
            CHECK(plhs == prhs);
        }
        for (int i = 1; i < n; ++i)
            for (int j = i + 2; j < n; ++j) {
                CHECK(divided_difference(divided_difference(f, i), j) ==
                      divided_difference(divided_difference(f, j), i));
                CHECK(isobaric_dd(isobaric_dd(f, i), j) == isobaric_dd(isobaric_dd(f, j), i));
            }
    }
}
