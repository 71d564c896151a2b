#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "schubkit/bounds.hpp"
#include "schubkit/diagram.hpp"
#include "schubkit/io.hpp"
#include "schubkit/perm.hpp"
#include "schubkit/poly.hpp"
#include "schubkit/support.hpp"

using namespace schubkit;

TEST_CASE("diagram json") {
    const Permutation w = parse_permutation("31542");
    CHECK(to_json(rothe(w)) == R"({"n_rows":5,"columns":[[1],[1,3,4],[],[3],[]]})");
    CHECK(to_json(rothe(Permutation::identity(2))) == R"({"n_rows":2,"columns":[[],[]]})");
}

TEST_CASE("polynomial json sorts terms and keeps coefficients as strings") {
    const SparsePoly f = schubert(parse_permutation("132"));
    CHECK(to_json(f) ==
          R"({"n_vars":3,"terms":[{"exp":[0,1,0],"coeff":"1"},{"exp":[1,0,0],"coeff":"1"}]})");

    const SparsePoly g = grothendieck(parse_permutation("132"));
    CHECK(to_json(g) ==
          R"({"n_vars":3,"terms":[{"exp":[0,1,0],"coeff":"1"},)"
          R"({"exp":[1,0,0],"coeff":"1"},{"exp":[1,1,0],"coeff":"-1"}]})");
}

TEST_CASE("support json") {
    const SupportSet s = support(schubert(parse_permutation("132")));
    CHECK(to_json(s) == R"({"n_vars":3,"points":[[0,1,0],[1,0,0]]})");
}

TEST_CASE("bound report json key order") {
    BoundReport r;
    r.subject = "x";
    r.lhs = 3;
    r.rhs = 2;
    r.holds = true;
    r.detail = "d";
    CHECK(to_json(r) == R"({"subject":"x","lhs":"3","rhs":"2","holds":true,"detail":"d"})");
}

TEST_CASE("csv quoting") {
    CHECK(csv_quote("plain") == "plain");
    CHECK(csv_quote("") == "");
    CHECK(csv_quote("a,b") == "\"a,b\"");
    CHECK(csv_quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_quote("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("sweep csv header") {
    CHECK(sweep_csv_header() ==
          "n,beta,num_maximizers,maximizers,ln_beta,normalized_gap,corollary_bound,"
          "staircase_upper\n");
}

TEST_CASE("schubert sweep csv") {
    const std::string want =
        "n,beta,num_maximizers,maximizers,ln_beta,normalized_gap,corollary_bound,"
        "staircase_upper\n"
        "1,1,1,1,0.000000000000,0.000000000000,,0.000000000000\n"
        "2,1,2,\"1,2;2,1\",0.000000000000,-0.693147180560,,0.693147180560\n"
        "3,2,1,\"1,3,2\",0.693147180560,-0.867563228481,1,1.791759469228\n";
    CHECK(beta_sweep_csv(3, PolyKind::Schubert) == want);
    // byte-identical on repeat runs
    CHECK(beta_sweep_csv(3, PolyKind::Schubert) == want);
}

TEST_CASE("grothendieck sweep csv") {
    const std::string want =
        "n,beta,num_maximizers,maximizers,ln_beta,normalized_gap,corollary_bound,"
        "staircase_upper\n"
        "1,1,1,1,0.000000000000,0.000000000000,1,0.000000000000\n"
        "2,1,2,\"1,2;2,1\",0.000000000000,-0.693147180560,1,0.693147180560\n"
        "3,3,1,\"1,3,2\",1.098612288668,-0.732408192445,2,1.791759469228\n";
    CHECK(beta_sweep_csv(3, PolyKind::Grothendieck) == want);
}

TEST_CASE("asymptotic table csv") {
    const std::string want =
        "n,beta,num_maximizers,maximizers,ln_beta,normalized_gap,corollary_bound,"
        "staircase_upper\n"
        "1,1,1,1,0.000000000000,0.000000000000,,0.000000000000\n"
        "2,1,2,\"1,2;2,1\",0.000000000000,-0.693147180560,,0.693147180560\n"
        "3,2,1,\"1,3,2\",0.693147180560,-0.867563228481,-5.801530075062,1.791759469228\n";
    CHECK(asymptotic_table_csv(3) == want);
}
