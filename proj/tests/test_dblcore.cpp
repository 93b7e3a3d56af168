#include <catch2/catch_amalgamated.hpp>

#include "dblcat/corpus.hpp"
#include "dblcat/dbl.hpp"

using namespace dblcat;

TEST_CASE("corpus double categories validate") {
    for (const auto& d : corpus::all_double_categories()) {
        INFO(d->name);
        auto r = validate_double_category(*d);
        INFO(r.summary());
        CHECK(r.ok());
    }
}

TEST_CASE("corpus functors validate") {
    for (const auto& F : corpus::all_functors()) {
        INFO(F.name);
        auto r = validate_double_functor(F);
        INFO(r.summary());
        CHECK(r.ok());
    }
}

TEST_CASE("free square has the advertised cell counts") {
    auto s = corpus::sq();
    CHECK(s->nob() == 4);
    CHECK(s->nh() == 6);   // a, b and four identities
    CHECK(s->nv() == 6);
    CHECK(s->ns() == 9);   // alpha, e_a, e_b, id_u, id_v, four boxes
}

TEST_CASE("declaring a non-composable square composite is malformed") {
    DoubleCategoryBuilder b("Bad");
    b.object("0").object("1").object("0p").object("1p");
    b.hmor("a", "0", "1").hmor("b", "0p", "1p");
    b.vmor("u", "0", "0p").vmor("v", "1", "1p");
    b.square("alpha", "a", "b", "u", "v");
    b.sq_hcomp("alpha", "alpha", "alpha");  // right(alpha) != left(alpha)
    CHECK_THROWS_AS(b.build(), MalformedTable);
}

TEST_CASE("identity coherence violations are reported") {
    // manual build of One, then break the box identity
    DoubleCategoryBuilder b("One");
    b.object("0");
    auto d = b.build();
    SECTION("valid as built") { CHECK(validate_double_category(d).ok()); }
    SECTION("broken unit entry is caught") {
        d.hm_comp[0] = -1;
        auto r = validate_double_category(d);
        CHECK_FALSE(r.ok());
    }
}
