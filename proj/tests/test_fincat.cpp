#include <catch2/catch_amalgamated.hpp>

#include "dblcat/corpus.hpp"
#include "dblcat/fincat.hpp"
#include "dblcat/fincat_ops.hpp"

using namespace dblcat;

TEST_CASE("small categories validate") {
    for (const auto& c : {corpus::cat_one(), corpus::cat_two(), corpus::cat_three(),
                          corpus::cat_iso(), corpus::cat_commsq(), corpus::cat_idem()}) {
        INFO(c->name);
        auto r = validate_category(*c);
        INFO(r.summary());
        CHECK(r.ok());
    }
}

TEST_CASE("declaring a non-composable composite is malformed") {
    FinCategoryBuilder b("Bad2");
    b.object("0").object("1").mor("f", "0", "1");
    b.comp("f", "f", "f");
    CHECK_THROWS_AS(b.build(), MalformedTable);
}

TEST_CASE("missing associativity entry is a listed violation") {
    // chain with composite table entry removed afterwards
    auto c = *corpus::cat_three();
    int g = c.mo_index("g"), f = c.mo_index("f");
    c.comp[(size_t)g * c.nm() + f] = -1;
    auto r = validate_category(c);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations[0].law == "total-comp");
}

TEST_CASE("Cinv validates as a 2-category") {
    auto t = corpus::twocat_cinv();
    auto r = validate_two_category(*t);
    INFO(r.summary());
    CHECK(r.ok());
}

TEST_CASE("equivalences in 2-categories") {
    SECTION("identities are equivalences") {
        auto t = std::make_shared<TwoCategory>(discrete_2cat(*corpus::cat_two()));
        auto w = find_equivalence(*t, t->cat.mo_index("10"));
        REQUIRE(w.has_value());
        CHECK(w->g == t->cat.mo_index("10"));
    }
    SECTION("iso generators are equivalences, with identity witnesses") {
        auto t = std::make_shared<TwoCategory>(discrete_2cat(*corpus::cat_iso()));
        auto w = find_equivalence(*t, t->cat.mo_index("f"));
        REQUIRE(w.has_value());
        CHECK(w->g == t->cat.mo_index("g"));
    }
    SECTION("the generator of 2 is not an equivalence") {
        auto t = std::make_shared<TwoCategory>(discrete_2cat(*corpus::cat_two()));
        CHECK_FALSE(find_equivalence(*t, t->cat.mo_index("f")).has_value());
    }
    SECTION("the cells of Cinv are invertible") {
        auto t = corpus::twocat_cinv();
        CHECK(cell_invertible(*t, t->ce_index("x")));
        CHECK(cell_invertible(*t, t->ce_index("1f")));
        // f and g are parallel, so neither is an equivalence: no morphism back
        CHECK_FALSE(find_equivalence(*t, t->cat.mo_index("f")).has_value());
        CHECK_FALSE(find_equivalence(*t, t->cat.mo_index("g")).has_value());
    }
}

TEST_CASE("freeness decision") {
    SECTION("chain of length two is free") {
        auto rep = is_free_category(*corpus::cat_three());
        INFO(rep.reason);
        CHECK(rep.free);
        CHECK(rep.generators.size() == 2);
    }
    SECTION("commutative square is not free") {
        auto rep = is_free_category(*corpus::cat_commsq());
        CHECK_FALSE(rep.free);
    }
    SECTION("idempotent is not free") {
        auto rep = is_free_category(*corpus::cat_idem());
        CHECK_FALSE(rep.free);
    }
    SECTION("free isomorphism category is not free") {
        auto rep = is_free_category(*corpus::cat_iso());
        CHECK_FALSE(rep.free);
    }
    SECTION("terminal category is free on no generators") {
        CHECK(is_free_category(*corpus::cat_one()).free);
    }
}

TEST_CASE("disjoint unions of 1 and 2") {
    CHECK(is_disjoint_union_1_2(*corpus::cat_one()));
    CHECK(is_disjoint_union_1_2(*corpus::cat_two()));
    CHECK_FALSE(is_disjoint_union_1_2(*corpus::cat_three()));
    CHECK_FALSE(is_disjoint_union_1_2(*corpus::cat_iso()));
}

TEST_CASE("D and P") {
    SECTION("P(D(C)) = C on the corpus categories") {
        for (const auto& c : {corpus::cat_one(), corpus::cat_two(), corpus::cat_three(),
                              corpus::cat_iso(), corpus::cat_commsq()}) {
            auto p = pi0_truncate(discrete_2cat(*c));
            CHECK(p.ob == c->ob);
            CHECK(p.mo == c->mo);
            CHECK(p.comp == c->comp);
        }
    }
    SECTION("P collapses the invertible cell of Cinv") {
        auto p = pi0_truncate(*corpus::twocat_cinv());
        CHECK(p.nob() == 2);
        CHECK(p.nm() == 3);  // f ~ g, two identities
        CHECK(validate_category(p).ok());
    }
    SECTION("D of corpus categories validates") {
        auto t = discrete_2cat(*corpus::cat_iso());
        CHECK(validate_two_category(t).ok());
    }
}

TEST_CASE("category equivalence and isofibration") {
    auto one = corpus::cat_one();
    auto iso = corpus::cat_iso();
    SECTION("identity") {
        CatFunctor id{"id", one, one, {0}, {0}};
        CHECK(is_category_equivalence(id));
        CHECK(is_isofibration(id));
    }
    SECTION("inclusion of 1 into the free isomorphism") {
        CatFunctor F{"inc", one, iso, {iso->ob_index("0")}, {iso->mo_index("10")}};
        REQUIRE(validate_cat_functor(F).ok());
        CHECK(is_category_equivalence(F));
        CHECK_FALSE(is_isofibration(F));
    }
    SECTION("fold of 1+1 onto 1 is not an equivalence") {
        FinCategoryBuilder b("11");
        b.object("0").object("1");
        auto oo = std::make_shared<FinCategory>(b.build());
        CatFunctor F{"fold", oo, one, {0, 0}, {0, 0}};
        REQUIRE(validate_cat_functor(F).ok());
        CHECK_FALSE(is_category_equivalence(F));
        CHECK(is_isofibration(F));
    }
}

TEST_CASE("biequivalence checks on 2-functors") {
    auto d2 = std::make_shared<TwoCategory>(discrete_2cat(*corpus::cat_two()));
    auto d1 = std::make_shared<TwoCategory>(discrete_2cat(*corpus::cat_one()));
    SECTION("identity passes") {
        CHECK(check_biequivalence(identity_two_functor(d2)).pass());
        CHECK(check_lack_fibration(identity_two_functor(d2)).pass());
    }
    SECTION("the unique 2-functor D2 -> D1 fails b3") {
        TwoFunctor F;
        F.name = "!";
        F.src = d2;
        F.tgt = d1;
        F.ob = {0, 0};
        F.mo = {0, 0, 0};
        F.ce = {0, 0, 0};
        REQUIRE(validate_two_functor(F).ok());
        auto rep = check_biequivalence(F);
        CHECK(rep.passes("b1"));
        CHECK_FALSE(rep.passes("b3"));
        CHECK_FALSE(rep.pass());
    }
    SECTION("inclusion of 1 into D(Iso) is a biequivalence but not a fibration") {
        auto diso = std::make_shared<TwoCategory>(discrete_2cat(*corpus::cat_iso()));
        TwoFunctor F;
        F.name = "inc";
        F.src = d1;
        F.tgt = diso;
        F.ob = {diso->cat.ob_index("0")};
        F.mo = {diso->cat.mo_index("10")};
        F.ce = {diso->ce_index("110")};
        REQUIRE(validate_two_functor(F).ok());
        CHECK(check_biequivalence(F).pass());
        auto fib = check_lack_fibration(F);
        CHECK_FALSE(fib.passes("f1"));
    }
    SECTION("anything into the terminal 2-category is a Lack fibration") {
        auto diso = std::make_shared<TwoCategory>(discrete_2cat(*corpus::cat_iso()));
        TwoFunctor F;
        F.name = "!";
        F.src = diso;
        F.tgt = d1;
        F.ob = {0, 0};
        F.mo = {0, 0, 0, 0};
        F.ce = {0, 0, 0, 0};
        REQUIRE(validate_two_functor(F).ok());
        CHECK(check_lack_fibration(F).pass());
    }
}

TEST_CASE("2-functor enumeration counts") {
    Budget budget;
    auto d2 = std::make_shared<TwoCategory>(discrete_2cat(*corpus::cat_two()));
    auto fs = all_two_functors(d2, d2, budget);
    CHECK(fs.size() == 3);  // f -> f, id0, id1
}

TEST_CASE("pseudo hom 2-categories") {
    Budget budget;
    auto d1 = std::make_shared<TwoCategory>(discrete_2cat(*corpus::cat_one()));
    auto d2 = std::make_shared<TwoCategory>(discrete_2cat(*corpus::cat_two()));
    SECTION("Ps(1,B) is isomorphic to B") {
        auto H = pseudo_hom_2cat(d1, d2, budget);
        auto r = validate_two_category(H.two);
        INFO(r.summary());
        REQUIRE(r.ok());
        CHECK(isomorphic(std::make_shared<TwoCategory>(H.two), d2, budget));
    }
    SECTION("Ps(D2,D2) has three objects") {
        auto H = pseudo_hom_2cat(d2, d2, budget);
        CHECK((int)H.objects.size() == 3);
        CHECK(validate_two_category(H.two).ok());
    }
    SECTION("Ps(Cinv,Cinv): pseudo transformations see the invertible cell") {
        auto cv = corpus::twocat_cinv();
        auto H = pseudo_hom_2cat(cv, cv, budget);
        auto r = validate_two_category(H.two);
        INFO(r.summary());
        CHECK(r.ok());
    }
}
