#include <catch2/catch_amalgamated.hpp>

#include "dblcat/construct.hpp"
#include "dblcat/corpus.hpp"
#include "dblcat/model.hpp"

using namespace dblcat;

TEST_CASE("double biequivalence check") {
    SECTION("identities pass") {
        for (const auto& A : corpus::all_double_categories()) {
            INFO(A->name);
            CHECK(check_double_biequivalence(identity_functor(A)).pass());
        }
    }
    SECTION("the counit at V2 fails exactly db3") {
        auto rep = check_double_biequivalence(corpus::epsilon_v2());
        CHECK(rep.passes("db1"));
        CHECK(rep.passes("db2"));
        CHECK_FALSE(rep.passes("db3"));
        CHECK(rep.passes("db4"));
    }
    SECTION("I5 fails db4 (two preimages of the nontrivial square)") {
        auto rep = check_double_biequivalence(corpus::i5());
        CHECK_FALSE(rep.passes("db4"));
    }
    SECTION("J2 is a trivial cofibration, in particular a biequivalence") {
        CHECK(check_double_biequivalence(corpus::j2()).pass());
    }
}

TEST_CASE("double fibration check") {
    SECTION("everything is fibrant: A -> 1 is always a double fibration") {
        auto one = corpus::one();
        for (const auto& A : corpus::all_double_categories()) {
            INFO(A->name);
            DoubleFunctor F;
            F.name = "!";
            F.src = A;
            F.tgt = one;
            F.ob.assign(A->nob(), 0);
            F.hm.assign(A->nh(), 0);
            F.vm.assign(A->nv(), 0);
            F.sq.assign(A->ns(), 0);
            REQUIRE(validate_double_functor(F).ok());
            CHECK(check_double_fibration(F).pass());
        }
    }
    SECTION("identity passes") {
        CHECK(check_double_fibration(identity_functor(corpus::sq())).pass());
    }
    SECTION("inclusion of 1 into H(Iso) fails df1") {
        auto iso = corpus::iso_h();
        auto F = corpus::functor_on_generators("inc", corpus::one(), iso, {{"0", "0"}});
        REQUIRE(validate_double_functor(F).ok());
        auto rep = check_double_fibration(F);
        CHECK_FALSE(rep.passes("df1"));
        // but it is a double biequivalence
        CHECK(check_double_biequivalence(F).pass());
    }
}

TEST_CASE("double trivial fibration check") {
    SECTION("identity passes") {
        CHECK(check_double_trivial_fibration(identity_functor(corpus::cinv_h())).pass());
    }
    SECTION("I5 fails dt4") {
        auto rep = check_double_trivial_fibration(corpus::i5());
        CHECK(rep.passes("dt1"));
        CHECK(rep.passes("dt2"));
        CHECK(rep.passes("dt3"));
        CHECK_FALSE(rep.passes("dt4"));
    }
    SECTION("the counit at V2 fails dt3") {
        auto rep = check_double_trivial_fibration(corpus::epsilon_v2());
        CHECK_FALSE(rep.passes("dt3"));
    }
}

TEST_CASE("lifting solver") {
    Budget budget;
    SECTION("lift through an isomorphism always exists") {
        auto s = corpus::sq();
        auto i4 = corpus::i4();
        auto id = identity_functor(s);
        auto top = corpus::functor_on_generators(
            "t", corpus::d_sq(), s, {{"0", "0"}, {"1", "1"}, {"0p", "0p"}, {"1p", "1p"}},
            {{"a", "a"}, {"b", "b"}}, {{"u", "u"}, {"v", "v"}});
        auto lift = solve_lifting(i4, id, top, id, budget);
        REQUIRE(lift.has_value());
        CHECK(validate_double_functor(*lift).ok());
    }
    SECTION("no lift of I3 against the counit at V2") {
        auto i3 = corpus::i3();
        auto p = corpus::epsilon_v2();
        auto top = corpus::functor_on_generators("t", corpus::empty_dbl(), p.src, {});
        auto bottom = identity_functor(corpus::two_v());
        // square: p∘top = bottom∘i3 on the empty source, trivially commutes
        CHECK_FALSE(solve_lifting(i3, p, top, bottom, budget).has_value());
    }
    SECTION("I4 lifts against I5 by choosing one of the two squares") {
        auto i4 = corpus::i4();
        auto p = corpus::i5();
        auto top = corpus::functor_on_generators(
            "t", corpus::d_sq(), corpus::sq2(),
            {{"0", "0"}, {"1", "1"}, {"0p", "0p"}, {"1p", "1p"}},
            {{"a", "a"}, {"b", "b"}}, {{"u", "u"}, {"v", "v"}});
        auto bottom = identity_functor(corpus::sq());
        auto lift = solve_lifting(i4, p, top, bottom, budget);
        REQUIRE(lift.has_value());
        // the first square in id-order is alpha0
        CHECK(lift->sq[corpus::sq()->sq_index("alpha")] ==
              corpus::sq2()->sq_index("alpha0"));
    }
}

TEST_CASE("RLP against the generating cofibrations") {
    Budget budget;
    auto gens = std::vector<DoubleFunctor>{corpus::i1(), corpus::i2(), corpus::i3(),
                                           corpus::i4(), corpus::i5()};
    SECTION("identities have the RLP") {
        CHECK(has_rlp_generating_cofibrations(identity_functor(corpus::sq()), gens,
                                              budget));
    }
    SECTION("I5 itself does not") {
        std::string cx;
        CHECK_FALSE(has_rlp_generating_cofibrations(corpus::i5(), gens, budget, &cx));
    }
    SECTION("Sq -> 1 does not (it collapses two boundaries onto one square)") {
        auto one = corpus::one();
        auto s = corpus::sq();
        DoubleFunctor F;
        F.name = "!";
        F.src = s;
        F.tgt = one;
        F.ob.assign(s->nob(), 0);
        F.hm.assign(s->nh(), 0);
        F.vm.assign(s->nv(), 0);
        F.sq.assign(s->ns(), 0);
        bool rlp = has_rlp_generating_cofibrations(F, gens, budget);
        bool dtf = check_double_trivial_fibration(F).pass();
        CHECK(rlp == dtf);
        CHECK_FALSE(rlp);
    }
}

TEST_CASE("cofibrancy") {
    SECTION("V2 and Sq are cofibrant") {
        CHECK(is_cofibrant(*corpus::two_v()).cofibrant);
        CHECK(is_cofibrant(*corpus::sq()).cofibrant);
        CHECK(is_cofibrant(*corpus::two_h()).cofibrant);
        CHECK(is_cofibrant(*corpus::one()).cofibrant);
    }
    SECTION("VThree is not: its vertical category composes") {
        auto rep = is_cofibrant(*corpus::v_three());
        CHECK(rep.horizontal.free);
        CHECK_FALSE(rep.vertical_ok);
        CHECK_FALSE(rep.cofibrant);
    }
    SECTION("H(Iso) is not: its horizontal category is not free") {
        CHECK_FALSE(is_cofibrant(*corpus::iso_h()).cofibrant);
    }
}

TEST_CASE("necessary conditions for cofibrations") {
    SECTION("I4 passes") {
        CHECK(cofibration_necessary_conditions(corpus::i4()).pass());
    }
    SECTION("I5 passes: it is injective on objects and morphisms") {
        CHECK(cofibration_necessary_conditions(corpus::i5()).pass());
    }
    SECTION("folding 1+1 onto 1 fails injectivity on objects") {
        auto oo = corpus::one_one();
        auto one = corpus::one();
        DoubleFunctor F;
        F.name = "fold";
        F.src = oo;
        F.tgt = one;
        F.ob = {0, 0};
        F.hm = {0, 0};
        F.vm = {0, 0};
        F.sq = {0, 0};
        auto rep = cofibration_necessary_conditions(F);
        CHECK_FALSE(rep.passes("inj-objects"));
    }
}

TEST_CASE("characterization against the underlying 2-functors, corpus spot checks") {
    Budget budget;
    for (const auto& F : corpus::all_functors()) {
        INFO(F.name);
        auto srcH = underlying_horizontal(*F.src);
        auto tgtH = underlying_horizontal(*F.tgt);
        auto srcHp = std::make_shared<TwoCategory>(srcH.two);
        auto tgtHp = std::make_shared<TwoCategory>(tgtH.two);
        auto HF = underlying_horizontal(F, srcHp, srcH, tgtHp, tgtH);
        REQUIRE(validate_two_functor(HF).ok());

        auto srcV = vertical_cells(*F.src);
        auto tgtV = vertical_cells(*F.tgt);
        auto srcVp = std::make_shared<TwoCategory>(srcV.two);
        auto tgtVp = std::make_shared<TwoCategory>(tgtV.two);
        auto VF = vertical_cells(F, srcVp, srcV, tgtVp, tgtV);
        REQUIRE(validate_two_functor(VF).ok());

        bool dbl = check_double_biequivalence(F).pass();
        bool two = check_biequivalence(HF).pass() && check_biequivalence(VF).pass();
        CHECK(dbl == two);

        bool dfib = check_double_fibration(F).pass();
        bool lfib = check_lack_fibration(HF).pass() && check_lack_fibration(VF).pass();
        CHECK(dfib == lfib);

        bool dtf = check_double_trivial_fibration(F).pass();
        CHECK(dtf == (dbl && dfib));
    }
}
