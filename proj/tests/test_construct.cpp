#include <catch2/catch_amalgamated.hpp>

#include "dblcat/construct.hpp"
#include "dblcat/corpus.hpp"
#include "dblcat/dbl_ops.hpp"
#include "dblcat/fincat_ops.hpp"

using namespace dblcat;

namespace {
DblPtr ptr(DoubleCategory d) { return std::make_shared<DoubleCategory>(std::move(d)); }
TwoCatPtr ptr2(TwoCategory t) { return std::make_shared<TwoCategory>(std::move(t)); }
}  // namespace

TEST_CASE("coproduct and product shapes") {
    Budget budget;
    auto one = corpus::one();
    auto s = corpus::sq();
    auto v2 = corpus::two_v();
    SECTION("1+1 has two objects and only identities") {
        auto c = coproduct(*one, *one);
        CHECK(c.nob() == 2);
        CHECK(c.nh() == 2);
        CHECK(c.ns() == 2);
        CHECK(validate_double_category(c).ok());
    }
    SECTION("1 x A is isomorphic to A") {
        auto p = ptr(product(*one, *s));
        CHECK(validate_double_category(*p).ok());
        CHECK(isomorphic(p, s, budget));
    }
    SECTION("square counts multiply") {
        auto p = product(*s, *v2);
        CHECK(p.ns() == s->ns() * v2->ns());
        CHECK(validate_double_category(p).ok());
    }
}

TEST_CASE("transpose is an involution and swaps the corpus shapes") {
    Budget budget;
    for (const auto& d : corpus::all_double_categories()) {
        auto t = transpose(*d);
        INFO(d->name);
        CHECK(validate_double_category(t).ok());
        auto tt = transpose(t);
        tt.name = d->name;
        CHECK(tt.ob == d->ob);
        CHECK(tt.sq_hcomp == d->sq_hcomp);
    }
    CHECK(isomorphic(ptr(transpose(*corpus::two_v())), corpus::two_h(), budget));
    CHECK(isomorphic(ptr(transpose(*corpus::sq())), corpus::sq(), budget));
}

TEST_CASE("functor enumeration counts") {
    Budget budget;
    SECTION("out of the terminal double category") {
        auto fs = all_double_functors(corpus::one(), corpus::sq(), budget);
        CHECK(fs.size() == 4);
    }
    SECTION("V2 -> V2: u can land on u, e0, e1") {
        auto fs = all_double_functors(corpus::two_v(), corpus::two_v(), budget);
        CHECK(fs.size() == 3);
    }
    SECTION("H2 -> Sq: one functor per horizontal morphism") {
        auto fs = all_double_functors(corpus::two_h(), corpus::sq(), budget);
        CHECK(fs.size() == 6);
    }
    SECTION("every enumerated functor validates") {
        for (auto& F : all_double_functors(corpus::sq(), corpus::sq(), budget)) {
            INFO(F.name);
            CHECK(validate_double_functor(F).ok());
        }
    }
}

TEST_CASE("unpruned brute force agrees with the enumerator") {
    // independent oracle: try every raw assignment of generators-free cells
    // (all cells), checking functor laws at the leaves only
    auto brute_count = [](const DblPtr& A, const DblPtr& B) {
        long long count = 0;
        std::vector<int> ob(A->nob()), hm(A->nh()), vm(A->nv()), sq(A->ns());
        std::function<void(int)> go_sq = [&](int i) {
            if (i == A->ns()) {
                DoubleFunctor F{"bf", A, B, ob, hm, vm, sq};
                if (validate_double_functor(F).ok()) ++count;
                return;
            }
            for (int x = 0; x < B->ns(); ++x) {
                sq[i] = x;
                go_sq(i + 1);
            }
        };
        std::function<void(int)> go_vm = [&](int i) {
            if (i == A->nv()) {
                go_sq(0);
                return;
            }
            for (int x = 0; x < B->nv(); ++x) {
                vm[i] = x;
                go_vm(i + 1);
            }
        };
        std::function<void(int)> go_hm = [&](int i) {
            if (i == A->nh()) {
                go_vm(0);
                return;
            }
            for (int x = 0; x < B->nh(); ++x) {
                hm[i] = x;
                go_hm(i + 1);
            }
        };
        std::function<void(int)> go_ob = [&](int i) {
            if (i == A->nob()) {
                go_hm(0);
                return;
            }
            for (int x = 0; x < B->nob(); ++x) {
                ob[i] = x;
                go_ob(i + 1);
            }
        };
        go_ob(0);
        return count;
    };
    Budget budget;
    std::vector<std::pair<DblPtr, DblPtr>> pairs = {
        {corpus::one(), corpus::two_v()},
        {corpus::two_v(), corpus::two_v()},
        {corpus::two_h(), corpus::two_h()},
        {corpus::two_h(), corpus::cinv_h()},
        {corpus::two_v(), corpus::sq()},
        {corpus::one_one(), corpus::iso_h()},
    };
    for (auto& [A, B] : pairs) {
        INFO(A->name << " -> " << B->name);
        CHECK((long long)all_double_functors(A, B, budget).size() ==
              brute_count(A, B));
    }
}

TEST_CASE("horizontal embedding and its retraction") {
    Budget budget;
    auto d2 = ptr2(discrete_2cat(*corpus::cat_two()));
    SECTION("H(D2) is the corpus TwoH") {
        auto h = ptr(horizontal_embed(*d2));
        CHECK(validate_double_category(*h).ok());
        CHECK(isomorphic(h, corpus::two_h(), budget));
    }
    SECTION("underlying horizontal of an embedding recovers the input exactly") {
        for (const auto& t : {d2, corpus::twocat_cinv()}) {
            auto h = horizontal_embed(*t);
            auto back = underlying_horizontal(h);
            CHECK(back.two.cat.ob == t->cat.ob);
            CHECK(back.two.cat.mo == t->cat.mo);
            CHECK(back.two.cat.comp == t->cat.comp);
            CHECK(back.two.ce == t->ce);
            CHECK(back.two.vc == t->vc);
            CHECK(back.two.hc == t->hc);
        }
    }
    SECTION("H(V2) is 1+1") {
        auto h = underlying_horizontal(*corpus::two_v());
        CHECK(h.two.nob() == 2);
        CHECK(h.two.nm() == 2);
        CHECK(h.two.ncell() == 2);
        CHECK(validate_two_category(h.two).ok());
    }
    SECTION("H(Sq) is D2 + D2") {
        auto h = underlying_horizontal(*corpus::sq());
        REQUIRE(validate_two_category(h.two).ok());
        // two components, each a copy of the walking arrow
        CHECK(h.two.nob() == 4);
        CHECK(h.two.nm() == 6);
        auto embedded = ptr(horizontal_embed(h.two));
        auto expect = ptr(coproduct(horizontal_embed(discrete_2cat(*corpus::cat_two())),
                                    horizontal_embed(discrete_2cat(*corpus::cat_two()))));
        CHECK(isomorphic(embedded, expect, budget));
    }
    SECTION("underlying vertical of Sq is 2 + 2") {
        auto v = underlying_vertical(*corpus::sq());
        CHECK(validate_two_category(v.two).ok());
        CHECK_FALSE(is_free_category(v.two.cat).free == false);  // free on u, v
        CHECK(is_disjoint_union_1_2(v.two.cat));
    }
}

TEST_CASE("vertical embedding") {
    Budget budget;
    auto d2 = discrete_2cat(*corpus::cat_two());
    CHECK(isomorphic(ptr(vertical_embed(d2)), corpus::two_v(), budget));
    auto d3 = discrete_2cat(*corpus::cat_three());
    CHECK(isomorphic(ptr(vertical_embed(d3)), corpus::v_three(), budget));
}

TEST_CASE("the functor V") {
    Budget budget;
    SECTION("V(V2) is discrete with three objects") {
        auto v = vertical_cells(*corpus::two_v());
        REQUIRE(validate_two_category(v.two).ok());
        CHECK(v.two.nob() == 3);
        CHECK(v.two.nm() == 3);   // identities only
        CHECK(v.two.ncell() == 3);
    }
    SECTION("V(1) = 1") {
        auto v = vertical_cells(*corpus::one());
        CHECK(v.two.nob() == 1);
        CHECK(v.two.nm() == 1);
    }
    SECTION("V(Sq) has six objects") {
        auto v = vertical_cells(*corpus::sq());
        REQUIRE(validate_two_category(v.two).ok());
        CHECK(v.two.nob() == 6);
    }
    SECTION("V(A) agrees with H[V2,A] for the small corpus") {
        for (const auto& A : {corpus::one(), corpus::two_v(), corpus::two_h(),
                              corpus::sq(), corpus::cinv_h(), corpus::iso_h(),
                              corpus::v_three()}) {
            INFO(A->name);
            auto direct = vertical_cells(*A);
            auto hom = internal_hom(corpus::two_v(), A, budget);
            auto viaHom = underlying_horizontal(hom.hom);
            REQUIRE(validate_two_category(viaHom.two).ok());
            CHECK(isomorphic(ptr(horizontal_embed(direct.two)),
                             ptr(horizontal_embed(viaHom.two)), budget));
        }
    }
}

TEST_CASE("L is H(-) x V2") {
    Budget budget;
    auto l1 = left_adjoint_L(discrete_2cat(*corpus::cat_one()), *corpus::two_v());
    CHECK(isomorphic(ptr(l1), corpus::two_v(), budget));
    auto l2 = left_adjoint_L(discrete_2cat(*corpus::cat_two()), *corpus::two_v());
    CHECK(l2.nob() == 4);
    CHECK(validate_double_category(l2).ok());
}

TEST_CASE("internal hom") {
    Budget budget;
    SECTION("[1,B] is isomorphic to B") {
        for (const auto& B : {corpus::two_v(), corpus::sq(), corpus::cinv_h()}) {
            INFO(B->name);
            auto H = internal_hom(corpus::one(), B, budget);
            REQUIRE(validate_double_category(H.hom).ok());
            CHECK(isomorphic(ptr(H.hom), B, budget));
        }
    }
    SECTION("[V2,V2] has three objects and is horizontally discrete") {
        auto H = internal_hom(corpus::two_v(), corpus::two_v(), budget);
        REQUIRE(validate_double_category(H.hom).ok());
        CHECK(H.hom.nob() == 3);
        CHECK(H.hom.nh() == 3);  // H[V2,V2] is 1+1+1
        // vertically it is the chain e0 => id => e1, i.e. V3
        CHECK(isomorphic(ptr(H.hom), corpus::v_three(), budget));
    }
}

TEST_CASE("isomorphism search rejects non-isomorphic pairs") {
    Budget budget;
    CHECK_FALSE(isomorphic(corpus::sq(), corpus::sq2(), budget));
    CHECK_FALSE(isomorphic(corpus::two_h(), corpus::two_v(), budget));
    CHECK(isomorphic(corpus::sq(), corpus::sq(), budget));
}
