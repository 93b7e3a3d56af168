#include <catch2/catch_amalgamated.hpp>

#include "dblcat/construct.hpp"
#include "dblcat/corpus.hpp"
#include "dblcat/equiv.hpp"

using namespace dblcat;

TEST_CASE("horizontal equivalences") {
    SECTION("identity morphisms, with box witnesses") {
        auto A = corpus::one();
        auto w = find_horizontal_equivalence(*A, A->idh[0]);
        REQUIRE(w.has_value());
        CHECK(w->ainv == A->idh[0]);
        CHECK(w->eta == A->box(0));
        CHECK(w->eps == A->box(0));
        CHECK(verify_hequiv_witness(*A, *w));
    }
    SECTION("f in H(Iso) is an equivalence with identity squares") {
        auto A = corpus::iso_h();
        auto w = find_horizontal_equivalence(*A, A->hm_index("f"));
        REQUIRE(w.has_value());
        CHECK(w->ainv == A->hm_index("g"));
        CHECK(verify_hequiv_witness(*A, *w));
    }
    SECTION("the generator of Sq is not an equivalence") {
        auto A = corpus::sq();
        CHECK_FALSE(find_horizontal_equivalence(*A, A->hm_index("a")).has_value());
    }
    SECTION("f in H(Cinv) is not an equivalence (parallel pair)") {
        auto A = corpus::cinv_h();
        CHECK_FALSE(find_horizontal_equivalence(*A, A->hm_index("f")).has_value());
    }
}

TEST_CASE("adjoint promotion") {
    SECTION("identity witness is already adjoint") {
        auto A = corpus::one();
        auto w = *find_horizontal_equivalence(*A, A->idh[0]);
        auto adj = promote_to_adjoint(*A, w);
        CHECK(adj.w.eps == w.eps);
        CHECK(triangle_identities_hold(*A, adj.w));
    }
    SECTION("all corpus equivalences promote and verify") {
        for (const auto& A : corpus::all_double_categories()) {
            for (int a = 0; a < A->nh(); ++a) {
                auto w = find_horizontal_equivalence(*A, a);
                if (!w) continue;
                INFO(A->name << " " << A->hm[a]);
                auto adj = promote_to_adjoint(*A, *w);
                CHECK(triangle_identities_hold(*A, adj.w));
                CHECK(verify_hequiv_witness(*A, adj.w));
            }
        }
    }
    SECTION("witnesses in H(Iso) are already adjoint") {
        auto A = corpus::iso_h();
        auto w = *find_horizontal_equivalence(*A, A->hm_index("f"));
        auto adj = promote_to_adjoint(*A, w);
        CHECK(adj.w.eta == w.eta);
        CHECK(adj.w.eps == w.eps);
    }
}

TEST_CASE("weak horizontal invertibility") {
    SECTION("boxes and horizontal identity squares are weakly invertible") {
        auto A = corpus::two_v();
        int u = A->vm_index("u");
        auto w = find_weak_horizontal_inverse(*A, A->idsq[u]);
        REQUIRE(w.has_value());
        CHECK(w->beta == A->idsq[u]);
        CHECK(verify_weak_inverse_witness(*A, *w));
    }
    SECTION("the generator square of Sq is not weakly invertible") {
        auto A = corpus::sq();
        CHECK_FALSE(find_weak_horizontal_inverse(*A, A->sq_index("alpha")).has_value());
    }
    SECTION("the invertible cell of H(Cinv) is weakly invertible") {
        auto A = corpus::cinv_h();
        auto w = find_weak_horizontal_inverse(*A, A->sq_index("x"));
        // top boundary f is not a horizontal equivalence, so x is not
        CHECK_FALSE(w.has_value());
        // but identity-boundary squares are
        CHECK(find_weak_horizontal_inverse(*A, A->box(0)).has_value());
    }
    SECTION("symmetry: the weak inverse is weakly invertible") {
        for (const auto& A : corpus::all_double_categories()) {
            for (int s = 0; s < A->ns(); ++s) {
                auto w = find_weak_horizontal_inverse(*A, s);
                if (!w) continue;
                INFO(A->name << " " << A->sq[s]);
                CHECK(find_weak_horizontal_inverse(*A, w->beta).has_value());
            }
        }
    }
}

TEST_CASE("unique weak inverse (Lemma on adjoint data)") {
    SECTION("box with identity adjoint data") {
        auto A = corpus::one();
        auto adj = promote_to_adjoint(*A, *find_horizontal_equivalence(*A, 0));
        CHECK(unique_weak_inverse(*A, A->box(0), adj, adj) == A->box(0));
    }
    SECTION("id_u with identity adjoint data") {
        auto A = corpus::two_v();
        int u = A->vm_index("u");
        auto adj0 = promote_to_adjoint(
            *A, *find_horizontal_equivalence(*A, A->idh[A->vsrc[u]]));
        auto adj1 = promote_to_adjoint(
            *A, *find_horizontal_equivalence(*A, A->idh[A->vtgt[u]]));
        CHECK(unique_weak_inverse(*A, A->idsq[u], adj0, adj1) == A->idsq[u]);
    }
    SECTION("uniqueness holds for every weakly invertible corpus square") {
        for (const auto& A : corpus::all_double_categories()) {
            for (int s = 0; s < A->ns(); ++s) {
                auto w = find_weak_horizontal_inverse(*A, s);
                if (!w) continue;
                INFO(A->name << " " << A->sq[s]);
                auto at = promote_to_adjoint(*A, w->top);
                auto ab = promote_to_adjoint(*A, w->bot);
                CHECK_NOTHROW(unique_weak_inverse(*A, s, at, ab));
            }
        }
    }
}

TEST_CASE("weakly invertible iff vertically invertible, on globular equivalences") {
    for (const auto& A : corpus::all_double_categories()) {
        INFO(A->name);
        auto rep = check_lemma_220(*A);
        INFO(rep.summary());
        CHECK(rep.pass());
    }
}
