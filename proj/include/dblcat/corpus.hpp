#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dblcat/dbl.hpp"
#include "dblcat/fincat.hpp"

namespace dblcat::corpus {

// The builtin instances used across the test corpus: the generating-set
// shapes and the small (2-)categories they are built from.

inline DblPtr empty_dbl() {
    auto d = std::make_shared<DoubleCategory>();
    d->name = "Empty";
    return d;
}

inline DblPtr one() {
    DoubleCategoryBuilder b("One");
    b.object("0");
    return std::make_shared<DoubleCategory>(b.build());
}

inline DblPtr one_one() {
    DoubleCategoryBuilder b("OneOne");
    b.object("0").object("1");
    return std::make_shared<DoubleCategory>(b.build());
}

// free horizontal morphism
inline DblPtr two_h() {
    DoubleCategoryBuilder b("TwoH");
    b.object("0").object("1").hmor("f", "0", "1");
    return std::make_shared<DoubleCategory>(b.build());
}

// free vertical morphism
inline DblPtr two_v() {
    DoubleCategoryBuilder b("TwoV");
    b.object("0").object("1").vmor("u", "0", "1");
    return std::make_shared<DoubleCategory>(b.build());
}

// free square
inline DblPtr sq() {
    DoubleCategoryBuilder b("Sq");
    b.object("0").object("1").object("0p").object("1p");
    b.hmor("a", "0", "1").hmor("b", "0p", "1p");
    b.vmor("u", "0", "0p").vmor("v", "1", "1p");
    b.square("alpha", "a", "b", "u", "v");
    return std::make_shared<DoubleCategory>(b.build());
}

// boundary of the free square
inline DblPtr d_sq() {
    DoubleCategoryBuilder b("dSq");
    b.object("0").object("1").object("0p").object("1p");
    b.hmor("a", "0", "1").hmor("b", "0p", "1p");
    b.vmor("u", "0", "0p").vmor("v", "1", "1p");
    return std::make_shared<DoubleCategory>(b.build());
}

// two squares sharing one boundary
inline DblPtr sq2() {
    DoubleCategoryBuilder b("Sq2");
    b.object("0").object("1").object("0p").object("1p");
    b.hmor("a", "0", "1").hmor("b", "0p", "1p");
    b.vmor("u", "0", "0p").vmor("v", "1", "1p");
    b.square("alpha0", "a", "b", "u", "v");
    b.square("alpha1", "a", "b", "u", "v");
    return std::make_shared<DoubleCategory>(b.build());
}

// horizontal double category of the free invertible 2-cell
inline DblPtr cinv_h() {
    DoubleCategoryBuilder b("CinvH");
    b.object("0").object("1");
    b.hmor("f", "0", "1").hmor("g", "0", "1");
    b.square("x", "f", "g", "e0", "e1");
    b.square("xinv", "g", "f", "e0", "e1");
    b.sq_vcomp("xinv", "x", "ef");
    b.sq_vcomp("x", "xinv", "eg");
    return std::make_shared<DoubleCategory>(b.build());
}

// horizontal double category of the free isomorphism
inline DblPtr iso_h() {
    DoubleCategoryBuilder b("IsoH");
    b.object("0").object("1");
    b.hmor("f", "0", "1").hmor("g", "1", "0");
    b.hcomp("g", "f", "h0");
    b.hcomp("f", "g", "h1");
    return std::make_shared<DoubleCategory>(b.build());
}

// vertical double category of the composable chain 0 -> 1 -> 2
inline DblPtr v_three() {
    DoubleCategoryBuilder b("VThree");
    b.object("0").object("1").object("2");
    b.vmor("u01", "0", "1").vmor("u12", "1", "2").vmor("u02", "0", "2");
    b.vcomp("u12", "u01", "u02");
    return std::make_shared<DoubleCategory>(b.build());
}

// ------------------------------------------------------------- functors

inline DoubleFunctor named_functor(std::string name, DblPtr src, DblPtr tgt,
                                   const std::vector<std::pair<std::string, std::string>>& obs,
                                   const std::vector<std::pair<std::string, std::string>>& hms,
                                   const std::vector<std::pair<std::string, std::string>>& vms,
                                   const std::vector<std::pair<std::string, std::string>>& sqs) {
    DoubleFunctor F;
    F.name = std::move(name);
    F.src = std::move(src);
    F.tgt = std::move(tgt);
    F.ob.assign(F.src->nob(), -1);
    F.hm.assign(F.src->nh(), -1);
    F.vm.assign(F.src->nv(), -1);
    F.sq.assign(F.src->ns(), -1);
    for (auto& [x, y] : obs) F.ob[F.src->ob_index(x)] = F.tgt->ob_index(y);
    for (auto& [x, y] : hms) F.hm[F.src->hm_index(x)] = F.tgt->hm_index(y);
    for (auto& [x, y] : vms) F.vm[F.src->vm_index(x)] = F.tgt->vm_index(y);
    for (auto& [x, y] : sqs) F.sq[F.src->sq_index(x)] = F.tgt->sq_index(y);
    for (auto* v : {&F.ob, &F.hm, &F.vm, &F.sq})
        for (int x : *v)
            if (x < 0) throw MalformedMap("functor " + F.name + " map incomplete");
    return F;
}

// Fills identity cells and already-determined composites of a partially
// given functor; the explicit lists only need the generators.
inline DoubleFunctor functor_on_generators(
    std::string name, DblPtr src, DblPtr tgt,
    const std::vector<std::pair<std::string, std::string>>& obs,
    const std::vector<std::pair<std::string, std::string>>& hms = {},
    const std::vector<std::pair<std::string, std::string>>& vms = {},
    const std::vector<std::pair<std::string, std::string>>& sqs = {}) {
    const DoubleCategory &A = *src, &B = *tgt;
    DoubleFunctor F;
    F.name = std::move(name);
    F.src = src;
    F.tgt = tgt;
    F.ob.assign(A.nob(), -1);
    F.hm.assign(A.nh(), -1);
    F.vm.assign(A.nv(), -1);
    F.sq.assign(A.ns(), -1);
    for (auto& [x, y] : obs) F.ob[A.ob_index(x)] = B.ob_index(y);
    for (auto& [x, y] : hms) F.hm[A.hm_index(x)] = B.hm_index(y);
    for (auto& [x, y] : vms) F.vm[A.vm_index(x)] = B.vm_index(y);
    for (auto& [x, y] : sqs) F.sq[A.sq_index(x)] = B.sq_index(y);
    for (int o : F.ob)
        if (o < 0) throw MalformedMap(F.name + ": all objects must be given");
    // saturate identities and composites
    bool changed = true;
    while (changed) {
        changed = false;
        for (int o = 0; o < A.nob(); ++o) {
            if (F.hm[A.idh[o]] < 0) { F.hm[A.idh[o]] = B.idh[F.ob[o]]; changed = true; }
            if (F.vm[A.idv[o]] < 0) { F.vm[A.idv[o]] = B.idv[F.ob[o]]; changed = true; }
        }
        for (int a = 0; a < A.nh(); ++a)
            if (F.hm[a] >= 0 && F.sq[A.esq[a]] < 0) {
                F.sq[A.esq[a]] = B.esq[F.hm[a]];
                changed = true;
            }
        for (int u = 0; u < A.nv(); ++u)
            if (F.vm[u] >= 0 && F.sq[A.idsq[u]] < 0) {
                F.sq[A.idsq[u]] = B.idsq[F.vm[u]];
                changed = true;
            }
        for (int b = 0; b < A.nh(); ++b)
            for (int a = 0; a < A.nh(); ++a)
                if (A.hm_composable(b, a) && F.hm[a] >= 0 && F.hm[b] >= 0 &&
                    F.hm[A.hcomp_m(b, a)] < 0) {
                    F.hm[A.hcomp_m(b, a)] = B.hcomp_m(F.hm[b], F.hm[a]);
                    changed = true;
                }
        for (int v = 0; v < A.nv(); ++v)
            for (int u = 0; u < A.nv(); ++u)
                if (A.vm_composable(v, u) && F.vm[u] >= 0 && F.vm[v] >= 0 &&
                    F.vm[A.vcomp_m(v, u)] < 0) {
                    F.vm[A.vcomp_m(v, u)] = B.vcomp_m(F.vm[v], F.vm[u]);
                    changed = true;
                }
        for (int t = 0; t < A.ns(); ++t)
            for (int s = 0; s < A.ns(); ++s) {
                if (A.sq_hcomposable(t, s) && F.sq[s] >= 0 && F.sq[t] >= 0 &&
                    F.sq[A.hcomp_s(t, s)] < 0) {
                    F.sq[A.hcomp_s(t, s)] = B.hcomp_s(F.sq[t], F.sq[s]);
                    changed = true;
                }
                if (A.sq_vcomposable(t, s) && F.sq[s] >= 0 && F.sq[t] >= 0 &&
                    F.sq[A.vcomp_s(t, s)] < 0) {
                    F.sq[A.vcomp_s(t, s)] = B.vcomp_s(F.sq[t], F.sq[s]);
                    changed = true;
                }
            }
    }
    for (auto* v : {&F.hm, &F.vm, &F.sq})
        for (int x : *v)
            if (x < 0) throw MalformedMap(F.name + ": map not determined by generators");
    return F;
}

inline DoubleFunctor i1() {
    return functor_on_generators("I1", empty_dbl(), one(), {});
}
inline DoubleFunctor i2() {
    return functor_on_generators("I2", one_one(), two_h(), {{"0", "0"}, {"1", "1"}});
}
inline DoubleFunctor i3() {
    return functor_on_generators("I3", empty_dbl(), two_v(), {});
}
inline DoubleFunctor i4() {
    return functor_on_generators("I4", d_sq(), sq(),
                                 {{"0", "0"}, {"1", "1"}, {"0p", "0p"}, {"1p", "1p"}},
                                 {{"a", "a"}, {"b", "b"}}, {{"u", "u"}, {"v", "v"}});
}
inline DoubleFunctor i5() {
    return functor_on_generators("I5", sq2(), sq(),
                                 {{"0", "0"}, {"1", "1"}, {"0p", "0p"}, {"1p", "1p"}},
                                 {{"a", "a"}, {"b", "b"}}, {{"u", "u"}, {"v", "v"}},
                                 {{"alpha0", "alpha"}, {"alpha1", "alpha"}});
}
inline DoubleFunctor j2() {
    return functor_on_generators("J2", two_h(), cinv_h(), {{"0", "0"}, {"1", "1"}},
                                 {{"f", "f"}});
}
// counit component at TwoV: the inclusion of the two endpoints
inline DoubleFunctor epsilon_v2() {
    return functor_on_generators("epsilonV2", one_one(), two_v(),
                                 {{"0", "0"}, {"1", "1"}});
}

// ------------------------------------------------------- small (2-)categories

inline FinCatPtr cat_one() {
    FinCategoryBuilder b("1");
    b.object("0");
    return std::make_shared<FinCategory>(b.build());
}

inline FinCatPtr cat_two() {
    FinCategoryBuilder b("2");
    b.object("0").object("1").mor("f", "0", "1");
    return std::make_shared<FinCategory>(b.build());
}

inline FinCatPtr cat_three() {
    FinCategoryBuilder b("3");
    b.object("0").object("1").object("2");
    b.mor("f", "0", "1").mor("g", "1", "2").mor("gf", "0", "2");
    b.comp("g", "f", "gf");
    return std::make_shared<FinCategory>(b.build());
}

inline FinCatPtr cat_iso() {
    FinCategoryBuilder b("Iso");
    b.object("0").object("1");
    b.mor("f", "0", "1").mor("g", "1", "0");
    b.comp("g", "f", "10").comp("f", "g", "11");
    return std::make_shared<FinCategory>(b.build());
}

// commutative square: two factorizations of the diagonal
inline FinCatPtr cat_commsq() {
    FinCategoryBuilder b("CommSq");
    b.object("0").object("1").object("2").object("3");
    b.mor("f", "0", "1").mor("g", "0", "2").mor("h", "1", "3").mor("k", "2", "3");
    b.mor("d", "0", "3");
    b.comp("h", "f", "d").comp("k", "g", "d");
    return std::make_shared<FinCategory>(b.build());
}

// one object with an idempotent
inline FinCatPtr cat_idem() {
    FinCategoryBuilder b("Idem");
    b.object("0").mor("x", "0", "0");
    b.comp("x", "x", "x");
    return std::make_shared<FinCategory>(b.build());
}

inline TwoCatPtr twocat_cinv() {
    TwoCategoryBuilder b("Cinv");
    b.object("0").object("1");
    b.mor("f", "0", "1").mor("g", "0", "1");
    b.cell("x", "f", "g").cell("xinv", "g", "f");
    b.vcomp("xinv", "x", "1f").vcomp("x", "xinv", "1g");
    return std::make_shared<TwoCategory>(b.build());
}

inline std::vector<DblPtr> all_double_categories() {
    return {empty_dbl(), one(),  one_one(), two_h(),  two_v(),
            sq(),        d_sq(), sq2(),     cinv_h(), iso_h(),
            v_three()};
}

inline std::vector<DoubleFunctor> all_functors() {
    return {i1(), i2(), i3(), i4(), i5(), j2(), epsilon_v2()};
}

}  // namespace dblcat::corpus
