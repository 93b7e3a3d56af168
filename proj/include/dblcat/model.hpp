#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dblcat/core.hpp"
#include "dblcat/dbl.hpp"
#include "dblcat/dbl_ops.hpp"
#include "dblcat/equiv.hpp"
#include "dblcat/fincat_ops.hpp"

namespace dblcat {

namespace detail {

// db4/dt4: for every square of the target whose boundary is written with
// chosen preimage cells, there is a unique preimage square on that boundary.
inline std::pair<bool, std::string> square_unique_lifting(const DoubleFunctor& F) {
    const DoubleCategory &A = *F.src, &B = *F.tgt;
    for (int beta = 0; beta < B.ns(); ++beta)
        for (int a = 0; a < A.nh(); ++a) {
            if (F.hm[a] != B.stop[beta]) continue;
            for (int c = 0; c < A.nh(); ++c) {
                if (F.hm[c] != B.sbot[beta]) continue;
                for (int u = 0; u < A.nv(); ++u) {
                    if (F.vm[u] != B.sleft[beta]) continue;
                    for (int up = 0; up < A.nv(); ++up) {
                        if (F.vm[up] != B.sright[beta]) continue;
                        int count = 0;
                        for (int al = 0; al < A.ns(); ++al)
                            if (A.stop[al] == a && A.sbot[al] == c &&
                                A.sleft[al] == u && A.sright[al] == up &&
                                F.sq[al] == beta)
                                ++count;
                        if (count != 1)
                            return {false,
                                    "square " + B.sq[beta] + " over (" + A.hm[a] + "," +
                                        A.hm[c] + "," + A.vm[u] + "," + A.vm[up] +
                                        ") has " + std::to_string(count) +
                                        " preimages"};
                    }
                }
            }
        }
    return {true, ""};
}

}  // namespace detail

// ------------------------------------------------- double biequivalence

// Conditions (db1)-(db4), plus the reformulations (hb3), (vb2), (vb3) used
// by the underlying-2-functor cross-checks; db4 stays the primary test.
inline CheckReport check_double_biequivalence(const DoubleFunctor& F) {
    CheckReport rep;
    const DoubleCategory &A = *F.src, &B = *F.tgt;
    auto heqB = horizontal_equivalence_witnesses(B);
    auto vinvB = vertical_invertibility_table(B);
    auto winvB = weak_invertibility_table(B);
    {
        bool ok = true;
        std::string cx;
        for (int b0 = 0; b0 < B.nob() && ok; ++b0) {
            bool found = false;
            for (int e = 0; e < B.nh() && !found; ++e) {
                if (!heqB[e] || B.hsrc[e] != b0) continue;
                for (int a0 = 0; a0 < A.nob() && !found; ++a0)
                    if (B.htgt[e] == F.ob[a0]) found = true;
            }
            if (!found) {
                ok = false;
                cx = "object " + B.ob[b0] + " has no horizontal equivalence into the image";
            }
        }
        rep.set("db1", ok, cx);
    }
    {
        bool ok = true;
        std::string cx;
        for (int a0 = 0; a0 < A.nob() && ok; ++a0)
            for (int c0 = 0; c0 < A.nob() && ok; ++c0)
                for (int b = 0; b < B.nh() && ok; ++b) {
                    if (B.hsrc[b] != F.ob[a0] || B.htgt[b] != F.ob[c0]) continue;
                    bool found = false;
                    for (int a = 0; a < A.nh() && !found; ++a) {
                        if (A.hsrc[a] != a0 || A.htgt[a] != c0) continue;
                        for (int s = 0; s < B.ns() && !found; ++s)
                            if (B.globular(s) && B.stop[s] == b && B.sbot[s] == F.hm[a] &&
                                vinvB[s])
                                found = true;
                    }
                    if (!found) {
                        ok = false;
                        cx = "hmor " + B.hm[b] + " between images of " + A.ob[a0] + "," +
                             A.ob[c0] + " has no invertible comparison";
                    }
                }
        rep.set("db2", ok, cx);
    }
    {
        bool ok = true;
        std::string cx;
        for (int v = 0; v < B.nv() && ok; ++v) {
            bool found = false;
            for (int s = 0; s < B.ns() && !found; ++s) {
                if (B.sleft[s] != v) continue;
                bool right_in_image = false;
                for (int u = 0; u < A.nv() && !right_in_image; ++u)
                    if (F.vm[u] == B.sright[s]) right_in_image = true;
                if (!right_in_image) continue;
                if (winvB[s]) found = true;
            }
            if (!found) {
                ok = false;
                cx = "vmor " + B.vm[v] +
                     " has no weakly invertible square into the image";
            }
        }
        rep.set("db3", ok, cx);
    }
    {
        auto [ok, cx] = detail::square_unique_lifting(F);
        rep.set("db4", ok, cx);
    }
    // (hb3): unique globular preimages of globular squares
    {
        bool ok = true;
        std::string cx;
        for (int beta = 0; beta < B.ns() && ok; ++beta) {
            if (!B.globular(beta)) continue;
            for (int a = 0; a < A.nh() && ok; ++a) {
                if (F.hm[a] != B.stop[beta]) continue;
                for (int c = 0; c < A.nh() && ok; ++c) {
                    if (F.hm[c] != B.sbot[beta]) continue;
                    int count = 0;
                    for (int al = 0; al < A.ns(); ++al)
                        if (A.globular(al) && A.stop[al] == a && A.sbot[al] == c &&
                            F.sq[al] == beta)
                            ++count;
                    if (count != 1) {
                        ok = false;
                        cx = "globular square " + B.sq[beta] + " over (" + A.hm[a] +
                             "," + A.hm[c] + ") has " + std::to_string(count) +
                             " globular preimages";
                    }
                }
            }
        }
        rep.set("hb3", ok, cx);
    }
    // (vb2): every square between images of vertical morphisms is
    // isomorphic, in the vertical-cells 2-category, to an image square
    {
        bool ok = true;
        std::string cx;
        for (int u = 0; u < A.nv() && ok; ++u)
            for (int up = 0; up < A.nv() && ok; ++up)
                for (int beta = 0; beta < B.ns() && ok; ++beta) {
                    if (B.sleft[beta] != F.vm[u] || B.sright[beta] != F.vm[up]) continue;
                    bool found = false;
                    for (int al = 0; al < A.ns() && !found; ++al) {
                        if (A.sleft[al] != u || A.sright[al] != up) continue;
                        // invertible phi: top(beta) => F top(al) and
                        // psi: bot(beta) => F bot(al) with the pasting equality
                        for (int phi = 0; phi < B.ns() && !found; ++phi) {
                            if (!B.globular(phi) || B.stop[phi] != B.stop[beta] ||
                                B.sbot[phi] != F.hm[A.stop[al]] || !vinvB[phi])
                                continue;
                            for (int psi = 0; psi < B.ns() && !found; ++psi) {
                                if (!B.globular(psi) || B.stop[psi] != B.sbot[beta] ||
                                    B.sbot[psi] != F.hm[A.sbot[al]] || !vinvB[psi])
                                    continue;
                                if (B.vcomp_s(F.sq[al], phi) == B.vcomp_s(psi, beta))
                                    found = true;
                            }
                        }
                    }
                    if (!found) {
                        ok = false;
                        cx = "square " + B.sq[beta] + " between images of " + A.vm[u] +
                             "," + A.vm[up] + " is not isomorphic to an image";
                    }
                }
        rep.set("vb2", ok, cx);
    }
    // (vb3): unique preimages of 2-cells of the vertical-cells 2-category
    {
        bool ok = true;
        std::string cx;
        for (int al = 0; al < A.ns() && ok; ++al)
            for (int alp = 0; alp < A.ns() && ok; ++alp) {
                if (A.sleft[al] != A.sleft[alp] || A.sright[al] != A.sright[alp])
                    continue;
                for (int t0 = 0; t0 < B.ns() && ok; ++t0) {
                    if (!B.globular(t0) || B.stop[t0] != F.hm[A.stop[al]] ||
                        B.sbot[t0] != F.hm[A.stop[alp]])
                        continue;
                    for (int t1 = 0; t1 < B.ns() && ok; ++t1) {
                        if (!B.globular(t1) || B.stop[t1] != F.hm[A.sbot[al]] ||
                            B.sbot[t1] != F.hm[A.sbot[alp]])
                            continue;
                        if (B.vcomp_s(F.sq[alp], t0) != B.vcomp_s(t1, F.sq[al]))
                            continue;
                        int count = 0;
                        for (int s0 = 0; s0 < A.ns(); ++s0) {
                            if (!A.globular(s0) || A.stop[s0] != A.stop[al] ||
                                A.sbot[s0] != A.stop[alp] || F.sq[s0] != t0)
                                continue;
                            for (int s1 = 0; s1 < A.ns(); ++s1) {
                                if (!A.globular(s1) || A.stop[s1] != A.sbot[al] ||
                                    A.sbot[s1] != A.sbot[alp] || F.sq[s1] != t1)
                                    continue;
                                if (A.vcomp_s(alp, s0) == A.vcomp_s(s1, al)) ++count;
                            }
                        }
                        if (count != 1) {
                            ok = false;
                            cx = "cell (" + B.sq[t0] + "," + B.sq[t1] + "): " +
                                 std::to_string(count) + " preimage pairs over (" +
                                 A.sq[al] + "," + A.sq[alp] + ")";
                        }
                    }
                }
            }
        rep.set("vb3", ok, cx);
    }
    return rep;
}

// ------------------------------------------------------ double fibration

inline CheckReport check_double_fibration(const DoubleFunctor& F) {
    CheckReport rep;
    const DoubleCategory &A = *F.src, &B = *F.tgt;
    auto heqA = horizontal_equivalence_witnesses(A);
    auto heqB = horizontal_equivalence_witnesses(B);
    auto vinvA = vertical_invertibility_table(A);
    auto vinvB = vertical_invertibility_table(B);
    auto winvA = weak_invertibility_table(A);
    auto winvB = weak_invertibility_table(B);
    {
        bool ok = true;
        std::string cx;
        for (int c0 = 0; c0 < A.nob() && ok; ++c0)
            for (int b = 0; b < B.nh() && ok; ++b) {
                if (!heqB[b] || B.htgt[b] != F.ob[c0]) continue;
                bool found = false;
                for (int a = 0; a < A.nh() && !found; ++a)
                    if (heqA[a] && A.htgt[a] == c0 && F.hm[a] == b) found = true;
                if (!found) {
                    ok = false;
                    cx = "horizontal equivalence " + B.hm[b] + " into image of " +
                         A.ob[c0] + " has no strict lift";
                }
            }
        rep.set("df1", ok, cx);
    }
    {
        bool ok = true;
        std::string cx;
        for (int c = 0; c < A.nh() && ok; ++c)
            for (int beta = 0; beta < B.ns() && ok; ++beta) {
                if (!B.globular(beta) || B.sbot[beta] != F.hm[c] || !vinvB[beta])
                    continue;
                bool found = false;
                for (int al = 0; al < A.ns() && !found; ++al)
                    if (A.globular(al) && A.sbot[al] == c && F.sq[al] == beta &&
                        vinvA[al])
                        found = true;
                if (!found) {
                    ok = false;
                    cx = "invertible square " + B.sq[beta] + " onto " + A.hm[c] +
                         " has no invertible lift";
                }
            }
        rep.set("df2", ok, cx);
    }
    {
        bool ok = true;
        std::string cx;
        for (int up = 0; up < A.nv() && ok; ++up)
            for (int beta = 0; beta < B.ns() && ok; ++beta) {
                if (B.sright[beta] != F.vm[up]) continue;
                if (!winvB[beta]) continue;
                bool found = false;
                for (int al = 0; al < A.ns() && !found; ++al)
                    if (A.sright[al] == up && F.sq[al] == beta && winvA[al])
                        found = true;
                if (!found) {
                    ok = false;
                    cx = "weakly invertible square " + B.sq[beta] + " onto " +
                         A.vm[up] + " has no weakly invertible lift";
                }
            }
        rep.set("df3", ok, cx);
    }
    return rep;
}

// ------------------------------------------------ double trivial fibration

inline CheckReport check_double_trivial_fibration(const DoubleFunctor& F) {
    CheckReport rep;
    const DoubleCategory &A = *F.src, &B = *F.tgt;
    {
        bool ok = true;
        std::string cx;
        for (int b0 = 0; b0 < B.nob() && ok; ++b0) {
            bool found = false;
            for (int a0 = 0; a0 < A.nob() && !found; ++a0)
                if (F.ob[a0] == b0) found = true;
            if (!found) {
                ok = false;
                cx = "object " + B.ob[b0] + " has no preimage";
            }
        }
        rep.set("dt1", ok, cx);
    }
    {
        bool ok = true;
        std::string cx;
        for (int a0 = 0; a0 < A.nob() && ok; ++a0)
            for (int c0 = 0; c0 < A.nob() && ok; ++c0)
                for (int b = 0; b < B.nh() && ok; ++b) {
                    if (B.hsrc[b] != F.ob[a0] || B.htgt[b] != F.ob[c0]) continue;
                    bool found = false;
                    for (int a = 0; a < A.nh() && !found; ++a)
                        if (A.hsrc[a] == a0 && A.htgt[a] == c0 && F.hm[a] == b)
                            found = true;
                    if (!found) {
                        ok = false;
                        cx = "hmor " + B.hm[b] + " between images of " + A.ob[a0] + "," +
                             A.ob[c0] + " has no strict preimage";
                    }
                }
        rep.set("dt2", ok, cx);
    }
    {
        bool ok = true;
        std::string cx;
        for (int v = 0; v < B.nv() && ok; ++v) {
            bool found = false;
            for (int u = 0; u < A.nv() && !found; ++u)
                if (F.vm[u] == v) found = true;
            if (!found) {
                ok = false;
                cx = "vmor " + B.vm[v] + " has no preimage";
            }
        }
        rep.set("dt3", ok, cx);
    }
    {
        auto [ok, cx] = detail::square_unique_lifting(F);
        rep.set("dt4", ok, cx);
    }
    return rep;
}

// --------------------------------------------------- generating set checks

// The five generating cofibrations, built over the given corpus objects.
struct GeneratingCofibrations {
    std::vector<DoubleFunctor> maps;  // I1..I5
};

// RLP of p against every lifting problem formed from the generating
// cofibrations; every top/bottom pair is enumerated.
inline bool has_rlp_generating_cofibrations(const DoubleFunctor& p,
                                            const std::vector<DoubleFunctor>& gens,
                                            Budget& budget,
                                            std::string* counterexample = nullptr) {
    for (const auto& i : gens) {
        auto bottoms = all_double_functors(i.tgt, p.tgt, budget);
        auto tops = all_double_functors(i.src, p.src, budget);
        for (const auto& bottom : bottoms) {
            DoubleFunctor bi = compose(bottom, i);
            for (const auto& top : tops) {
                DoubleFunctor pt = compose(p, top);
                if (pt.ob != bi.ob || pt.hm != bi.hm || pt.vm != bi.vm || pt.sq != bi.sq)
                    continue;
                if (!solve_lifting(i, p, top, bottom, budget)) {
                    if (counterexample)
                        *counterexample = "no lift of " + i.name + " against " + p.name;
                    return false;
                }
            }
        }
    }
    return true;
}

// ------------------------------------------------------------- cofibrancy

inline FinCategory underlying_horizontal_category(const DoubleCategory& A) {
    FinCategory c;
    c.name = "UH" + A.name;
    c.ob = A.ob;
    c.mo = A.hm;
    c.src = A.hsrc;
    c.tgt = A.htgt;
    c.idm = A.idh;
    c.comp = A.hm_comp;
    return c;
}

inline FinCategory underlying_vertical_category(const DoubleCategory& A) {
    FinCategory c;
    c.name = "UV" + A.name;
    c.ob = A.ob;
    c.mo = A.vm;
    c.src = A.vsrc;
    c.tgt = A.vtgt;
    c.idm = A.idv;
    c.comp = A.vm_comp;
    return c;
}

struct CofibrancyReport {
    FreenessReport horizontal;
    bool vertical_ok = false;
    bool cofibrant = false;
};

// free underlying horizontal category + vertical category a disjoint union
// of copies of 1 and 2
inline CofibrancyReport is_cofibrant(const DoubleCategory& A) {
    CofibrancyReport rep;
    rep.horizontal = is_free_category(underlying_horizontal_category(A));
    rep.vertical_ok = is_disjoint_union_1_2(underlying_vertical_category(A));
    rep.cofibrant = rep.horizontal.free && rep.vertical_ok;
    return rep;
}

// necessary conditions only; the full left-lifting test is out of scope
inline CheckReport cofibration_necessary_conditions(const DoubleFunctor& F) {
    CheckReport rep;
    const DoubleCategory &A = *F.src, &B = *F.tgt;
    {
        bool ok = true;
        std::string cx;
        for (int x = 0; x < A.nob() && ok; ++x)
            for (int y = x + 1; y < A.nob() && ok; ++y)
                if (F.ob[x] == F.ob[y]) {
                    ok = false;
                    cx = A.ob[x] + " and " + A.ob[y] + " share an image";
                }
        rep.set("inj-objects", ok, cx);
    }
    auto faithful = [&](const std::vector<int>& map, const std::vector<int>& s,
                        const std::vector<int>& t, const std::vector<std::string>& names,
                        const char* tag) {
        bool ok = true;
        std::string cx;
        for (int x = 0; x < (int)map.size() && ok; ++x)
            for (int y = x + 1; y < (int)map.size() && ok; ++y)
                if (s[x] == s[y] && t[x] == t[y] && map[x] == map[y]) {
                    ok = false;
                    cx = names[x] + " and " + names[y] + " share an image";
                }
        rep.set(tag, ok, cx);
        (void)B;
    };
    faithful(F.hm, A.hsrc, A.htgt, A.hm, "faithful-hmors");
    faithful(F.vm, A.vsrc, A.vtgt, A.vm, "faithful-vmors");
    return rep;
}

}  // namespace dblcat
