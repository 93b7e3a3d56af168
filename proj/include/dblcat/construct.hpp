#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dblcat/core.hpp"
#include "dblcat/dbl.hpp"
#include "dblcat/dbl_ops.hpp"
#include "dblcat/fincat.hpp"

namespace dblcat {

// ------------------------------------------------ horizontal embedding H

// 2-category -> double category with only identity vertical morphisms.
inline DoubleCategory horizontal_embed(const TwoCategory& A) {
    DoubleCategory d;
    d.name = "H" + A.name;
    d.ob = A.cat.ob;
    d.hm = A.cat.mo;
    for (const auto& o : A.cat.ob) d.vm.push_back("e" + o);
    d.sq = A.ce;
    d.hsrc = A.cat.src;
    d.htgt = A.cat.tgt;
    for (int o = 0; o < A.nob(); ++o) {
        d.vsrc.push_back(o);
        d.vtgt.push_back(o);
    }
    d.stop = A.csrc;
    d.sbot = A.ctgt;
    for (int x = 0; x < A.ncell(); ++x) {
        d.sleft.push_back(A.cat.src[A.csrc[x]]);
        d.sright.push_back(A.cat.tgt[A.csrc[x]]);
    }
    d.idh = A.cat.idm;
    d.idv.resize(A.nob());
    for (int o = 0; o < A.nob(); ++o) d.idv[o] = o;
    d.esq = A.idc;
    d.idsq.resize(A.nob());
    for (int o = 0; o < A.nob(); ++o) d.idsq[o] = A.idc[A.cat.idm[o]];
    d.hm_comp = A.cat.comp;
    d.vm_comp.assign((size_t)A.nob() * A.nob(), -1);
    for (int o = 0; o < A.nob(); ++o) d.vm_comp[(size_t)o * A.nob() + o] = o;
    d.sq_hcomp = A.hc;
    d.sq_vcomp = A.vc;
    return d;
}

inline DoubleFunctor horizontal_embed(const TwoFunctor& F, const DblPtr& srcH,
                                      const DblPtr& tgtH) {
    DoubleFunctor G;
    G.name = "H" + F.name;
    G.src = srcH;
    G.tgt = tgtH;
    G.ob = F.ob;
    G.hm = F.mo;
    G.vm = F.ob;  // identity vmors are indexed by objects
    G.sq = F.ce;
    return G;
}

// ---------------------------------------------- underlying horizontal H

struct UnderlyingHorizontal {
    TwoCategory two;
    std::vector<int> cell_of_square;  // -1 when the square is not globular
    std::vector<int> square_of_cell;
};

inline UnderlyingHorizontal underlying_horizontal(const DoubleCategory& A) {
    UnderlyingHorizontal res;
    TwoCategory& t = res.two;
    t.name = "H(" + A.name + ")";
    t.cat.name = t.name;
    t.cat.ob = A.ob;
    t.cat.mo = A.hm;
    t.cat.src = A.hsrc;
    t.cat.tgt = A.htgt;
    t.cat.idm = A.idh;
    t.cat.comp = A.hm_comp;
    res.cell_of_square.assign(A.ns(), -1);
    for (int s = 0; s < A.ns(); ++s)
        if (A.globular(s)) {
            res.cell_of_square[s] = (int)res.square_of_cell.size();
            res.square_of_cell.push_back(s);
            t.ce.push_back(A.sq[s]);
            t.csrc.push_back(A.stop[s]);
            t.ctgt.push_back(A.sbot[s]);
        }
    t.idc.resize(A.nh());
    for (int a = 0; a < A.nh(); ++a) t.idc[a] = res.cell_of_square[A.esq[a]];
    int nc = t.ncell();
    t.vc.assign((size_t)nc * nc, -1);
    t.hc.assign((size_t)nc * nc, -1);
    for (int y = 0; y < nc; ++y)
        for (int x = 0; x < nc; ++x) {
            int sy = res.square_of_cell[y], sx = res.square_of_cell[x];
            if (A.sq_vcomposable(sy, sx) && A.vcomp_s(sy, sx) >= 0)
                t.vc[(size_t)y * nc + x] = res.cell_of_square[A.vcomp_s(sy, sx)];
            if (A.sq_hcomposable(sy, sx) && A.sq_hcomp[(size_t)sy * A.ns() + sx] >= 0)
                t.hc[(size_t)y * nc + x] = res.cell_of_square[A.hcomp_s(sy, sx)];
        }
    return res;
}

inline TwoFunctor underlying_horizontal(const DoubleFunctor& F, const TwoCatPtr& srcH,
                                        const UnderlyingHorizontal& srcData,
                                        const TwoCatPtr& tgtH,
                                        const UnderlyingHorizontal& tgtData) {
    TwoFunctor G;
    G.name = "H" + F.name;
    G.src = srcH;
    G.tgt = tgtH;
    G.ob = F.ob;
    G.mo = F.hm;
    for (int c = 0; c < (int)srcData.square_of_cell.size(); ++c) {
        int img = F.sq[srcData.square_of_cell[c]];
        int cell = tgtData.cell_of_square[img];
        if (cell < 0)
            throw InternalInconsistency("image of a globular square is not globular");
        G.ce.push_back(cell);
    }
    return G;
}

// --------------------------------------------------- vertical variants

inline DoubleCategory vertical_embed(const TwoCategory& C) {
    return transpose(horizontal_embed(C));
}

inline UnderlyingHorizontal underlying_vertical(const DoubleCategory& A) {
    return underlying_horizontal(transpose(A));
}

// ------------------------------------------------------- the functor V

// The 2-category of vertical morphisms, squares, and square-pairs
// (built directly from its description; the internal-hom route
// H[V2,-] is kept as a cross-check oracle in the tests).
struct VerticalCells {
    TwoCategory two;
    // A 2-cell of V(A) is a pair (s0, s1) of globular squares together with
    // its boundary morphisms (f, g); the same pair can be a 2-cell on
    // several parallel boundaries.
    struct Cell { int s0, s1, f, g; };
    std::vector<Cell> pair_of_cell;
    std::map<std::array<int, 4>, int> cell_of_pair;

    int find(int s0, int s1, int f, int g) const {
        auto it = cell_of_pair.find({s0, s1, f, g});
        if (it == cell_of_pair.end())
            throw InternalInconsistency("V(-) not closed under the requested pasting");
        return it->second;
    }
};

inline VerticalCells vertical_cells(const DoubleCategory& A) {
    VerticalCells res;
    TwoCategory& t = res.two;
    t.name = "V(" + A.name + ")";
    t.cat.name = t.name;
    t.cat.ob = A.vm;
    t.cat.mo = A.sq;
    t.cat.src = A.sleft;
    t.cat.tgt = A.sright;
    t.cat.idm = A.idsq;
    t.cat.comp = A.sq_hcomp;

    // enumerate valid 2-cells (s0, s1): s0: top(f) => top(g), s1: bot(f) => bot(g)
    // globular, with vcomp(g, s0) = vcomp(s1, f)
    for (int f = 0; f < A.ns(); ++f)
        for (int g = 0; g < A.ns(); ++g) {
            if (A.sleft[f] != A.sleft[g] || A.sright[f] != A.sright[g]) continue;
            for (int s0 = 0; s0 < A.ns(); ++s0) {
                if (!A.globular(s0) || A.stop[s0] != A.stop[f] || A.sbot[s0] != A.stop[g])
                    continue;
                for (int s1 = 0; s1 < A.ns(); ++s1) {
                    if (!A.globular(s1) || A.stop[s1] != A.sbot[f] ||
                        A.sbot[s1] != A.sbot[g])
                        continue;
                    if (A.vcomp_s(g, s0) != A.vcomp_s(s1, f)) continue;
                    std::array<int, 4> key{s0, s1, f, g};
                    res.cell_of_pair.emplace(key, (int)res.pair_of_cell.size());
                    res.pair_of_cell.push_back({s0, s1, f, g});
                    t.ce.push_back(A.sq[s0] + "|" + A.sq[s1] + "@" + A.sq[f] + ">" +
                                   A.sq[g]);
                    t.csrc.push_back(f);
                    t.ctgt.push_back(g);
                }
            }
        }
    int nc = t.ncell();
    t.idc.resize(A.ns());
    for (int f = 0; f < A.ns(); ++f)
        t.idc[f] = res.find(A.esq[A.stop[f]], A.esq[A.sbot[f]], f, f);
    t.vc.assign((size_t)nc * nc, -1);
    t.hc.assign((size_t)nc * nc, -1);
    for (int y = 0; y < nc; ++y)
        for (int x = 0; x < nc; ++x) {
            const auto& cy = res.pair_of_cell[y];
            const auto& cx = res.pair_of_cell[x];
            if (t.vcomposable(y, x))
                t.vc[(size_t)y * nc + x] =
                    res.find(A.vcomp_s(cy.s0, cx.s0), A.vcomp_s(cy.s1, cx.s1), cx.f, cy.g);
            if (t.hcomposable(y, x))
                t.hc[(size_t)y * nc + x] =
                    res.find(A.hcomp_s(cy.s0, cx.s0), A.hcomp_s(cy.s1, cx.s1),
                             A.hcomp_s(cy.f, cx.f), A.hcomp_s(cy.g, cx.g));
        }
    return res;
}

inline TwoFunctor vertical_cells(const DoubleFunctor& F, const TwoCatPtr& srcV,
                                 const VerticalCells& srcData, const TwoCatPtr& tgtV,
                                 const VerticalCells& tgtData) {
    TwoFunctor G;
    G.name = "V" + F.name;
    G.src = srcV;
    G.tgt = tgtV;
    G.ob = F.vm;
    G.mo = F.sq;
    for (const auto& c : srcData.pair_of_cell)
        G.ce.push_back(tgtData.find(F.sq[c.s0], F.sq[c.s1], F.sq[c.f], F.sq[c.g]));
    return G;
}

// L = H(-) x V2; the caller supplies the corpus V2 to keep naming stable
inline DoubleCategory left_adjoint_L(const TwoCategory& A, const DoubleCategory& v2) {
    auto h = horizontal_embed(A);
    auto d = product(h, v2);
    d.name = "L" + A.name;
    return d;
}

// -------------------------------------------------------- internal hom

// Transformation data between double functors F, G : A -> B, all stored
// as cells of B indexed by cells of A.
struct TransfData {
    int from = -1, to = -1;          // functor indices in the hom enumeration
    std::vector<int> comp_ob;        // per object of A
    std::vector<int> comp_cell;      // per vmor (horizontal) or hmor (vertical)
};

struct InternalHom {
    DoubleCategory hom;
    std::vector<DoubleFunctor> objects;
    std::vector<TransfData> hmors;   // horizontal natural transformations
    std::vector<TransfData> vmors;   // vertical natural transformations
    struct Modif {
        int h = -1, k = -1, r = -1, s = -1;  // boundary transformation indices
        std::vector<int> comp;               // per object of A: square of B
    };
    std::vector<Modif> squares;
};

namespace detail {

// enumerate strict horizontal natural transformations F => G
inline void horizontal_transformations(const DoubleCategory& A, const DoubleCategory& B,
                                       const DoubleFunctor& F, const DoubleFunctor& G,
                                       Budget& budget,
                                       const std::function<void(TransfData)>& yield) {
    std::vector<int> comp_ob(A.nob(), -1), comp_vm(A.nv(), -1);
    // naturality on hmors must hold for the object components:
    //   G(a) ∘ h_A = h_B ∘ F(a)
    std::function<void(int)> pick_vm;
    std::function<void(int)> pick_ob = [&](int o) {
        if (o == A.nob()) {
            pick_vm(0);
            return;
        }
        for (int x = 0; x < B.nh(); ++x) {
            if (B.hsrc[x] != F.ob[o] || B.htgt[x] != G.ob[o]) continue;
            budget.tick();
            comp_ob[o] = x;
            bool ok = true;
            for (int a = 0; a < A.nh() && ok; ++a) {
                int A0 = A.hsrc[a], B0 = A.htgt[a];
                if (comp_ob[A0] < 0 || comp_ob[B0] < 0) continue;
                if (B.hcomp_m(G.hm[a], comp_ob[A0]) !=
                    B.hcomp_m(comp_ob[B0], F.hm[a]))
                    ok = false;
            }
            if (ok) pick_ob(o + 1);
        }
        comp_ob[o] = -1;
    };
    pick_vm = [&](int u) {
        if (u == A.nv()) {
            TransfData t;
            t.comp_ob = comp_ob;
            t.comp_cell = comp_vm;
            yield(std::move(t));
            return;
        }
        if (A.is_idv(u)) {  // forced: h_{e_A} = e-square of h_A
            comp_vm[u] = B.esq[comp_ob[A.vsrc[u]]];
            pick_vm(u + 1);
            comp_vm[u] = -1;
            return;
        }
        for (int x = 0; x < B.ns(); ++x) {
            if (B.stop[x] != comp_ob[A.vsrc[u]] || B.sbot[x] != comp_ob[A.vtgt[u]] ||
                B.sleft[x] != F.vm[u] || B.sright[x] != G.vm[u])
                continue;
            budget.tick();
            comp_vm[u] = x;
            bool ok = true;
            // functoriality in vmors
            for (int v = 0; v < A.nv() && ok; ++v) {
                if (comp_vm[v] < 0) continue;
                if (A.vm_composable(v, u) && comp_vm[A.vcomp_m(v, u)] >= 0 &&
                    B.vcomp_s(comp_vm[v], x) != comp_vm[A.vcomp_m(v, u)])
                    ok = false;
                if (ok && A.vm_composable(u, v) && comp_vm[A.vcomp_m(u, v)] >= 0 &&
                    B.vcomp_s(x, comp_vm[v]) != comp_vm[A.vcomp_m(u, v)])
                    ok = false;
            }
            // naturality on squares whose vertical boundaries are assigned
            for (int s = 0; s < A.ns() && ok; ++s) {
                int ul = A.sleft[s], ur = A.sright[s];
                if (comp_vm[ul] < 0 || comp_vm[ur] < 0) continue;
                if (B.hcomp_s(comp_vm[ur], F.sq[s]) != B.hcomp_s(G.sq[s], comp_vm[ul]))
                    ok = false;
            }
            if (ok) pick_vm(u + 1);
        }
        comp_vm[u] = -1;
    };
    pick_ob(0);
}

inline std::string mangle(const std::vector<int>& v) {
    std::string s;
    for (int x : v) {
        s += std::to_string(x);
        s += '.';
    }
    return s;
}

}  // namespace detail

// The internal hom [A,B]: objects are the double functors, horizontal and
// vertical transformations, squares the modifications. Exhaustively
// enumerated and law-checked (validation of the result is cheap and is done
// in the tests).
inline InternalHom internal_hom(const DblPtr& A, const DblPtr& B, Budget& budget) {
    InternalHom H;
    H.objects = all_double_functors(A, B, budget);
    const int nf = (int)H.objects.size();

    auto at = transpose(*A);
    auto bt = transpose(*B);
    auto atp = std::make_shared<const DoubleCategory>(at);
    auto btp = std::make_shared<const DoubleCategory>(bt);

    // horizontal transformations between every pair
    for (int f = 0; f < nf; ++f)
        for (int g = 0; g < nf; ++g)
            detail::horizontal_transformations(
                *A, *B, H.objects[f], H.objects[g], budget, [&](TransfData t) {
                    t.from = f;
                    t.to = g;
                    H.hmors.push_back(std::move(t));
                });
    // vertical transformations = horizontal ones of the transposes
    for (int f = 0; f < nf; ++f)
        for (int g = 0; g < nf; ++g) {
            DoubleFunctor Ft = transpose(H.objects[f], atp, btp);
            DoubleFunctor Gt = transpose(H.objects[g], atp, btp);
            detail::horizontal_transformations(at, bt, Ft, Gt, budget,
                                               [&](TransfData t) {
                                                   t.from = f;
                                                   t.to = g;
                                                   H.vmors.push_back(std::move(t));
                                               });
        }

    // modifications: mu_X : (r_X, h_X / k_X, s_X) with the two pasting laws
    for (int h = 0; h < (int)H.hmors.size(); ++h)
        for (int k = 0; k < (int)H.hmors.size(); ++k)
            for (int r = 0; r < (int)H.vmors.size(); ++r)
                for (int s = 0; s < (int)H.vmors.size(); ++s) {
                    const auto& th = H.hmors[h];
                    const auto& tk = H.hmors[k];
                    const auto& tr = H.vmors[r];
                    const auto& ts = H.vmors[s];
                    if (tr.from != th.from || ts.from != th.to || tk.from != tr.to ||
                        tk.to != ts.to)
                        continue;
                    std::vector<int> comp(A->nob(), -1);
                    std::function<void(int)> pick = [&](int o) {
                        if (o == A->nob()) {
                            InternalHom::Modif m;
                            m.h = h;
                            m.k = k;
                            m.r = r;
                            m.s = s;
                            m.comp = comp;
                            H.squares.push_back(std::move(m));
                            return;
                        }
                        for (int x = 0; x < B->ns(); ++x) {
                            if (B->stop[x] != th.comp_ob[o] || B->sbot[x] != tk.comp_ob[o] ||
                                B->sleft[x] != tr.comp_ob[o] || B->sright[x] != ts.comp_ob[o])
                                continue;
                            budget.tick();
                            comp[o] = x;
                            bool ok = true;
                            // law over vmors: (k_u)•(mu_X) = (mu_X')•(h_u)
                            for (int u = 0; u < A->nv() && ok; ++u) {
                                int X = A->vsrc[u], Xp = A->vtgt[u];
                                if (comp[X] < 0 || comp[Xp] < 0) continue;
                                if (B->vcomp_s(tk.comp_cell[u], comp[X]) !=
                                    B->vcomp_s(comp[Xp], th.comp_cell[u]))
                                    ok = false;
                            }
                            // law over hmors: (mu_Y)∘(r_a) = (s_a)∘(mu_X)
                            for (int a = 0; a < A->nh() && ok; ++a) {
                                int X = A->hsrc[a], Y = A->htgt[a];
                                if (comp[X] < 0 || comp[Y] < 0) continue;
                                if (B->hcomp_s(comp[Y], tr.comp_cell[a]) !=
                                    B->hcomp_s(ts.comp_cell[a], comp[X]))
                                    ok = false;
                            }
                            if (ok) pick(o + 1);
                        }
                        comp[o] = -1;
                    };
                    pick(0);
                }

    // assemble the double category
    DoubleCategory& d = H.hom;
    d.name = "[" + A->name + "," + B->name + "]";
    for (int f = 0; f < nf; ++f) d.ob.push_back("F" + std::to_string(f));
    for (size_t i = 0; i < H.hmors.size(); ++i) d.hm.push_back("h" + std::to_string(i));
    for (size_t i = 0; i < H.vmors.size(); ++i) d.vm.push_back("v" + std::to_string(i));
    for (size_t i = 0; i < H.squares.size(); ++i)
        d.sq.push_back("m" + std::to_string(i));
    for (const auto& t : H.hmors) {
        d.hsrc.push_back(t.from);
        d.htgt.push_back(t.to);
    }
    for (const auto& t : H.vmors) {
        d.vsrc.push_back(t.from);
        d.vtgt.push_back(t.to);
    }
    std::map<std::string, int> hkey, vkey, skey;
    for (size_t i = 0; i < H.hmors.size(); ++i)
        hkey[std::to_string(H.hmors[i].from) + ":" + std::to_string(H.hmors[i].to) + ":" +
             detail::mangle(H.hmors[i].comp_ob) + detail::mangle(H.hmors[i].comp_cell)] =
            (int)i;
    for (size_t i = 0; i < H.vmors.size(); ++i)
        vkey[std::to_string(H.vmors[i].from) + ":" + std::to_string(H.vmors[i].to) + ":" +
             detail::mangle(H.vmors[i].comp_ob) + detail::mangle(H.vmors[i].comp_cell)] =
            (int)i;
    for (size_t i = 0; i < H.squares.size(); ++i)
        skey[std::to_string(H.squares[i].h) + ":" + std::to_string(H.squares[i].k) + ":" +
             std::to_string(H.squares[i].r) + ":" + std::to_string(H.squares[i].s) + ":" +
             detail::mangle(H.squares[i].comp)] = (int)i;
    auto hfind = [&](int from, int to, const std::vector<int>& co,
                     const std::vector<int>& cc) {
        auto it = hkey.find(std::to_string(from) + ":" + std::to_string(to) + ":" +
                            detail::mangle(co) + detail::mangle(cc));
        if (it == hkey.end())
            throw InternalInconsistency("internal hom not closed (hmor)");
        return it->second;
    };
    auto vfind = [&](int from, int to, const std::vector<int>& co,
                     const std::vector<int>& cc) {
        auto it = vkey.find(std::to_string(from) + ":" + std::to_string(to) + ":" +
                            detail::mangle(co) + detail::mangle(cc));
        if (it == vkey.end())
            throw InternalInconsistency("internal hom not closed (vmor)");
        return it->second;
    };
    for (const auto& m : H.squares) {
        d.stop.push_back(m.h);
        d.sbot.push_back(m.k);
        d.sleft.push_back(m.r);
        d.sright.push_back(m.s);
    }
    // identities
    d.idh.resize(nf);
    d.idv.resize(nf);
    for (int f = 0; f < nf; ++f) {
        const auto& F = H.objects[f];
        std::vector<int> co(A->nob()), cc(A->nv());
        for (int o = 0; o < A->nob(); ++o) co[o] = B->idh[F.ob[o]];
        for (int u = 0; u < A->nv(); ++u) cc[u] = B->idsq[F.vm[u]];
        d.idh[f] = hfind(f, f, co, cc);
        std::vector<int> co2(A->nob()), cc2(A->nh());
        for (int o = 0; o < A->nob(); ++o) co2[o] = B->idv[F.ob[o]];
        for (int a = 0; a < A->nh(); ++a) cc2[a] = B->esq[F.hm[a]];
        d.idv[f] = vfind(f, f, co2, cc2);
    }
    auto sfind = [&](int h, int k, int r, int s, const std::vector<int>& comp) {
        auto it = skey.find(std::to_string(h) + ":" + std::to_string(k) + ":" +
                            std::to_string(r) + ":" + std::to_string(s) + ":" +
                            detail::mangle(comp));
        if (it == skey.end())
            throw InternalInconsistency("internal hom not closed (modification)");
        return it->second;
    };
    d.esq.resize(d.nh());
    for (size_t i = 0; i < H.hmors.size(); ++i) {
        const auto& t = H.hmors[i];
        std::vector<int> comp(A->nob());
        for (int o = 0; o < A->nob(); ++o) comp[o] = B->esq[t.comp_ob[o]];
        d.esq[i] = sfind((int)i, (int)i, d.idv[t.from], d.idv[t.to], comp);
    }
    d.idsq.resize(d.nv());
    for (size_t i = 0; i < H.vmors.size(); ++i) {
        const auto& t = H.vmors[i];
        std::vector<int> comp(A->nob());
        for (int o = 0; o < A->nob(); ++o) comp[o] = B->idsq[t.comp_ob[o]];
        d.idsq[i] = sfind(d.idh[t.from], d.idh[t.to], (int)i, (int)i, comp);
    }
    // composition tables
    d.hm_comp.assign((size_t)d.nh() * d.nh(), -1);
    for (int y = 0; y < d.nh(); ++y)
        for (int x = 0; x < d.nh(); ++x) {
            if (!d.hm_composable(y, x)) continue;
            const auto &ty = H.hmors[y], &tx = H.hmors[x];
            std::vector<int> co(A->nob()), cc(A->nv());
            for (int o = 0; o < A->nob(); ++o)
                co[o] = B->hcomp_m(ty.comp_ob[o], tx.comp_ob[o]);
            for (int u = 0; u < A->nv(); ++u)
                cc[u] = B->hcomp_s(ty.comp_cell[u], tx.comp_cell[u]);
            d.hm_comp[(size_t)y * d.nh() + x] = hfind(tx.from, ty.to, co, cc);
        }
    d.vm_comp.assign((size_t)d.nv() * d.nv(), -1);
    for (int y = 0; y < d.nv(); ++y)
        for (int x = 0; x < d.nv(); ++x) {
            if (!d.vm_composable(y, x)) continue;
            const auto &ty = H.vmors[y], &tx = H.vmors[x];
            std::vector<int> co(A->nob()), cc(A->nh());
            for (int o = 0; o < A->nob(); ++o)
                co[o] = B->vcomp_m(ty.comp_ob[o], tx.comp_ob[o]);
            for (int a = 0; a < A->nh(); ++a)
                cc[a] = B->vcomp_s(ty.comp_cell[a], tx.comp_cell[a]);
            d.vm_comp[(size_t)y * d.nv() + x] = vfind(tx.from, ty.to, co, cc);
        }
    d.sq_hcomp.assign((size_t)d.ns() * d.ns(), -1);
    d.sq_vcomp.assign((size_t)d.ns() * d.ns(), -1);
    for (int y = 0; y < d.ns(); ++y)
        for (int x = 0; x < d.ns(); ++x) {
            const auto &my = H.squares[y], &mx = H.squares[x];
            if (d.sq_hcomposable(y, x)) {
                std::vector<int> comp(A->nob());
                for (int o = 0; o < A->nob(); ++o)
                    comp[o] = B->hcomp_s(my.comp[o], mx.comp[o]);
                d.sq_hcomp[(size_t)y * d.ns() + x] =
                    sfind(d.hcomp_m(my.h, mx.h), d.hcomp_m(my.k, mx.k), mx.r, my.s, comp);
            }
            if (d.sq_vcomposable(y, x)) {
                std::vector<int> comp(A->nob());
                for (int o = 0; o < A->nob(); ++o)
                    comp[o] = B->vcomp_s(my.comp[o], mx.comp[o]);
                d.sq_vcomp[(size_t)y * d.ns() + x] =
                    sfind(mx.h, my.k, d.vcomp_m(my.r, mx.r), d.vcomp_m(my.s, mx.s), comp);
            }
        }
    return H;
}

// ------------------------------------------------- isomorphism search

// Backtracking bijection search between finite double categories, with
// degree-invariant pruning. Returns an isomorphism if one exists.
inline std::optional<DoubleFunctor> find_isomorphism(const DblPtr& A, const DblPtr& B,
                                                     Budget& budget) {
    if (A->nob() != B->nob() || A->nh() != B->nh() || A->nv() != B->nv() ||
        A->ns() != B->ns())
        return std::nullopt;
    std::optional<DoubleFunctor> result;
    DoubleFunctorEnumerator e(A, B, budget);
    e.require_injective = true;  // equal counts per sort, so injective = bijective
    e.run([&](const DoubleFunctor& F) {
        result = F;
        result->name = "iso";
        return false;
    });
    return result;
}

inline bool isomorphic(const DblPtr& A, const DblPtr& B, Budget& budget) {
    return find_isomorphism(A, B, budget).has_value();
}

}  // namespace dblcat
