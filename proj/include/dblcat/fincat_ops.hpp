#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dblcat/core.hpp"
#include "dblcat/fincat.hpp"

namespace dblcat {

// -------------------------------------------------- 2-cells and equivalences

inline std::optional<int> cell_vertical_inverse(const TwoCategory& T, int x) {
    for (int y = 0; y < T.ncell(); ++y)
        if (T.csrc[y] == T.ctgt[x] && T.ctgt[y] == T.csrc[x] &&
            T.vcomp(y, x) == T.idc[T.csrc[x]] && T.vcomp(x, y) == T.idc[T.ctgt[x]])
            return y;
    return std::nullopt;
}

inline bool cell_invertible(const TwoCategory& T, int x) {
    return cell_vertical_inverse(T, x).has_value();
}

struct EquivalenceWitness2 {
    int f = -1, g = -1;   // g quasi-inverse to f
    int eta = -1;         // id_A => g∘f, invertible
    int eps = -1;         // f∘g => id_B, invertible
};

// First witness in deterministic order, or nullopt. All candidates
// (g, eta, eps) are tried exhaustively.
inline std::optional<EquivalenceWitness2> find_equivalence(const TwoCategory& T, int f) {
    const FinCategory& c = T.cat;
    int A = c.src[f], B = c.tgt[f];
    for (int g = 0; g < c.nm(); ++g) {
        if (c.src[g] != B || c.tgt[g] != A) continue;
        int gf = c.compose(g, f), fg = c.compose(f, g);
        for (int eta = 0; eta < T.ncell(); ++eta) {
            if (T.csrc[eta] != c.idm[A] || T.ctgt[eta] != gf) continue;
            if (!cell_invertible(T, eta)) continue;
            for (int eps = 0; eps < T.ncell(); ++eps) {
                if (T.csrc[eps] != fg || T.ctgt[eps] != c.idm[B]) continue;
                if (!cell_invertible(T, eps)) continue;
                return EquivalenceWitness2{f, g, eta, eps};
            }
        }
    }
    return std::nullopt;
}

// is-equivalence, memoised per 2-category by the caller when it matters
inline std::vector<char> equivalence_morphisms(const TwoCategory& T) {
    std::vector<char> out(T.nm(), 0);
    for (int f = 0; f < T.nm(); ++f) out[f] = find_equivalence(T, f).has_value();
    return out;
}

// ------------------------------------------------------------ биequivalence

// (b1)-(b3) with literal quantifiers: b2 ranges over all pairs of source
// objects, b3 over all pairs of source morphisms with parallel images.
inline CheckReport check_biequivalence(const TwoFunctor& F) {
    CheckReport rep;
    const TwoCategory &A = *F.src, &B = *F.tgt;
    auto beq = equivalence_morphisms(B);

    {
        bool ok = true;
        std::string cx;
        for (int b = 0; b < B.nob() && ok; ++b) {
            bool found = false;
            for (int e = 0; e < B.nm() && !found; ++e) {
                if (!beq[e] || B.cat.src[e] != b) continue;
                for (int a = 0; a < A.nob() && !found; ++a)
                    if (B.cat.tgt[e] == F.ob[a]) found = true;
            }
            if (!found) {
                ok = false;
                cx = "object " + B.cat.ob[b] + " has no equivalence into the image";
            }
        }
        rep.set("b1", ok, cx);
    }
    {
        bool ok = true;
        std::string cx;
        for (int a0 = 0; a0 < A.nob() && ok; ++a0)
            for (int c0 = 0; c0 < A.nob() && ok; ++c0)
                for (int b = 0; b < B.nm() && ok; ++b) {
                    if (B.cat.src[b] != F.ob[a0] || B.cat.tgt[b] != F.ob[c0]) continue;
                    bool found = false;
                    for (int a = 0; a < A.nm() && !found; ++a) {
                        if (A.cat.src[a] != a0 || A.cat.tgt[a] != c0) continue;
                        for (int x = 0; x < B.ncell() && !found; ++x)
                            if (B.csrc[x] == b && B.ctgt[x] == F.mo[a] &&
                                cell_invertible(B, x))
                                found = true;
                    }
                    if (!found) {
                        ok = false;
                        cx = "morphism " + B.cat.mo[b] + " between images of " +
                             A.cat.ob[a0] + "," + A.cat.ob[c0];
                    }
                }
        rep.set("b2", ok, cx);
    }
    {
        bool ok = true;
        std::string cx;
        for (int a = 0; a < A.nm() && ok; ++a)
            for (int c = 0; c < A.nm() && ok; ++c) {
                if (B.cat.src[F.mo[a]] != B.cat.src[F.mo[c]] ||
                    B.cat.tgt[F.mo[a]] != B.cat.tgt[F.mo[c]])
                    continue;
                for (int beta = 0; beta < B.ncell() && ok; ++beta) {
                    if (B.csrc[beta] != F.mo[a] || B.ctgt[beta] != F.mo[c]) continue;
                    int count = 0;
                    for (int al = 0; al < A.ncell(); ++al)
                        if (A.csrc[al] == a && A.ctgt[al] == c && F.ce[al] == beta)
                            ++count;
                    if (count != 1) {
                        ok = false;
                        cx = "2-cell " + B.ce[beta] + " over (" + A.cat.mo[a] + "," +
                             A.cat.mo[c] + ") has " + std::to_string(count) +
                             " preimages";
                    }
                }
            }
        rep.set("b3", ok, cx);
    }
    return rep;
}

inline CheckReport check_lack_fibration(const TwoFunctor& F) {
    CheckReport rep;
    const TwoCategory &A = *F.src, &B = *F.tgt;
    auto aeq = equivalence_morphisms(A);
    auto beq = equivalence_morphisms(B);
    {
        bool ok = true;
        std::string cx;
        for (int c0 = 0; c0 < A.nob() && ok; ++c0)
            for (int b = 0; b < B.nm() && ok; ++b) {
                if (!beq[b] || B.cat.tgt[b] != F.ob[c0]) continue;
                bool found = false;
                for (int a = 0; a < A.nm() && !found; ++a)
                    if (aeq[a] && A.cat.tgt[a] == c0 && F.mo[a] == b) found = true;
                if (!found) {
                    ok = false;
                    cx = "equivalence " + B.cat.mo[b] + " into image of " + A.cat.ob[c0] +
                         " has no strict equivalence lift";
                }
            }
        rep.set("f1", ok, cx);
    }
    {
        bool ok = true;
        std::string cx;
        for (int c = 0; c < A.nm() && ok; ++c)
            for (int beta = 0; beta < B.ncell() && ok; ++beta) {
                if (B.ctgt[beta] != F.mo[c] || !cell_invertible(B, beta)) continue;
                bool found = false;
                for (int al = 0; al < A.ncell() && !found; ++al)
                    if (A.ctgt[al] == c && F.ce[al] == beta && cell_invertible(A, al))
                        found = true;
                if (!found) {
                    ok = false;
                    cx = "invertible 2-cell " + B.ce[beta] + " onto " + A.cat.mo[c] +
                         " has no invertible lift";
                }
            }
        rep.set("f2", ok, cx);
    }
    return rep;
}

// -------------------------------------------------------------- freeness

struct FreenessReport {
    bool free = false;
    std::string reason;
    std::vector<int> generators;  // indecomposable morphisms when free
};

// A finite category is free iff the indecomposable morphisms generate it
// uniquely: their graph is acyclic and path evaluation is a bijection onto
// the non-identity morphisms.
inline FreenessReport is_free_category(const FinCategory& c) {
    FreenessReport rep;
    std::vector<int> gens;
    for (int m = 0; m < c.nm(); ++m) {
        if (c.is_id(m)) continue;
        bool decomposable = false;
        for (int g = 0; g < c.nm() && !decomposable; ++g)
            for (int f = 0; f < c.nm() && !decomposable; ++f)
                if (!c.is_id(g) && !c.is_id(f) && c.composable(g, f) &&
                    c.compose(g, f) == m)
                    decomposable = true;
        if (!decomposable) gens.push_back(m);
    }
    // cycle check on the generator graph
    std::vector<int> state(c.nob(), 0);  // 0 unseen, 1 active, 2 done
    std::function<bool(int)> has_cycle = [&](int o) {
        state[o] = 1;
        for (int g : gens)
            if (c.src[g] == o) {
                int t = c.tgt[g];
                if (state[t] == 1) return true;
                if (state[t] == 0 && has_cycle(t)) return true;
            }
        state[o] = 2;
        return false;
    };
    for (int o = 0; o < c.nob(); ++o)
        if (state[o] == 0 && has_cycle(o)) {
            rep.reason = "generator graph has a directed cycle";
            return rep;
        }
    // enumerate all nonempty generator paths, evaluate, demand a bijection
    std::map<int, int> hits;  // morphism -> number of distinct paths evaluating to it
    std::function<void(int, int)> walk = [&](int o, int val) {
        for (int g : gens)
            if (c.src[g] == o) {
                int v = val < 0 ? g : c.compose(g, val);
                hits[v]++;
                walk(c.tgt[g], v);
            }
    };
    for (int o = 0; o < c.nob(); ++o) walk(o, -1);
    for (int m = 0; m < c.nm(); ++m) {
        if (c.is_id(m)) {
            if (hits.count(m)) {
                rep.reason = "a generator path evaluates to the identity " + c.mo[m];
                return rep;
            }
            continue;
        }
        auto it = hits.find(m);
        if (it == hits.end()) {
            rep.reason = "morphism " + c.mo[m] + " is not a composite of generators";
            return rep;
        }
        if (it->second != 1) {
            rep.reason = "morphism " + c.mo[m] + " has " + std::to_string(it->second) +
                         " factorizations";
            return rep;
        }
    }
    rep.free = true;
    rep.generators = gens;
    return rep;
}

// true iff every connected component is a single object with only its
// identity, or two objects joined by exactly one non-identity morphism
inline bool is_disjoint_union_1_2(const FinCategory& c) {
    std::vector<int> root(c.nob());
    for (int o = 0; o < c.nob(); ++o) root[o] = o;
    std::function<int(int)> find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (int m = 0; m < c.nm(); ++m)
        if (!c.is_id(m)) root[find(c.src[m])] = find(c.tgt[m]);
    std::map<int, std::vector<int>> comp_obs;
    for (int o = 0; o < c.nob(); ++o) comp_obs[find(o)].push_back(o);
    std::map<int, std::vector<int>> comp_mors;
    for (int m = 0; m < c.nm(); ++m)
        if (!c.is_id(m)) comp_mors[find(c.src[m])].push_back(m);
    for (auto& [r, obs] : comp_obs) {
        auto& mors = comp_mors[r];
        if (obs.size() == 1 && mors.empty()) continue;
        if (obs.size() == 2 && mors.size() == 1 && c.src[mors[0]] != c.tgt[mors[0]])
            continue;
        return false;
    }
    return true;
}

// ------------------------------------------------------------ D and P

// free 2-category on a category: only identity 2-cells
inline TwoCategory discrete_2cat(const FinCategory& c) {
    TwoCategory t;
    t.name = "D" + c.name;
    t.cat = c;
    for (const auto& m : c.mo) t.ce.push_back("1" + m);
    t.csrc.resize(c.nm());
    t.ctgt.resize(c.nm());
    t.idc.resize(c.nm());
    for (int m = 0; m < c.nm(); ++m) {
        t.csrc[m] = m;
        t.ctgt[m] = m;
        t.idc[m] = m;
    }
    int nc = c.nm();
    t.vc.assign((size_t)nc * nc, -1);
    t.hc.assign((size_t)nc * nc, -1);
    for (int m = 0; m < nc; ++m) t.vc[(size_t)m * nc + m] = m;
    for (int g = 0; g < nc; ++g)
        for (int f = 0; f < nc; ++f)
            if (c.composable(g, f)) t.hc[(size_t)g * nc + f] = c.compose(g, f);
    return t;
}

inline TwoFunctor discrete_2cat(const CatFunctor& F, const TwoCatPtr& srcD,
                                const TwoCatPtr& tgtD) {
    TwoFunctor G;
    G.name = "D" + F.name;
    G.src = srcD;
    G.tgt = tgtD;
    G.ob = F.ob;
    G.mo = F.mo;
    G.ce = F.mo;
    return G;
}

// left adjoint to D: quotient each hom-category by its connected components
// (union-find over the 2-cell graph)
inline FinCategory pi0_truncate(const TwoCategory& T) {
    const FinCategory& c = T.cat;
    std::vector<int> root(c.nm());
    for (int m = 0; m < c.nm(); ++m) root[m] = m;
    std::function<int(int)> find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (int x = 0; x < T.ncell(); ++x) {
        int a = find(T.csrc[x]), b = find(T.ctgt[x]);
        if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> cls(c.nm());
    std::map<int, int> index_of_root;
    std::vector<int> rep_of_class;
    for (int m = 0; m < c.nm(); ++m) {
        int r = find(m);
        if (!index_of_root.count(r)) {
            index_of_root[r] = (int)rep_of_class.size();
            rep_of_class.push_back(r);
        }
        cls[m] = index_of_root[r];
    }
    FinCategory p;
    p.name = "P" + T.name;
    p.ob = c.ob;
    for (int r : rep_of_class) p.mo.push_back(c.mo[r]);
    int nm = (int)p.mo.size();
    p.src.resize(nm);
    p.tgt.resize(nm);
    for (int i = 0; i < nm; ++i) {
        p.src[i] = c.src[rep_of_class[i]];
        p.tgt[i] = c.tgt[rep_of_class[i]];
    }
    p.idm.resize(c.nob());
    for (int o = 0; o < c.nob(); ++o) p.idm[o] = cls[c.idm[o]];
    p.comp.assign((size_t)nm * nm, -1);
    for (int g = 0; g < c.nm(); ++g)
        for (int f = 0; f < c.nm(); ++f)
            if (c.composable(g, f))
                p.comp[(size_t)cls[g] * nm + cls[f]] = cls[c.compose(g, f)];
    return p;
}

// --------------------------------------------------- category-level checks

inline std::optional<int> iso_inverse(const FinCategory& c, int f) {
    for (int g = 0; g < c.nm(); ++g)
        if (c.src[g] == c.tgt[f] && c.tgt[g] == c.src[f] &&
            c.compose(g, f) == c.idm[c.src[f]] && c.compose(f, g) == c.idm[c.tgt[f]])
            return g;
    return std::nullopt;
}

inline bool is_category_equivalence(const CatFunctor& F) {
    const FinCategory &A = *F.src, &B = *F.tgt;
    // essentially surjective
    for (int b = 0; b < B.nob(); ++b) {
        bool found = false;
        for (int m = 0; m < B.nm() && !found; ++m) {
            if (B.src[m] != b || !iso_inverse(B, m)) continue;
            for (int a = 0; a < A.nob() && !found; ++a)
                if (B.tgt[m] == F.ob[a]) found = true;
        }
        if (!found) return false;
    }
    // full and faithful on every pair of source objects
    for (int a0 = 0; a0 < A.nob(); ++a0)
        for (int c0 = 0; c0 < A.nob(); ++c0)
            for (int b = 0; b < B.nm(); ++b) {
                if (B.src[b] != F.ob[a0] || B.tgt[b] != F.ob[c0]) continue;
                int count = 0;
                for (int a = 0; a < A.nm(); ++a)
                    if (A.src[a] == a0 && A.tgt[a] == c0 && F.mo[a] == b) ++count;
                if (count != 1) return false;
            }
    return true;
}

inline bool is_isofibration(const CatFunctor& F) {
    const FinCategory &A = *F.src, &B = *F.tgt;
    for (int c0 = 0; c0 < A.nob(); ++c0)
        for (int b = 0; b < B.nm(); ++b) {
            if (B.tgt[b] != F.ob[c0] || !iso_inverse(B, b)) continue;
            bool found = false;
            for (int a = 0; a < A.nm() && !found; ++a)
                if (A.tgt[a] == c0 && F.mo[a] == b && iso_inverse(A, a)) found = true;
            if (!found) return false;
        }
    return true;
}

// --------------------------------------------------- 2-functor enumeration

class TwoFunctorEnumerator {
  public:
    TwoFunctorEnumerator(TwoCatPtr A, TwoCatPtr B, Budget& budget)
        : A_(std::move(A)), B_(std::move(B)), budget_(budget) {}

    bool require_injective = false;

    void run(const std::function<bool(const TwoFunctor&)>& visit) {
        F_.name = "F";
        F_.src = A_;
        F_.tgt = B_;
        F_.ob.assign(A_->nob(), -1);
        F_.mo.assign(A_->nm(), -1);
        F_.ce.assign(A_->ncell(), -1);
        used_ob_.assign(B_->nob(), 0);
        used_mo_.assign(B_->nm(), 0);
        used_ce_.assign(B_->ncell(), 0);
        visit_ = &visit;
        stop_ = false;
        objects(0);
    }

  private:
    TwoCatPtr A_, B_;
    Budget& budget_;
    TwoFunctor F_;
    const std::function<bool(const TwoFunctor&)>* visit_ = nullptr;
    bool stop_ = false;
    std::vector<char> used_ob_, used_mo_, used_ce_;

    bool take(std::vector<char>& used, int x) {
        if (!require_injective) return true;
        if (used[x]) return false;
        used[x] = 1;
        return true;
    }
    void drop(std::vector<char>& used, int x) {
        if (require_injective) used[x] = 0;
    }

    void objects(int o) {
        if (stop_) return;
        if (o == A_->nob()) {
            morphisms(0);
            return;
        }
        for (int x = 0; x < B_->nob(); ++x) {
            if (!take(used_ob_, x)) continue;
            budget_.tick();
            F_.ob[o] = x;
            objects(o + 1);
            drop(used_ob_, x);
            if (stop_) return;
        }
        F_.ob[o] = -1;
    }

    bool mor_ok(int m) const {
        const FinCategory &a = A_->cat, &b = B_->cat;
        int x = F_.mo[m];
        if (b.src[x] != F_.ob[a.src[m]] || b.tgt[x] != F_.ob[a.tgt[m]]) return false;
        for (int n = 0; n < a.nm(); ++n) {
            if (F_.mo[n] < 0) continue;
            if (a.composable(n, m) && F_.mo[a.compose(n, m)] >= 0 &&
                b.compose(F_.mo[n], x) != F_.mo[a.compose(n, m)])
                return false;
            if (a.composable(m, n) && F_.mo[a.compose(m, n)] >= 0 &&
                b.compose(x, F_.mo[n]) != F_.mo[a.compose(m, n)])
                return false;
        }
        return true;
    }

    void morphisms(int m) {
        if (stop_) return;
        const FinCategory& a = A_->cat;
        if (m == a.nm()) {
            cells(0);
            return;
        }
        std::vector<int> cands;
        if (a.is_id(m)) {
            cands.push_back(B_->cat.idm[F_.ob[a.src[m]]]);
        } else {
            for (int x = 0; x < B_->cat.nm(); ++x) cands.push_back(x);
        }
        for (int x : cands) {
            if (!take(used_mo_, x)) continue;
            budget_.tick();
            F_.mo[m] = x;
            if (mor_ok(m)) morphisms(m + 1);
            drop(used_mo_, x);
            if (stop_) return;
        }
        F_.mo[m] = -1;
    }

    bool cell_ok(int z) const {
        const TwoCategory &A = *A_, &B = *B_;
        int x = F_.ce[z];
        if (B.csrc[x] != F_.mo[A.csrc[z]] || B.ctgt[x] != F_.mo[A.ctgt[z]]) return false;
        for (int w = 0; w < A.ncell(); ++w) {
            if (F_.ce[w] < 0) continue;
            if (A.vcomposable(w, z) && F_.ce[A.vcomp(w, z)] >= 0 &&
                B.vcomp(F_.ce[w], x) != F_.ce[A.vcomp(w, z)])
                return false;
            if (A.vcomposable(z, w) && F_.ce[A.vcomp(z, w)] >= 0 &&
                B.vcomp(x, F_.ce[w]) != F_.ce[A.vcomp(z, w)])
                return false;
            if (A.hcomposable(w, z) && F_.ce[A.hcomp(w, z)] >= 0 &&
                B.hcomp(F_.ce[w], x) != F_.ce[A.hcomp(w, z)])
                return false;
            if (A.hcomposable(z, w) && F_.ce[A.hcomp(z, w)] >= 0 &&
                B.hcomp(x, F_.ce[w]) != F_.ce[A.hcomp(z, w)])
                return false;
        }
        return true;
    }

    void cells(int z) {
        if (stop_) return;
        const TwoCategory& A = *A_;
        if (z == A.ncell()) {
            if (!(*visit_)(F_)) stop_ = true;
            return;
        }
        std::vector<int> cands;
        bool is_idc = false;
        for (int m = 0; m < A.nm(); ++m) is_idc |= A.idc[m] == z;
        if (is_idc) {
            for (int m = 0; m < A.nm(); ++m)
                if (A.idc[m] == z) { cands.push_back(B_->idc[F_.mo[m]]); break; }
        } else {
            for (int x = 0; x < B_->ncell(); ++x) cands.push_back(x);
        }
        for (int x : cands) {
            if (!take(used_ce_, x)) continue;
            budget_.tick();
            F_.ce[z] = x;
            if (cell_ok(z)) cells(z + 1);
            drop(used_ce_, x);
            if (stop_) return;
        }
        F_.ce[z] = -1;
    }
};

inline std::vector<TwoFunctor> all_two_functors(const TwoCatPtr& A, const TwoCatPtr& B,
                                                Budget& budget) {
    std::vector<TwoFunctor> out;
    TwoFunctorEnumerator e(A, B, budget);
    int k = 0;
    e.run([&](const TwoFunctor& F) {
        out.push_back(F);
        out.back().name = "F" + std::to_string(k++);
        return true;
    });
    return out;
}

inline std::optional<TwoFunctor> find_isomorphism(const TwoCatPtr& A, const TwoCatPtr& B,
                                                  Budget& budget) {
    if (A->nob() != B->nob() || A->nm() != B->nm() || A->ncell() != B->ncell())
        return std::nullopt;
    std::optional<TwoFunctor> result;
    TwoFunctorEnumerator e(A, B, budget);
    e.require_injective = true;
    e.run([&](const TwoFunctor& F) {
        result = F;
        result->name = "iso";
        return false;
    });
    return result;
}

inline bool isomorphic(const TwoCatPtr& A, const TwoCatPtr& B, Budget& budget) {
    return find_isomorphism(A, B, budget).has_value();
}

// ------------------------------------------------------- pseudo hom Ps(A,B)

struct PsTransf {
    int from = -1, to = -1;
    std::vector<int> comp_ob;  // per object: morphism of B
    std::vector<int> comp_mo;  // per morphism: invertible 2-cell of B
};

struct PseudoHom {
    TwoCategory two;
    std::vector<TwoFunctor> objects;
    std::vector<PsTransf> mors;
    struct Modif {
        int t = -1, s = -1;
        std::vector<int> comp;  // per object: 2-cell of B
    };
    std::vector<Modif> cells;

    int find_mor(int from, int to, const std::vector<int>& co,
                 const std::vector<int>& cm) const {
        for (int i = 0; i < (int)mors.size(); ++i)
            if (mors[i].from == from && mors[i].to == to && mors[i].comp_ob == co &&
                mors[i].comp_mo == cm)
                return i;
        throw InternalInconsistency("Ps(A,B) not closed (transformation)");
    }
    int find_cell(int t, int s, const std::vector<int>& comp) const {
        for (int i = 0; i < (int)cells.size(); ++i)
            if (cells[i].t == t && cells[i].s == s && cells[i].comp == comp) return i;
        throw InternalInconsistency("Ps(A,B) not closed (modification)");
    }
};

// The 2-category of 2-functors A -> B, pseudo natural transformations, and
// modifications, enumerated exhaustively.
inline PseudoHom pseudo_hom_2cat(const TwoCatPtr& A, const TwoCatPtr& B, Budget& budget) {
    PseudoHom H;
    H.objects = all_two_functors(A, B, budget);
    const int nf = (int)H.objects.size();

    for (int fi = 0; fi < nf; ++fi)
        for (int gi = 0; gi < nf; ++gi) {
            const TwoFunctor &F = H.objects[fi], &G = H.objects[gi];
            std::vector<int> comp_ob(A->nob(), -1), comp_mo(A->nm(), -1);
            std::function<void(int)> pick_mo;
            std::function<void(int)> pick_ob = [&](int o) {
                if (o == A->nob()) {
                    pick_mo(0);
                    return;
                }
                for (int x = 0; x < B->nm(); ++x) {
                    if (B->cat.src[x] != F.ob[o] || B->cat.tgt[x] != G.ob[o]) continue;
                    budget.tick();
                    comp_ob[o] = x;
                    pick_ob(o + 1);
                }
                comp_ob[o] = -1;
            };
            pick_mo = [&](int m) {
                if (m == A->nm()) {
                    PsTransf t;
                    t.from = fi;
                    t.to = gi;
                    t.comp_ob = comp_ob;
                    t.comp_mo = comp_mo;
                    H.mors.push_back(std::move(t));
                    return;
                }
                const FinCategory& a = A->cat;
                std::vector<int> cands;
                if (a.is_id(m)) {
                    cands.push_back(B->idc[comp_ob[a.src[m]]]);
                } else {
                    int lhs = -1, rhs = -1;  // boundaries of t_m
                    lhs = B->cat.compose(G.mo[m], comp_ob[a.src[m]]);
                    rhs = B->cat.compose(comp_ob[a.tgt[m]], F.mo[m]);
                    for (int x = 0; x < B->ncell(); ++x)
                        if (B->csrc[x] == lhs && B->ctgt[x] == rhs &&
                            cell_invertible(*B, x))
                            cands.push_back(x);
                }
                for (int x : cands) {
                    budget.tick();
                    comp_mo[m] = x;
                    bool ok = true;
                    // functoriality: t_{nm} = (t_n ⊙ 1_{Fm}) · (1_{Gn} ⊙ t_m)
                    for (int n = 0; n < a.nm() && ok; ++n) {
                        if (comp_mo[n] < 0) continue;
                        if (a.composable(n, m) && comp_mo[a.compose(n, m)] >= 0) {
                            int want = B->vcomp(B->hcomp(comp_mo[n], B->idc[F.mo[m]]),
                                                B->hcomp(B->idc[G.mo[n]], comp_mo[m]));
                            if (comp_mo[a.compose(n, m)] != want) ok = false;
                        }
                        if (ok && a.composable(m, n) && comp_mo[a.compose(m, n)] >= 0) {
                            int want = B->vcomp(B->hcomp(comp_mo[m], B->idc[F.mo[n]]),
                                                B->hcomp(B->idc[G.mo[m]], comp_mo[n]));
                            if (comp_mo[a.compose(m, n)] != want) ok = false;
                        }
                    }
                    // naturality with respect to 2-cells
                    for (int al = 0; al < A->ncell() && ok; ++al) {
                        int f0 = A->csrc[al], g0 = A->ctgt[al];
                        if (comp_mo[f0] < 0 || comp_mo[g0] < 0) continue;
                        int lhs2 = B->vcomp(comp_mo[g0],
                                            B->hcomp(G.ce[al], B->idc[comp_ob[a.src[f0]]]));
                        int rhs2 = B->vcomp(B->hcomp(B->idc[comp_ob[a.tgt[f0]]], F.ce[al]),
                                            comp_mo[f0]);
                        if (lhs2 != rhs2) ok = false;
                    }
                    if (ok) pick_mo(m + 1);
                }
                comp_mo[m] = -1;
            };
            pick_ob(0);
        }

    // modifications
    for (int t = 0; t < (int)H.mors.size(); ++t)
        for (int s = 0; s < (int)H.mors.size(); ++s) {
            const auto &tt = H.mors[t], &ts = H.mors[s];
            if (tt.from != ts.from || tt.to != ts.to) continue;
            const TwoFunctor &F = H.objects[tt.from], &G = H.objects[tt.to];
            std::vector<int> comp(A->nob(), -1);
            std::function<void(int)> pick = [&](int o) {
                if (o == A->nob()) {
                    H.cells.push_back({t, s, comp});
                    return;
                }
                for (int x = 0; x < B->ncell(); ++x) {
                    if (B->csrc[x] != tt.comp_ob[o] || B->ctgt[x] != ts.comp_ob[o])
                        continue;
                    budget.tick();
                    comp[o] = x;
                    bool ok = true;
                    for (int m = 0; m < A->nm() && ok; ++m) {
                        int o0 = A->cat.src[m], o1 = A->cat.tgt[m];
                        if (comp[o0] < 0 || comp[o1] < 0) continue;
                        int lhs = B->vcomp(ts.comp_mo[m],
                                           B->hcomp(B->idc[G.mo[m]], comp[o0]));
                        int rhs = B->vcomp(B->hcomp(comp[o1], B->idc[F.mo[m]]),
                                           tt.comp_mo[m]);
                        if (lhs != rhs) ok = false;
                    }
                    if (ok) pick(o + 1);
                }
                comp[o] = -1;
            };
            pick(0);
        }

    // assemble the 2-category
    TwoCategory& two = H.two;
    two.name = "Ps(" + A->name + "," + B->name + ")";
    two.cat.name = two.name;
    for (int f = 0; f < nf; ++f) two.cat.ob.push_back("F" + std::to_string(f));
    for (size_t i = 0; i < H.mors.size(); ++i)
        two.cat.mo.push_back("t" + std::to_string(i));
    for (size_t i = 0; i < H.cells.size(); ++i)
        two.ce.push_back("m" + std::to_string(i));
    for (const auto& t : H.mors) {
        two.cat.src.push_back(t.from);
        two.cat.tgt.push_back(t.to);
    }
    for (const auto& m : H.cells) {
        two.csrc.push_back(m.t);
        two.ctgt.push_back(m.s);
    }
    two.cat.idm.resize(nf);
    for (int f = 0; f < nf; ++f) {
        const TwoFunctor& F = H.objects[f];
        std::vector<int> co(A->nob()), cm(A->nm());
        for (int o = 0; o < A->nob(); ++o) co[o] = B->cat.idm[F.ob[o]];
        for (int m = 0; m < A->nm(); ++m) cm[m] = B->idc[F.mo[m]];
        two.cat.idm[f] = H.find_mor(f, f, co, cm);
    }
    two.idc.resize(two.cat.nm());
    for (int t = 0; t < (int)H.mors.size(); ++t) {
        std::vector<int> comp(A->nob());
        for (int o = 0; o < A->nob(); ++o) comp[o] = B->idc[H.mors[t].comp_ob[o]];
        two.idc[t] = H.find_cell(t, t, comp);
    }
    int nm2 = two.cat.nm();
    two.cat.comp.assign((size_t)nm2 * nm2, -1);
    for (int y = 0; y < nm2; ++y)
        for (int x = 0; x < nm2; ++x) {
            if (!two.cat.composable(y, x)) continue;
            const auto &ty = H.mors[y], &tx = H.mors[x];
            std::vector<int> co(A->nob()), cm(A->nm());
            for (int o = 0; o < A->nob(); ++o)
                co[o] = B->cat.compose(ty.comp_ob[o], tx.comp_ob[o]);
            for (int m = 0; m < A->nm(); ++m)
                cm[m] = B->vcomp(B->hcomp(B->idc[ty.comp_ob[A->cat.tgt[m]]], tx.comp_mo[m]),
                                 B->hcomp(ty.comp_mo[m], B->idc[tx.comp_ob[A->cat.src[m]]]));
            two.cat.comp[(size_t)y * nm2 + x] = H.find_mor(tx.from, ty.to, co, cm);
        }
    int nc2 = two.ncell();
    two.vc.assign((size_t)nc2 * nc2, -1);
    two.hc.assign((size_t)nc2 * nc2, -1);
    for (int y = 0; y < nc2; ++y)
        for (int x = 0; x < nc2; ++x) {
            const auto &my = H.cells[y], &mx = H.cells[x];
            if (two.vcomposable(y, x)) {
                std::vector<int> comp(A->nob());
                for (int o = 0; o < A->nob(); ++o)
                    comp[o] = B->vcomp(my.comp[o], mx.comp[o]);
                two.vc[(size_t)y * nc2 + x] = H.find_cell(mx.t, my.s, comp);
            }
            if (two.hcomposable(y, x)) {
                std::vector<int> comp(A->nob());
                for (int o = 0; o < A->nob(); ++o)
                    comp[o] = B->hcomp(my.comp[o], mx.comp[o]);
                two.hc[(size_t)y * nc2 + x] = H.find_cell(
                    two.cat.compose(my.t, mx.t), two.cat.compose(my.s, mx.s), comp);
            }
        }
    return H;
}

}  // namespace dblcat
