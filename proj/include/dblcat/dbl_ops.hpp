#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dblcat/core.hpp"
#include "dblcat/dbl.hpp"

namespace dblcat {

// ------------------------------------------------------------- coproduct

inline DoubleCategory coproduct(const DoubleCategory& A, const DoubleCategory& B) {
    DoubleCategory d;
    d.name = A.name + "+" + B.name;
    auto tag = [](const std::string& p, const std::vector<std::string>& v,
                  std::vector<std::string>& out) {
        for (const auto& n : v) out.push_back(p + n);
    };
    tag("l_", A.ob, d.ob);
    tag("r_", B.ob, d.ob);
    tag("l_", A.hm, d.hm);
    tag("r_", B.hm, d.hm);
    tag("l_", A.vm, d.vm);
    tag("r_", B.vm, d.vm);
    tag("l_", A.sq, d.sq);
    tag("r_", B.sq, d.sq);
    auto shift = [](const std::vector<int>& v, int off, std::vector<int>& out) {
        for (int x : v) out.push_back(x + off);
    };
    shift(A.hsrc, 0, d.hsrc); shift(B.hsrc, A.nob(), d.hsrc);
    shift(A.htgt, 0, d.htgt); shift(B.htgt, A.nob(), d.htgt);
    shift(A.vsrc, 0, d.vsrc); shift(B.vsrc, A.nob(), d.vsrc);
    shift(A.vtgt, 0, d.vtgt); shift(B.vtgt, A.nob(), d.vtgt);
    shift(A.stop, 0, d.stop); shift(B.stop, A.nh(), d.stop);
    shift(A.sbot, 0, d.sbot); shift(B.sbot, A.nh(), d.sbot);
    shift(A.sleft, 0, d.sleft); shift(B.sleft, A.nv(), d.sleft);
    shift(A.sright, 0, d.sright); shift(B.sright, A.nv(), d.sright);
    shift(A.idh, 0, d.idh); shift(B.idh, A.nh(), d.idh);
    shift(A.idv, 0, d.idv); shift(B.idv, A.nv(), d.idv);
    shift(A.esq, 0, d.esq); shift(B.esq, A.ns(), d.esq);
    shift(A.idsq, 0, d.idsq); shift(B.idsq, A.ns(), d.idsq);
    auto merge = [](const std::vector<int>& ta, int na, const std::vector<int>& tb,
                    int nb, std::vector<int>& out) {
        int n = na + nb;
        out.assign((size_t)n * n, -1);
        for (int y = 0; y < na; ++y)
            for (int x = 0; x < na; ++x)
                if (ta[(size_t)y * na + x] >= 0)
                    out[(size_t)y * n + x] = ta[(size_t)y * na + x];
        for (int y = 0; y < nb; ++y)
            for (int x = 0; x < nb; ++x)
                if (tb[(size_t)y * nb + x] >= 0)
                    out[(size_t)(y + na) * n + (x + na)] = tb[(size_t)y * nb + x] + na;
        return;
    };
    merge(A.hm_comp, A.nh(), B.hm_comp, B.nh(), d.hm_comp);
    merge(A.vm_comp, A.nv(), B.vm_comp, B.nv(), d.vm_comp);
    merge(A.sq_hcomp, A.ns(), B.sq_hcomp, B.ns(), d.sq_hcomp);
    merge(A.sq_vcomp, A.ns(), B.sq_vcomp, B.ns(), d.sq_vcomp);
    return d;
}

// coproduct injections
inline DoubleFunctor coprod_inl(const DblPtr& A, const DblPtr& B, const DblPtr& AB) {
    DoubleFunctor F;
    F.name = "inl";
    F.src = A;
    F.tgt = AB;
    for (int i = 0; i < A->nob(); ++i) F.ob.push_back(i);
    for (int i = 0; i < A->nh(); ++i) F.hm.push_back(i);
    for (int i = 0; i < A->nv(); ++i) F.vm.push_back(i);
    for (int i = 0; i < A->ns(); ++i) F.sq.push_back(i);
    (void)B;
    return F;
}
inline DoubleFunctor coprod_inr(const DblPtr& A, const DblPtr& B, const DblPtr& AB) {
    DoubleFunctor F;
    F.name = "inr";
    F.src = B;
    F.tgt = AB;
    for (int i = 0; i < B->nob(); ++i) F.ob.push_back(i + A->nob());
    for (int i = 0; i < B->nh(); ++i) F.hm.push_back(i + A->nh());
    for (int i = 0; i < B->nv(); ++i) F.vm.push_back(i + A->nv());
    for (int i = 0; i < B->ns(); ++i) F.sq.push_back(i + A->ns());
    return F;
}

// --------------------------------------------------------------- product

inline DoubleCategory product(const DoubleCategory& A, const DoubleCategory& B) {
    DoubleCategory d;
    d.name = A.name + "x" + B.name;
    auto pair_names = [](const std::vector<std::string>& xs,
                         const std::vector<std::string>& ys,
                         std::vector<std::string>& out) {
        for (const auto& x : xs)
            for (const auto& y : ys) out.push_back(x + "|" + y);
    };
    pair_names(A.ob, B.ob, d.ob);
    pair_names(A.hm, B.hm, d.hm);
    pair_names(A.vm, B.vm, d.vm);
    pair_names(A.sq, B.sq, d.sq);
    auto po = [&](int a, int b) { return a * B.nob() + b; };
    auto ph = [&](int a, int b) { return a * B.nh() + b; };
    auto pv = [&](int a, int b) { return a * B.nv() + b; };
    auto ps = [&](int a, int b) { return a * B.ns() + b; };
    d.hsrc.resize(d.nh());
    d.htgt.resize(d.nh());
    for (int a = 0; a < A.nh(); ++a)
        for (int b = 0; b < B.nh(); ++b) {
            d.hsrc[ph(a, b)] = po(A.hsrc[a], B.hsrc[b]);
            d.htgt[ph(a, b)] = po(A.htgt[a], B.htgt[b]);
        }
    d.vsrc.resize(d.nv());
    d.vtgt.resize(d.nv());
    for (int a = 0; a < A.nv(); ++a)
        for (int b = 0; b < B.nv(); ++b) {
            d.vsrc[pv(a, b)] = po(A.vsrc[a], B.vsrc[b]);
            d.vtgt[pv(a, b)] = po(A.vtgt[a], B.vtgt[b]);
        }
    d.stop.resize(d.ns());
    d.sbot.resize(d.ns());
    d.sleft.resize(d.ns());
    d.sright.resize(d.ns());
    for (int a = 0; a < A.ns(); ++a)
        for (int b = 0; b < B.ns(); ++b) {
            d.stop[ps(a, b)] = ph(A.stop[a], B.stop[b]);
            d.sbot[ps(a, b)] = ph(A.sbot[a], B.sbot[b]);
            d.sleft[ps(a, b)] = pv(A.sleft[a], B.sleft[b]);
            d.sright[ps(a, b)] = pv(A.sright[a], B.sright[b]);
        }
    d.idh.resize(d.nob());
    d.idv.resize(d.nob());
    for (int a = 0; a < A.nob(); ++a)
        for (int b = 0; b < B.nob(); ++b) {
            d.idh[po(a, b)] = ph(A.idh[a], B.idh[b]);
            d.idv[po(a, b)] = pv(A.idv[a], B.idv[b]);
        }
    d.esq.resize(d.nh());
    for (int a = 0; a < A.nh(); ++a)
        for (int b = 0; b < B.nh(); ++b) d.esq[ph(a, b)] = ps(A.esq[a], B.esq[b]);
    d.idsq.resize(d.nv());
    for (int a = 0; a < A.nv(); ++a)
        for (int b = 0; b < B.nv(); ++b) d.idsq[pv(a, b)] = ps(A.idsq[a], B.idsq[b]);

    auto fill = [](auto idx, const std::vector<int>& ta, int, const std::vector<int>& tb,
                   int nb2, int n, std::vector<int>& out, int na_cells, int nb_cells) {
        out.assign((size_t)n * n, -1);
        for (int y1 = 0; y1 < na_cells; ++y1)
            for (int x1 = 0; x1 < na_cells; ++x1) {
                int za = ta[(size_t)y1 * na_cells + x1];
                if (za < 0) continue;
                for (int y2 = 0; y2 < nb_cells; ++y2)
                    for (int x2 = 0; x2 < nb_cells; ++x2) {
                        int zb = tb[(size_t)y2 * nb_cells + x2];
                        if (zb < 0) continue;
                        out[(size_t)idx(y1, y2) * n + idx(x1, x2)] = idx(za, zb);
                    }
            }
        (void)nb2;
    };
    fill(ph, A.hm_comp, A.nh(), B.hm_comp, B.nh(), d.nh(), d.hm_comp, A.nh(), B.nh());
    fill(pv, A.vm_comp, A.nv(), B.vm_comp, B.nv(), d.nv(), d.vm_comp, A.nv(), B.nv());
    fill(ps, A.sq_hcomp, A.ns(), B.sq_hcomp, B.ns(), d.ns(), d.sq_hcomp, A.ns(), B.ns());
    fill(ps, A.sq_vcomp, A.ns(), B.sq_vcomp, B.ns(), d.ns(), d.sq_vcomp, A.ns(), B.ns());
    return d;
}

inline DoubleFunctor prod_proj1(const DblPtr& AB, const DblPtr& A, const DblPtr& B) {
    DoubleFunctor F;
    F.name = "pr1";
    F.src = AB;
    F.tgt = A;
    for (int a = 0; a < A->nob(); ++a)
        for (int b = 0; b < B->nob(); ++b) F.ob.push_back(a);
    for (int a = 0; a < A->nh(); ++a)
        for (int b = 0; b < B->nh(); ++b) F.hm.push_back(a);
    for (int a = 0; a < A->nv(); ++a)
        for (int b = 0; b < B->nv(); ++b) F.vm.push_back(a);
    for (int a = 0; a < A->ns(); ++a)
        for (int b = 0; b < B->ns(); ++b) F.sq.push_back(a);
    return F;
}
inline DoubleFunctor prod_proj2(const DblPtr& AB, const DblPtr& A, const DblPtr& B) {
    DoubleFunctor F;
    F.name = "pr2";
    F.src = AB;
    F.tgt = B;
    for (int a = 0; a < A->nob(); ++a)
        for (int b = 0; b < B->nob(); ++b) F.ob.push_back(b);
    for (int a = 0; a < A->nh(); ++a)
        for (int b = 0; b < B->nh(); ++b) F.hm.push_back(b);
    for (int a = 0; a < A->nv(); ++a)
        for (int b = 0; b < B->nv(); ++b) F.vm.push_back(b);
    for (int a = 0; a < A->ns(); ++a)
        for (int b = 0; b < B->ns(); ++b) F.sq.push_back(b);
    return F;
}

// -------------------------------------------------------------- transpose

// Swaps the horizontal and vertical structure; an involution.
inline DoubleCategory transpose(const DoubleCategory& A) {
    DoubleCategory d;
    d.name = A.name + "^T";
    d.ob = A.ob;
    d.hm = A.vm;
    d.vm = A.hm;
    d.sq = A.sq;
    d.hsrc = A.vsrc;
    d.htgt = A.vtgt;
    d.vsrc = A.hsrc;
    d.vtgt = A.htgt;
    d.stop = A.sleft;
    d.sbot = A.sright;
    d.sleft = A.stop;
    d.sright = A.sbot;
    d.idh = A.idv;
    d.idv = A.idh;
    d.esq = A.idsq;
    d.idsq = A.esq;
    d.hm_comp = A.vm_comp;
    d.vm_comp = A.hm_comp;
    d.sq_hcomp = A.sq_vcomp;
    d.sq_vcomp = A.sq_hcomp;
    return d;
}

inline DoubleFunctor transpose(const DoubleFunctor& F, const DblPtr& srcT,
                               const DblPtr& tgtT) {
    DoubleFunctor G;
    G.name = F.name + "^T";
    G.src = srcT;
    G.tgt = tgtT;
    G.ob = F.ob;
    G.hm = F.vm;
    G.vm = F.hm;
    G.sq = F.sq;
    return G;
}

// ------------------------------------------------- functor enumeration

// Backtracking enumeration of all double functors A -> B, each emitted once,
// in deterministic order. Cells are assigned in sort order (objects, hmors,
// vmors, squares); identities and already-determined composites are
// propagated before branching.
class DoubleFunctorEnumerator {
  public:
    DoubleFunctorEnumerator(DblPtr A, DblPtr B, Budget& budget)
        : A_(std::move(A)), B_(std::move(B)), budget_(budget) {}

    // visit returns false to stop the enumeration
    void run(const std::function<bool(const DoubleFunctor&)>& visit) {
        F_.name = "F";
        F_.src = A_;
        F_.tgt = B_;
        F_.ob.assign(A_->nob(), -1);
        F_.hm.assign(A_->nh(), -1);
        F_.vm.assign(A_->nv(), -1);
        F_.sq.assign(A_->ns(), -1);
        used_ob_.assign(B_->nob(), 0);
        used_hm_.assign(B_->nh(), 0);
        used_vm_.assign(B_->nv(), 0);
        used_sq_.assign(B_->ns(), 0);
        visit_ = &visit;
        stop_ = false;
        assign_object(0);
    }

    // pin a cell of A to a cell of B before running (used by the lifting solver)
    std::vector<int> pin_ob, pin_hm, pin_vm, pin_sq;      // -1 = free
    std::vector<std::vector<int>> cand_ob, cand_hm, cand_vm, cand_sq;  // optional
    bool require_injective = false;  // per sort; used by the isomorphism search

  private:
    DblPtr A_, B_;
    Budget& budget_;
    DoubleFunctor F_;
    const std::function<bool(const DoubleFunctor&)>* visit_ = nullptr;
    bool stop_ = false;
    std::vector<char> used_ob_, used_hm_, used_vm_, used_sq_;

    bool take(std::vector<char>& used, int x) {
        if (!require_injective) return true;
        if (used.empty()) return true;
        if (used[x]) return false;
        used[x] = 1;
        return true;
    }
    void drop(std::vector<char>& used, int x) {
        if (require_injective && !used.empty()) used[x] = 0;
    }

    bool allowed(const std::vector<std::vector<int>>& cands, int i, int v) const {
        if (cands.empty() || cands[i].empty()) return true;
        for (int c : cands[i])
            if (c == v) return true;
        return false;
    }

    void assign_object(int o) {
        if (stop_) return;
        const DoubleCategory &A = *A_, &B = *B_;
        if (o == A.nob()) {
            assign_hmor(0);
            return;
        }
        int lo = 0, hi = B.nob();
        if (!pin_ob.empty() && pin_ob[o] >= 0) { lo = pin_ob[o]; hi = pin_ob[o] + 1; }
        for (int x = lo; x < hi; ++x) {
            if (!allowed(cand_ob, o, x)) continue;
            if (!take(used_ob_, x)) continue;
            budget_.tick();
            F_.ob[o] = x;
            assign_object(o + 1);
            drop(used_ob_, x);
            if (stop_) return;
        }
        F_.ob[o] = -1;
    }

    bool hmor_consistent(int a) const {
        const DoubleCategory &A = *A_, &B = *B_;
        int x = F_.hm[a];
        if (B.hsrc[x] != F_.ob[A.hsrc[a]] || B.htgt[x] != F_.ob[A.htgt[a]])
            return false;
        if (A.idh[A.hsrc[a]] == a && A.hsrc[a] == A.htgt[a] &&
            x != B.idh[F_.ob[A.hsrc[a]]] && A.is_idh(a))
            return false;
        for (int b = 0; b < A.nh(); ++b) {
            if (F_.hm[b] < 0) continue;
            if (A.hm_composable(b, a)) {
                int c = A.hcomp_m(b, a);
                if (F_.hm[c] >= 0 && B.hcomp_m(F_.hm[b], x) != F_.hm[c]) return false;
            }
            if (A.hm_composable(a, b)) {
                int c = A.hcomp_m(a, b);
                if (F_.hm[c] >= 0 && B.hcomp_m(x, F_.hm[b]) != F_.hm[c]) return false;
            }
        }
        return true;
    }

    void assign_hmor(int a) {
        if (stop_) return;
        const DoubleCategory &A = *A_, &B = *B_;
        if (a == A.nh()) {
            assign_vmor(0);
            return;
        }
        if (F_.hm[a] >= 0) {  // already forced
            assign_hmor(a + 1);
            return;
        }
        std::vector<int> cands;
        if (!pin_hm.empty() && pin_hm[a] >= 0) {
            cands.push_back(pin_hm[a]);
        } else if (A.is_idh(a)) {
            cands.push_back(B.idh[F_.ob[A.hsrc[a]]]);
        } else {
            int forced = forced_hm(a);
            if (forced >= -1) {
                if (forced >= 0) cands.push_back(forced);
                // forced == -1 means a composite whose value conflicts; prune
            } else {
                for (int x = 0; x < B.nh(); ++x) cands.push_back(x);
            }
        }
        for (int x : cands) {
            if (!allowed(cand_hm, a, x)) continue;
            if (!take(used_hm_, x)) continue;
            budget_.tick();
            F_.hm[a] = x;
            if (hmor_consistent(a)) assign_hmor(a + 1);
            drop(used_hm_, x);
            if (stop_) return;
        }
        F_.hm[a] = -1;
    }

    // returns -2 if not determined, -1 if determined inconsistently, else value
    int forced_hm(int a) const {
        const DoubleCategory &A = *A_, &B = *B_;
        int val = -2;
        for (int b = 0; b < A.nh(); ++b)
            for (int c = 0; c < A.nh(); ++c) {
                if (!A.hm_composable(b, c) || A.hcomp_m(b, c) != a) continue;
                if (b == a || c == a || F_.hm[b] < 0 || F_.hm[c] < 0) continue;
                int v = B.hcomp_m(F_.hm[b], F_.hm[c]);
                if (val == -2)
                    val = v;
                else if (val != v)
                    return -1;
            }
        return val;
    }

    bool vmor_consistent(int u) const {
        const DoubleCategory &A = *A_, &B = *B_;
        int x = F_.vm[u];
        if (B.vsrc[x] != F_.ob[A.vsrc[u]] || B.vtgt[x] != F_.ob[A.vtgt[u]])
            return false;
        for (int v = 0; v < A.nv(); ++v) {
            if (F_.vm[v] < 0) continue;
            if (A.vm_composable(v, u)) {
                int w = A.vcomp_m(v, u);
                if (F_.vm[w] >= 0 && B.vcomp_m(F_.vm[v], x) != F_.vm[w]) return false;
            }
            if (A.vm_composable(u, v)) {
                int w = A.vcomp_m(u, v);
                if (F_.vm[w] >= 0 && B.vcomp_m(x, F_.vm[v]) != F_.vm[w]) return false;
            }
        }
        return true;
    }

    void assign_vmor(int u) {
        if (stop_) return;
        const DoubleCategory &A = *A_, &B = *B_;
        if (u == A.nv()) {
            assign_square(0);
            return;
        }
        if (F_.vm[u] >= 0) {
            assign_vmor(u + 1);
            return;
        }
        std::vector<int> cands;
        if (!pin_vm.empty() && pin_vm[u] >= 0) {
            cands.push_back(pin_vm[u]);
        } else if (A.is_idv(u)) {
            cands.push_back(B.idv[F_.ob[A.vsrc[u]]]);
        } else {
            int forced = forced_vm(u);
            if (forced >= -1) {
                if (forced >= 0) cands.push_back(forced);
            } else {
                for (int x = 0; x < B.nv(); ++x) cands.push_back(x);
            }
        }
        for (int x : cands) {
            if (!allowed(cand_vm, u, x)) continue;
            if (!take(used_vm_, x)) continue;
            budget_.tick();
            F_.vm[u] = x;
            if (vmor_consistent(u)) assign_vmor(u + 1);
            drop(used_vm_, x);
            if (stop_) return;
        }
        F_.vm[u] = -1;
    }

    int forced_vm(int u) const {
        const DoubleCategory &A = *A_, &B = *B_;
        int val = -2;
        for (int v = 0; v < A.nv(); ++v)
            for (int w = 0; w < A.nv(); ++w) {
                if (!A.vm_composable(v, w) || A.vcomp_m(v, w) != u) continue;
                if (v == u || w == u || F_.vm[v] < 0 || F_.vm[w] < 0) continue;
                int x = B.vcomp_m(F_.vm[v], F_.vm[w]);
                if (val == -2)
                    val = x;
                else if (val != x)
                    return -1;
            }
        return val;
    }

    bool square_consistent(int s) const {
        const DoubleCategory &A = *A_, &B = *B_;
        int x = F_.sq[s];
        if (B.stop[x] != F_.hm[A.stop[s]] || B.sbot[x] != F_.hm[A.sbot[s]] ||
            B.sleft[x] != F_.vm[A.sleft[s]] || B.sright[x] != F_.vm[A.sright[s]])
            return false;
        for (int t = 0; t < A.ns(); ++t) {
            if (F_.sq[t] < 0) continue;
            if (A.sq_hcomposable(t, s)) {
                int r = A.hcomp_s(t, s);
                if (F_.sq[r] >= 0 && B.hcomp_s(F_.sq[t], x) != F_.sq[r]) return false;
            }
            if (A.sq_hcomposable(s, t)) {
                int r = A.hcomp_s(s, t);
                if (F_.sq[r] >= 0 && B.hcomp_s(x, F_.sq[t]) != F_.sq[r]) return false;
            }
            if (A.sq_vcomposable(t, s)) {
                int r = A.vcomp_s(t, s);
                if (F_.sq[r] >= 0 && B.vcomp_s(F_.sq[t], x) != F_.sq[r]) return false;
            }
            if (A.sq_vcomposable(s, t)) {
                int r = A.vcomp_s(s, t);
                if (F_.sq[r] >= 0 && B.vcomp_s(x, F_.sq[t]) != F_.sq[r]) return false;
            }
        }
        return true;
    }

    void assign_square(int s) {
        if (stop_) return;
        const DoubleCategory &A = *A_, &B = *B_;
        if (s == A.ns()) {
            if (!(*visit_)(F_)) stop_ = true;
            return;
        }
        if (F_.sq[s] >= 0) {
            assign_square(s + 1);
            return;
        }
        std::vector<int> cands;
        bool is_e = false;
        for (int a = 0; a < A.nh(); ++a) is_e |= A.esq[a] == s;
        bool is_i = false;
        for (int u = 0; u < A.nv(); ++u) is_i |= A.idsq[u] == s;
        if (!pin_sq.empty() && pin_sq[s] >= 0) {
            cands.push_back(pin_sq[s]);
        } else if (is_e) {
            for (int a = 0; a < A.nh(); ++a)
                if (A.esq[a] == s) { cands.push_back(B.esq[F_.hm[a]]); break; }
        } else if (is_i) {
            for (int u = 0; u < A.nv(); ++u)
                if (A.idsq[u] == s) { cands.push_back(B.idsq[F_.vm[u]]); break; }
        } else {
            for (int x = 0; x < B.ns(); ++x) cands.push_back(x);
        }
        for (int x : cands) {
            if (!allowed(cand_sq, s, x)) continue;
            if (!take(used_sq_, x)) continue;
            budget_.tick();
            F_.sq[s] = x;
            if (square_consistent(s)) assign_square(s + 1);
            drop(used_sq_, x);
            if (stop_) return;
        }
        F_.sq[s] = -1;
    }
};

inline void enumerate_double_functors(const DblPtr& A, const DblPtr& B, Budget& budget,
                                      const std::function<bool(const DoubleFunctor&)>& visit) {
    DoubleFunctorEnumerator e(A, B, budget);
    e.run(visit);
}

inline std::vector<DoubleFunctor> all_double_functors(const DblPtr& A, const DblPtr& B,
                                                      Budget& budget) {
    std::vector<DoubleFunctor> out;
    int k = 0;
    enumerate_double_functors(A, B, budget, [&](const DoubleFunctor& F) {
        out.push_back(F);
        out.back().name = "F" + std::to_string(k++);
        return true;
    });
    return out;
}

// ----------------------------------------------------------- lifting

// Solves the lifting problem
//
//     X --top--> E
//     |i         |p        find L: Y -> E with L∘i = top and p∘L = bottom.
//     v          v
//     Y -bottom-> B
//
// Returns the first solution in deterministic order, or nullopt.
inline std::optional<DoubleFunctor> solve_lifting(const DoubleFunctor& i,
                                                  const DoubleFunctor& p,
                                                  const DoubleFunctor& top,
                                                  const DoubleFunctor& bottom,
                                                  Budget& budget) {
    if (i.src != top.src && i.src->name != top.src->name)
        throw MalformedMap("lifting: i and top must share their source");
    // square must commute: p∘top = bottom∘i
    {
        DoubleFunctor l = compose(p, top), r = compose(bottom, i);
        if (l.ob != r.ob || l.hm != r.hm || l.vm != r.vm || l.sq != r.sq)
            throw MalformedMap("lifting: p∘top ≠ bottom∘i");
    }
    const DblPtr &Y = i.tgt, &E = p.src;
    DoubleFunctorEnumerator e(Y, E, budget);
    e.pin_ob.assign(Y->nob(), -1);
    e.pin_hm.assign(Y->nh(), -1);
    e.pin_vm.assign(Y->nv(), -1);
    e.pin_sq.assign(Y->ns(), -1);
    auto pin = [](std::vector<int>& pins, const std::vector<int>& imap,
                  const std::vector<int>& tmap) {
        for (size_t x = 0; x < imap.size(); ++x) {
            int& slot = pins[imap[x]];
            if (slot >= 0 && slot != tmap[x]) throw NotInvertible("");
            slot = tmap[x];
        }
    };
    try {
        pin(e.pin_ob, i.ob, top.ob);
        pin(e.pin_hm, i.hm, top.hm);
        pin(e.pin_vm, i.vm, top.vm);
        pin(e.pin_sq, i.sq, top.sq);
    } catch (const NotInvertible&) {
        return std::nullopt;  // i identifies cells that top separates
    }
    // p∘L = bottom: restrict candidates to the fibers of p
    e.cand_ob.assign(Y->nob(), {});
    e.cand_hm.assign(Y->nh(), {});
    e.cand_vm.assign(Y->nv(), {});
    e.cand_sq.assign(Y->ns(), {});
    bool feasible = true;
    auto fibers = [&](std::vector<std::vector<int>>& cands, const std::vector<int>& pmap,
                      const std::vector<int>& bmap, int ncells) {
        for (size_t y = 0; y < cands.size(); ++y) {
            for (int x = 0; x < ncells; ++x)
                if (pmap[x] == bmap[y]) cands[y].push_back(x);
            if (cands[y].empty()) feasible = false;
        }
    };
    fibers(e.cand_ob, p.ob, bottom.ob, E->nob());
    fibers(e.cand_hm, p.hm, bottom.hm, E->nh());
    fibers(e.cand_vm, p.vm, bottom.vm, E->nv());
    fibers(e.cand_sq, p.sq, bottom.sq, E->ns());
    if (!feasible) return std::nullopt;

    std::optional<DoubleFunctor> result;
    e.run([&](const DoubleFunctor& L) {
        result = L;
        result->name = "lift";
        return false;
    });
    return result;
}

}  // namespace dblcat
