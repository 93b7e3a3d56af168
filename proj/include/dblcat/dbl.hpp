#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "dblcat/core.hpp"

namespace dblcat {

// A finite strict double category with fully explicit composition tables.
// Conventions, fixed once for the whole library:
//   hcomp_m(b,a) = b∘a   for hmors  a: A→B, b: B→C
//   vcomp_m(v,u) = v•u   for vmors  u: A→A', v: A'→A''
//   hcomp_s(t,s) = t∘s   for squares with right(s) = left(t)   (s is the left column)
//   vcomp_s(t,s) = t•s   for squares with bot(s) = top(t)      (s is the top row)
struct DoubleCategory {
    std::string name;
    std::vector<std::string> ob, hm, vm, sq;
    std::vector<int> hsrc, htgt;              // per hmor: object index
    std::vector<int> vsrc, vtgt;              // per vmor: object index
    std::vector<int> stop, sbot, sleft, sright;  // per square: hm, hm, vm, vm
    std::vector<int> idh;   // per object: identity hmor
    std::vector<int> idv;   // per object: identity vmor e_A
    std::vector<int> esq;   // per hmor a: vertical identity square e_a
    std::vector<int> idsq;  // per vmor u: horizontal identity square id_u
    std::vector<int> hm_comp, vm_comp;  // morphism tables, -1 = undefined
    std::vector<int> sq_hcomp, sq_vcomp;

    int nob() const { return (int)ob.size(); }
    int nh() const { return (int)hm.size(); }
    int nv() const { return (int)vm.size(); }
    int ns() const { return (int)sq.size(); }

    int hcomp_m(int b, int a) const { return hm_comp[(size_t)b * nh() + a]; }
    int vcomp_m(int v, int u) const { return vm_comp[(size_t)v * nv() + u]; }
    int hcomp_s(int t, int s) const { return sq_hcomp[(size_t)t * ns() + s]; }
    int vcomp_s(int t, int s) const { return sq_vcomp[(size_t)t * ns() + s]; }

    bool hm_composable(int b, int a) const { return htgt[a] == hsrc[b]; }
    bool vm_composable(int v, int u) const { return vtgt[u] == vsrc[v]; }
    bool sq_hcomposable(int t, int s) const { return sright[s] == sleft[t]; }
    bool sq_vcomposable(int t, int s) const { return sbot[s] == stop[t]; }

    int box(int A) const { return esq[idh[A]]; }  // □_A
    bool is_idh(int a) const { return idh[hsrc[a]] == a && hsrc[a] == htgt[a]; }
    bool is_idv(int u) const { return idv[vsrc[u]] == u && vsrc[u] == vtgt[u]; }
    // square with both vertical boundaries identities (a 2-cell of H)
    bool globular(int s) const {
        return sleft[s] == idv[hsrc[stop[s]]] && sright[s] == idv[htgt[stop[s]]];
    }

    int ob_index(const std::string& n) const { return index(ob, n, "object"); }
    int hm_index(const std::string& n) const { return index(hm, n, "hmor"); }
    int vm_index(const std::string& n) const { return index(vm, n, "vmor"); }
    int sq_index(const std::string& n) const { return index(sq, n, "square"); }

  private:
    int index(const std::vector<std::string>& v, const std::string& n,
              const char* kind) const {
        auto it = std::find(v.begin(), v.end(), n);
        if (it == v.end())
            throw UnknownName(std::string(kind) + " '" + n + "' in " + name);
        return (int)(it - v.begin());
    }
};

using DblPtr = std::shared_ptr<const DoubleCategory>;

struct DoubleFunctor {
    std::string name;
    DblPtr src, tgt;
    std::vector<int> ob, hm, vm, sq;
};

// ---------------------------------------------------------------- builder

class DoubleCategoryBuilder {
  public:
    explicit DoubleCategoryBuilder(std::string name, bool autocomplete = true)
        : name_(std::move(name)), auto_(autocomplete) {}

    DoubleCategoryBuilder& object(const std::string& o) {
        obs_.push_back(o);
        return *this;
    }
    DoubleCategoryBuilder& hmor(const std::string& m, const std::string& a,
                                const std::string& b) {
        hms_.push_back({m, a, b});
        return *this;
    }
    DoubleCategoryBuilder& vmor(const std::string& m, const std::string& a,
                                const std::string& b) {
        vms_.push_back({m, a, b});
        return *this;
    }
    DoubleCategoryBuilder& square(const std::string& s, const std::string& top,
                                  const std::string& bot, const std::string& left,
                                  const std::string& right) {
        sqs_.push_back({s, top, bot, left, right});
        return *this;
    }
    DoubleCategoryBuilder& hcomp(const std::string& b, const std::string& a,
                                 const std::string& c) {
        hcs_.push_back({b, a, c});
        return *this;
    }
    DoubleCategoryBuilder& vcomp(const std::string& v, const std::string& u,
                                 const std::string& w) {
        vcs_.push_back({v, u, w});
        return *this;
    }
    DoubleCategoryBuilder& sq_hcomp(const std::string& t, const std::string& s,
                                    const std::string& r) {
        shs_.push_back({t, s, r});
        return *this;
    }
    DoubleCategoryBuilder& sq_vcomp(const std::string& t, const std::string& s,
                                    const std::string& r) {
        svs_.push_back({t, s, r});
        return *this;
    }
    DoubleCategoryBuilder& idh(const std::string& o, const std::string& m) {
        idh_[o] = m;
        return *this;
    }
    DoubleCategoryBuilder& idv(const std::string& o, const std::string& m) {
        idv_[o] = m;
        return *this;
    }
    DoubleCategoryBuilder& esq(const std::string& a, const std::string& s) {
        esq_[a] = s;
        return *this;
    }
    DoubleCategoryBuilder& idsq(const std::string& u, const std::string& s) {
        idsq_[u] = s;
        return *this;
    }

    DoubleCategory build() const;

  private:
    std::string name_;
    bool auto_;
    std::vector<std::string> obs_;
    struct MorDecl { std::string m, a, b; };
    std::vector<MorDecl> hms_, vms_;
    struct SqDecl { std::string s, top, bot, left, right; };
    std::vector<SqDecl> sqs_;
    struct CompDecl { std::string g, f, h; };
    std::vector<CompDecl> hcs_, vcs_, shs_, svs_;
    std::map<std::string, std::string> idh_, idv_, esq_, idsq_;
};

inline DoubleCategory DoubleCategoryBuilder::build() const {
    DoubleCategory d;
    d.name = name_;
    d.ob = obs_;
    std::sort(d.ob.begin(), d.ob.end());
    if (std::adjacent_find(d.ob.begin(), d.ob.end()) != d.ob.end())
        throw MalformedTable("duplicate object name in " + name_);

    auto hdecls = hms_;
    auto vdecls = vms_;
    auto sdecls = sqs_;
    std::map<std::string, std::string> idh = idh_, idv = idv_, esq = esq_, idsq = idsq_;

    if (auto_) {
        for (const auto& o : d.ob) {
            if (!idh.count(o)) idh[o] = "h" + o;
            if (!idv.count(o)) idv[o] = "e" + o;
        }
    }
    auto declared_h = [&](const std::string& n) {
        for (const auto& x : hdecls)
            if (x.m == n) return true;
        return false;
    };
    auto declared_v = [&](const std::string& n) {
        for (const auto& x : vdecls)
            if (x.m == n) return true;
        return false;
    };
    auto declared_s = [&](const std::string& n) {
        for (const auto& x : sdecls)
            if (x.s == n) return true;
        return false;
    };
    for (const auto& [o, m] : idh)
        if (!declared_h(m)) hdecls.push_back({m, o, o});
    for (const auto& [o, m] : idv)
        if (!declared_v(m)) vdecls.push_back({m, o, o});
    if (auto_) {
        // □_A = e_{id_A} = id_{e_A}; then e_a per hmor and id_u per vmor
        for (const auto& o : d.ob) {
            if (!esq.count(idh[o]) && !idsq.count(idv[o])) {
                esq[idh[o]] = "b" + o;
                idsq[idv[o]] = "b" + o;
            } else if (esq.count(idh[o]) && !idsq.count(idv[o])) {
                idsq[idv[o]] = esq[idh[o]];
            } else if (!esq.count(idh[o])) {
                esq[idh[o]] = idsq[idv[o]];
            }
        }
        for (const auto& x : hdecls)
            if (!esq.count(x.m)) esq[x.m] = "e" + x.m;
        for (const auto& x : vdecls)
            if (!idsq.count(x.m)) idsq[x.m] = "i" + x.m;
    }
    std::map<std::string, std::string> hend_src, hend_tgt, vend_src, vend_tgt;
    for (const auto& x : hdecls) { hend_src[x.m] = x.a; hend_tgt[x.m] = x.b; }
    for (const auto& x : vdecls) { vend_src[x.m] = x.a; vend_tgt[x.m] = x.b; }
    for (const auto& [a, s] : esq)
        if (!declared_s(s)) {
            if (!hend_src.count(a)) throw MalformedTable("esq of unknown hmor " + a);
            sdecls.push_back({s, a, a, idv.at(hend_src.at(a)), idv.at(hend_tgt.at(a))});
        }
    for (const auto& [u, s] : idsq)
        if (!declared_s(s)) {
            if (!vend_src.count(u)) throw MalformedTable("idsq of unknown vmor " + u);
            sdecls.push_back({s, idh.at(vend_src.at(u)), idh.at(vend_tgt.at(u)), u, u});
        }

    for (const auto& x : hdecls) d.hm.push_back(x.m);
    for (const auto& x : vdecls) d.vm.push_back(x.m);
    for (const auto& x : sdecls) d.sq.push_back(x.s);
    std::sort(d.hm.begin(), d.hm.end());
    std::sort(d.vm.begin(), d.vm.end());
    std::sort(d.sq.begin(), d.sq.end());
    for (auto* v : {&d.hm, &d.vm, &d.sq})
        if (std::adjacent_find(v->begin(), v->end()) != v->end())
            throw MalformedTable("duplicate cell name in " + name_);

    d.hsrc.assign(d.nh(), -1);
    d.htgt.assign(d.nh(), -1);
    for (const auto& x : hdecls) {
        int i = d.hm_index(x.m);
        d.hsrc[i] = d.ob_index(x.a);
        d.htgt[i] = d.ob_index(x.b);
    }
    d.vsrc.assign(d.nv(), -1);
    d.vtgt.assign(d.nv(), -1);
    for (const auto& x : vdecls) {
        int i = d.vm_index(x.m);
        d.vsrc[i] = d.ob_index(x.a);
        d.vtgt[i] = d.ob_index(x.b);
    }
    d.stop.assign(d.ns(), -1);
    d.sbot.assign(d.ns(), -1);
    d.sleft.assign(d.ns(), -1);
    d.sright.assign(d.ns(), -1);
    for (const auto& x : sdecls) {
        int i = d.sq_index(x.s);
        d.stop[i] = d.hm_index(x.top);
        d.sbot[i] = d.hm_index(x.bot);
        d.sleft[i] = d.vm_index(x.left);
        d.sright[i] = d.vm_index(x.right);
    }

    d.idh.assign(d.nob(), -1);
    d.idv.assign(d.nob(), -1);
    for (const auto& [o, m] : idh) d.idh[d.ob_index(o)] = d.hm_index(m);
    for (const auto& [o, m] : idv) d.idv[d.ob_index(o)] = d.vm_index(m);
    for (int o = 0; o < d.nob(); ++o)
        if (d.idh[o] < 0 || d.idv[o] < 0)
            throw MalformedTable("object " + d.ob[o] + " lacks identities in " + name_);
    d.esq.assign(d.nh(), -1);
    d.idsq.assign(d.nv(), -1);
    for (const auto& [a, s] : esq) d.esq[d.hm_index(a)] = d.sq_index(s);
    for (const auto& [u, s] : idsq) d.idsq[d.vm_index(u)] = d.sq_index(s);
    for (int a = 0; a < d.nh(); ++a)
        if (d.esq[a] < 0)
            throw MalformedTable("hmor " + d.hm[a] + " lacks e-square in " + name_);
    for (int u = 0; u < d.nv(); ++u)
        if (d.idsq[u] < 0)
            throw MalformedTable("vmor " + d.vm[u] + " lacks id-square in " + name_);

    d.hm_comp.assign((size_t)d.nh() * d.nh(), -1);
    d.vm_comp.assign((size_t)d.nv() * d.nv(), -1);
    d.sq_hcomp.assign((size_t)d.ns() * d.ns(), -1);
    d.sq_vcomp.assign((size_t)d.ns() * d.ns(), -1);
    auto set = [&](std::vector<int>& table, int n, int y, int x, int z, bool comp,
                   const char* what) {
        if (!comp)
            throw MalformedTable(std::string(what) + " entry not composable in " + name_);
        int& slot = table[(size_t)y * n + x];
        if (slot >= 0 && slot != z)
            throw MalformedTable(std::string(what) + " conflicting entry in " + name_);
        slot = z;
    };
    for (const auto& x : hcs_) {
        int b = d.hm_index(x.g), a = d.hm_index(x.f), c = d.hm_index(x.h);
        set(d.hm_comp, d.nh(), b, a, c, d.hm_composable(b, a), "HCOMP");
    }
    for (const auto& x : vcs_) {
        int v = d.vm_index(x.g), u = d.vm_index(x.f), w = d.vm_index(x.h);
        set(d.vm_comp, d.nv(), v, u, w, d.vm_composable(v, u), "VCOMP");
    }
    for (const auto& x : shs_) {
        int t = d.sq_index(x.g), s = d.sq_index(x.f), r = d.sq_index(x.h);
        set(d.sq_hcomp, d.ns(), t, s, r, d.sq_hcomposable(t, s), "SQH");
    }
    for (const auto& x : svs_) {
        int t = d.sq_index(x.g), s = d.sq_index(x.f), r = d.sq_index(x.h);
        set(d.sq_vcomp, d.ns(), t, s, r, d.sq_vcomposable(t, s), "SQV");
    }
    if (auto_) {
        for (int a = 0; a < d.nh(); ++a) {
            set(d.hm_comp, d.nh(), d.idh[d.htgt[a]], a, a, true, "HCOMP");
            set(d.hm_comp, d.nh(), a, d.idh[d.hsrc[a]], a, true, "HCOMP");
        }
        for (int u = 0; u < d.nv(); ++u) {
            set(d.vm_comp, d.nv(), d.idv[d.vtgt[u]], u, u, true, "VCOMP");
            set(d.vm_comp, d.nv(), u, d.idv[d.vsrc[u]], u, true, "VCOMP");
        }
        // identity coherence: e_{b∘a} = e_b ∘ e_a, id_{v•u} = id_v • id_u
        for (int b = 0; b < d.nh(); ++b)
            for (int a = 0; a < d.nh(); ++a)
                if (d.hm_composable(b, a) && d.hcomp_m(b, a) >= 0)
                    set(d.sq_hcomp, d.ns(), d.esq[b], d.esq[a], d.esq[d.hcomp_m(b, a)],
                        true, "SQH");
        for (int v = 0; v < d.nv(); ++v)
            for (int u = 0; u < d.nv(); ++u)
                if (d.vm_composable(v, u) && d.vcomp_m(v, u) >= 0)
                    set(d.sq_vcomp, d.ns(), d.idsq[v], d.idsq[u],
                        d.idsq[d.vcomp_m(v, u)], true, "SQV");
        for (int s = 0; s < d.ns(); ++s) {
            set(d.sq_hcomp, d.ns(), d.idsq[d.sright[s]], s, s, true, "SQH");
            set(d.sq_hcomp, d.ns(), s, d.idsq[d.sleft[s]], s, true, "SQH");
            set(d.sq_vcomp, d.ns(), d.esq[d.sbot[s]], s, s, true, "SQV");
            set(d.sq_vcomp, d.ns(), s, d.esq[d.stop[s]], s, true, "SQV");
        }
    }
    return d;
}

// ------------------------------------------------------------- validation

// Every violated law instance is listed (law name + offending ids).
inline ValidationReport validate_double_category(const DoubleCategory& d) {
    ValidationReport r;
    for (int a = 0; a < d.nh(); ++a)
        if (d.hsrc[a] < 0 || d.htgt[a] < 0) r.add("endpoints", d.hm[a]);
    for (int u = 0; u < d.nv(); ++u)
        if (d.vsrc[u] < 0 || d.vtgt[u] < 0) r.add("endpoints", d.vm[u]);
    for (int s = 0; s < d.ns(); ++s) {
        int a = d.stop[s], b = d.sbot[s], u = d.sleft[s], v = d.sright[s];
        if (d.hsrc[a] != d.vsrc[u] || d.htgt[a] != d.vsrc[v] ||
            d.hsrc[b] != d.vtgt[u] || d.htgt[b] != d.vtgt[v])
            r.add("square-boundary", d.sq[s]);
    }
    if (!r.ok()) return r;

    // tables: totality over composable pairs, domain, boundary of composites
    for (int b = 0; b < d.nh(); ++b)
        for (int a = 0; a < d.nh(); ++a) {
            int c = d.hcomp_m(b, a);
            if (d.hm_composable(b, a)) {
                if (c < 0)
                    r.add("total-hcomp", d.hm[b] + "*" + d.hm[a]);
                else if (d.hsrc[c] != d.hsrc[a] || d.htgt[c] != d.htgt[b])
                    r.add("hcomp-endpoints", d.hm[b] + "*" + d.hm[a]);
            } else if (c >= 0) {
                r.add("hcomp-domain", d.hm[b] + "*" + d.hm[a]);
            }
        }
    for (int v = 0; v < d.nv(); ++v)
        for (int u = 0; u < d.nv(); ++u) {
            int w = d.vcomp_m(v, u);
            if (d.vm_composable(v, u)) {
                if (w < 0)
                    r.add("total-vcomp", d.vm[v] + "." + d.vm[u]);
                else if (d.vsrc[w] != d.vsrc[u] || d.vtgt[w] != d.vtgt[v])
                    r.add("vcomp-endpoints", d.vm[v] + "." + d.vm[u]);
            } else if (w >= 0) {
                r.add("vcomp-domain", d.vm[v] + "." + d.vm[u]);
            }
        }
    if (!r.ok()) return r;
    for (int t = 0; t < d.ns(); ++t)
        for (int s = 0; s < d.ns(); ++s) {
            int h = d.hcomp_s(t, s), v = d.vcomp_s(t, s);
            if (d.sq_hcomposable(t, s)) {
                if (h < 0) {
                    r.add("total-sqh", d.sq[t] + "*" + d.sq[s]);
                } else if (d.stop[h] != d.hcomp_m(d.stop[t], d.stop[s]) ||
                           d.sbot[h] != d.hcomp_m(d.sbot[t], d.sbot[s]) ||
                           d.sleft[h] != d.sleft[s] || d.sright[h] != d.sright[t]) {
                    r.add("sqh-boundary", d.sq[t] + "*" + d.sq[s]);
                }
            } else if (h >= 0) {
                r.add("sqh-domain", d.sq[t] + "*" + d.sq[s]);
            }
            if (d.sq_vcomposable(t, s)) {
                if (v < 0) {
                    r.add("total-sqv", d.sq[t] + "." + d.sq[s]);
                } else if (d.stop[v] != d.stop[s] || d.sbot[v] != d.sbot[t] ||
                           d.sleft[v] != d.vcomp_m(d.sleft[t], d.sleft[s]) ||
                           d.sright[v] != d.vcomp_m(d.sright[t], d.sright[s])) {
                    r.add("sqv-boundary", d.sq[t] + "." + d.sq[s]);
                }
            } else if (v >= 0) {
                r.add("sqv-domain", d.sq[t] + "." + d.sq[s]);
            }
        }
    if (!r.ok()) return r;

    // identities and unit laws
    for (int o = 0; o < d.nob(); ++o) {
        if (d.hsrc[d.idh[o]] != o || d.htgt[d.idh[o]] != o) r.add("idh", d.ob[o]);
        if (d.vsrc[d.idv[o]] != o || d.vtgt[d.idv[o]] != o) r.add("idv", d.ob[o]);
        if (d.esq[d.idh[o]] != d.idsq[d.idv[o]]) r.add("box-coherence", d.ob[o]);
    }
    for (int a = 0; a < d.nh(); ++a) {
        int e = d.esq[a];
        if (d.stop[e] != a || d.sbot[e] != a || d.sleft[e] != d.idv[d.hsrc[a]] ||
            d.sright[e] != d.idv[d.htgt[a]])
            r.add("esq-boundary", d.hm[a]);
        if (d.hcomp_m(d.idh[d.htgt[a]], a) != a) r.add("hunit-left", d.hm[a]);
        if (d.hcomp_m(a, d.idh[d.hsrc[a]]) != a) r.add("hunit-right", d.hm[a]);
    }
    for (int u = 0; u < d.nv(); ++u) {
        int i = d.idsq[u];
        if (d.sleft[i] != u || d.sright[i] != u || d.stop[i] != d.idh[d.vsrc[u]] ||
            d.sbot[i] != d.idh[d.vtgt[u]])
            r.add("idsq-boundary", d.vm[u]);
        if (d.vcomp_m(d.idv[d.vtgt[u]], u) != u) r.add("vunit-left", d.vm[u]);
        if (d.vcomp_m(u, d.idv[d.vsrc[u]]) != u) r.add("vunit-right", d.vm[u]);
    }
    for (int s = 0; s < d.ns(); ++s) {
        if (d.hcomp_s(d.idsq[d.sright[s]], s) != s) r.add("squnit-hleft", d.sq[s]);
        if (d.hcomp_s(s, d.idsq[d.sleft[s]]) != s) r.add("squnit-hright", d.sq[s]);
        if (d.vcomp_s(d.esq[d.sbot[s]], s) != s) r.add("squnit-vleft", d.sq[s]);
        if (d.vcomp_s(s, d.esq[d.stop[s]]) != s) r.add("squnit-vright", d.sq[s]);
    }
    // functoriality of identities
    for (int b = 0; b < d.nh(); ++b)
        for (int a = 0; a < d.nh(); ++a)
            if (d.hm_composable(b, a) &&
                d.hcomp_s(d.esq[b], d.esq[a]) != d.esq[d.hcomp_m(b, a)])
                r.add("e-functorial", d.hm[b] + "*" + d.hm[a]);
    for (int v = 0; v < d.nv(); ++v)
        for (int u = 0; u < d.nv(); ++u)
            if (d.vm_composable(v, u) &&
                d.vcomp_s(d.idsq[v], d.idsq[u]) != d.idsq[d.vcomp_m(v, u)])
                r.add("id-functorial", d.vm[v] + "." + d.vm[u]);

    // associativity, all four compositions
    for (int c = 0; c < d.nh(); ++c)
        for (int b = 0; b < d.nh(); ++b)
            for (int a = 0; a < d.nh(); ++a)
                if (d.hm_composable(b, a) && d.hm_composable(c, b) &&
                    d.hcomp_m(c, d.hcomp_m(b, a)) != d.hcomp_m(d.hcomp_m(c, b), a))
                    r.add("hassoc", d.hm[c] + "*" + d.hm[b] + "*" + d.hm[a]);
    for (int w = 0; w < d.nv(); ++w)
        for (int v = 0; v < d.nv(); ++v)
            for (int u = 0; u < d.nv(); ++u)
                if (d.vm_composable(v, u) && d.vm_composable(w, v) &&
                    d.vcomp_m(w, d.vcomp_m(v, u)) != d.vcomp_m(d.vcomp_m(w, v), u))
                    r.add("vassoc", d.vm[w] + "." + d.vm[v] + "." + d.vm[u]);
    for (int c = 0; c < d.ns(); ++c)
        for (int b = 0; b < d.ns(); ++b)
            for (int a = 0; a < d.ns(); ++a) {
                if (d.sq_hcomposable(b, a) && d.sq_hcomposable(c, b) &&
                    d.hcomp_s(c, d.hcomp_s(b, a)) != d.hcomp_s(d.hcomp_s(c, b), a))
                    r.add("sqh-assoc", d.sq[c] + "*" + d.sq[b] + "*" + d.sq[a]);
                if (d.sq_vcomposable(b, a) && d.sq_vcomposable(c, b) &&
                    d.vcomp_s(c, d.vcomp_s(b, a)) != d.vcomp_s(d.vcomp_s(c, b), a))
                    r.add("sqv-assoc", d.sq[c] + "." + d.sq[b] + "." + d.sq[a]);
            }

    // interchange on all valid 2x2 grids:
    //   α top-left, β top-right, γ bottom-left, δ bottom-right
    for (int al = 0; al < d.ns(); ++al)
        for (int be = 0; be < d.ns(); ++be) {
            if (!d.sq_hcomposable(be, al)) continue;
            for (int ga = 0; ga < d.ns(); ++ga) {
                if (!d.sq_vcomposable(ga, al)) continue;
                for (int de = 0; de < d.ns(); ++de) {
                    if (!d.sq_vcomposable(de, be) || !d.sq_hcomposable(de, ga))
                        continue;
                    int lhs = d.hcomp_s(d.vcomp_s(de, be), d.vcomp_s(ga, al));
                    int rhs = d.vcomp_s(d.hcomp_s(de, ga), d.hcomp_s(be, al));
                    if (lhs != rhs)
                        r.add("interchange", d.sq[al] + "," + d.sq[be] + "," +
                                                 d.sq[ga] + "," + d.sq[de]);
                }
            }
        }
    return r;
}

inline ValidationReport validate_double_functor(const DoubleFunctor& F) {
    ValidationReport r;
    const DoubleCategory &A = *F.src, &B = *F.tgt;
    if ((int)F.ob.size() != A.nob() || (int)F.hm.size() != A.nh() ||
        (int)F.vm.size() != A.nv() || (int)F.sq.size() != A.ns()) {
        r.add("map-size", F.name);
        return r;
    }
    auto in_range = [](const std::vector<int>& v, int n) {
        for (int x : v)
            if (x < 0 || x >= n) return false;
        return true;
    };
    if (!in_range(F.ob, B.nob()) || !in_range(F.hm, B.nh()) ||
        !in_range(F.vm, B.nv()) || !in_range(F.sq, B.ns()))
        throw MalformedMap("functor " + F.name + " references unknown cells");

    for (int a = 0; a < A.nh(); ++a)
        if (B.hsrc[F.hm[a]] != F.ob[A.hsrc[a]] || B.htgt[F.hm[a]] != F.ob[A.htgt[a]])
            r.add("hmor-endpoints", A.hm[a]);
    for (int u = 0; u < A.nv(); ++u)
        if (B.vsrc[F.vm[u]] != F.ob[A.vsrc[u]] || B.vtgt[F.vm[u]] != F.ob[A.vtgt[u]])
            r.add("vmor-endpoints", A.vm[u]);
    for (int s = 0; s < A.ns(); ++s)
        if (B.stop[F.sq[s]] != F.hm[A.stop[s]] || B.sbot[F.sq[s]] != F.hm[A.sbot[s]] ||
            B.sleft[F.sq[s]] != F.vm[A.sleft[s]] ||
            B.sright[F.sq[s]] != F.vm[A.sright[s]])
            r.add("square-boundary", A.sq[s]);
    for (int o = 0; o < A.nob(); ++o) {
        if (F.hm[A.idh[o]] != B.idh[F.ob[o]]) r.add("idh-preserved", A.ob[o]);
        if (F.vm[A.idv[o]] != B.idv[F.ob[o]]) r.add("idv-preserved", A.ob[o]);
    }
    for (int a = 0; a < A.nh(); ++a)
        if (F.sq[A.esq[a]] != B.esq[F.hm[a]]) r.add("esq-preserved", A.hm[a]);
    for (int u = 0; u < A.nv(); ++u)
        if (F.sq[A.idsq[u]] != B.idsq[F.vm[u]]) r.add("idsq-preserved", A.vm[u]);
    for (int b = 0; b < A.nh(); ++b)
        for (int a = 0; a < A.nh(); ++a)
            if (A.hm_composable(b, a) &&
                B.hcomp_m(F.hm[b], F.hm[a]) != F.hm[A.hcomp_m(b, a)])
                r.add("hcomp-preserved", A.hm[b] + "*" + A.hm[a]);
    for (int v = 0; v < A.nv(); ++v)
        for (int u = 0; u < A.nv(); ++u)
            if (A.vm_composable(v, u) &&
                B.vcomp_m(F.vm[v], F.vm[u]) != F.vm[A.vcomp_m(v, u)])
                r.add("vcomp-preserved", A.vm[v] + "." + A.vm[u]);
    for (int t = 0; t < A.ns(); ++t)
        for (int s = 0; s < A.ns(); ++s) {
            if (A.sq_hcomposable(t, s) &&
                B.hcomp_s(F.sq[t], F.sq[s]) != F.sq[A.hcomp_s(t, s)])
                r.add("sqh-preserved", A.sq[t] + "*" + A.sq[s]);
            if (A.sq_vcomposable(t, s) &&
                B.vcomp_s(F.sq[t], F.sq[s]) != F.sq[A.vcomp_s(t, s)])
                r.add("sqv-preserved", A.sq[t] + "." + A.sq[s]);
        }
    return r;
}

inline DoubleFunctor identity_functor(const DblPtr& A) {
    DoubleFunctor F;
    F.name = "id_" + A->name;
    F.src = F.tgt = A;
    F.ob.resize(A->nob());
    F.hm.resize(A->nh());
    F.vm.resize(A->nv());
    F.sq.resize(A->ns());
    std::iota(F.ob.begin(), F.ob.end(), 0);
    std::iota(F.hm.begin(), F.hm.end(), 0);
    std::iota(F.vm.begin(), F.vm.end(), 0);
    std::iota(F.sq.begin(), F.sq.end(), 0);
    return F;
}

inline DoubleFunctor compose(const DoubleFunctor& G, const DoubleFunctor& F) {
    DoubleFunctor H;
    H.name = G.name + "∘" + F.name;
    H.src = F.src;
    H.tgt = G.tgt;
    auto apply = [](const std::vector<int>& g, const std::vector<int>& f) {
        std::vector<int> h(f.size());
        for (size_t i = 0; i < f.size(); ++i) h[i] = g[f[i]];
        return h;
    };
    H.ob = apply(G.ob, F.ob);
    H.hm = apply(G.hm, F.hm);
    H.vm = apply(G.vm, F.vm);
    H.sq = apply(G.sq, F.sq);
    return H;
}

}  // namespace dblcat
