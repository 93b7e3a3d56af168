#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "dblcat/core.hpp"

namespace dblcat {

// A finite category presented by explicit tables. Cells are indexed by
// position; names are kept for reporting and serialization. All
// deterministic orders are index order, and builders index cells in
// lexicographic order of their names.
struct FinCategory {
    std::string name;
    std::vector<std::string> ob;   // object names
    std::vector<std::string> mo;   // morphism names
    std::vector<int> src, tgt;     // per morphism: object index
    std::vector<int> idm;          // per object: identity morphism
    std::vector<int> comp;         // comp[g*nm()+f] = g∘f, or -1

    int nob() const { return (int)ob.size(); }
    int nm() const { return (int)mo.size(); }

    int compose(int g, int f) const { return comp[(size_t)g * nm() + f]; }
    bool composable(int g, int f) const { return tgt[f] == src[g]; }
    bool is_id(int f) const { return idm[src[f]] == f; }

    int ob_index(const std::string& n) const {
        auto it = std::find(ob.begin(), ob.end(), n);
        if (it == ob.end()) throw UnknownName("object '" + n + "' in " + name);
        return (int)(it - ob.begin());
    }
    int mo_index(const std::string& n) const {
        auto it = std::find(mo.begin(), mo.end(), n);
        if (it == mo.end()) throw UnknownName("morphism '" + n + "' in " + name);
        return (int)(it - mo.begin());
    }
};

using FinCatPtr = std::shared_ptr<const FinCategory>;

// A finite 2-category: a FinCategory of objects/1-morphisms plus 2-cells
// with vertical and horizontal composition tables.
struct TwoCategory {
    std::string name;
    FinCategory cat;               // objects and 1-morphisms
    std::vector<std::string> ce;   // 2-cell names
    std::vector<int> csrc, ctgt;   // per 2-cell: parallel 1-morphisms
    std::vector<int> idc;          // per 1-morphism: identity 2-cell
    std::vector<int> vc;           // vc[y*ncell+x] = y·x (x on top), or -1
    std::vector<int> hc;           // hc[y*ncell+x] = y∘x (x over the first leg), or -1

    int nob() const { return cat.nob(); }
    int nm() const { return cat.nm(); }
    int ncell() const { return (int)ce.size(); }

    int vcomp(int y, int x) const { return vc[(size_t)y * ncell() + x]; }
    int hcomp(int y, int x) const { return hc[(size_t)y * ncell() + x]; }
    bool vcomposable(int y, int x) const { return ctgt[x] == csrc[y]; }
    bool hcomposable(int y, int x) const {
        return cat.tgt[csrc[x]] == cat.src[csrc[y]];
    }
    int ce_index(const std::string& n) const {
        auto it = std::find(ce.begin(), ce.end(), n);
        if (it == ce.end()) throw UnknownName("2-cell '" + n + "' in " + name);
        return (int)(it - ce.begin());
    }
};

using TwoCatPtr = std::shared_ptr<const TwoCategory>;

struct CatFunctor {
    std::string name;
    FinCatPtr src, tgt;
    std::vector<int> ob;  // object map
    std::vector<int> mo;  // morphism map
};

struct TwoFunctor {
    std::string name;
    TwoCatPtr src, tgt;
    std::vector<int> ob, mo, ce;
};

// ---------------------------------------------------------------- builders

class FinCategoryBuilder {
  public:
    explicit FinCategoryBuilder(std::string name, bool autocomplete = true)
        : name_(std::move(name)), auto_(autocomplete) {}

    FinCategoryBuilder& object(const std::string& o) {
        obs_.push_back(o);
        return *this;
    }
    FinCategoryBuilder& mor(const std::string& m, const std::string& a,
                            const std::string& b) {
        mors_.push_back({m, a, b});
        return *this;
    }
    // g∘f = h  (f first)
    FinCategoryBuilder& comp(const std::string& g, const std::string& f,
                             const std::string& h) {
        comps_.push_back({g, f, h});
        return *this;
    }
    FinCategoryBuilder& identity(const std::string& o, const std::string& m) {
        ids_[o] = m;
        return *this;
    }

    FinCategory build() const;

  private:
    std::string name_;
    bool auto_;
    std::vector<std::string> obs_;
    struct MorDecl { std::string m, a, b; };
    std::vector<MorDecl> mors_;
    struct CompDecl { std::string g, f, h; };
    std::vector<CompDecl> comps_;
    std::map<std::string, std::string> ids_;
};

inline FinCategory FinCategoryBuilder::build() const {
    FinCategory c;
    c.name = name_;
    c.ob = obs_;
    std::sort(c.ob.begin(), c.ob.end());
    if (std::adjacent_find(c.ob.begin(), c.ob.end()) != c.ob.end())
        throw MalformedTable("duplicate object name in " + name_);

    auto decls = mors_;
    std::map<std::string, std::string> idnames = ids_;
    if (auto_) {
        for (const auto& o : c.ob)
            if (!idnames.count(o)) idnames[o] = "1" + o;
    }
    for (const auto& [o, m] : idnames) {
        bool declared = false;
        for (const auto& d : decls) declared |= d.m == m;
        if (!declared) decls.push_back({m, o, o});
    }
    for (const auto& d : decls) c.mo.push_back(d.m);
    std::sort(c.mo.begin(), c.mo.end());
    if (std::adjacent_find(c.mo.begin(), c.mo.end()) != c.mo.end())
        throw MalformedTable("duplicate morphism name in " + name_);

    int nm = c.nm();
    c.src.assign(nm, -1);
    c.tgt.assign(nm, -1);
    for (const auto& d : decls) {
        int i = c.mo_index(d.m);
        c.src[i] = c.ob_index(d.a);
        c.tgt[i] = c.ob_index(d.b);
    }
    c.idm.assign(c.nob(), -1);
    for (const auto& [o, m] : idnames) {
        int oi = c.ob_index(o), mi = c.mo_index(m);
        if (c.src[mi] != oi || c.tgt[mi] != oi)
            throw MalformedTable("identity of " + o + " is not an endomorphism");
        c.idm[oi] = mi;
    }
    for (int o = 0; o < c.nob(); ++o)
        if (c.idm[o] < 0)
            throw MalformedTable("object " + c.ob[o] + " has no identity in " + name_);

    c.comp.assign((size_t)nm * nm, -1);
    auto set = [&](int g, int f, int h) {
        if (!c.composable(g, f))
            throw MalformedTable("composite " + c.mo[g] + "*" + c.mo[f] +
                                 " declared but not composable in " + name_);
        int& slot = c.comp[(size_t)g * nm + f];
        if (slot >= 0 && slot != h)
            throw MalformedTable("conflicting composite for " + c.mo[g] + "*" +
                                 c.mo[f] + " in " + name_);
        slot = h;
    };
    for (const auto& d : comps_)
        set(c.mo_index(d.g), c.mo_index(d.f), c.mo_index(d.h));
    if (auto_) {
        for (int f = 0; f < nm; ++f) {
            set(c.idm[c.tgt[f]], f, f);
            set(f, c.idm[c.src[f]], f);
        }
    }
    return c;
}

// Checks totality over composable pairs and the category laws; every
// violated instance is reported.
inline ValidationReport validate_category(const FinCategory& c) {
    ValidationReport r;
    int nm = c.nm();
    for (int f = 0; f < nm; ++f) {
        if (c.src[f] < 0 || c.src[f] >= c.nob() || c.tgt[f] < 0 || c.tgt[f] >= c.nob())
            r.add("endpoints", c.mo[f]);
    }
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            int h = c.compose(g, f);
            if (c.composable(g, f)) {
                if (h < 0) {
                    r.add("total-comp", c.mo[g] + "*" + c.mo[f] + " undefined");
                } else {
                    if (c.src[h] != c.src[f] || c.tgt[h] != c.tgt[g])
                        r.add("comp-endpoints", c.mo[g] + "*" + c.mo[f]);
                }
            } else if (h >= 0) {
                r.add("comp-domain", c.mo[g] + "*" + c.mo[f] + " not composable");
            }
        }
    if (!r.ok()) return r;  // laws need a well-formed table
    for (int f = 0; f < nm; ++f) {
        if (c.compose(c.idm[c.tgt[f]], f) != f)
            r.add("unit-left", c.mo[f]);
        if (c.compose(f, c.idm[c.src[f]]) != f)
            r.add("unit-right", c.mo[f]);
    }
    for (int h = 0; h < nm; ++h)
        for (int g = 0; g < nm; ++g)
            for (int f = 0; f < nm; ++f)
                if (c.composable(g, f) && c.composable(h, g) &&
                    c.compose(h, c.compose(g, f)) != c.compose(c.compose(h, g), f))
                    r.add("assoc", c.mo[h] + "*" + c.mo[g] + "*" + c.mo[f]);
    return r;
}

class TwoCategoryBuilder {
  public:
    explicit TwoCategoryBuilder(std::string name, bool autocomplete = true)
        : base_(name, autocomplete), name_(std::move(name)), auto_(autocomplete) {}

    TwoCategoryBuilder& object(const std::string& o) { base_.object(o); return *this; }
    TwoCategoryBuilder& mor(const std::string& m, const std::string& a,
                            const std::string& b) { base_.mor(m, a, b); return *this; }
    TwoCategoryBuilder& comp(const std::string& g, const std::string& f,
                             const std::string& h) { base_.comp(g, f, h); return *this; }
    TwoCategoryBuilder& identity(const std::string& o, const std::string& m) {
        base_.identity(o, m); return *this;
    }
    TwoCategoryBuilder& cell(const std::string& x, const std::string& f,
                             const std::string& g) {
        cells_.push_back({x, f, g});
        return *this;
    }
    // y·x = z (x on top), y∘x = z (x over the first leg)
    TwoCategoryBuilder& vcomp(const std::string& y, const std::string& x,
                              const std::string& z) {
        vcs_.push_back({y, x, z});
        return *this;
    }
    TwoCategoryBuilder& hcomp(const std::string& y, const std::string& x,
                              const std::string& z) {
        hcs_.push_back({y, x, z});
        return *this;
    }
    TwoCategoryBuilder& idcell(const std::string& f, const std::string& x) {
        idcs_[f] = x;
        return *this;
    }

    TwoCategory build() const;

  private:
    FinCategoryBuilder base_;
    std::string name_;
    bool auto_;
    struct CellDecl { std::string x, f, g; };
    std::vector<CellDecl> cells_;
    struct CompDecl { std::string y, x, z; };
    std::vector<CompDecl> vcs_, hcs_;
    std::map<std::string, std::string> idcs_;
};

inline TwoCategory TwoCategoryBuilder::build() const {
    TwoCategory t;
    t.name = name_;
    t.cat = base_.build();

    auto decls = cells_;
    std::map<std::string, std::string> idnames = idcs_;
    if (auto_) {
        for (const auto& m : t.cat.mo)
            if (!idnames.count(m)) idnames[m] = "1" + m;
    }
    for (const auto& [f, x] : idnames) {
        bool declared = false;
        for (const auto& d : decls) declared |= d.x == x;
        if (!declared) decls.push_back({x, f, f});
    }
    for (const auto& d : decls) t.ce.push_back(d.x);
    std::sort(t.ce.begin(), t.ce.end());
    if (std::adjacent_find(t.ce.begin(), t.ce.end()) != t.ce.end())
        throw MalformedTable("duplicate 2-cell name in " + name_);

    int nc = t.ncell();
    t.csrc.assign(nc, -1);
    t.ctgt.assign(nc, -1);
    for (const auto& d : decls) {
        int i = t.ce_index(d.x);
        t.csrc[i] = t.cat.mo_index(d.f);
        t.ctgt[i] = t.cat.mo_index(d.g);
    }
    t.idc.assign(t.nm(), -1);
    for (const auto& [f, x] : idnames) {
        int fi = t.cat.mo_index(f), xi = t.ce_index(x);
        if (t.csrc[xi] != fi || t.ctgt[xi] != fi)
            throw MalformedTable("identity 2-cell of " + f + " has wrong boundary");
        t.idc[fi] = xi;
    }
    for (int f = 0; f < t.nm(); ++f)
        if (t.idc[f] < 0)
            throw MalformedTable("1-morphism " + t.cat.mo[f] + " has no identity 2-cell");

    t.vc.assign((size_t)nc * nc, -1);
    t.hc.assign((size_t)nc * nc, -1);
    auto setv = [&](int y, int x, int z) {
        if (!t.vcomposable(y, x))
            throw MalformedTable("2-cells " + t.ce[y] + "." + t.ce[x] +
                                 " not vertically composable in " + name_);
        int& slot = t.vc[(size_t)y * nc + x];
        if (slot >= 0 && slot != z)
            throw MalformedTable("conflicting vcomp in " + name_);
        slot = z;
    };
    auto seth = [&](int y, int x, int z) {
        if (!t.hcomposable(y, x))
            throw MalformedTable("2-cells " + t.ce[y] + "*" + t.ce[x] +
                                 " not horizontally composable in " + name_);
        int& slot = t.hc[(size_t)y * nc + x];
        if (slot >= 0 && slot != z)
            throw MalformedTable("conflicting hcomp in " + name_);
        slot = z;
    };
    for (const auto& d : vcs_) setv(t.ce_index(d.y), t.ce_index(d.x), t.ce_index(d.z));
    for (const auto& d : hcs_) seth(t.ce_index(d.y), t.ce_index(d.x), t.ce_index(d.z));
    if (auto_) {
        for (int x = 0; x < nc; ++x) {
            setv(t.idc[t.ctgt[x]], x, x);
            setv(x, t.idc[t.csrc[x]], x);
        }
        // identity 2-cells compose horizontally along the 1-morphism table
        for (int g = 0; g < t.nm(); ++g)
            for (int f = 0; f < t.nm(); ++f)
                if (t.cat.composable(g, f))
                    seth(t.idc[g], t.idc[f], t.idc[t.cat.compose(g, f)]);
        // whiskering with identity 2-cells of identity 1-morphisms
        for (int x = 0; x < nc; ++x) {
            int A = t.cat.src[t.csrc[x]], B = t.cat.tgt[t.csrc[x]];
            seth(x, t.idc[t.cat.idm[A]], x);
            seth(t.idc[t.cat.idm[B]], x, x);
        }
    }
    return t;
}

inline ValidationReport validate_two_category(const TwoCategory& t) {
    ValidationReport r = validate_category(t.cat);
    int nc = t.ncell();
    const FinCategory& c = t.cat;
    for (int x = 0; x < nc; ++x) {
        if (c.src[t.csrc[x]] != c.src[t.ctgt[x]] || c.tgt[t.csrc[x]] != c.tgt[t.ctgt[x]])
            r.add("cell-parallel", t.ce[x]);
    }
    for (int y = 0; y < nc; ++y)
        for (int x = 0; x < nc; ++x) {
            int vz = t.vcomp(y, x), hz = t.hcomp(y, x);
            if (t.vcomposable(y, x)) {
                if (vz < 0)
                    r.add("total-vcomp", t.ce[y] + "." + t.ce[x]);
                else if (t.csrc[vz] != t.csrc[x] || t.ctgt[vz] != t.ctgt[y])
                    r.add("vcomp-boundary", t.ce[y] + "." + t.ce[x]);
            } else if (vz >= 0) {
                r.add("vcomp-domain", t.ce[y] + "." + t.ce[x]);
            }
            if (t.hcomposable(y, x)) {
                if (hz < 0) {
                    r.add("total-hcomp", t.ce[y] + "*" + t.ce[x]);
                } else if (t.csrc[hz] != c.compose(t.csrc[y], t.csrc[x]) ||
                           t.ctgt[hz] != c.compose(t.ctgt[y], t.ctgt[x])) {
                    r.add("hcomp-boundary", t.ce[y] + "*" + t.ce[x]);
                }
            } else if (hz >= 0) {
                r.add("hcomp-domain", t.ce[y] + "*" + t.ce[x]);
            }
        }
    if (!r.ok()) return r;
    for (int x = 0; x < nc; ++x) {
        if (t.vcomp(t.idc[t.ctgt[x]], x) != x) r.add("vunit-left", t.ce[x]);
        if (t.vcomp(x, t.idc[t.csrc[x]]) != x) r.add("vunit-right", t.ce[x]);
        int A = c.src[t.csrc[x]], B = c.tgt[t.csrc[x]];
        if (t.hcomp(x, t.idc[c.idm[A]]) != x) r.add("hunit-right", t.ce[x]);
        if (t.hcomp(t.idc[c.idm[B]], x) != x) r.add("hunit-left", t.ce[x]);
    }
    for (int f = 0; f < t.nm(); ++f)
        for (int g = 0; g < t.nm(); ++g)
            if (c.composable(g, f) &&
                t.hcomp(t.idc[g], t.idc[f]) != t.idc[c.compose(g, f)])
                r.add("id-hcomp", c.mo[g] + "*" + c.mo[f]);
    for (int z = 0; z < nc; ++z)
        for (int y = 0; y < nc; ++y)
            for (int x = 0; x < nc; ++x) {
                if (t.vcomposable(y, x) && t.vcomposable(z, y) &&
                    t.vcomp(z, t.vcomp(y, x)) != t.vcomp(t.vcomp(z, y), x))
                    r.add("vassoc", t.ce[z] + "." + t.ce[y] + "." + t.ce[x]);
                if (t.hcomposable(y, x) && t.hcomposable(z, y) &&
                    t.hcomp(z, t.hcomp(y, x)) != t.hcomp(t.hcomp(z, y), x))
                    r.add("hassoc", t.ce[z] + "*" + t.ce[y] + "*" + t.ce[x]);
            }
    // interchange on all valid 2x2 grids
    for (int x = 0; x < nc; ++x)
        for (int y = 0; y < nc; ++y) {
            if (!t.hcomposable(y, x)) continue;
            for (int x2 = 0; x2 < nc; ++x2) {
                if (!t.vcomposable(x2, x)) continue;
                for (int y2 = 0; y2 < nc; ++y2) {
                    if (!t.vcomposable(y2, y) || !t.hcomposable(y2, x2)) continue;
                    int lhs = t.hcomp(t.vcomp(y2, y), t.vcomp(x2, x));
                    int rhs = t.vcomp(t.hcomp(y2, x2), t.hcomp(y, x));
                    if (lhs != rhs)
                        r.add("interchange", t.ce[x] + "," + t.ce[y] + "," +
                                                 t.ce[x2] + "," + t.ce[y2]);
                }
            }
        }
    return r;
}

// ------------------------------------------------------------- functors

inline ValidationReport validate_cat_functor(const CatFunctor& F) {
    ValidationReport r;
    const FinCategory &A = *F.src, &B = *F.tgt;
    if ((int)F.ob.size() != A.nob() || (int)F.mo.size() != A.nm()) {
        r.add("map-size", F.name);
        return r;
    }
    for (int o = 0; o < A.nob(); ++o)
        if (F.ob[o] < 0 || F.ob[o] >= B.nob()) {
            r.add("map-range", A.ob[o]);
            return r;
        }
    for (int m = 0; m < A.nm(); ++m)
        if (F.mo[m] < 0 || F.mo[m] >= B.nm()) {
            r.add("map-range", A.mo[m]);
            return r;
        }
    for (int m = 0; m < A.nm(); ++m) {
        if (B.src[F.mo[m]] != F.ob[A.src[m]] || B.tgt[F.mo[m]] != F.ob[A.tgt[m]])
            r.add("endpoints", A.mo[m]);
    }
    for (int o = 0; o < A.nob(); ++o)
        if (F.mo[A.idm[o]] != B.idm[F.ob[o]]) r.add("identity", A.ob[o]);
    for (int g = 0; g < A.nm(); ++g)
        for (int f = 0; f < A.nm(); ++f)
            if (A.composable(g, f) &&
                B.compose(F.mo[g], F.mo[f]) != F.mo[A.compose(g, f)])
                r.add("composition", A.mo[g] + "*" + A.mo[f]);
    return r;
}

inline ValidationReport validate_two_functor(const TwoFunctor& F) {
    ValidationReport r;
    const TwoCategory &A = *F.src, &B = *F.tgt;
    CatFunctor base{F.name, std::shared_ptr<const FinCategory>(F.src, &F.src->cat),
                    std::shared_ptr<const FinCategory>(F.tgt, &F.tgt->cat), F.ob, F.mo};
    r = validate_cat_functor(base);
    if ((int)F.ce.size() != A.ncell()) {
        r.add("map-size", F.name + " cells");
        return r;
    }
    for (int x = 0; x < A.ncell(); ++x)
        if (F.ce[x] < 0 || F.ce[x] >= B.ncell()) {
            r.add("map-range", A.ce[x]);
            return r;
        }
    for (int x = 0; x < A.ncell(); ++x)
        if (B.csrc[F.ce[x]] != F.mo[A.csrc[x]] || B.ctgt[F.ce[x]] != F.mo[A.ctgt[x]])
            r.add("cell-boundary", A.ce[x]);
    for (int f = 0; f < A.nm(); ++f)
        if (F.ce[A.idc[f]] != B.idc[F.mo[f]]) r.add("cell-identity", A.cat.mo[f]);
    for (int y = 0; y < A.ncell(); ++y)
        for (int x = 0; x < A.ncell(); ++x) {
            if (A.vcomposable(y, x) &&
                B.vcomp(F.ce[y], F.ce[x]) != F.ce[A.vcomp(y, x)])
                r.add("cell-vcomp", A.ce[y] + "." + A.ce[x]);
            if (A.hcomposable(y, x) &&
                B.hcomp(F.ce[y], F.ce[x]) != F.ce[A.hcomp(y, x)])
                r.add("cell-hcomp", A.ce[y] + "*" + A.ce[x]);
        }
    return r;
}

inline CatFunctor compose(const CatFunctor& G, const CatFunctor& F) {
    CatFunctor H;
    H.name = G.name + "∘" + F.name;
    H.src = F.src;
    H.tgt = G.tgt;
    H.ob.resize(F.ob.size());
    H.mo.resize(F.mo.size());
    for (size_t i = 0; i < F.ob.size(); ++i) H.ob[i] = G.ob[F.ob[i]];
    for (size_t i = 0; i < F.mo.size(); ++i) H.mo[i] = G.mo[F.mo[i]];
    return H;
}

inline TwoFunctor compose(const TwoFunctor& G, const TwoFunctor& F) {
    TwoFunctor H;
    H.name = G.name + "∘" + F.name;
    H.src = F.src;
    H.tgt = G.tgt;
    H.ob.resize(F.ob.size());
    H.mo.resize(F.mo.size());
    H.ce.resize(F.ce.size());
    for (size_t i = 0; i < F.ob.size(); ++i) H.ob[i] = G.ob[F.ob[i]];
    for (size_t i = 0; i < F.mo.size(); ++i) H.mo[i] = G.mo[F.mo[i]];
    for (size_t i = 0; i < F.ce.size(); ++i) H.ce[i] = G.ce[F.ce[i]];
    return H;
}

inline TwoFunctor identity_two_functor(const TwoCatPtr& A) {
    TwoFunctor F;
    F.name = "id";
    F.src = F.tgt = A;
    F.ob.resize(A->nob());
    F.mo.resize(A->nm());
    F.ce.resize(A->ncell());
    std::iota(F.ob.begin(), F.ob.end(), 0);
    std::iota(F.mo.begin(), F.mo.end(), 0);
    std::iota(F.ce.begin(), F.ce.end(), 0);
    return F;
}

}  // namespace dblcat
