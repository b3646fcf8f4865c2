#pragma once

#include "cohlen/complex.hpp"

namespace cohlen {

/* Exact triangle A -> B -> C -> Sigma A, always presented as cone data:
   C is the cone of f (or certified homotopy equivalent to it). */
struct Triangle {
    PerfectComplex A, B, C;
    ChainMap f, g, h; // f: A->B, g: B->C, h: C->Sigma A
};

/* Mapping cone: cone(f)^i = B^i (+) A^{i+1}, differential
   [[d_B, f],[0, -d_A]]; g is the inclusion, h the projection. */
inline Triangle cone(const ChainMap &f)
{
    require(f.commutes(), "cone: not a chain map");
    const PerfectComplex &a = f.source();
    const PerfectComplex &b = f.target();
    const CoeffAlgebra &alg = a.algebra();

    int lo = std::min(a.support_min() - 1, b.support_min());
    int hi = std::max(a.support_max() - 1, b.support_max());
    std::map<int, size_t> ranks;
    std::map<int, AlgMatrix> diffs;
    for (int d = lo; d <= hi; ++d) {
        size_t r = b.rank(d) + a.rank(d + 1);
        if (r > 0)
            ranks[d] = r;
    }
    for (int d = lo; d < hi; ++d) {
        size_t rows = b.rank(d + 1) + a.rank(d + 2);
        size_t cols = b.rank(d) + a.rank(d + 1);
        if (rows == 0 || cols == 0)
            continue;
        AlgMatrix m(alg, rows, cols);
        AlgMatrix db = b.diff(d);
        for (size_t r = 0; r < db.rows(); ++r)
            for (size_t c = 0; c < db.cols(); ++c)
                m.set(r, c, db.at(r, c));
        AlgMatrix fc = f.component(d + 1);
        for (size_t r = 0; r < fc.rows(); ++r)
            for (size_t c = 0; c < fc.cols(); ++c)
                m.set(r, b.rank(d) + c, fc.at(r, c));
        AlgMatrix da = a.diff(d + 1);
        for (size_t r = 0; r < da.rows(); ++r)
            for (size_t c = 0; c < da.cols(); ++c)
                m.set(b.rank(d + 1) + r, b.rank(d) + c, alg.neg(da.at(r, c)));
        diffs.emplace(d, std::move(m));
    }
    PerfectComplex c = PerfectComplex::from_maps(alg, ranks, diffs);

    std::map<int, AlgMatrix> gcomps, hcomps;
    for (int d = lo; d <= hi; ++d) {
        size_t cr = b.rank(d) + a.rank(d + 1);
        if (cr == 0)
            continue;
        if (b.rank(d) > 0) {
            AlgMatrix gm(alg, cr, b.rank(d));
            for (size_t i = 0; i < b.rank(d); ++i)
                gm.set(i, i, alg.one());
            gcomps.emplace(d, std::move(gm));
        }
        if (a.rank(d + 1) > 0) {
            AlgMatrix hm(alg, a.rank(d + 1), cr);
            for (size_t i = 0; i < a.rank(d + 1); ++i)
                hm.set(i, b.rank(d) + i, alg.one());
            hcomps.emplace(d, std::move(hm));
        }
    }
    ChainMap g(b, c, std::move(gcomps));
    ChainMap h(c, a.shift(1), std::move(hcomps));
    return Triangle{a, b, c, f, g, h};
}

/* Null homotopy for g.f in a cone triangle: s^i: A^i -> C^{i-1} is the
   inclusion into the A-part; d_C s + s d_A = g f on the nose. */
inline std::map<int, AlgMatrix> cone_null_homotopy(const Triangle &t)
{
    const CoeffAlgebra &alg = t.A.algebra();
    std::map<int, AlgMatrix> s;
    for (int d = t.A.support_min(); d <= t.A.support_max(); ++d) {
        size_t rows = t.C.rank(d - 1);
        size_t cols = t.A.rank(d);
        if (rows == 0 || cols == 0)
            continue;
        AlgMatrix m(alg, rows, cols);
        size_t off = t.B.rank(d - 1);
        for (size_t i = 0; i < cols; ++i)
            m.set(off + i, i, alg.one());
        s.emplace(d, std::move(m));
    }
    return s;
}

/* check that s is a null homotopy of the composite map: m = d s + s d */
inline bool is_null_homotopy(const ChainMap &m, const std::map<int, AlgMatrix> &s)
{
    const PerfectComplex &x = m.source();
    const PerfectComplex &y = m.target();
    const CoeffAlgebra &alg = x.algebra();
    auto scomp = [&](int d) -> AlgMatrix {
        auto it = s.find(d);
        if (it != s.end())
            return it->second;
        return AlgMatrix(alg, y.rank(d - 1), x.rank(d));
    };
    for (int d = x.support_min(); d <= x.support_max(); ++d) {
        if (x.rank(d) == 0 || y.rank(d) == 0)
            continue;
        AlgMatrix want = m.component(d);
        AlgMatrix got = y.diff(d - 1) * scomp(d) + scomp(d + 1) * x.diff(d);
        if (!(want == got))
            return false;
    }
    return true;
}

/* rotate the underlying object triple k times: (A,B,C) -> (B,C,Sigma A) */
struct ObjectTriple {
    PerfectComplex A, B, C;
};

inline ObjectTriple rotate_objects(const ObjectTriple &t, int k)
{
    ObjectTriple cur = t;
    for (int i = 0; i < k; ++i)
        cur = ObjectTriple{cur.B, cur.C, cur.A.shift(1)};
    return cur;
}

inline ObjectTriple objects_of(const Triangle &t) { return ObjectTriple{t.A, t.B, t.C}; }

/* ---- mutators that preserve the presented functor -------------------- */

/* pad the middle term with cone(id_W); the third object gains the same
   contractible summand, so the new triple presents the same functor */
inline Triangle pad_middle(const Triangle &t, const PerfectComplex &w)
{
    require(w.algebra() == t.A.algebra(), "pad_middle: algebra mismatch");
    Triangle cid = cone(ChainMap::identity(w));
    const PerfectComplex &d = cid.C; // contractible
    PerfectComplex b2 = t.B.direct_sum(d);
    // f followed by inclusion
    std::map<int, AlgMatrix> fcomps;
    const CoeffAlgebra &alg = t.A.algebra();
    for (int deg = t.A.support_min(); deg <= t.A.support_max(); ++deg) {
        if (t.A.rank(deg) == 0 || b2.rank(deg) == 0)
            continue;
        AlgMatrix m(alg, b2.rank(deg), t.A.rank(deg));
        AlgMatrix orig = t.f.component(deg);
        for (size_t r = 0; r < orig.rows(); ++r)
            for (size_t c = 0; c < orig.cols(); ++c)
                m.set(r, c, orig.at(r, c));
        fcomps.emplace(deg, std::move(m));
    }
    return cone(ChainMap(t.A, b2, std::move(fcomps)));
}

/* pad the first term: A' = A (+) cone(id_W); the map sends the padding to
   zero, the cone gains a shifted contractible summand */
inline Triangle pad_first(const Triangle &t, const PerfectComplex &w)
{
    require(w.algebra() == t.A.algebra(), "pad_first: algebra mismatch");
    Triangle cid = cone(ChainMap::identity(w));
    PerfectComplex a2 = t.A.direct_sum(cid.C);
    std::map<int, AlgMatrix> fcomps;
    const CoeffAlgebra &alg = t.A.algebra();
    for (int deg = a2.support_min(); deg <= a2.support_max(); ++deg) {
        if (a2.rank(deg) == 0 || t.B.rank(deg) == 0)
            continue;
        AlgMatrix m(alg, t.B.rank(deg), a2.rank(deg));
        AlgMatrix orig = t.f.component(deg);
        for (size_t r = 0; r < orig.rows(); ++r)
            for (size_t c = 0; c < orig.cols(); ++c)
                m.set(r, c, orig.at(r, c));
        fcomps.emplace(deg, std::move(m));
    }
    return cone(ChainMap(a2, t.B, std::move(fcomps)));
}

} // namespace cohlen
