#pragma once

#include "cohlen/barcode.hpp"
#include "cohlen/hom_complex.hpp"
#include "cohlen/triangle.hpp"

namespace cohlen {

/* The almost split triangle over the dual numbers with parameters (n, r):

     X_{n+1,r} --(drop top, include bottom)--> X_{n+1,r-1} (+) X_{n,r+1}
       --(include bottom, -drop top)--> X_{n,r} --(eps)--> Sigma X_{n+1,r}

   with X_{n,-1} = 0. The maps are identity on the overlapping degrees; the
   composite g.f vanishes on the nose. The third object is certified against
   cone(f): the certificate cone is contractible. */
inline Triangle ar_triangle(const CoeffAlgebra &alg, int n, int r)
{
    require(alg.kind() == AlgKind::dual_numbers, "ar_triangle: dual numbers only");
    require(r >= 0, "ar_triangle: r must be >= 0");
    PerfectComplex a = PerfectComplex::bar(alg, n + 1, r);
    PerfectComplex b1 = r >= 1 ? PerfectComplex::bar(alg, n + 1, r - 1) : PerfectComplex::zero(alg);
    PerfectComplex b2 = PerfectComplex::bar(alg, n, r + 1);
    PerfectComplex b = b1.direct_sum(b2);
    PerfectComplex c = PerfectComplex::bar(alg, n, r);

    // f: identity components; into b1 on degrees n+1..n+r, into b2 on n+1..n+r+1
    std::map<int, AlgMatrix> fcomps;
    for (int d = n + 1; d <= n + r + 1; ++d) {
        size_t rows = b.rank(d);
        if (rows == 0 || a.rank(d) == 0)
            continue;
        AlgMatrix m(alg, rows, 1);
        size_t off = 0;
        if (b1.rank(d) > 0)
            m.set(0, 0, alg.one()); // b1 occupies the first coordinate
        off = b1.rank(d);
        m.set(off, 0, alg.one()); // b2 component
        if (b1.rank(d) == 0)
            m.set(0, 0, alg.one());
        fcomps.emplace(d, std::move(m));
    }
    ChainMap f(a, b, std::move(fcomps));
    require(f.commutes(), "ar_triangle: left map is not a chain map");

    // g: from b1 include-bottom into c, from b2 minus drop-top onto c
    std::map<int, AlgMatrix> gcomps;
    for (int d = n; d <= n + r; ++d) {
        size_t cols = b.rank(d);
        if (cols == 0 || c.rank(d) == 0)
            continue;
        AlgMatrix m(alg, 1, cols);
        if (b1.rank(d) > 0)
            m.set(0, 0, alg.one());
        if (b2.rank(d) > 0)
            m.set(0, b1.rank(d), alg.neg(alg.one()));
        gcomps.emplace(d, std::move(m));
    }
    ChainMap g(b, c, std::move(gcomps));
    require(g.commutes(), "ar_triangle: middle map is not a chain map");

    // h: eps times the identity, c and Sigma a live in the same degrees
    PerfectComplex sa = a.shift(1);
    std::map<int, AlgMatrix> hcomps;
    for (int d = n; d <= n + r; ++d) {
        AlgMatrix m(alg, 1, 1);
        m.set(0, 0, alg.eps());
        hcomps.emplace(d, std::move(m));
    }
    ChainMap h(c, sa, std::move(hcomps));
    require(h.commutes(), "ar_triangle: connecting map is not a chain map");

    // composite vanishes identically
    ChainMap gf = g.compose_after(f);
    for (int d = a.support_min(); d <= a.support_max(); ++d)
        require(gf.component(d).is_zero(), "ar_triangle: g.f does not vanish");

    // certificate: the third object is the cone of f up to homotopy
    Triangle cn = cone(f);
    require(barcode(cn.C) == barcode(c), "ar_triangle: third object is not the cone of f");

    return Triangle{a, b, c, f, g, h};
}

/* Evaluation of the simple functor attached to the string complex X_{n,r}:
   the kernel of Hom(C, X_{n,r}) -> Hom(C, X_{n,r-1} (+) X_{n-1,r+1}) under
   post-composition with the left map of the almost split triangle starting
   at X_{n,r}. Kronecker delta on the string complexes. */
inline size_t simple_functor_eval(const CoeffAlgebra &alg, int n, int r, const PerfectComplex &c)
{
    require(alg.kind() == AlgKind::dual_numbers, "simple_functor_eval: dual numbers only");
    if (c.is_zero())
        return 0;
    Triangle t = ar_triangle(alg, n - 1, r); // first object is X_{n,r}
    Hom0 from_c_to_a(c, t.A);
    size_t m = from_c_to_a.dim();
    if (m == 0)
        return 0;
    Hom0 from_c_to_b(c, t.B);
    const Field &k = alg.base_field();
    // matrix of post-composition with f on the H^0 classes
    Matrix post(k, from_c_to_b.dim(), m);
    for (size_t j = 0; j < m; ++j) {
        ChainMap psi = from_c_to_a.rep_map(j);
        Vec img = from_c_to_b.class_of(t.f.compose_after(psi));
        for (size_t i = 0; i < img.size(); ++i)
            post.set(i, j, img[i]);
    }
    return m - post.rank();
}

/* both Schanuel checks ---------------------------------------------------- */

/* two homotopy-equivalent triangles satisfy barcode(A + B' + C) =
   barcode(A' + B + C'); the precondition is certified by producing the
   second triangle with the padding mutators */
inline bool schanuel_triangle_check(const Triangle &t1, const Triangle &t2)
{
    Barcode lhs = barcode(t1.A.direct_sum(t2.B).direct_sum(t1.C));
    Barcode rhs = barcode(t2.A.direct_sum(t1.B).direct_sum(t2.C));
    return lhs == rhs;
}

/* free resolutions of the same class with the same ends: the even/odd
   interleaved rank sums must match */
inline bool schanuel_free_parity_check(const std::vector<size_t> &p, const std::vector<size_t> &q)
{
    require(p.size() == q.size(), "schanuel_free_parity_check: length mismatch");
    size_t lhs = 0, rhs = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i % 2 == 0) {
            lhs += p[i];
            rhs += q[i];
        } else {
            lhs += q[i];
            rhs += p[i];
        }
    }
    return lhs == rhs;
}

} // namespace cohlen
