#pragma once

#include "cohlen/complex.hpp"

namespace cohlen {

/* Minimal model over a local coefficient algebra: repeatedly split off
   contractible rank-one pairs at unit pivots of the differentials, until
   every differential entry lies in the maximal ideal. Homotopy equivalent to
   the input; unique up to isomorphism over local rings. */
inline PerfectComplex minimal_model(const PerfectComplex &x)
{
    const CoeffAlgebra &alg = x.algebra();
    require(alg.is_local(), "minimal_model: coefficient algebra must be local");
    if (x.is_zero())
        return x;

    int lo = x.support_min();
    std::vector<size_t> ranks;
    std::vector<AlgMatrix> diffs;
    for (int d = lo; d <= x.support_max(); ++d)
        ranks.push_back(x.rank(d));
    for (int d = lo; d < x.support_max(); ++d)
        diffs.push_back(x.diff(d));

    auto find_unit = [&](size_t i, size_t &row, size_t &col) {
        const AlgMatrix &m = diffs[i];
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t c = 0; c < m.cols(); ++c)
                if (alg.is_unit(m.at(r, c))) {
                    row = r;
                    col = c;
                    return true;
                }
        return false;
    };

    bool again = true;
    while (again) {
        again = false;
        for (size_t i = 0; i < diffs.size(); ++i) {
            size_t r, c;
            if (!find_unit(i, r, c))
                continue;
            again = true;
            AlgMatrix d = diffs[i];
            AlgElem inv = alg.inv(d.at(r, c));
            // column ops clear row r; mirrored row ops on the previous differential
            for (size_t c2 = 0; c2 < d.cols(); ++c2) {
                if (c2 == c || alg.is_zero(d.at(r, c2)))
                    continue;
                AlgElem factor = alg.mul(inv, d.at(r, c2));
                for (size_t r2 = 0; r2 < d.rows(); ++r2)
                    d.set(r2, c2, alg.sub(d.at(r2, c2), alg.mul(d.at(r2, c), factor)));
                if (i > 0) {
                    AlgMatrix &prev = diffs[i - 1];
                    for (size_t cc = 0; cc < prev.cols(); ++cc)
                        prev.set(c, cc, alg.add(prev.at(c, cc), alg.mul(factor, prev.at(c2, cc))));
                }
            }
            // row ops clear column c; mirrored column ops on the next differential
            for (size_t r2 = 0; r2 < d.rows(); ++r2) {
                if (r2 == r || alg.is_zero(d.at(r2, c)))
                    continue;
                AlgElem factor = alg.mul(d.at(r2, c), inv);
                for (size_t c2 = 0; c2 < d.cols(); ++c2)
                    d.set(r2, c2, alg.sub(d.at(r2, c2), alg.mul(factor, d.at(r, c2))));
                if (i + 1 < diffs.size()) {
                    AlgMatrix &next = diffs[i + 1];
                    for (size_t rr = 0; rr < next.rows(); ++rr)
                        next.set(rr, r, alg.add(next.at(rr, r), alg.mul(next.at(rr, r2), factor)));
                }
            }
            // drop the split pair: basis c in degree i, basis r in degree i+1
            diffs[i] = d.minor_without(r, c);
            ranks[i] -= 1;
            ranks[i + 1] -= 1;
            if (i > 0) {
                AlgMatrix &prev = diffs[i - 1];
                AlgMatrix cut(alg, prev.rows() - 1, prev.cols());
                for (size_t rr = 0, ri = 0; rr < prev.rows(); ++rr) {
                    if (rr == c)
                        continue;
                    for (size_t cc = 0; cc < prev.cols(); ++cc)
                        cut.set(ri, cc, prev.at(rr, cc));
                    ++ri;
                }
                prev = cut;
            }
            if (i + 1 < diffs.size()) {
                AlgMatrix &next = diffs[i + 1];
                AlgMatrix cut(alg, next.rows(), next.cols() - 1);
                for (size_t cc = 0, ci = 0; cc < next.cols(); ++cc) {
                    if (cc == r)
                        continue;
                    for (size_t rr = 0; rr < next.rows(); ++rr)
                        cut.set(rr, ci, next.at(rr, cc));
                    ++ci;
                }
                next = cut;
            }
            break; // restart the scan: indices shifted
        }
    }
    return PerfectComplex(alg, lo, std::move(ranks), std::move(diffs));
}

} // namespace cohlen
