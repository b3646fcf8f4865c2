#pragma once

#include "cohlen/complex.hpp"
#include "cohlen/rng.hpp"
#include "cohlen/triangle.hpp"

namespace cohlen {

/* Random minimal complex over the dual numbers: differentials are eps times
   random base-field matrices, so d^2 = 0 holds automatically. */
inline PerfectComplex random_minimal_complex(const CoeffAlgebra &alg, Rng &rng, int deg_lo,
                                             int deg_hi, size_t max_rank)
{
    require(alg.kind() == AlgKind::dual_numbers, "random_minimal_complex: dual numbers only");
    const Field &k = alg.base_field();
    std::vector<size_t> ranks;
    for (int d = deg_lo; d <= deg_hi; ++d)
        ranks.push_back(rng.below(max_rank + 1));
    std::vector<AlgMatrix> diffs;
    for (size_t i = 0; i + 1 < ranks.size(); ++i) {
        AlgMatrix m(alg, ranks[i + 1], ranks[i]);
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t c = 0; c < m.cols(); ++c)
                m.set(r, c, alg.dual(k.zero(), rng.sample(k)));
        diffs.push_back(std::move(m));
    }
    return PerfectComplex(alg, deg_lo, std::move(ranks), std::move(diffs));
}

/* Random perfect complex: a random minimal complex padded with contractible
   cones and scrambled by elementary change-of-basis conjugations, so unit
   entries appear while the homotopy type stays known. */
inline PerfectComplex random_complex(const CoeffAlgebra &alg, Rng &rng, int deg_lo, int deg_hi,
                                     size_t max_rank)
{
    PerfectComplex x = random_minimal_complex(alg, rng, deg_lo, deg_hi, max_rank);
    // a couple of contractible summands
    for (int i = 0; i < 2; ++i) {
        int n = static_cast<int>(rng.range(deg_lo, deg_hi - 1));
        int r = static_cast<int>(rng.range(0, std::min(2, deg_hi - 1 - n)));
        x = x.direct_sum(cone(ChainMap::identity(PerfectComplex::bar(alg, n, r))).C);
    }

    // elementary conjugations: basis change in X^i acts on d_{i-1} rows and
    // d_i columns
    int lo = x.support_min(), hi = x.support_max();
    std::vector<size_t> ranks;
    std::vector<AlgMatrix> diffs;
    for (int d = lo; d <= hi; ++d)
        ranks.push_back(x.rank(d));
    for (int d = lo; d < hi; ++d)
        diffs.push_back(x.diff(d));

    const Field &k = alg.base_field();
    size_t ops = 3 * x.total_rank();
    for (size_t step = 0; step < ops; ++step) {
        size_t i = rng.below(ranks.size());
        size_t n = ranks[i];
        if (n < 2)
            continue;
        size_t r1 = rng.below(n), r2 = rng.below(n);
        if (r1 == r2)
            continue;
        AlgElem c = alg.dual(rng.sample(k), rng.sample(k));
        if (alg.is_zero(c))
            continue;
        // basis change e_{r2} += c e_{r1}: in coordinates E = I - c E_{r2,r1}
        // on incoming rows, E^{-1} = I + c E_{r2,r1} on outgoing columns
        if (i > 0) {
            AlgMatrix &prev = diffs[i - 1];
            for (size_t col = 0; col < prev.cols(); ++col)
                prev.set(r2, col, alg.sub(prev.at(r2, col), alg.mul(c, prev.at(r1, col))));
        }
        if (i + 1 < ranks.size()) {
            AlgMatrix &next = diffs[i];
            for (size_t row = 0; row < next.rows(); ++row)
                next.set(row, r1, alg.add(next.at(row, r1), alg.mul(c, next.at(row, r2))));
        }
    }
    PerfectComplex scrambled(alg, lo, std::move(ranks), std::move(diffs));
    require(!scrambled.validate().has_value(), "random_complex: scrambling broke d^2 = 0");
    return scrambled;
}

/* Direct sum of string complexes with the given multiplicities. */
inline PerfectComplex
complex_from_multiplicities(const CoeffAlgebra &alg,
                            const std::map<std::pair<int, int>, size_t> &mults)
{
    PerfectComplex x = PerfectComplex::zero(alg);
    for (const auto &[bar, m] : mults)
        for (size_t i = 0; i < m; ++i)
            x = x.direct_sum(PerfectComplex::bar(alg, bar.first, bar.second));
    return x;
}

/* Random perfect complex over the polynomial ring with entry degrees <= 3;
   built from an upper-triangular-by-blocks shape so d^2 = 0 is automatic,
   then scrambled by elementary conjugations. */
inline PerfectComplex random_poly_complex(const CoeffAlgebra &alg, Rng &rng, int deg_lo, int deg_hi,
                                          size_t max_rank, int max_entry_degree)
{
    require(alg.kind() == AlgKind::poly_ring, "random_poly_complex: polynomial ring only");
    const Field &k = alg.base_field();
    // start from stalk blocks and cones of diagonal polynomial maps: a sum
    // of two-term complexes f: A -> A and free stalks
    PerfectComplex x = PerfectComplex::zero(alg);
    auto rand_poly = [&]() {
        std::vector<FieldElem> c;
        int deg = static_cast<int>(rng.below(static_cast<uint64_t>(max_entry_degree) + 1));
        for (int i = 0; i <= deg; ++i)
            c.push_back(rng.sample(k));
        return Poly(k, c);
    };
    int pieces = 1 + static_cast<int>(rng.below(max_rank));
    for (int p = 0; p < pieces; ++p) {
        int d = static_cast<int>(rng.range(deg_lo, deg_hi - 1));
        if (rng.below(4) == 0) {
            x = x.direct_sum(PerfectComplex::free_stalk(alg, d, 1));
            continue;
        }
        Poly f = rand_poly();
        AlgMatrix m(alg, 1, 1);
        m.set(0, 0, alg.from_poly(f));
        std::map<int, size_t> ranks{{d, 1}, {d + 1, 1}};
        x = x.direct_sum(PerfectComplex::from_maps(alg, ranks, {{d, m}}));
    }
    if (x.is_zero())
        return x;

    int lo = x.support_min(), hi = x.support_max();
    std::vector<size_t> ranks;
    std::vector<AlgMatrix> diffs;
    for (int d = lo; d <= hi; ++d)
        ranks.push_back(x.rank(d));
    for (int d = lo; d < hi; ++d)
        diffs.push_back(x.diff(d));
    size_t ops = 2 * x.total_rank();
    for (size_t step = 0; step < ops; ++step) {
        size_t i = rng.below(ranks.size());
        size_t n = ranks[i];
        if (n < 2)
            continue;
        size_t r1 = rng.below(n), r2 = rng.below(n);
        if (r1 == r2)
            continue;
        AlgElem c = alg.from_base(rng.sample(k));
        if (alg.is_zero(c))
            continue;
        if (i > 0) {
            AlgMatrix &prev = diffs[i - 1];
            for (size_t col = 0; col < prev.cols(); ++col)
                prev.set(r2, col, alg.sub(prev.at(r2, col), alg.mul(c, prev.at(r1, col))));
        }
        if (i + 1 < ranks.size()) {
            AlgMatrix &next = diffs[i];
            for (size_t row = 0; row < next.rows(); ++row)
                next.set(row, r1, alg.add(next.at(row, r1), alg.mul(c, next.at(row, r2))));
        }
    }
    PerfectComplex out(alg, lo, std::move(ranks), std::move(diffs));
    require(!out.validate().has_value(), "random_poly_complex: scrambling broke d^2 = 0");
    return out;
}

} // namespace cohlen
