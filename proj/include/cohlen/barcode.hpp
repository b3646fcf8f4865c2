#pragma once

#include <map>

#include "cohlen/matrix.hpp"
#include "cohlen/minimal.hpp"

namespace cohlen {

/* Multiset of interval labels (n, r): degree of the left end and length.
   Records the Krull-Schmidt decomposition of a complex over the dual
   numbers into string complexes. */
class Barcode {
  public:
    using Map = std::map<std::pair<int, int>, size_t>;

    Barcode() = default;

    void add(int n, int r, size_t mult = 1)
    {
        if (mult > 0)
            bars_[{n, r}] += mult;
    }

    const Map &bars() const { return bars_; }
    bool empty() const { return bars_.empty(); }

    size_t total_rank() const
    {
        size_t t = 0;
        for (const auto &[key, m] : bars_)
            t += m * static_cast<size_t>(key.second + 1);
        return t;
    }

    Barcode operator+(const Barcode &o) const
    {
        Barcode r = *this;
        for (const auto &[key, m] : o.bars_)
            r.bars_[key] += m;
        return r;
    }

    bool operator==(const Barcode &o) const { return bars_ == o.bars_; }
    bool operator!=(const Barcode &o) const { return !(*this == o); }

    std::string to_string() const
    {
        std::string s = "{";
        bool first = true;
        for (const auto &[key, m] : bars_) {
            if (!first)
                s += ", ";
            first = false;
            s += "(" + std::to_string(key.first) + "," + std::to_string(key.second) +
                 "):" + std::to_string(m);
        }
        return s + "}";
    }

  private:
    Map bars_;
};

/* The eps-coefficient matrices of a minimal complex over the dual numbers:
   a minimal differential is eps times a base-field matrix. */
inline std::vector<Matrix> epsilon_parts(const PerfectComplex &minimal)
{
    const CoeffAlgebra &alg = minimal.algebra();
    require(alg.kind() == AlgKind::dual_numbers, "epsilon_parts: dual numbers only");
    const Field &k = alg.base_field();
    std::vector<Matrix> out;
    for (int d = minimal.support_min(); d < minimal.support_max(); ++d) {
        AlgMatrix m = minimal.diff(d);
        Matrix em(k, m.rows(), m.cols());
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t c = 0; c < m.cols(); ++c) {
                const DualElem &e = std::get<DualElem>(m.at(r, c).v);
                require(k.is_zero(e.a), "epsilon_parts: complex is not minimal");
                em.set(r, c, e.b);
            }
        out.push_back(std::move(em));
    }
    return out;
}

/* Barcode of a complex over the dual numbers.

   Why the eps-coefficient matrices decide everything: a minimal complex is
   (+) k[eps]^{r_i} with differentials eps*M_i, and since eps^2 = 0 a degreewise
   invertible chain map U = U0 + eps*U1 constrains only U0: the squares demand
   M_i U0_i = U0_{i+1} M_i, with the eps*U1 cross terms killed by eps^2. Hence
   isomorphism classes of minimal complexes match isomorphism classes of the
   linear-quiver representations (M_i), whose indecomposables are intervals;
   interval multiplicities are the standard rank inclusion-exclusion below. */
inline Barcode barcode(const PerfectComplex &x)
{
    require(x.algebra().kind() == AlgKind::dual_numbers, "barcode: dual numbers only");
    PerfectComplex m = minimal_model(x);
    Barcode bc;
    if (m.is_zero())
        return bc;
    const Field &k = x.algebra().base_field();
    std::vector<Matrix> eps = epsilon_parts(m);
    int lo = m.support_min(), hi = m.support_max();

    // r(a,b) = rank of M_{b-1} ... M_a : term_a -> term_b, r(a,a) = dim term_a
    auto rank_span = [&](int a, int b) -> size_t {
        if (a < lo || b > hi || a > b)
            return 0;
        if (a == b)
            return m.rank(a);
        Matrix prod = eps[static_cast<size_t>(a - lo)];
        for (int d = a + 1; d < b; ++d)
            prod = eps[static_cast<size_t>(d - lo)] * prod;
        return prod.rank();
    };

    size_t accounted = 0;
    for (int a = lo; a <= hi; ++a)
        for (int b = a; b <= hi; ++b) {
            size_t plus = rank_span(a, b) + rank_span(a - 1, b + 1);
            size_t minus = rank_span(a - 1, b) + rank_span(a, b + 1);
            require(plus >= minus, "barcode: negative multiplicity");
            size_t mult = plus - minus;
            if (mult > 0) {
                bc.add(a, b - a, mult);
                accounted += mult * static_cast<size_t>(b - a + 1);
            }
        }
    require(accounted == m.total_rank(), "barcode: rank not conserved");
    return bc;
}

inline PerfectComplex rebuild_from_barcode(const CoeffAlgebra &alg, const Barcode &bc)
{
    PerfectComplex x = PerfectComplex::zero(alg);
    for (const auto &[key, mult] : bc.bars())
        for (size_t i = 0; i < mult; ++i)
            x = x.direct_sum(PerfectComplex::bar(alg, key.first, key.second));
    return x;
}

/* Decide homotopy equivalence where the minimal-model theory applies. Over
   the dual numbers barcodes decide; over other local algebras only the easy
   invariants are used, and anything else refuses rather than guessing. */
inline bool homotopy_equivalent(const PerfectComplex &x, const PerfectComplex &y)
{
    require(x.algebra() == y.algebra(), "homotopy_equivalent: algebra mismatch");
    if (x.algebra().kind() == AlgKind::dual_numbers)
        return barcode(x) == barcode(y);
    if (x.algebra().is_local()) {
        PerfectComplex mx = minimal_model(x), my = minimal_model(y);
        if (mx.is_zero() && my.is_zero())
            return true;
        // minimal models are unique up to isomorphism: different rank
        // profiles rule an equivalence out
        if (mx.support_min() != my.support_min() || mx.support_max() != my.support_max())
            return false;
        bool same_ranks = true;
        for (int d = mx.support_min(); d <= mx.support_max(); ++d)
            if (mx.rank(d) != my.rank(d))
                same_ranks = false;
        if (!same_ranks)
            return false;
        if (mx == my)
            return true;
        throw error("homotopy_equivalent: undecidable over this coefficient algebra");
    }
    throw error("homotopy_equivalent: undecidable over this coefficient algebra");
}

} // namespace cohlen
