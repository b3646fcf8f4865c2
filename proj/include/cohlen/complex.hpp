#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cohlen/coeff_algebra.hpp"

namespace cohlen {

/* Bounded complex of free modules over a coefficient algebra, cohomological
   convention: the differential raises degree by one, d^{i+1} d^i = 0.
   Canonical form: the rank window is trimmed so that the first and last
   stored degrees have nonzero rank (interior zeros are kept). */
class PerfectComplex {
  public:
    explicit PerfectComplex(CoeffAlgebra alg) : alg_(std::move(alg)) {}

    PerfectComplex(CoeffAlgebra alg, int min_deg, std::vector<size_t> ranks,
                   std::vector<AlgMatrix> diffs)
        : alg_(std::move(alg)), min_deg_(min_deg), ranks_(std::move(ranks)), diffs_(std::move(diffs))
    {
        if (!ranks_.empty())
            require(diffs_.size() + 1 == ranks_.size(), "PerfectComplex: need one diff per step");
        for (size_t i = 0; i + 1 < ranks_.size(); ++i)
            require(diffs_[i].rows() == ranks_[i + 1] && diffs_[i].cols() == ranks_[i],
                    "PerfectComplex: differential shape mismatch at degree " +
                        std::to_string(min_deg_ + static_cast<int>(i)));
        normalize();
    }

    static PerfectComplex from_maps(CoeffAlgebra alg, const std::map<int, size_t> &ranks,
                                    const std::map<int, AlgMatrix> &diffs)
    {
        if (ranks.empty())
            return PerfectComplex(std::move(alg));
        int lo = ranks.begin()->first, hi = ranks.rbegin()->first;
        std::vector<size_t> rv;
        for (int d = lo; d <= hi; ++d) {
            auto it = ranks.find(d);
            rv.push_back(it == ranks.end() ? 0 : it->second);
        }
        std::vector<AlgMatrix> dv;
        for (int d = lo; d < hi; ++d) {
            auto it = diffs.find(d);
            size_t rows = rv[static_cast<size_t>(d - lo + 1)], cols = rv[static_cast<size_t>(d - lo)];
            if (it == diffs.end())
                dv.emplace_back(alg, rows, cols);
            else {
                require(it->second.rows() == rows && it->second.cols() == cols,
                        "PerfectComplex: differential shape mismatch at degree " + std::to_string(d));
                dv.push_back(it->second);
            }
        }
        return PerfectComplex(std::move(alg), lo, std::move(rv), std::move(dv));
    }

    /* the string complex with r+1 free rank-one terms in degrees n..n+r and
       every differential equal to eps */
    static PerfectComplex bar(const CoeffAlgebra &alg, int n, int r)
    {
        require(alg.kind() == AlgKind::dual_numbers, "bar: dual numbers only");
        require(r >= 0, "bar: length must be >= 0");
        std::vector<size_t> ranks(static_cast<size_t>(r) + 1, 1);
        std::vector<AlgMatrix> diffs;
        for (int i = 0; i < r; ++i) {
            AlgMatrix d(alg, 1, 1);
            d.set(0, 0, alg.eps());
            diffs.push_back(std::move(d));
        }
        return PerfectComplex(alg, n, std::move(ranks), std::move(diffs));
    }

    /* free module of the given rank concentrated in one degree */
    static PerfectComplex free_stalk(const CoeffAlgebra &alg, int degree, size_t rank)
    {
        if (rank == 0)
            return PerfectComplex(alg);
        return PerfectComplex(alg, degree, {rank}, {});
    }

    static PerfectComplex zero(const CoeffAlgebra &alg) { return PerfectComplex(alg); }

    const CoeffAlgebra &algebra() const { return alg_; }
    bool is_zero() const { return ranks_.empty(); }
    int support_min() const { return min_deg_; }
    int support_max() const { return min_deg_ + static_cast<int>(ranks_.size()) - 1; }

    size_t rank(int degree) const
    {
        if (degree < min_deg_ || degree > support_max())
            return 0;
        return ranks_[static_cast<size_t>(degree - min_deg_)];
    }

    AlgMatrix diff(int degree) const
    {
        if (degree < min_deg_ || degree >= support_max())
            return AlgMatrix(alg_, rank(degree + 1), rank(degree));
        return diffs_[static_cast<size_t>(degree - min_deg_)];
    }

    size_t total_rank() const
    {
        size_t t = 0;
        for (size_t r : ranks_)
            t += r;
        return t;
    }

    /* dimension over the base field (finite dimensional algebras only) */
    size_t total_k_dim() const
    {
        int d = alg_.k_dim();
        require(d >= 0, "total_k_dim: infinite dimensional coefficient algebra");
        return total_rank() * static_cast<size_t>(d);
    }

    bool operator==(const PerfectComplex &o) const
    {
        return alg_ == o.alg_ && min_deg_ == o.min_deg_ && ranks_ == o.ranks_ && diffs_ == o.diffs_;
    }
    bool operator!=(const PerfectComplex &o) const { return !(*this == o); }

    struct Violation {
        int degree;
        size_t row, col;
        std::string what;
    };

    /* d^2 = 0 and shape consistency; reports the first violating entry */
    std::optional<Violation> validate() const
    {
        for (int d = support_min(); d + 1 < support_max(); ++d) {
            AlgMatrix sq = diff(d + 1) * diff(d);
            for (size_t r = 0; r < sq.rows(); ++r)
                for (size_t c = 0; c < sq.cols(); ++c)
                    if (!alg_.is_zero(sq.at(r, c)))
                        return Violation{d, r, c, "d^2 != 0"};
        }
        return std::nullopt;
    }

    /* (shift(X, n))^i = X^{i+n}, differential scaled by (-1)^n */
    PerfectComplex shift(int n) const
    {
        if (is_zero())
            return *this;
        std::vector<AlgMatrix> diffs = diffs_;
        if (n % 2 != 0)
            for (auto &d : diffs)
                d = -d;
        return PerfectComplex(alg_, min_deg_ - n, ranks_, std::move(diffs));
    }

    PerfectComplex direct_sum(const PerfectComplex &o) const
    {
        require(alg_ == o.alg_, "direct_sum: algebra mismatch");
        if (is_zero())
            return o;
        if (o.is_zero())
            return *this;
        int lo = std::min(min_deg_, o.min_deg_);
        int hi = std::max(support_max(), o.support_max());
        std::vector<size_t> ranks;
        std::vector<AlgMatrix> diffs;
        for (int d = lo; d <= hi; ++d)
            ranks.push_back(rank(d) + o.rank(d));
        for (int d = lo; d < hi; ++d) {
            AlgMatrix blk(alg_, rank(d + 1) + o.rank(d + 1), rank(d) + o.rank(d));
            AlgMatrix a = diff(d), b = o.diff(d);
            for (size_t r = 0; r < a.rows(); ++r)
                for (size_t c = 0; c < a.cols(); ++c)
                    blk.set(r, c, a.at(r, c));
            for (size_t r = 0; r < b.rows(); ++r)
                for (size_t c = 0; c < b.cols(); ++c)
                    blk.set(rank(d + 1) + r, rank(d) + c, b.at(r, c));
            diffs.push_back(std::move(blk));
        }
        return PerfectComplex(alg_, lo, std::move(ranks), std::move(diffs));
    }

  private:
    CoeffAlgebra alg_;
    int min_deg_ = 0;
    std::vector<size_t> ranks_;
    std::vector<AlgMatrix> diffs_;

    void normalize()
    {
        while (!ranks_.empty() && ranks_.front() == 0) {
            ranks_.erase(ranks_.begin());
            if (!diffs_.empty())
                diffs_.erase(diffs_.begin());
            ++min_deg_;
        }
        while (!ranks_.empty() && ranks_.back() == 0) {
            ranks_.pop_back();
            if (!diffs_.empty())
                diffs_.pop_back();
        }
        if (ranks_.empty()) {
            min_deg_ = 0;
            diffs_.clear();
        }
    }
};

/* Degreewise map of complexes; valid when every square commutes. */
class ChainMap {
  public:
    ChainMap(PerfectComplex source, PerfectComplex target, std::map<int, AlgMatrix> comps)
        : src_(std::move(source)), tgt_(std::move(target)), comps_(std::move(comps))
    {
        require(src_.algebra() == tgt_.algebra(), "ChainMap: algebra mismatch");
        for (const auto &[d, m] : comps_)
            require(m.rows() == tgt_.rank(d) && m.cols() == src_.rank(d),
                    "ChainMap: component shape mismatch at degree " + std::to_string(d));
    }

    static ChainMap zero(const PerfectComplex &x, const PerfectComplex &y)
    {
        return ChainMap(x, y, {});
    }

    static ChainMap identity(const PerfectComplex &x)
    {
        std::map<int, AlgMatrix> comps;
        for (int d = x.support_min(); d <= x.support_max(); ++d)
            if (x.rank(d) > 0)
                comps.emplace(d, AlgMatrix::identity(x.algebra(), x.rank(d)));
        return ChainMap(x, x, std::move(comps));
    }

    /* multiplication by a scalar of the coefficient algebra */
    static ChainMap scalar(const PerfectComplex &x, const AlgElem &c)
    {
        std::map<int, AlgMatrix> comps;
        for (int d = x.support_min(); d <= x.support_max(); ++d)
            if (x.rank(d) > 0)
                comps.emplace(d, AlgMatrix::scalar(x.algebra(), x.rank(d), c));
        return ChainMap(x, x, std::move(comps));
    }

    const PerfectComplex &source() const { return src_; }
    const PerfectComplex &target() const { return tgt_; }

    AlgMatrix component(int degree) const
    {
        auto it = comps_.find(degree);
        if (it != comps_.end())
            return it->second;
        return AlgMatrix(src_.algebra(), tgt_.rank(degree), src_.rank(degree));
    }

    bool commutes() const
    {
        int lo = std::min(src_.support_min(), tgt_.support_min());
        int hi = std::max(src_.support_max(), tgt_.support_max());
        for (int d = lo; d < hi; ++d) {
            AlgMatrix lhs = tgt_.diff(d) * component(d);
            AlgMatrix rhs = component(d + 1) * src_.diff(d);
            if (!(lhs == rhs))
                return false;
        }
        return true;
    }

    ChainMap compose_after(const ChainMap &first) const
    {
        require(first.tgt_ == src_, "ChainMap: composition mismatch");
        std::map<int, AlgMatrix> comps;
        int lo = std::min(first.src_.support_min(), src_.support_min());
        int hi = std::max(first.src_.support_max(), src_.support_max());
        for (int d = lo; d <= hi; ++d)
            if (tgt_.rank(d) > 0 && first.src_.rank(d) > 0)
                comps.emplace(d, component(d) * first.component(d));
        return ChainMap(first.src_, tgt_, std::move(comps));
    }

    /* shift the whole map */
    ChainMap shift(int n) const
    {
        std::map<int, AlgMatrix> comps;
        for (const auto &[d, m] : comps_)
            comps.emplace(d - n, m);
        return ChainMap(src_.shift(n), tgt_.shift(n), std::move(comps));
    }

  private:
    PerfectComplex src_, tgt_;
    std::map<int, AlgMatrix> comps_;
};

} // namespace cohlen
