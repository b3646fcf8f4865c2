#pragma once

#include <vector>

#include "cohlen/matrix.hpp"
#include "cohlen/poly.hpp"

namespace cohlen {

/* Dense matrix with univariate polynomial entries, used for complexes over a
   polynomial ring. Rank is taken over the fraction field. */
class PolyMatrix {
  public:
    PolyMatrix(Field base, size_t rows, size_t cols)
        : f_(std::move(base)), rows_(rows), cols_(cols), e_(rows * cols, Poly(f_))
    {
    }

    const Field &base_field() const { return f_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Poly &at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
    void set(size_t r, size_t c, Poly p) { e_[r * cols_ + c] = std::move(p); }

    /* Bareiss fraction-free elimination: stays inside k[x], divisions exact */
    size_t rank_over_fraction_field() const
    {
        if (rows_ == 0 || cols_ == 0)
            return 0;
        std::vector<Poly> m = e_;
        auto idx = [&](size_t r, size_t c) { return r * cols_ + c; };
        size_t rank = 0;
        size_t r = 0;
        Poly prev = Poly::constant(f_, f_.one());
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            // pivot: lowest-degree nonzero entry in column c at or below row r
            size_t pr = rows_;
            for (size_t i = r; i < rows_; ++i) {
                if (m[idx(i, c)].is_zero())
                    continue;
                if (pr == rows_ || m[idx(i, c)].degree() < m[idx(pr, c)].degree())
                    pr = i;
            }
            if (pr == rows_)
                continue;
            if (pr != r)
                for (size_t j = 0; j < cols_; ++j)
                    std::swap(m[idx(pr, j)], m[idx(r, j)]);
            const Poly piv = m[idx(r, c)];
            for (size_t i = r + 1; i < rows_; ++i) {
                for (size_t j = c + 1; j < cols_; ++j) {
                    Poly num = m[idx(i, j)] * piv - m[idx(i, c)] * m[idx(r, j)];
                    m[idx(i, j)] = Poly::exact_div(num, prev);
                }
                m[idx(i, c)] = Poly(f_);
            }
            prev = piv;
            ++rank;
            ++r;
        }
        return rank;
    }

    /* rank after specializing x to a point of (an extension of) the base field */
    size_t rank_at(const Field &target, const FieldElem &point,
                   const std::function<FieldElem(const FieldElem &)> &embed) const
    {
        Matrix m(target, rows_, cols_);
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c)
                m.set(r, c, at(r, c).eval_mapped(target, point, embed));
        return m.rank();
    }

    /* Smith normal form diagonal over k[x] (a PID): monic invariant factors
       d_1 | d_2 | ... | d_r. Determinantal gcds fall out as partial products. */
    std::vector<Poly> smith_invariant_factors() const
    {
        std::vector<Poly> m = e_;
        size_t rows = rows_, cols = cols_;
        auto idx = [&](size_t r, size_t c) { return r * cols + c; };
        std::vector<Poly> diag;
        size_t top = 0;
        while (top < rows && top < cols) {
            // find a nonzero entry of minimal degree in the remaining block
            size_t br = rows, bc = cols;
            for (size_t r = top; r < rows; ++r)
                for (size_t c = top; c < cols; ++c) {
                    if (m[idx(r, c)].is_zero())
                        continue;
                    if (br == rows || m[idx(r, c)].degree() < m[idx(br, bc)].degree()) {
                        br = r;
                        bc = c;
                    }
                }
            if (br == rows)
                break;
            if (br != top)
                for (size_t j = 0; j < cols; ++j)
                    std::swap(m[idx(br, j)], m[idx(top, j)]);
            if (bc != top)
                for (size_t i = 0; i < rows; ++i)
                    std::swap(m[idx(i, bc)], m[idx(i, top)]);
            bool clean = false;
            while (!clean) {
                clean = true;
                for (size_t i = top + 1; i < rows; ++i) {
                    if (m[idx(i, top)].is_zero())
                        continue;
                    auto [q, r] = Poly::divmod(m[idx(i, top)], m[idx(top, top)]);
                    for (size_t j = 0; j < cols; ++j)
                        m[idx(i, j)] = m[idx(i, j)] - q * m[idx(top, j)];
                    if (!r.is_zero()) {
                        for (size_t j = 0; j < cols; ++j)
                            std::swap(m[idx(i, j)], m[idx(top, j)]);
                        clean = false;
                    }
                }
                for (size_t j = top + 1; j < cols; ++j) {
                    if (m[idx(top, j)].is_zero())
                        continue;
                    auto [q, r] = Poly::divmod(m[idx(top, j)], m[idx(top, top)]);
                    for (size_t i = 0; i < rows; ++i)
                        m[idx(i, j)] = m[idx(i, j)] - q * m[idx(i, top)];
                    if (!r.is_zero()) {
                        for (size_t i = 0; i < rows; ++i)
                            std::swap(m[idx(i, j)], m[idx(i, top)]);
                        clean = false;
                    }
                }
            }
            diag.push_back(m[idx(top, top)].monic());
            ++top;
        }
        // enforce the divisibility chain d_i | d_{i+1}
        for (bool changed = true; changed;) {
            changed = false;
            for (size_t i = 0; i + 1 < diag.size(); ++i) {
                if ((diag[i + 1] % diag[i]).is_zero())
                    continue;
                Poly g = Poly::gcd(diag[i], diag[i + 1]);
                Poly l = Poly::exact_div(diag[i] * diag[i + 1], g).monic();
                diag[i] = g;
                diag[i + 1] = l;
                changed = true;
            }
        }
        return diag;
    }

  private:
    Field f_;
    size_t rows_, cols_;
    std::vector<Poly> e_;
};

} // namespace cohlen
