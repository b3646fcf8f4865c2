#pragma once

#include <optional>
#include <vector>

#include "cohlen/field.hpp"
#include "cohlen/rng.hpp"

namespace cohlen {

using Vec = std::vector<FieldElem>;

/* Dense matrix over an exact field. Row major, column vectors act on the
   right. Everything is immutable in spirit: operations return new values. */
class Matrix {
  public:
    Matrix(Field f, size_t rows, size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), e_(rows * cols, f_.zero())
    {
    }

    static Matrix identity(const Field &f, size_t n)
    {
        Matrix m(f, n, n);
        for (size_t i = 0; i < n; ++i)
            m.set(i, i, f.one());
        return m;
    }

    static Matrix random(const Field &f, size_t rows, size_t cols, Rng &rng)
    {
        Matrix m(f, rows, cols);
        for (auto &x : m.e_)
            x = rng.sample(f);
        return m;
    }

    const Field &field() const { return f_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    const FieldElem &at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
    void set(size_t r, size_t c, FieldElem v) { e_[r * cols_ + c] = std::move(v); }

    bool is_zero() const
    {
        for (const auto &x : e_)
            if (!f_.is_zero(x))
                return false;
        return true;
    }

    bool operator==(const Matrix &o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    Matrix transpose() const
    {
        Matrix t(f_, cols_, rows_);
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c)
                t.set(c, r, at(r, c));
        return t;
    }

    Matrix operator+(const Matrix &o) const
    {
        require(rows_ == o.rows_ && cols_ == o.cols_, "Matrix: shape mismatch in +");
        Matrix r = *this;
        for (size_t i = 0; i < e_.size(); ++i)
            r.e_[i] = f_.add(e_[i], o.e_[i]);
        return r;
    }

    Matrix operator-() const
    {
        Matrix r = *this;
        for (auto &x : r.e_)
            x = f_.neg(x);
        return r;
    }

    Matrix operator-(const Matrix &o) const { return *this + (-o); }

    Matrix operator*(const Matrix &o) const
    {
        require(cols_ == o.rows_, "Matrix: shape mismatch in *");
        Matrix r(f_, rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const FieldElem &a = at(i, k);
                if (f_.is_zero(a))
                    continue;
                for (size_t j = 0; j < o.cols_; ++j) {
                    const FieldElem &b = o.at(k, j);
                    if (f_.is_zero(b))
                        continue;
                    r.set(i, j, f_.add(r.at(i, j), f_.mul(a, b)));
                }
            }
        return r;
    }

    Matrix scale(const FieldElem &c) const
    {
        Matrix r = *this;
        for (auto &x : r.e_)
            x = f_.mul(x, c);
        return r;
    }

    Vec apply(const Vec &v) const
    {
        require(v.size() == cols_, "Matrix: vector length mismatch");
        Vec r(rows_, f_.zero());
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (!f_.is_zero(at(i, j)) && !f_.is_zero(v[j]))
                    r[i] = f_.add(r[i], f_.mul(at(i, j), v[j]));
        return r;
    }

    /* reduced row echelon form; records pivot columns if asked */
    Matrix rref(std::vector<size_t> *pivot_cols = nullptr) const
    {
        Matrix m = *this;
        size_t lead = 0;
        if (pivot_cols)
            pivot_cols->clear();
        for (size_t r = 0; r < rows_ && lead < cols_; ++r) {
            size_t pr = r;
            while (pr < rows_ && f_.is_zero(m.at(pr, lead))) {
                ++pr;
            }
            while (pr == rows_) {
                ++lead;
                if (lead == cols_)
                    return m;
                pr = r;
                while (pr < rows_ && f_.is_zero(m.at(pr, lead)))
                    ++pr;
            }
            if (pr != r)
                for (size_t c = 0; c < cols_; ++c)
                    std::swap(m.e_[pr * cols_ + c], m.e_[r * cols_ + c]);
            FieldElem piv_inv = f_.inv(m.at(r, lead));
            for (size_t c = lead; c < cols_; ++c)
                m.set(r, c, f_.mul(m.at(r, c), piv_inv));
            for (size_t rr = 0; rr < rows_; ++rr) {
                if (rr == r || f_.is_zero(m.at(rr, lead)))
                    continue;
                FieldElem factor = m.at(rr, lead);
                for (size_t c = lead; c < cols_; ++c)
                    m.set(rr, c, f_.sub(m.at(rr, c), f_.mul(factor, m.at(r, c))));
            }
            if (pivot_cols)
                pivot_cols->push_back(lead);
            ++lead;
        }
        return m;
    }

    size_t rank() const
    {
        std::vector<size_t> piv;
        rref(&piv);
        return piv.size();
    }

    /* basis of the right null space, one column vector per basis element */
    std::vector<Vec> kernel_basis() const
    {
        std::vector<size_t> piv;
        Matrix r = rref(&piv);
        std::vector<bool> is_pivot(cols_, false);
        for (size_t c : piv)
            is_pivot[c] = true;
        std::vector<Vec> basis;
        for (size_t free_c = 0; free_c < cols_; ++free_c) {
            if (is_pivot[free_c])
                continue;
            Vec v(cols_, f_.zero());
            v[free_c] = f_.one();
            for (size_t i = 0; i < piv.size(); ++i)
                v[piv[i]] = f_.neg(r.at(i, free_c));
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /* some solution of m x = b, or nullopt when inconsistent */
    std::optional<Vec> solve(const Vec &b) const
    {
        require(b.size() == rows_, "Matrix: rhs length mismatch");
        Matrix aug(f_, rows_, cols_ + 1);
        for (size_t r = 0; r < rows_; ++r) {
            for (size_t c = 0; c < cols_; ++c)
                aug.set(r, c, at(r, c));
            aug.set(r, cols_, b[r]);
        }
        std::vector<size_t> piv;
        Matrix red = aug.rref(&piv);
        if (!piv.empty() && piv.back() == cols_)
            return std::nullopt; // pivot in the rhs column
        Vec x(cols_, f_.zero());
        for (size_t i = 0; i < piv.size(); ++i)
            x[piv[i]] = red.at(i, cols_);
        return x;
    }

    /* stack columns of several vectors into a matrix */
    static Matrix from_columns(const Field &f, size_t dim, const std::vector<Vec> &cols)
    {
        Matrix m(f, dim, cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            require(cols[j].size() == dim, "Matrix: column length mismatch");
            for (size_t i = 0; i < dim; ++i)
                m.set(i, j, cols[j][i]);
        }
        return m;
    }

    Vec column(size_t j) const
    {
        Vec v(rows_, f_.zero());
        for (size_t i = 0; i < rows_; ++i)
            v[i] = at(i, j);
        return v;
    }

  private:
    Field f_;
    size_t rows_, cols_;
    std::vector<FieldElem> e_;
};

/* Repeated solves against a fixed coefficient matrix. Eliminates once on
   [A | I], pivoting only inside A, so each solve is a matrix-vector product
   plus a consistency check. */
class LinearSolver {
  public:
    explicit LinearSolver(const Matrix &a)
        : f_(a.field()), n_(a.cols()), red_(a.field(), a.rows(), a.cols() + a.rows())
    {
        size_t rows = a.rows();
        for (size_t r = 0; r < rows; ++r) {
            for (size_t c = 0; c < n_; ++c)
                red_.set(r, c, a.at(r, c));
            red_.set(r, n_ + r, f_.one());
        }
        size_t lead = 0;
        for (size_t r = 0; r < rows && lead < n_; ++r) {
            size_t pr = r;
            while (pr < rows && f_.is_zero(red_.at(pr, lead)))
                ++pr;
            while (pr == rows) {
                ++lead;
                if (lead == n_)
                    goto done;
                pr = r;
                while (pr < rows && f_.is_zero(red_.at(pr, lead)))
                    ++pr;
            }
            if (pr != r)
                for (size_t c = 0; c < red_.cols(); ++c) {
                    FieldElem tmp = red_.at(pr, c);
                    red_.set(pr, c, red_.at(r, c));
                    red_.set(r, c, tmp);
                }
            {
                FieldElem inv = f_.inv(red_.at(r, lead));
                for (size_t c = 0; c < red_.cols(); ++c)
                    red_.set(r, c, f_.mul(red_.at(r, c), inv));
                for (size_t rr = 0; rr < rows; ++rr) {
                    if (rr == r || f_.is_zero(red_.at(rr, lead)))
                        continue;
                    FieldElem factor = red_.at(rr, lead);
                    for (size_t c = 0; c < red_.cols(); ++c)
                        red_.set(rr, c, f_.sub(red_.at(rr, c), f_.mul(factor, red_.at(r, c))));
                }
            }
            piv_.push_back(lead);
            ++lead;
        }
    done:;
    }

    size_t rank() const { return piv_.size(); }

    std::optional<Vec> solve(const Vec &b) const
    {
        size_t rows = red_.rows();
        require(b.size() == rows, "LinearSolver: rhs length mismatch");
        Vec t(rows, f_.zero());
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < rows; ++c)
                if (!f_.is_zero(red_.at(r, n_ + c)) && !f_.is_zero(b[c]))
                    t[r] = f_.add(t[r], f_.mul(red_.at(r, n_ + c), b[c]));
        for (size_t r = piv_.size(); r < rows; ++r)
            if (!f_.is_zero(t[r]))
                return std::nullopt;
        Vec x(n_, f_.zero());
        for (size_t i = 0; i < piv_.size(); ++i)
            x[piv_[i]] = t[i];
        return x;
    }

  private:
    Field f_;
    size_t n_;
    Matrix red_;
    std::vector<size_t> piv_;
};

/* span utilities used throughout: maintain an echelon basis of a growing
   subspace of k^dim */
class SpanBuilder {
  public:
    SpanBuilder(Field f, size_t dim) : f_(std::move(f)), dim_(dim) {}

    /* returns true when v enlarged the span */
    bool add(Vec v)
    {
        require(v.size() == dim_, "SpanBuilder: dimension mismatch");
        for (size_t i = 0; i < rows_.size(); ++i) {
            const FieldElem &lead = v[lead_cols_[i]];
            if (!f_.is_zero(lead)) {
                FieldElem c = lead; // rows are normalized to leading 1
                for (size_t j = 0; j < dim_; ++j)
                    v[j] = f_.sub(v[j], f_.mul(c, rows_[i][j]));
            }
        }
        size_t lead = dim_;
        for (size_t j = 0; j < dim_; ++j)
            if (!f_.is_zero(v[j])) {
                lead = j;
                break;
            }
        if (lead == dim_)
            return false;
        FieldElem inv = f_.inv(v[lead]);
        for (size_t j = 0; j < dim_; ++j)
            v[j] = f_.mul(v[j], inv);
        // back-substitute into existing rows to keep reduced form
        for (size_t i = 0; i < rows_.size(); ++i) {
            FieldElem c = rows_[i][lead];
            if (!f_.is_zero(c))
                for (size_t j = 0; j < dim_; ++j)
                    rows_[i][j] = f_.sub(rows_[i][j], f_.mul(c, v[j]));
        }
        size_t pos = 0;
        while (pos < lead_cols_.size() && lead_cols_[pos] < lead)
            ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
        lead_cols_.insert(lead_cols_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
        return true;
    }

    bool contains(Vec v) const
    {
        for (size_t i = 0; i < rows_.size(); ++i) {
            const FieldElem &lead = v[lead_cols_[i]];
            if (!f_.is_zero(lead)) {
                FieldElem c = lead;
                for (size_t j = 0; j < dim_; ++j)
                    v[j] = f_.sub(v[j], f_.mul(c, rows_[i][j]));
            }
        }
        for (const auto &x : v)
            if (!f_.is_zero(x))
                return false;
        return true;
    }

    size_t dim() const { return rows_.size(); }
    size_t ambient_dim() const { return dim_; }
    const std::vector<Vec> &basis() const { return rows_; }

  private:
    Field f_;
    size_t dim_;
    std::vector<Vec> rows_;
    std::vector<size_t> lead_cols_;
};

} // namespace cohlen
