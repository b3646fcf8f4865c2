#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cohlen/matrix.hpp"
#include "cohlen/poly.hpp"
#include "cohlen/rng.hpp"

namespace cohlen {

/* Associative unital algebra of finite dimension over an exact field, given
   by structure constants. Associativity and the unit are checked at
   construction; elements are coordinate vectors in the chosen basis. */
class FinDimAlgebra {
  public:
    /* table[i][j] = coordinates of b_i * b_j */
    static FinDimAlgebra from_table(Field k, std::vector<std::vector<Vec>> table, Vec unit)
    {
        FinDimAlgebra a;
        a.k_ = std::move(k);
        a.table_ = std::move(table);
        a.unit_ = std::move(unit);
        a.dim_ = a.table_.size();
        for (const auto &row : a.table_) {
            require(row.size() == a.dim_, "FinDimAlgebra: ragged table");
            for (const auto &v : row)
                require(v.size() == a.dim_, "FinDimAlgebra: bad product length");
        }
        require(a.unit_.size() == a.dim_, "FinDimAlgebra: bad unit length");
        a.validate();
        return a;
    }

    /* basis closed under a composition rule; rejects non-associative input */
    static FinDimAlgebra from_composition(Field k, size_t dim,
                                          const std::function<Vec(size_t, size_t)> &compose,
                                          Vec unit)
    {
        std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim));
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j)
                table[i][j] = compose(i, j);
        return from_table(std::move(k), std::move(table), std::move(unit));
    }

    const Field &field() const { return k_; }
    size_t dim() const { return dim_; }
    const Vec &unit() const { return unit_; }

    Vec zero() const { return Vec(dim_, k_.zero()); }

    Vec basis_elem(size_t i) const
    {
        Vec v = zero();
        v[i] = k_.one();
        return v;
    }

    Vec add(const Vec &x, const Vec &y) const
    {
        Vec r = x;
        for (size_t i = 0; i < dim_; ++i)
            r[i] = k_.add(r[i], y[i]);
        return r;
    }

    Vec scale(const Vec &x, const FieldElem &c) const
    {
        Vec r = x;
        for (auto &v : r)
            v = k_.mul(v, c);
        return r;
    }

    Vec mul(const Vec &x, const Vec &y) const
    {
        Vec r = zero();
        for (size_t i = 0; i < dim_; ++i) {
            if (k_.is_zero(x[i]))
                continue;
            for (size_t j = 0; j < dim_; ++j) {
                if (k_.is_zero(y[j]))
                    continue;
                FieldElem c = k_.mul(x[i], y[j]);
                const Vec &prod = table_[i][j];
                for (size_t t = 0; t < dim_; ++t)
                    if (!k_.is_zero(prod[t]))
                        r[t] = k_.add(r[t], k_.mul(c, prod[t]));
            }
        }
        return r;
    }

    bool is_zero_vec(const Vec &x) const
    {
        for (const auto &v : x)
            if (!k_.is_zero(v))
                return false;
        return true;
    }

    /* matrix of y -> x*y on the basis */
    Matrix left_mult(const Vec &x) const
    {
        Matrix m(k_, dim_, dim_);
        for (size_t j = 0; j < dim_; ++j) {
            Vec col = mul(x, basis_elem(j));
            for (size_t i = 0; i < dim_; ++i)
                m.set(i, j, col[i]);
        }
        return m;
    }

    Matrix right_mult(const Vec &x) const
    {
        Matrix m(k_, dim_, dim_);
        for (size_t j = 0; j < dim_; ++j) {
            Vec col = mul(basis_elem(j), x);
            for (size_t i = 0; i < dim_; ++i)
                m.set(i, j, col[i]);
        }
        return m;
    }

    FieldElem trace_left_mult(const Vec &x) const
    {
        // tr L_x = sum_i coefficient of b_i in x*b_i
        FieldElem t = k_.zero();
        for (size_t i = 0; i < dim_; ++i)
            for (size_t j = 0; j < dim_; ++j)
                if (!k_.is_zero(x[j]))
                    t = k_.add(t, k_.mul(x[j], table_[j][i][i]));
        return t;
    }

  private:
    Field k_ = Field::prime(2);
    size_t dim_ = 0;
    std::vector<std::vector<Vec>> table_;
    Vec unit_;

    void validate() const
    {
        for (size_t i = 0; i < dim_; ++i) {
            Vec bi = basis_elem(i);
            Vec lu = mul(unit_, bi), ru = mul(bi, unit_);
            require(lu == bi && ru == bi, "FinDimAlgebra: unit is not two-sided at basis index " +
                                               std::to_string(i));
        }
        for (size_t i = 0; i < dim_; ++i)
            for (size_t j = 0; j < dim_; ++j)
                for (size_t l = 0; l < dim_; ++l) {
                    Vec a = mul(table_[i][j], basis_elem(l));
                    Vec b = mul(basis_elem(i), table_[j][l]);
                    if (!(a == b))
                        throw error("FinDimAlgebra: non-associative on basis triple (" +
                                    std::to_string(i) + "," + std::to_string(j) + "," +
                                    std::to_string(l) + ")");
                }
    }
};

/* Finite-dimensional module over a FinDimAlgebra: one action matrix per
   algebra basis element. */
class AlgebraModule {
  public:
    AlgebraModule(const FinDimAlgebra &a, size_t dim, std::vector<Matrix> action)
        : dim_(dim), action_(std::move(action))
    {
        require(action_.size() == a.dim(), "AlgebraModule: one matrix per basis element");
        for (const auto &m : action_)
            require(m.rows() == dim_ && m.cols() == dim_, "AlgebraModule: bad action shape");
        validate(a);
    }

    size_t dim() const { return dim_; }

    /* action of an arbitrary algebra element */
    Matrix act(const FinDimAlgebra &a, const Vec &x) const
    {
        Matrix m(a.field(), dim_, dim_);
        for (size_t i = 0; i < x.size(); ++i)
            if (!a.field().is_zero(x[i]))
                m = m + action_[i].scale(x[i]);
        return m;
    }

    const Matrix &basis_action(size_t i) const { return action_[i]; }

    static AlgebraModule direct_sum(const FinDimAlgebra &a, const AlgebraModule &m,
                                    const AlgebraModule &n)
    {
        std::vector<Matrix> action;
        for (size_t i = 0; i < a.dim(); ++i) {
            Matrix blk(a.field(), m.dim_ + n.dim_, m.dim_ + n.dim_);
            for (size_t r = 0; r < m.dim_; ++r)
                for (size_t c = 0; c < m.dim_; ++c)
                    blk.set(r, c, m.action_[i].at(r, c));
            for (size_t r = 0; r < n.dim_; ++r)
                for (size_t c = 0; c < n.dim_; ++c)
                    blk.set(m.dim_ + r, m.dim_ + c, n.action_[i].at(r, c));
            action.push_back(std::move(blk));
        }
        return AlgebraModule(a, m.dim_ + n.dim_, std::move(action));
    }

  private:
    size_t dim_;
    std::vector<Matrix> action_;

    void validate(const FinDimAlgebra &a) const
    {
        const Field &k = a.field();
        // unit acts as identity
        Matrix u(k, dim_, dim_);
        for (size_t i = 0; i < a.dim(); ++i)
            if (!k.is_zero(a.unit()[i]))
                u = u + action_[i].scale(a.unit()[i]);
        require(u == Matrix::identity(k, dim_), "AlgebraModule: unit does not act as identity");
        for (size_t i = 0; i < a.dim(); ++i)
            for (size_t j = 0; j < a.dim(); ++j) {
                Matrix lhs = action_[i] * action_[j];
                Matrix rhs(k, dim_, dim_);
                Vec prod = a.mul(a.basis_elem(i), a.basis_elem(j));
                for (size_t t = 0; t < a.dim(); ++t)
                    if (!k.is_zero(prod[t]))
                        rhs = rhs + action_[t].scale(prod[t]);
                require(lhs == rhs, "AlgebraModule: action does not respect the product");
            }
    }
};

namespace raddetail {

/* span of products u*w, u in left factors, w in right factors */
inline std::vector<Vec> product_span(const FinDimAlgebra &a, const std::vector<Vec> &left,
                                     const std::vector<Vec> &right)
{
    SpanBuilder sb(a.field(), a.dim());
    for (const auto &u : left)
        for (const auto &w : right)
            sb.add(a.mul(u, w));
    return sb.basis();
}

inline bool subspace_power_nilpotent(const FinDimAlgebra &a, const std::vector<Vec> &ideal)
{
    std::vector<Vec> cur = ideal;
    for (size_t step = 0; step <= a.dim() + 1; ++step) {
        if (cur.empty())
            return true;
        std::vector<Vec> next = product_span(a, cur, ideal);
        if (next.size() == cur.size())
            return false; // stabilized nonzero
        cur = std::move(next);
    }
    return cur.empty();
}

/* left ideal generated by x inside the unital algebra: span{x, b_i x} */
inline std::vector<Vec> principal_left_ideal(const FinDimAlgebra &a, const Vec &x)
{
    SpanBuilder sb(a.field(), a.dim());
    sb.add(x);
    for (size_t i = 0; i < a.dim(); ++i)
        sb.add(a.mul(a.basis_elem(i), x));
    return sb.basis();
}

inline bool left_ideal_nilpotent(const FinDimAlgebra &a, const std::vector<Vec> &ideal)
{
    std::vector<Vec> cur = ideal;
    for (size_t step = 0; step <= a.dim() + 1; ++step) {
        if (cur.empty())
            return true;
        std::vector<Vec> next = product_span(a, cur, ideal);
        if (next.size() == cur.size())
            return false;
        cur = std::move(next);
    }
    return cur.empty();
}

} // namespace raddetail

/* Jacobson radical as a subspace basis.

   Strategy: iterate the kernel of the trace form tr(L_{xy}) restricted to the
   shrinking ideal; the radical always sits inside that kernel. When the
   stabilized kernel is a nilpotent ideal it equals the radical and the answer
   is certified. In small characteristic the trace form can stay degenerate on
   the semisimple part; then, over a small finite field, fall back to scanning
   the lines of the kernel for elements whose principal left ideal is
   nilpotent - exactly the elements of the radical, and a subspace, so the
   positives span it. */
inline std::vector<Vec> radical(const FinDimAlgebra &a)
{
    const Field &k = a.field();
    std::vector<Vec> space;
    for (size_t i = 0; i < a.dim(); ++i)
        space.push_back(a.basis_elem(i));

    for (;;) {
        size_t m = space.size();
        if (m == 0)
            return {};
        Matrix gram(k, m, m);
        for (size_t j = 0; j < m; ++j)
            for (size_t i = 0; i < m; ++i)
                gram.set(j, i, a.trace_left_mult(a.mul(space[i], space[j])));
        auto coeff_kernel = gram.kernel_basis();
        if (coeff_kernel.size() == m)
            break; // no further shrinking
        std::vector<Vec> next;
        for (const auto &c : coeff_kernel) {
            Vec v = a.zero();
            for (size_t i = 0; i < m; ++i)
                if (!k.is_zero(c[i]))
                    v = a.add(v, a.scale(space[i], c[i]));
            next.push_back(std::move(v));
        }
        space = std::move(next);
    }

    if (raddetail::subspace_power_nilpotent(a, space))
        return space;

    // trace form inconclusive; only possible in small characteristic
    require(k.kind() != FieldKind::rationals,
            "radical: trace form must be conclusive in characteristic zero");
    uint64_t q = k.size();
    uint64_t lines = 1;
    for (size_t i = 0; i < space.size(); ++i) {
        lines *= q;
        require(lines <= 400000, "radical: fallback line scan out of range");
    }
    SpanBuilder rad(k, a.dim());
    // enumerate one representative per line of the kernel subspace
    std::vector<uint64_t> digits(space.size(), 0);
    auto bump = [&]() -> bool {
        for (size_t i = 0; i < digits.size(); ++i) {
            if (++digits[i] < q)
                return true;
            digits[i] = 0;
        }
        return false;
    };
    auto elem_of = [&](uint64_t d, const Field &f) -> FieldElem {
        if (f.kind() == FieldKind::prime)
            return f.from_int(static_cast<int64_t>(d));
        std::vector<int64_t> coeffs;
        uint64_t p = static_cast<uint64_t>(f.characteristic());
        for (int i = 0; i < f.ext_degree(); ++i) {
            coeffs.push_back(static_cast<int64_t>(d % p));
            d /= p;
        }
        return f.from_coeffs(coeffs);
    };
    do {
        // skip non-normalized representatives: first nonzero digit must be 1
        size_t first = digits.size();
        for (size_t i = 0; i < digits.size(); ++i)
            if (digits[i] != 0) {
                first = i;
                break;
            }
        if (first == digits.size() || digits[first] != 1)
            continue;
        Vec x = a.zero();
        for (size_t i = 0; i < space.size(); ++i)
            if (digits[i] != 0)
                x = a.add(x, a.scale(space[i], elem_of(digits[i], k)));
        if (rad.contains(x))
            continue;
        if (raddetail::left_ideal_nilpotent(a, raddetail::principal_left_ideal(a, x)))
            rad.add(x);
    } while (bump());
    return rad.basis();
}

/* Quotient algebra E/I by a two-sided ideal given as a subspace basis.
   Returns the quotient plus the projection onto quotient coordinates. */
struct QuotientAlgebra {
    FinDimAlgebra alg;
    std::vector<Vec> reps;                         // coset representatives in E
    std::function<Vec(const Vec &)> project;       // E -> quotient coords
};

inline QuotientAlgebra quotient_algebra(const FinDimAlgebra &a, const std::vector<Vec> &ideal)
{
    const Field &k = a.field();
    SpanBuilder sb(k, a.dim());
    for (const auto &v : ideal)
        sb.add(v);
    size_t ideal_dim = sb.dim();
    std::vector<Vec> reps;
    for (size_t i = 0; i < a.dim(); ++i)
        if (sb.add(a.basis_elem(i)))
            reps.push_back(a.basis_elem(i));
    require(ideal_dim + reps.size() == a.dim(), "quotient_algebra: bad complement");

    // columns: ideal basis then reps; projection keeps the rep coordinates
    std::vector<Vec> cols;
    SpanBuilder ideal_only(k, a.dim());
    for (const auto &v : ideal)
        if (ideal_only.add(v))
            cols.push_back(v);
    for (const auto &r : reps)
        cols.push_back(r);
    auto solver = std::make_shared<LinearSolver>(Matrix::from_columns(k, a.dim(), cols));
    size_t id = ideal_dim;
    auto project = [solver, id](const Vec &x) -> Vec {
        auto sol = solver->solve(x);
        require(sol.has_value(), "quotient_algebra: projection failed");
        return Vec(sol->begin() + static_cast<std::ptrdiff_t>(id), sol->end());
    };

    size_t qdim = reps.size();
    std::vector<std::vector<Vec>> table(qdim, std::vector<Vec>(qdim));
    for (size_t i = 0; i < qdim; ++i)
        for (size_t j = 0; j < qdim; ++j)
            table[i][j] = project(a.mul(reps[i], reps[j]));
    Vec unit = project(a.unit());
    QuotientAlgebra q{FinDimAlgebra::from_table(k, std::move(table), std::move(unit)), reps, project};
    return q;
}

namespace lendetail {

/* minimal polynomial of x relative to a block idempotent e acting as 1 */
inline Poly min_poly_in_block(const FinDimAlgebra &a, const Vec &e, const Vec &x)
{
    const Field &k = a.field();
    SpanBuilder sb(k, a.dim());
    std::vector<Vec> powers; // e, x, x^2, ...
    Vec cur = e;
    for (;;) {
        if (!sb.add(cur)) {
            // cur is dependent on previous powers: solve for the relation
            Matrix m = Matrix::from_columns(k, a.dim(), powers);
            auto sol = m.solve(cur);
            require(sol.has_value(), "min_poly_in_block: dependence must resolve");
            std::vector<FieldElem> coeffs;
            for (const auto &c : *sol)
                coeffs.push_back(k.neg(c));
            coeffs.push_back(k.one());
            return Poly(k, coeffs);
        }
        powers.push_back(cur);
        cur = a.mul(cur, x);
    }
}

/* factor over the base field; trial division for finite prime fields,
   roots + quadratics over Q */
inline std::vector<Poly> factor_squarefree(const Poly &mu)
{
    const Field &k = mu.field();
    if (k.kind() == FieldKind::prime) {
        std::vector<Poly> out;
        for (auto &[g, m] : factor_poly(mu)) {
            require(m == 1, "factor_squarefree: minimal polynomial must be squarefree");
            out.push_back(g);
        }
        return out;
    }
    require(k.kind() == FieldKind::rationals,
            "factor_squarefree: unsupported base field for center splitting");
    std::vector<Poly> out;
    Poly f = mu.monic();
    // strip rational roots r = p/q with p | c0, q | lead after clearing denominators
    bool found = true;
    while (f.degree() >= 1 && found) {
        found = false;
        // candidate roots from small integer search (desk scale)
        for (int64_t num = -64; num <= 64 && !found; ++num)
            for (int64_t den = 1; den <= 16 && !found; ++den) {
                FieldElem r{Rational(BigInt(num), BigInt(den))};
                if (!k.is_zero(f.eval(r)))
                    continue;
                Poly lin(k, {k.neg(r), k.one()});
                bool fresh = true;
                for (const auto &g : out)
                    if (g == lin)
                        fresh = false;
                require(fresh, "factor_squarefree: repeated factor");
                out.push_back(lin);
                f = Poly::exact_div(f, lin);
                found = true;
            }
    }
    if (f.degree() == 0)
        return out;
    require(f.degree() <= 2, "factor_squarefree: rational factorization beyond quadratics unsupported");
    if (f.degree() == 1) {
        out.push_back(f.monic());
        return out;
    }
    // quadratic: check whether the discriminant is a rational square
    FieldElem b = f.coeff(1), c0 = f.coeff(0);
    FieldElem disc = k.sub(k.mul(b, b), k.mul(k.from_int(4), c0));
    const Rational &dr = std::get<Rational>(disc.v);
    auto is_square = [](const BigInt &n, BigInt &root) {
        if (n.sign() < 0)
            return false;
        BigInt lo(0), hi = n + BigInt(1);
        while (lo < hi) {
            BigInt mid = (lo + hi) / BigInt(2);
            BigInt sq = mid * mid;
            if (sq == n) {
                root = mid;
                return true;
            }
            if (sq < n)
                lo = mid + BigInt(1);
            else
                hi = mid;
        }
        return false;
    };
    BigInt rn, rd;
    if (!dr.is_zero() && (!is_square(dr.num(), rn) || !is_square(dr.den(), rd))) {
        out.push_back(f);
        return out;
    }
    if (dr.is_zero()) {
        rn = BigInt(0);
        rd = BigInt(1);
    }
    FieldElem sq{Rational(rn, rd)};
    FieldElem half = k.inv(k.from_int(2));
    FieldElem r1 = k.mul(half, k.sub(sq, b));
    FieldElem r2 = k.mul(half, k.sub(k.neg(sq), b));
    out.push_back(Poly(k, {k.neg(r1), k.one()}));
    if (!(r1 == r2))
        out.push_back(Poly(k, {k.neg(r2), k.one()}));
    require(!(r1 == r2), "factor_squarefree: repeated quadratic root in squarefree input");
    return out;
}

inline bool poly_factors_irreducible(const Poly &mu)
{
    const Field &k = mu.field();
    if (mu.degree() == 1)
        return true;
    if (k.kind() == FieldKind::prime)
        return poly_irreducible(mu);
    // over Q: irreducible when the root/quadratic search returns it whole
    auto f = factor_squarefree(mu);
    return f.size() == 1 && f[0].degree() == mu.degree();
}

struct CenterBlock {
    Vec idempotent;
    size_t center_dim; // [K_j : k]
};

/* split the center of a (semisimple) algebra into its primitive blocks */
inline std::vector<CenterBlock> split_center(const FinDimAlgebra &s)
{
    const Field &k = s.field();
    // center: x with x b_j = b_j x for all j
    size_t d = s.dim();
    Matrix cond(k, d * d, d);
    for (size_t j = 0; j < d; ++j) {
        Matrix l = s.left_mult(s.basis_elem(j));
        Matrix r = s.right_mult(s.basis_elem(j));
        for (size_t row = 0; row < d; ++row)
            for (size_t col = 0; col < d; ++col)
                cond.set(j * d + row, col, k.sub(r.at(row, col), l.at(row, col)));
    }
    std::vector<Vec> center = cond.kernel_basis();

    struct Work {
        Vec e;
        std::vector<Vec> zbasis;
    };
    std::vector<Work> queue{{s.unit(), center}};
    std::vector<CenterBlock> blocks;
    Rng rng(0x5eedC0de);
    while (!queue.empty()) {
        Work w = std::move(queue.back());
        queue.pop_back();
        if (w.zbasis.size() == 1) {
            blocks.push_back({w.e, 1});
            continue;
        }
        bool done = false;
        for (int attempt = 0; attempt < 64 && !done; ++attempt) {
            Vec z;
            if (attempt < static_cast<int>(w.zbasis.size()))
                z = w.zbasis[static_cast<size_t>(attempt)];
            else {
                z = s.zero();
                for (const auto &b : w.zbasis)
                    z = s.add(z, s.scale(b, rng.sample(k)));
            }
            Poly mu = min_poly_in_block(s, w.e, z);
            if (mu.degree() < 1)
                continue;
            // etale centers have squarefree (separable) minimal polynomials
            require(Poly::gcd(mu, mu.derivative()).is_one(),
                    "split_center: minimal polynomial not squarefree");
            if (mu.degree() == static_cast<int>(w.zbasis.size()) && poly_factors_irreducible(mu)) {
                blocks.push_back({w.e, w.zbasis.size()});
                done = true;
                break;
            }
            auto factors = factor_squarefree(mu);
            if (factors.size() < 2)
                continue;
            for (const auto &mi : factors) {
                Poly h = Poly::exact_div(mu, mi);
                // g = h^{-1} mod mi
                Poly r0 = mi, r1 = h % mi;
                Poly t0(k), t1 = Poly::constant(k, k.one());
                while (!r1.is_zero()) {
                    auto [q, r] = Poly::divmod(r0, r1);
                    Poly t2 = t0 - q * t1;
                    r0 = std::move(r1);
                    r1 = std::move(r);
                    t0 = std::move(t1);
                    t1 = std::move(t2);
                }
                require(r0.degree() == 0, "split_center: factor not coprime");
                Poly g = t0.scale(k.inv(r0.coeff(0)));
                Poly idem_poly = (h * g) % mu;
                // evaluate at z with constant term against the block unit
                Vec ei = s.zero();
                for (int t = idem_poly.degree(); t >= 0; --t) {
                    ei = s.mul(ei, z);
                    ei = s.add(ei, s.scale(w.e, idem_poly.coeff(static_cast<size_t>(t))));
                }
                require(ei == s.mul(ei, ei), "split_center: idempotent lift failed");
                require(!s.is_zero_vec(ei), "split_center: vanishing block idempotent");
                SpanBuilder zb(k, s.dim());
                std::vector<Vec> sub;
                for (const auto &b : w.zbasis)
                    if (zb.add(s.mul(ei, b)))
                        sub.push_back(s.mul(ei, b));
                queue.push_back({ei, sub});
            }
            done = true;
        }
        require(done, "split_center: could not split a center block");
    }
    return blocks;
}

} // namespace lendetail

/* Length of a semisimple module over a semisimple algebra, by splitting the
   center and reading block multiplicities. Over finite fields every simple
   block is a matrix ring over its center (no finite division rings), so the
   block size is the square root of the block dimension over the center. */
inline size_t semisimple_length(const FinDimAlgebra &s, const AlgebraModule &n)
{
    if (n.dim() == 0)
        return 0;
    const Field &k = s.field();
    auto blocks = lendetail::split_center(s);
    size_t total = 0;
    for (const auto &blk : blocks) {
        // block algebra dimension over k
        SpanBuilder bb(k, s.dim());
        for (size_t i = 0; i < s.dim(); ++i)
            bb.add(s.mul(blk.idempotent, s.basis_elem(i)));
        size_t dj = bb.dim();
        require(dj % blk.center_dim == 0, "semisimple_length: center does not divide block");
        size_t over_center = dj / blk.center_dim;
        size_t nj = 0;
        while ((nj + 1) * (nj + 1) <= over_center)
            ++nj;
        if (nj * nj != over_center) {
            require(k.kind() != FieldKind::rationals || over_center == 1,
                    "semisimple_length: non-split simple block");
            throw error("semisimple_length: block dimension is not a square");
        }
        // isotypic part of the module
        Matrix e_act = n.act(s, blk.idempotent);
        size_t iso_dim = e_act.rank(); // e is idempotent, rank = dim of image
        require(iso_dim % (blk.center_dim * nj) == 0,
                "semisimple_length: block does not divide its isotypic part");
        total += iso_dim / (blk.center_dim * nj);
    }
    return total;
}

/* Composition length of a module: peel radical layers, count simples in each
   semisimple layer. */
inline size_t module_length(const FinDimAlgebra &a, const AlgebraModule &m)
{
    if (m.dim() == 0)
        return 0;
    const Field &k = a.field();
    std::vector<Vec> rad = radical(a);
    QuotientAlgebra quo = quotient_algebra(a, rad);

    // radical series of the module
    std::vector<std::vector<Vec>> series; // bases of M > rad M > rad^2 M > ...
    std::vector<Vec> full;
    for (size_t i = 0; i < m.dim(); ++i) {
        Vec e(m.dim(), k.zero());
        e[i] = k.one();
        full.push_back(std::move(e));
    }
    series.push_back(full);
    for (;;) {
        const auto &cur = series.back();
        if (cur.empty())
            break;
        SpanBuilder next(k, m.dim());
        for (const auto &r : rad) {
            Matrix act = m.act(a, r);
            for (const auto &v : cur)
                next.add(act.apply(v));
        }
        series.push_back(next.basis());
        if (next.dim() == 0)
            break;
        require(series.size() <= m.dim() + 2, "module_length: radical series does not terminate");
    }

    size_t total = 0;
    for (size_t layer = 0; layer + 1 < series.size(); ++layer) {
        const auto &big = series[layer];
        const auto &small = series[layer + 1];
        if (big.size() == small.size())
            continue;
        // quotient coordinates: complement of `small` inside `big`
        SpanBuilder sb(k, m.dim());
        std::vector<Vec> small_basis;
        for (const auto &v : small)
            if (sb.add(v))
                small_basis.push_back(v);
        std::vector<Vec> reps;
        for (const auto &v : big)
            if (sb.add(v))
                reps.push_back(v);
        std::vector<Vec> cols = small_basis;
        cols.insert(cols.end(), reps.begin(), reps.end());
        LinearSolver proj(Matrix::from_columns(k, m.dim(), cols));
        auto to_quot = [&](const Vec &x) -> Vec {
            auto sol = proj.solve(x);
            require(sol.has_value(), "module_length: quotient projection failed");
            return Vec(sol->begin() + static_cast<std::ptrdiff_t>(small_basis.size()), sol->end());
        };
        // layer as a module over the quotient algebra
        std::vector<Matrix> action;
        for (size_t i = 0; i < quo.alg.dim(); ++i) {
            Matrix act = m.act(a, quo.reps[i]);
            Matrix qact(k, reps.size(), reps.size());
            for (size_t j = 0; j < reps.size(); ++j) {
                Vec img = to_quot(act.apply(reps[j]));
                for (size_t r = 0; r < reps.size(); ++r)
                    qact.set(r, j, img[r]);
            }
            action.push_back(std::move(qact));
        }
        AlgebraModule layer_mod(quo.alg, reps.size(), std::move(action));
        total += semisimple_length(quo.alg, layer_mod);
    }
    return total;
}

} // namespace cohlen
