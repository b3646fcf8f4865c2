#pragma once

#include <memory>

#include "cohlen/complex.hpp"
#include "cohlen/findim_algebra.hpp"
#include "cohlen/matrix.hpp"
#include "cohlen/poly_matrix.hpp"

namespace cohlen {

/* Bounded complex of base-field vector spaces, the value of hom_complex. */
struct KComplex {
    int min_deg = 0;
    std::vector<size_t> dims;   // dims[i] = dimension at degree min_deg + i
    std::vector<Matrix> diffs;  // diffs[i]: degree min_deg+i -> min_deg+i+1

    size_t dim(int degree) const
    {
        if (degree < min_deg || degree >= min_deg + static_cast<int>(dims.size()))
            return 0;
        return dims[static_cast<size_t>(degree - min_deg)];
    }

    size_t diff_rank(int degree) const
    {
        int i = degree - min_deg;
        if (i < 0 || i + 1 >= static_cast<int>(dims.size()))
            return 0;
        return diffs[static_cast<size_t>(i)].rank();
    }

    size_t cohomology_dim(int degree) const
    {
        if (dim(degree) == 0)
            return 0;
        return dim(degree) - diff_rank(degree) - diff_rank(degree - 1);
    }
};

namespace homdetail {

/* flat coordinates of (+)_i Hom_A(X^i, Y^{i+n}): per block i, entries are
   laid out (row, col, algebra basis index) */
struct HomLayout {
    struct Block {
        int i;
        size_t rows, cols, offset;
    };
    std::vector<Block> blocks;
    size_t total = 0;

    const Block *block_at(int i) const
    {
        for (const auto &b : blocks)
            if (b.i == i)
                return &b;
        return nullptr;
    }
};

inline HomLayout layout(const PerfectComplex &x, const PerfectComplex &y, int n, size_t alg_dim)
{
    HomLayout l;
    for (int i = x.support_min(); i <= x.support_max(); ++i) {
        size_t rows = y.rank(i + n), cols = x.rank(i);
        if (rows == 0 || cols == 0)
            continue;
        l.blocks.push_back({i, rows, cols, l.total});
        l.total += rows * cols * alg_dim;
    }
    return l;
}

inline size_t flat_index(const HomLayout::Block &b, size_t r, size_t c, size_t t, size_t alg_dim)
{
    return b.offset + (r * b.cols + c) * alg_dim + t;
}

} // namespace homdetail

/* The hom complex of two perfect complexes over a finite-dimensional
   coefficient algebra, flattened to base-field matrices. Sign convention:
   (df)^i = d_Y f^i - (-1)^n f^{i+1} d_X. */
inline KComplex hom_complex(const PerfectComplex &x, const PerfectComplex &y)
{
    require(x.algebra() == y.algebra(), "hom_complex: algebra mismatch");
    const CoeffAlgebra &alg = x.algebra();
    require(alg.finite_dimensional(), "hom_complex: coefficient algebra must be finite dimensional");
    const Field &k = alg.base_field();
    size_t da = static_cast<size_t>(alg.k_dim());

    KComplex out;
    if (x.is_zero() || y.is_zero())
        return out;
    int n_lo = y.support_min() - x.support_max();
    int n_hi = y.support_max() - x.support_min();
    out.min_deg = n_lo;
    std::vector<homdetail::HomLayout> layouts;
    for (int n = n_lo; n <= n_hi; ++n) {
        layouts.push_back(homdetail::layout(x, y, n, da));
        out.dims.push_back(layouts.back().total);
    }
    // one extra layout above the window keeps the loop below uniform
    layouts.push_back(homdetail::layout(x, y, n_hi + 1, da));

    for (int n = n_lo; n < n_hi; ++n) {
        const auto &src = layouts[static_cast<size_t>(n - n_lo)];
        const auto &dst = layouts[static_cast<size_t>(n + 1 - n_lo)];
        Matrix m(k, dst.total, src.total);
        bool negate_second = (n % 2 == 0); // -(-1)^n

        for (const auto &sb : src.blocks) {
            int i = sb.i;
            // d_Y f^i : lands in the block of the same i
            if (const auto *tb = dst.block_at(i)) {
                AlgMatrix dy = y.diff(i + n);
                for (size_t rp = 0; rp < tb->rows; ++rp)
                    for (size_t r = 0; r < sb.rows; ++r) {
                        if (alg.is_zero(dy.at(rp, r)))
                            continue;
                        Matrix act = alg.mult_action(dy.at(rp, r));
                        for (size_t c = 0; c < sb.cols; ++c)
                            for (size_t t = 0; t < da; ++t)
                                for (size_t b = 0; b < da; ++b) {
                                    if (k.is_zero(act.at(t, b)))
                                        continue;
                                    size_t row = homdetail::flat_index(*tb, rp, c, t, da);
                                    size_t col = homdetail::flat_index(sb, r, c, b, da);
                                    m.set(row, col, k.add(m.at(row, col), act.at(t, b)));
                                }
                    }
            }
            // -(-1)^n f^i d_X^{i-1} : lands in the block of i-1
            if (const auto *tb = dst.block_at(i - 1)) {
                AlgMatrix dx = x.diff(i - 1);
                for (size_t cp = 0; cp < tb->cols; ++cp)
                    for (size_t c = 0; c < sb.cols; ++c) {
                        if (alg.is_zero(dx.at(c, cp)))
                            continue;
                        Matrix act = alg.mult_action(dx.at(c, cp));
                        for (size_t r = 0; r < sb.rows; ++r)
                            for (size_t t = 0; t < da; ++t)
                                for (size_t b = 0; b < da; ++b) {
                                    if (k.is_zero(act.at(t, b)))
                                        continue;
                                    size_t row = homdetail::flat_index(*tb, r, cp, t, da);
                                    size_t col = homdetail::flat_index(sb, r, c, b, da);
                                    FieldElem v = act.at(t, b);
                                    if (negate_second)
                                        v = k.neg(v);
                                    m.set(row, col, k.add(m.at(row, col), v));
                                }
                    }
            }
        }
        out.diffs.push_back(std::move(m));
    }
    return out;
}

/* dim_k of Hom(X, Sigma^n Y) in the homotopy category */
inline size_t derived_hom_dim(const PerfectComplex &x, const PerfectComplex &y, int n)
{
    KComplex h = hom_complex(x, y);
    return h.cohomology_dim(n);
}

/* ---- degree-zero hom classes with explicit representatives ------------ */

/* Basis of H^0 of the hom complex, kept as flat coordinate vectors together
   with a solver that reduces arbitrary chain maps to coordinates. */
class Hom0 {
  public:
    Hom0(PerfectComplex x, PerfectComplex y) : x_(std::move(x)), y_(std::move(y))
    {
        const CoeffAlgebra &alg = x_.algebra();
        require(alg.finite_dimensional(), "Hom0: needs a finite dimensional algebra");
        const Field &k = alg.base_field();
        da_ = static_cast<size_t>(alg.k_dim());
        layout0_ = homdetail::layout(x_, y_, 0, da_);

        // cycles: kernel of d^0; boundaries: image of d^{-1}
        KComplex h = hom_complex(x_, y_);
        size_t t0 = layout0_.total;
        std::vector<Vec> cycles;
        if (t0 > 0) {
            int i0 = -h.min_deg;
            if (i0 >= 0 && i0 < static_cast<int>(h.diffs.size()))
                cycles = h.diffs[static_cast<size_t>(i0)].kernel_basis();
            else {
                for (size_t j = 0; j < t0; ++j) {
                    Vec e(t0, k.zero());
                    e[j] = k.one();
                    cycles.push_back(std::move(e));
                }
            }
            int im1 = -1 - h.min_deg;
            SpanBuilder bd(k, t0);
            if (im1 >= 0 && im1 < static_cast<int>(h.diffs.size())) {
                const Matrix &dm1 = h.diffs[static_cast<size_t>(im1)];
                for (size_t j = 0; j < dm1.cols(); ++j)
                    if (bd.add(dm1.column(j)))
                        boundaries_.push_back(dm1.column(j));
            }
            SpanBuilder span(k, t0);
            for (const auto &b : boundaries_)
                span.add(b);
            for (const auto &c : cycles)
                if (span.add(c))
                    reps_.push_back(c);
            std::vector<Vec> cols = reps_;
            cols.insert(cols.end(), boundaries_.begin(), boundaries_.end());
            reducer_ = std::make_shared<LinearSolver>(Matrix::from_columns(k, t0, cols));
        }
    }

    const PerfectComplex &source() const { return x_; }
    const PerfectComplex &target() const { return y_; }
    size_t dim() const { return reps_.size(); }

    /* flat coordinates of the degree-0 components of a chain map */
    Vec flatten(const ChainMap &f) const
    {
        const CoeffAlgebra &alg = x_.algebra();
        const Field &k = alg.base_field();
        Vec v(layout0_.total, k.zero());
        for (const auto &b : layout0_.blocks) {
            AlgMatrix comp = f.component(b.i);
            for (size_t r = 0; r < b.rows; ++r)
                for (size_t c = 0; c < b.cols; ++c)
                    for (size_t t = 0; t < da_; ++t)
                        v[homdetail::flat_index(b, r, c, t, da_)] =
                            alg.basis_coeff(comp.at(r, c), static_cast<int>(t));
        }
        return v;
    }

    ChainMap unflatten(const Vec &v) const
    {
        const CoeffAlgebra &alg = x_.algebra();
        std::map<int, AlgMatrix> comps;
        for (const auto &b : layout0_.blocks) {
            AlgMatrix m(alg, b.rows, b.cols);
            for (size_t r = 0; r < b.rows; ++r)
                for (size_t c = 0; c < b.cols; ++c) {
                    std::vector<FieldElem> coeffs;
                    for (size_t t = 0; t < da_; ++t)
                        coeffs.push_back(v[homdetail::flat_index(b, r, c, t, da_)]);
                    m.set(r, c, alg.from_basis_coeffs(coeffs));
                }
            comps.emplace(b.i, std::move(m));
        }
        return ChainMap(x_, y_, std::move(comps));
    }

    const Vec &rep(size_t i) const { return reps_[i]; }
    ChainMap rep_map(size_t i) const { return unflatten(reps_[i]); }

    /* coordinates of a cycle's class in the chosen basis */
    Vec class_coords(const Vec &flat_cycle) const
    {
        const Field &k = x_.algebra().base_field();
        if (layout0_.total == 0 || reps_.empty())
            return Vec(reps_.size(), k.zero());
        auto sol = reducer_->solve(flat_cycle);
        require(sol.has_value(), "Hom0: vector is not a cycle modulo boundaries");
        return Vec(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(reps_.size()));
    }

    Vec class_of(const ChainMap &f) const { return class_coords(flatten(f)); }

    /* compose two chain maps degreewise */
    static ChainMap compose(const ChainMap &second, const ChainMap &first)
    {
        return second.compose_after(first);
    }

  private:
    PerfectComplex x_, y_;
    size_t da_ = 0;
    homdetail::HomLayout layout0_;
    std::vector<Vec> reps_;
    std::vector<Vec> boundaries_;
    std::shared_ptr<LinearSolver> reducer_;
};

/* Endomorphism algebra of X in the homotopy category, with the structure to
   turn any Hom(C, X) into a module over it. */
struct EndAlgebra {
    PerfectComplex x;
    std::shared_ptr<Hom0> classes; // Hom0(x, x)
    FinDimAlgebra alg;
    std::vector<Vec> radical_basis;
    bool residue_dim_one; // dim(End/rad) == 1: lengths equal k-dimensions

    static EndAlgebra build(const PerfectComplex &x)
    {
        auto h = std::make_shared<Hom0>(x, x);
        const Field &k = x.algebra().base_field();
        size_t n = h->dim();
        if (n == 0) {
            // zero or contractible complex: the one-dimensional algebra
            // keeps the interfaces total
            FinDimAlgebra triv =
                FinDimAlgebra::from_table(k, {{Vec{k.one()}}}, Vec{k.one()});
            return EndAlgebra{x, h, triv, {}, true};
        }
        std::vector<ChainMap> maps;
        maps.reserve(n);
        for (size_t i = 0; i < n; ++i)
            maps.push_back(h->rep_map(i));
        std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                table[i][j] = h->class_of(maps[i].compose_after(maps[j]));
        Vec unit = h->class_of(ChainMap::identity(x));
        FinDimAlgebra alg = FinDimAlgebra::from_table(k, std::move(table), std::move(unit));
        std::vector<Vec> rad = radical(alg);
        bool res1 = (alg.dim() - rad.size()) == 1;
        return EndAlgebra{x, h, std::move(alg), std::move(rad), res1};
    }
};

/* Hom(C, X) in the homotopy category as a module over End(X):
   the action is post-composition. */
inline AlgebraModule hom0_module(const PerfectComplex &c, const EndAlgebra &e)
{
    const Field &k = c.algebra().base_field();
    if (e.classes->dim() == 0) {
        // contractible or zero target: every hom class vanishes
        std::vector<Matrix> action(e.alg.dim(), Matrix(k, 0, 0));
        return AlgebraModule(e.alg, 0, std::move(action));
    }
    Hom0 h(c, e.x);
    size_t m = h.dim();
    std::vector<ChainMap> psi;
    for (size_t j = 0; j < m; ++j)
        psi.push_back(h.rep_map(j));
    std::vector<Matrix> action;
    for (size_t i = 0; i < e.alg.dim(); ++i) {
        ChainMap phi = e.classes->rep_map(i);
        Matrix act(k, m, m);
        for (size_t j = 0; j < m; ++j) {
            Vec img = h.class_of(phi.compose_after(psi[j]));
            for (size_t r = 0; r < m; ++r)
                act.set(r, j, img[r]);
        }
        action.push_back(std::move(act));
    }
    return AlgebraModule(e.alg, m, std::move(action));
}

/* ---- homs into module stalks ------------------------------------------ */

/* Finite-dimensional module over the coefficient algebra, given by the
   action of the generator (eps, or x). */
struct StalkModule {
    CoeffAlgebra alg;
    size_t dim;
    Matrix gen_action; // action of eps resp. x
    int degree = 0;    // placement of the stalk

    static StalkModule simple_over_dual(const CoeffAlgebra &a, int degree)
    {
        require(a.kind() == AlgKind::dual_numbers, "simple_over_dual: dual numbers only");
        return {a, 1, Matrix(a.base_field(), 1, 1), degree};
    }

    /* the action of a general algebra element */
    Matrix act(const AlgElem &e) const
    {
        const Field &k = alg.base_field();
        if (alg.kind() == AlgKind::dual_numbers) {
            const DualElem &d = std::get<DualElem>(e.v);
            Matrix m = Matrix::identity(k, dim).scale(d.a);
            return m + gen_action.scale(d.b);
        }
        const Poly &p = std::get<Poly>(e.v);
        Matrix m(k, dim, dim);
        Matrix pw = Matrix::identity(k, dim);
        for (int i = 0; i <= p.degree(); ++i) {
            if (!k.is_zero(p.coeff(static_cast<size_t>(i))))
                m = m + pw.scale(p.coeff(static_cast<size_t>(i)));
            if (i < p.degree())
                pw = pw * gen_action;
        }
        return m;
    }
};

/* Hom_A(X, M) for a stalk module M placed in its degree; a complex of
   base-field spaces with term Hom_A(X^{deg-n}, M) in hom-degree n. */
inline KComplex hom_to_stalk(const PerfectComplex &x, const StalkModule &m)
{
    require(x.algebra() == m.alg, "hom_to_stalk: algebra mismatch");
    const Field &k = m.alg.base_field();
    KComplex out;
    if (x.is_zero() || m.dim == 0)
        return out;
    int n_lo = m.degree - x.support_max();
    int n_hi = m.degree - x.support_min();
    out.min_deg = n_lo;
    for (int n = n_lo; n <= n_hi; ++n)
        out.dims.push_back(x.rank(m.degree - n) * m.dim);
    for (int n = n_lo; n < n_hi; ++n) {
        int i = m.degree - n - 1; // target block: maps X^i -> M
        size_t rows = x.rank(i) * m.dim;
        size_t cols = x.rank(i + 1) * m.dim;
        Matrix d(k, rows, cols);
        AlgMatrix dx = x.diff(i);
        bool negate = (n % 2 == 0); // -(-1)^n
        for (size_t c = 0; c < x.rank(i); ++c)
            for (size_t cp = 0; cp < x.rank(i + 1); ++cp) {
                if (m.alg.is_zero(dx.at(cp, c)))
                    continue;
                Matrix act = m.act(dx.at(cp, c));
                for (size_t t = 0; t < m.dim; ++t)
                    for (size_t s = 0; s < m.dim; ++s) {
                        if (k.is_zero(act.at(t, s)))
                            continue;
                        FieldElem v = act.at(t, s);
                        if (negate)
                            v = k.neg(v);
                        size_t row = c * m.dim + t;
                        size_t col = cp * m.dim + s;
                        d.set(row, col, k.add(d.at(row, col), v));
                    }
            }
        out.diffs.push_back(std::move(d));
    }
    return out;
}

/* ---- residue-field evaluations over a polynomial ring ------------------ */

/* dim over the residue field of H^0(Hom_A(X, k(p))), for complexes over
   k[x]; the zero ideal goes through fraction-free ranks. */
inline size_t residue_hom_dim(const PerfectComplex &x, const PrimeDatum &p, int hom_degree)
{
    require(x.algebra().kind() == AlgKind::poly_ring, "residue_hom_dim: polynomial ring only");
    const Field &k = x.algebra().base_field();
    if (x.is_zero())
        return 0;

    auto poly_of = [&](const AlgElem &e) -> const Poly & { return std::get<Poly>(e.v); };

    if (p.kind == PrimeDatum::Kind::zero_ideal) {
        // fraction field: generically evaluated ranks via Bareiss
        auto rank_of_diff = [&](int d) -> size_t {
            if (x.rank(d) == 0 || x.rank(d + 1) == 0)
                return 0;
            PolyMatrix pm(k, x.rank(d + 1), x.rank(d));
            AlgMatrix dm = x.diff(d);
            for (size_t r = 0; r < dm.rows(); ++r)
                for (size_t c = 0; c < dm.cols(); ++c)
                    pm.set(r, c, poly_of(dm.at(r, c)));
            return pm.rank_over_fraction_field();
        };
        int i = -hom_degree; // term: Hom(X^{-n}, Frac)
        size_t dim_term = x.rank(i);
        if (dim_term == 0)
            return 0;
        return dim_term - rank_of_diff(i - 1) - rank_of_diff(i);
    }

    require(p.kind == PrimeDatum::Kind::poly_irreducible, "residue_hom_dim: bad prime");
    ResidueField rf = residue_field(x.algebra(), p);
    const Field &target = rf.field;
    // x goes to the residue class of x
    FieldElem point = target.kind() == FieldKind::extension
                          ? target.generator()
                          : target.neg(p.f.coeff(0)); // monic linear: root is -c0
    auto embed = [&](const FieldElem &c) -> FieldElem {
        if (target == k)
            return c;
        return target.from_int(std::get<int64_t>(c.v));
    };
    auto rank_of_diff = [&](int d) -> size_t {
        if (x.rank(d) == 0 || x.rank(d + 1) == 0)
            return 0;
        Matrix m(target, x.rank(d + 1), x.rank(d));
        AlgMatrix dm = x.diff(d);
        for (size_t r = 0; r < dm.rows(); ++r)
            for (size_t c = 0; c < dm.cols(); ++c)
                m.set(r, c, poly_of(dm.at(r, c)).eval_mapped(target, point, embed));
        return m.rank();
    };
    int i = -hom_degree;
    size_t dim_term = x.rank(i);
    if (dim_term == 0)
        return 0;
    return dim_term - rank_of_diff(i - 1) - rank_of_diff(i);
}

/* random degree-zero chain map, drawn from the cycle space */
inline ChainMap random_chain_map(const PerfectComplex &x, const PerfectComplex &y, Rng &rng)
{
    Hom0 h(x, y);
    const Field &k = x.algebra().base_field();
    KComplex hc = hom_complex(x, y);
    int i0 = -hc.min_deg;
    std::vector<Vec> cycles;
    size_t t0 = hc.dim(0);
    if (t0 == 0)
        return ChainMap::zero(x, y);
    if (i0 >= 0 && i0 < static_cast<int>(hc.diffs.size()))
        cycles = hc.diffs[static_cast<size_t>(i0)].kernel_basis();
    else
        for (size_t j = 0; j < t0; ++j) {
            Vec e(t0, k.zero());
            e[j] = k.one();
            cycles.push_back(std::move(e));
        }
    Vec v(t0, k.zero());
    for (const auto &c : cycles) {
        FieldElem s = rng.sample(k);
        if (k.is_zero(s))
            continue;
        for (size_t j = 0; j < t0; ++j)
            v[j] = k.add(v[j], k.mul(c[j], s));
    }
    return h.unflatten(v);
}

} // namespace cohlen
