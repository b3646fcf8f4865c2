#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <variant>

#include "cohlen/ar.hpp"
#include "cohlen/hom_complex.hpp"

namespace cohlen {

/* ---- irreducible labels ------------------------------------------------ */

/* the class of Hom(-, X_{n,r}) before the shift quotient */
struct ObjectBarLabel {
    int n, r;
    bool operator==(const ObjectBarLabel &o) const { return n == o.n && r == o.r; }
    bool operator<(const ObjectBarLabel &o) const { return std::tie(n, r) < std::tie(o.n, o.r); }
};

/* the class of the simple stalk k placed in a fixed degree */
struct SimpleStalkLabel {
    int degree;
    bool operator==(const SimpleStalkLabel &o) const { return degree == o.degree; }
    bool operator<(const SimpleStalkLabel &o) const { return degree < o.degree; }
};

/* residue-field class over a commutative coefficient ring */
struct ResidueLabel {
    PrimeDatum prime;
    int shift;
    bool operator==(const ResidueLabel &o) const { return prime == o.prime && shift == o.shift; }
    bool operator<(const ResidueLabel &o) const
    {
        if (shift != o.shift)
            return shift < o.shift;
        return prime.to_string() < o.prime.to_string();
    }
};

using IrreducibleLabel = std::variant<ObjectBarLabel, SimpleStalkLabel, ResidueLabel>;

inline std::string label_to_string(const IrreducibleLabel &l)
{
    if (const auto *b = std::get_if<ObjectBarLabel>(&l))
        return "X(" + std::to_string(b->n) + "," + std::to_string(b->r) + ")";
    if (const auto *s = std::get_if<SimpleStalkLabel>(&l))
        return "k@" + std::to_string(s->degree);
    const auto &r = std::get<ResidueLabel>(l);
    return "k" + r.prime.to_string() + "@" + std::to_string(r.shift);
}

inline bool label_less(const IrreducibleLabel &a, const IrreducibleLabel &b)
{
    if (a.index() != b.index())
        return a.index() < b.index();
    if (const auto *x = std::get_if<ObjectBarLabel>(&a))
        return *x < std::get<ObjectBarLabel>(b);
    if (const auto *x = std::get_if<SimpleStalkLabel>(&a))
        return *x < std::get<SimpleStalkLabel>(b);
    return std::get<ResidueLabel>(a) < std::get<ResidueLabel>(b);
}

struct LabelLess {
    bool operator()(const IrreducibleLabel &a, const IrreducibleLabel &b) const
    {
        return label_less(a, b);
    }
};

namespace chidetail {

inline std::string algebra_key(const CoeffAlgebra &a)
{
    std::string s = std::to_string(static_cast<int>(a.kind())) + ":" +
                    std::to_string(static_cast<int>(a.base_field().kind())) + ":" +
                    std::to_string(a.base_field().characteristic());
    if (a.base_field().kind() == FieldKind::extension)
        for (int64_t c : a.base_field().ext_modulus())
            s += "," + std::to_string(c);
    if (a.kind() == AlgKind::poly_quotient)
        s += "/" + a.modulus().to_string();
    return s;
}

/* canonical structural key used by evaluation caches */
inline std::string complex_key(const PerfectComplex &x)
{
    std::ostringstream os;
    os << x.support_min() << "|";
    const CoeffAlgebra &alg = x.algebra();
    for (int d = x.support_min(); d <= x.support_max(); ++d)
        os << x.rank(d) << ",";
    os << "|";
    for (int d = x.support_min(); d < x.support_max(); ++d) {
        AlgMatrix m = x.diff(d);
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t c = 0; c < m.cols(); ++c)
                os << alg.to_string(m.at(r, c)) << ";";
        os << "|";
    }
    return os.str();
}

/* endomorphisms of a stalk module: the commutant of the generator action */
struct StalkEnd {
    FinDimAlgebra alg;
    std::vector<Matrix> reps; // matrix form of the basis
    bool residue_dim_one;
};

inline StalkEnd stalk_end(const StalkModule &m)
{
    const Field &k = m.alg.base_field();
    size_t d = m.dim;
    // solve phi N = N phi entrywise
    Matrix cond(k, d * d, d * d);
    for (size_t r = 0; r < d; ++r)
        for (size_t c = 0; c < d; ++c)
            for (size_t t = 0; t < d; ++t) {
                // (phi N - N phi)[r][c] involves phi[r][t] N[t][c] - N[r][t] phi[t][c]
                size_t row = r * d + c;
                cond.set(row, r * d + t, k.add(cond.at(row, r * d + t), m.gen_action.at(t, c)));
                cond.set(row, t * d + c, k.sub(cond.at(row, t * d + c), m.gen_action.at(r, t)));
            }
    auto basis = cond.kernel_basis();
    std::vector<Matrix> mats;
    for (const auto &v : basis) {
        Matrix phi(k, d, d);
        for (size_t r = 0; r < d; ++r)
            for (size_t c = 0; c < d; ++c)
                phi.set(r, c, v[r * d + c]);
        mats.push_back(std::move(phi));
    }
    // structure constants by expressing products in the basis
    std::vector<Vec> cols;
    for (const auto &v : basis)
        cols.push_back(v);
    LinearSolver solver(Matrix::from_columns(k, d * d, cols));
    auto coords_of = [&](const Matrix &phi) -> Vec {
        Vec flat(d * d, k.zero());
        for (size_t r = 0; r < d; ++r)
            for (size_t c = 0; c < d; ++c)
                flat[r * d + c] = phi.at(r, c);
        auto sol = solver.solve(flat);
        require(sol.has_value(), "stalk_end: product left the commutant");
        return *sol;
    };
    size_t n = mats.size();
    std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            table[i][j] = coords_of(mats[i] * mats[j]);
    Vec unit = coords_of(Matrix::identity(k, d));
    FinDimAlgebra alg = FinDimAlgebra::from_table(k, std::move(table), std::move(unit));
    size_t radd = radical(alg).size();
    bool res1 = alg.dim() - radd == 1;
    return StalkEnd{std::move(alg), std::move(mats), res1};
}

} // namespace chidetail

/* ---- cohomological functions ------------------------------------------- */

class CohFunction;
using CohFunctionPtr = std::shared_ptr<const CohFunction>;

/* A cohomological function as a value: object-backed, module-backed,
   residue-backed, or a finite nonnegative combination of irreducibles.
   Evaluations are cached; the cache is mutex-guarded. */
class CohFunction {
  public:
    static CohFunction of_complex(const PerfectComplex &x)
    {
        CohFunction f(x.algebra());
        ObjectBacked ob{minimal_model(x), nullptr};
        ob.end = std::make_shared<EndAlgebra>(EndAlgebra::build(ob.x_min));
        f.backing_ = std::move(ob);
        return f;
    }

    static CohFunction of_stalk_module(const StalkModule &m)
    {
        CohFunction f(m.alg);
        StalkBacked sb{m, std::make_shared<chidetail::StalkEnd>(chidetail::stalk_end(m))};
        f.backing_ = std::move(sb);
        return f;
    }

    static CohFunction of_residue(const CoeffAlgebra &alg, const PrimeDatum &p, int shift = 0)
    {
        require(alg.kind() == AlgKind::poly_ring, "of_residue: polynomial ring only");
        if (p.kind == PrimeDatum::Kind::poly_irreducible)
            residue_field(alg, p); // validates irreducibility, rejects with witness
        CohFunction f(alg);
        f.backing_ = ResidueBacked{p, shift};
        return f;
    }

    static CohFunction combo(const CoeffAlgebra &alg,
                             const std::map<IrreducibleLabel, size_t, LabelLess> &terms)
    {
        CohFunction f(alg);
        Combo c;
        for (const auto &[label, mult] : terms) {
            if (mult == 0)
                continue;
            c.terms.emplace_back(label, mult);
            c.components.push_back(for_label_shared(alg, label));
        }
        f.backing_ = std::move(c);
        return f;
    }

    static CohFunction for_label(const CoeffAlgebra &alg, const IrreducibleLabel &label)
    {
        if (const auto *b = std::get_if<ObjectBarLabel>(&label))
            return of_complex(PerfectComplex::bar(alg, b->n, b->r));
        if (const auto *s = std::get_if<SimpleStalkLabel>(&label))
            return of_stalk_module(StalkModule::simple_over_dual(alg, s->degree));
        const auto &r = std::get<ResidueLabel>(label);
        return of_residue(alg, r.prime, r.shift);
    }

    /* label evaluators are shared process-wide so their caches accumulate */
    static CohFunctionPtr for_label_shared(const CoeffAlgebra &alg, const IrreducibleLabel &label)
    {
        static std::mutex mu;
        static std::map<std::string, CohFunctionPtr> registry;
        std::string key = chidetail::algebra_key(alg) + "#" + label_to_string(label);
        std::lock_guard<std::mutex> lock(mu);
        auto it = registry.find(key);
        if (it != registry.end())
            return it->second;
        auto ptr = std::make_shared<const CohFunction>(for_label(alg, label));
        registry.emplace(std::move(key), ptr);
        return ptr;
    }

    const CoeffAlgebra &algebra() const { return alg_; }

    size_t eval(const PerfectComplex &c) const
    {
        require(c.algebra() == alg_, "CohFunction: incompatible coefficient algebra");
        if (c.is_zero())
            return 0;
        std::string key = chidetail::complex_key(c);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = cache_.find(key);
            if (it != cache_.end())
                return it->second;
        }
        size_t value = eval_uncached(c);
        std::lock_guard<std::mutex> lock(mu_);
        cache_.emplace(std::move(key), value);
        return value;
    }

    size_t eval_shifted(const PerfectComplex &c, int shift) const { return eval(c.shift(shift)); }

    /* dimension of the underlying endomorphism residue; 1 means the fast
       dim_k path applies and has been verified */
    bool residue_dim_one() const
    {
        if (const auto *ob = std::get_if<ObjectBacked>(&backing_))
            return ob->end->residue_dim_one;
        if (const auto *sb = std::get_if<StalkBacked>(&backing_))
            return sb->end->residue_dim_one;
        return true;
    }

  private:
    struct ObjectBacked {
        PerfectComplex x_min;
        std::shared_ptr<EndAlgebra> end;
    };
    struct StalkBacked {
        StalkModule m;
        std::shared_ptr<chidetail::StalkEnd> end;
    };
    struct ResidueBacked {
        PrimeDatum p;
        int shift;
    };
    struct Combo {
        std::vector<std::pair<IrreducibleLabel, size_t>> terms;
        std::vector<CohFunctionPtr> components;
    };

    CoeffAlgebra alg_;
    std::variant<ObjectBacked, StalkBacked, ResidueBacked, Combo> backing_;
    mutable std::mutex mu_;
    mutable std::map<std::string, size_t> cache_;

    explicit CohFunction(CoeffAlgebra alg)
        : alg_(std::move(alg)), backing_(Combo{})
    {
    }

    size_t eval_uncached(const PerfectComplex &c) const
    {
        if (const auto *ob = std::get_if<ObjectBacked>(&backing_)) {
            if (ob->end->residue_dim_one)
                return derived_hom_dim(c, ob->x_min, 0);
            AlgebraModule m = hom0_module(c, *ob->end);
            return module_length(ob->end->alg, m);
        }
        if (const auto *sb = std::get_if<StalkBacked>(&backing_)) {
            KComplex h = hom_to_stalk(c, sb->m);
            size_t dim_k = h.cohomology_dim(0);
            if (sb->end->residue_dim_one || dim_k == 0)
                return dim_k;
            return stalk_length(c, *sb);
        }
        if (const auto *rb = std::get_if<ResidueBacked>(&backing_))
            return residue_hom_dim(c.shift(rb->shift), rb->p, 0);
        const auto &combo = std::get<Combo>(backing_);
        size_t total = 0;
        for (size_t i = 0; i < combo.terms.size(); ++i)
            total += combo.terms[i].second * combo.components[i]->eval(c);
        return total;
    }

    /* true endolength of H^0(Hom(C, M)) over End_A(M), acting by
       post-composition on the stalk coordinates */
    size_t stalk_length(const PerfectComplex &c, const StalkBacked &sb) const
    {
        const Field &k = alg_.base_field();
        const StalkModule &m = sb.m;
        KComplex h = hom_to_stalk(c, m);
        size_t t0 = h.dim(0);
        if (t0 == 0)
            return 0;
        int i0 = -h.min_deg;
        std::vector<Vec> cycles;
        if (i0 >= 0 && i0 < static_cast<int>(h.diffs.size()))
            cycles = h.diffs[static_cast<size_t>(i0)].kernel_basis();
        else
            for (size_t j = 0; j < t0; ++j) {
                Vec e(t0, k.zero());
                e[j] = k.one();
                cycles.push_back(std::move(e));
            }
        std::vector<Vec> boundaries;
        int im1 = i0 - 1;
        SpanBuilder bspan(k, t0);
        if (im1 >= 0 && im1 < static_cast<int>(h.diffs.size())) {
            const Matrix &dm1 = h.diffs[static_cast<size_t>(im1)];
            for (size_t j = 0; j < dm1.cols(); ++j)
                if (bspan.add(dm1.column(j)))
                    boundaries.push_back(dm1.column(j));
        }
        SpanBuilder span(k, t0);
        for (const auto &b : boundaries)
            span.add(b);
        std::vector<Vec> reps;
        for (const auto &v : cycles)
            if (span.add(v))
                reps.push_back(v);
        if (reps.empty())
            return 0;
        std::vector<Vec> cols = reps;
        cols.insert(cols.end(), boundaries.begin(), boundaries.end());
        LinearSolver reducer(Matrix::from_columns(k, t0, cols));
        auto class_coords = [&](const Vec &v) -> Vec {
            auto sol = reducer.solve(v);
            require(sol.has_value(), "stalk_length: reduction failed");
            return Vec(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(reps.size()));
        };
        // coordinates at hom degree 0 are (generator of C^{deg}, module coord):
        // post-composition with phi acts on the module coordinate
        size_t gen_count = t0 / m.dim;
        std::vector<Matrix> action;
        for (size_t bi = 0; bi < sb.end->alg.dim(); ++bi) {
            const Matrix &phi = sb.end->reps[bi];
            Matrix act(k, reps.size(), reps.size());
            for (size_t j = 0; j < reps.size(); ++j) {
                Vec out(t0, k.zero());
                for (size_t g = 0; g < gen_count; ++g)
                    for (size_t t = 0; t < m.dim; ++t) {
                        FieldElem acc = k.zero();
                        for (size_t s = 0; s < m.dim; ++s)
                            if (!k.is_zero(phi.at(t, s)))
                                acc = k.add(acc, k.mul(phi.at(t, s), reps[j][g * m.dim + s]));
                        out[g * m.dim + t] = acc;
                    }
                Vec cls = class_coords(out);
                for (size_t r = 0; r < reps.size(); ++r)
                    act.set(r, j, cls[r]);
            }
            action.push_back(std::move(act));
        }
        AlgebraModule mod(sb.end->alg, reps.size(), std::move(action));
        return module_length(sb.end->alg, mod);
    }

  public:
    CohFunction(const CohFunction &o) : alg_(o.alg_), backing_(o.backing_)
    {
        std::lock_guard<std::mutex> lock(o.mu_);
        cache_ = o.cache_;
    }

    CohFunction &operator=(const CohFunction &) = delete;
};

/* ---- the defining conditions, checked on a strip ------------------------ */

/* the doubly infinite sequence ... B[-1] C[-1] A B C A[1] B[1] ... attached
   to a triangle; position j = 3t + s picks the s-th object shifted by t */
inline PerfectComplex strip_object(const ObjectTriple &t, int64_t j)
{
    int64_t q = j >= 0 ? j / 3 : -((-j + 2) / 3);
    int64_t s = j - 3 * q;
    const PerfectComplex &base = s == 0 ? t.A : (s == 1 ? t.B : t.C);
    return base.shift(static_cast<int>(q));
}

struct CohViolation {
    int64_t anchor;
    int64_t index;
    int64_t partial_sum;
    std::string what;
};

/* Checks the partial alternating-sum conditions for every zero-anchored
   labelling inside the window. The strip must begin and end in a full
   vanishing period, otherwise the window is reported as too small. */
inline std::optional<CohViolation>
check_cohomological(const std::function<size_t(const PerfectComplex &)> &chi, const ObjectTriple &t,
                    int window)
{
    require(window >= 1, "check_cohomological: window must be positive");
    int64_t lo = -3 * static_cast<int64_t>(window), hi = 3 * static_cast<int64_t>(window) + 2;
    std::map<int64_t, int64_t> v;
    for (int64_t j = lo; j <= hi; ++j)
        v[j] = static_cast<int64_t>(chi(strip_object(t, j)));
    bool head_zero = v[lo] == 0 && v[lo + 1] == 0 && v[lo + 2] == 0;
    bool tail_zero = v[hi] == 0 && v[hi - 1] == 0 && v[hi - 2] == 0;
    require(head_zero && tail_zero,
            "check_cohomological: window too small, no vanishing anchor on one side");

    for (int64_t anchor = lo; anchor <= hi; ++anchor) {
        if (v[anchor] != 0)
            continue;
        int64_t partial = 0;
        for (int64_t j = anchor; j <= hi; ++j) {
            // S_n = v_n - S_{n-1} realizes sum_{i<=n} (-1)^{i+n} v_i
            partial = v[j] - partial;
            if (partial < 0)
                return CohViolation{anchor, j - anchor, partial, "negative partial sum"};
            if (v[j] == 0 && partial != 0)
                return CohViolation{anchor, j - anchor, partial, "nonzero sum at a vanishing term"};
        }
    }
    return std::nullopt;
}

inline std::optional<CohViolation> check_cohomological(const CohFunction &chi, const Triangle &t,
                                                       int window)
{
    return check_cohomological([&](const PerfectComplex &c) { return chi.eval(c); }, objects_of(t),
                               window);
}

/* ---- extension to copresented functors ---------------------------------- */

/* chi-hat of the functor copresented by the triangle A -> B -> C ->: the
   alternating sums anchored at a vanishing shift. The result is independent
   of the anchor; when two anchors exist inside the window this is asserted. */
inline size_t extend_chi(const std::function<size_t(const PerfectComplex &)> &chi,
                         const ObjectTriple &t, int window)
{
    auto vanish = [&](int n) {
        return chi(t.A.shift(n)) == 0 && chi(t.B.shift(n)) == 0 && chi(t.C.shift(n)) == 0;
    };
    auto value_at = [&](int n) -> int64_t {
        // n >= 0: sum_{i=0..n} (-1)^i (chi(S^i A) - chi(S^i B) + chi(S^i C))
        // n < 0 : sum_{i=n..-1} (-1)^{i+1} (same summand)
        int64_t total = 0;
        if (n >= 0) {
            for (int i = 0; i <= n; ++i) {
                int64_t term = static_cast<int64_t>(chi(t.A.shift(i))) -
                               static_cast<int64_t>(chi(t.B.shift(i))) +
                               static_cast<int64_t>(chi(t.C.shift(i)));
                total += (i % 2 == 0 ? term : -term);
            }
        } else {
            for (int i = n; i <= -1; ++i) {
                int64_t term = static_cast<int64_t>(chi(t.A.shift(i))) -
                               static_cast<int64_t>(chi(t.B.shift(i))) +
                               static_cast<int64_t>(chi(t.C.shift(i)));
                total += (((i + 1) % 2 + 2) % 2 == 0 ? term : -term);
            }
        }
        return total;
    };

    std::vector<int> anchors;
    for (int n = 0; n <= window && anchors.size() < 2; ++n)
        if (vanish(n))
            anchors.push_back(n);
    for (int n = -1; n >= -window && anchors.size() < 2; --n)
        if (vanish(n))
            anchors.push_back(n);
    require(!anchors.empty(), "extend_chi: no vanishing shift found in window");

    int64_t first = value_at(anchors[0]);
    require(first >= 0, "extend_chi: negative value");
    if (anchors.size() >= 2) {
        int64_t second = value_at(anchors[1]);
        require(first == second, "extend_chi: anchor dependence detected");
    }
    return static_cast<size_t>(first);
}

inline size_t extend_chi(const CohFunction &chi, const Triangle &t, int window)
{
    return extend_chi([&](const PerfectComplex &c) { return chi.eval(c); }, objects_of(t), window);
}

/* chi-hat evaluated on the simple functor attached to X_{n,r}: it is the
   kernel of Hom(-, X_{n,r}) -> Hom(-, middle) for the almost split triangle
   starting at X_{n,r}, i.e. the functor copresented by that triangle. */
inline size_t simple_detector(const std::function<size_t(const PerfectComplex &)> &chi,
                              const CoeffAlgebra &alg, int n, int r, int window)
{
    Triangle t = ar_triangle(alg, n - 1, r);
    return extend_chi(chi, objects_of(t), window);
}

inline size_t simple_detector(const CohFunction &chi, int n, int r, int window)
{
    return simple_detector([&](const PerfectComplex &c) { return chi.eval(c); }, chi.algebra(), n, r,
                           window);
}

/* ---- decomposition into irreducibles ------------------------------------ */

struct Decomposition {
    std::map<IrreducibleLabel, size_t, LabelLess> multiplicities;
    bool ok = false;
    std::string residual_report; // filled when the basis was insufficient
};

/* Decompose into string-complex classes and simple-stalk classes over the
   dual numbers. String multiplicities are read off with the simple-functor
   detectors (triangular in the bar order); stalk multiplicities from the
   residual values on free stalks; the residual must then vanish on the whole
   probe window. */
inline Decomposition decompose_chi(const CohFunction &chi, int n_window, int r_window)
{
    const CoeffAlgebra &alg = chi.algebra();
    require(alg.kind() == AlgKind::dual_numbers, "decompose_chi: dual numbers only");
    int win = 2 * (n_window + r_window) + 6;
    Decomposition out;

    std::map<IrreducibleLabel, size_t, LabelLess> mult;
    for (int r = 0; r <= r_window; ++r)
        for (int n = -n_window; n <= n_window; ++n) {
            size_t m = simple_detector(chi, n, r, win);
            if (m > 0)
                mult[ObjectBarLabel{n, r}] = m;
        }

    // residual on free stalks gives the simple-stalk multiplicities
    auto residual = [&](const PerfectComplex &c) -> int64_t {
        int64_t v = static_cast<int64_t>(chi.eval(c));
        for (const auto &[label, m] : mult)
            if (std::holds_alternative<ObjectBarLabel>(label))
                v -= static_cast<int64_t>(m * CohFunction::for_label_shared(alg, label)->eval(c));
        return v;
    };
    for (int j = -n_window - r_window - 1; j <= n_window + r_window + 1; ++j) {
        PerfectComplex stalk = PerfectComplex::bar(alg, j, 0);
        int64_t rem = residual(stalk);
        if (rem < 0) {
            out.residual_report = "negative residual at probe " + chidetail::complex_key(stalk);
            return out;
        }
        if (rem > 0)
            mult[SimpleStalkLabel{j}] = static_cast<size_t>(rem);
    }

    // verify: the combination reproduces chi on the probe window
    CohFunction rebuilt = CohFunction::combo(alg, mult);
    std::string report;
    for (int s = 0; s <= r_window + 1; ++s)
        for (int m0 = -n_window - 2; m0 <= n_window + 2; ++m0) {
            PerfectComplex probe = PerfectComplex::bar(alg, m0, s);
            size_t lhs = chi.eval(probe), rhs = rebuilt.eval(probe);
            if (lhs != rhs)
                report += "probe X(" + std::to_string(m0) + "," + std::to_string(s) + "): value " +
                          std::to_string(lhs) + " vs rebuilt " + std::to_string(rhs) + "\n";
        }
    if (!report.empty()) {
        out.residual_report = "basis insufficient:\n" + report;
        return out;
    }
    out.multiplicities = std::move(mult);
    out.ok = true;
    return out;
}

/* ---- lengths determine objects ------------------------------------------ */

struct IsoVerdict {
    bool equal_length_tables;
    bool equivalent;
};

/* Theorem-style comparison: the k-length tables of Hom(P, -) over a probe
   family against the homotopy classification. */
inline IsoVerdict lengths_determine_iso(const PerfectComplex &x, const PerfectComplex &y,
                                        const std::vector<PerfectComplex> &probes)
{
    bool equal = true;
    for (const auto &p : probes)
        if (derived_hom_dim(p, x, 0) != derived_hom_dim(p, y, 0)) {
            equal = false;
            break;
        }
    return IsoVerdict{equal, homotopy_equivalent(x, y)};
}

/* the standard probe family { S^m X_{0,s} : |m| <= m_max, s <= s_max } */
inline std::vector<PerfectComplex> standard_probes(const CoeffAlgebra &alg, int m_max, int s_max)
{
    std::vector<PerfectComplex> probes;
    for (int s = 0; s <= s_max; ++s)
        for (int m = -m_max; m <= m_max; ++m)
            probes.push_back(PerfectComplex::bar(alg, 0, s).shift(m));
    return probes;
}

} // namespace cohlen
