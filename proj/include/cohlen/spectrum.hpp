#pragma once

#include "cohlen/coh_function.hpp"
#include "cohlen/poly_matrix.hpp"

namespace cohlen {

/* Finite window onto the space of irreducible cohomological functions:
   orbit-representative labels with materialized evaluation tables over a
   probe family. Topology statements are checked as witnessed separations on
   this window, never as abstract set operations. */
struct SpectrumWindow {
    CoeffAlgebra alg;
    int r_max = 0;
    std::vector<IrreducibleLabel> labels;
    std::vector<PerfectComplex> probes; // X_{0,s}, s <= r_max + 1
    int shift_lo = 0, shift_hi = 0;
    // table[label][probe][shift - shift_lo]
    std::vector<std::vector<std::vector<size_t>>> table;

    const std::vector<size_t> &row(size_t label_idx, size_t probe_idx) const
    {
        return table[label_idx][probe_idx];
    }
};

/* The window over the dual numbers: labels [chi_{X_{0,r}}], r <= r_max,
   plus the simple stalk class. */
inline SpectrumWindow enumerate_sp_dual_numbers(const CoeffAlgebra &alg, int r_max)
{
    require(alg.kind() == AlgKind::dual_numbers, "enumerate_sp_dual_numbers: dual numbers only");
    require(r_max >= 0, "enumerate_sp_dual_numbers: r_max must be >= 0");
    SpectrumWindow w;
    w.alg = alg;
    w.r_max = r_max;
    for (int r = 0; r <= r_max; ++r)
        w.labels.push_back(ObjectBarLabel{0, r});
    w.labels.push_back(SimpleStalkLabel{0});
    for (int s = 0; s <= r_max + 1; ++s)
        w.probes.push_back(PerfectComplex::bar(alg, 0, s));
    w.shift_lo = -(r_max + 2);
    w.shift_hi = r_max + 2;
    for (const auto &label : w.labels) {
        CohFunctionPtr f = CohFunction::for_label_shared(alg, label);
        std::vector<std::vector<size_t>> rows;
        for (const auto &p : w.probes) {
            std::vector<size_t> row;
            for (int n = w.shift_lo; n <= w.shift_hi; ++n)
                row.push_back(f->eval(p.shift(n)));
            rows.push_back(std::move(row));
        }
        w.table.push_back(std::move(rows));
    }
    return w;
}

/* membership in the basic open set (C): some shifted evaluation is nonzero */
inline bool basic_open_membership(const CoeffAlgebra &alg, const IrreducibleLabel &label,
                                  const PerfectComplex &c, int shift_window)
{
    if (c.is_zero())
        return false;
    CohFunctionPtr f = CohFunction::for_label_shared(alg, label);
    for (int n = -shift_window; n <= shift_window; ++n)
        if (f->eval(c.shift(n)) != 0)
            return true;
    return false;
}

/* Isolated points of the window: a label is isolated when one of the
   simple-functor detectors lights up on it alone. For the dual numbers this
   must return exactly the string-complex labels. */
inline std::vector<IrreducibleLabel> isolated_points(const SpectrumWindow &w)
{
    int win = 2 * w.r_max + 8;
    std::vector<CohFunctionPtr> fs;
    for (const auto &label : w.labels)
        fs.push_back(CohFunction::for_label_shared(w.alg, label));
    std::vector<IrreducibleLabel> out;
    for (size_t li = 0; li < w.labels.size(); ++li) {
        bool isolated = false;
        for (int n = -1; n <= 1 && !isolated; ++n)
            for (int r = 0; r <= w.r_max + 1 && !isolated; ++r) {
                size_t mine = simple_detector(*fs[li], n, r, win);
                if (mine == 0)
                    continue;
                bool alone = true;
                for (size_t lj = 0; lj < w.labels.size() && alone; ++lj) {
                    if (lj == li)
                        continue;
                    if (simple_detector(*fs[lj], n, r, win) != 0)
                        alone = false;
                }
                if (alone)
                    isolated = true;
            }
        if (isolated)
            out.push_back(w.labels[li]);
    }
    return out;
}

struct ClosureReport {
    bool ok;
    int witness_r = -1;
    std::string detail;
};

/* Desk-scale surrogate for "the closure of the isolated points adds exactly
   the stalk class": on the maximal probe set where the stalk function is
   nonzero (within the window), some single string class of length <= R is
   nonzero everywhere too. This is a finite-window criterion, not the full
   topological statement. */
inline ClosureReport closure_extra_point_check(const SpectrumWindow &w, int R)
{
    auto stalk = CohFunction::for_label_shared(w.alg, SimpleStalkLabel{0});
    int sw = w.shift_hi;
    std::vector<const PerfectComplex *> hot;
    for (const auto &p : w.probes)
        if (basic_open_membership(w.alg, SimpleStalkLabel{0}, p, sw))
            hot.push_back(&p);
    if (hot.empty())
        return {true, -1, "stalk class vanishes on the whole window: vacuously closed"};
    for (int r = 0; r <= R; ++r) {
        bool all = true;
        for (const auto *p : hot)
            if (!basic_open_membership(w.alg, ObjectBarLabel{0, r}, *p, sw + r + 1)) {
                all = false;
                break;
            }
        if (all)
            return {true, r, "witness length " + std::to_string(r)};
    }
    return {false, -1, "no string class of length <= " + std::to_string(R) +
                           " covers the stalk neighborhood basis"};
}

/* ---- the embedding of Spec A ------------------------------------------- */

inline ResidueLabel rho(const CoeffAlgebra &alg, const PrimeDatum &p)
{
    require(alg.kind() == AlgKind::poly_ring, "rho: polynomial coefficient ring only");
    if (p.kind == PrimeDatum::Kind::poly_irreducible)
        residue_field(alg, p); // validates, rejects reducible polynomials
    return ResidueLabel{p, 0};
}

struct InjectivityReport {
    bool ok;
    std::string colliding_pair;
    std::vector<std::string> separations;
};

/* for each pair of primes an explicit separating probe is produced:
   cone(f: A -> A) for f in one prime and not the other */
inline InjectivityReport rho_injectivity_check(const CoeffAlgebra &alg,
                                               const std::vector<PrimeDatum> &primes,
                                               int shift_window = 3)
{
    require(alg.kind() == AlgKind::poly_ring, "rho_injectivity_check: polynomial ring only");
    InjectivityReport rep{true, "", {}};
    auto cone_of = [&](const Poly &f) {
        AlgMatrix m(alg, 1, 1);
        m.set(0, 0, alg.from_poly(f));
        std::map<int, size_t> ranks{{-1, 1}, {0, 1}};
        return PerfectComplex::from_maps(alg, ranks, {{-1, m}});
    };
    for (size_t i = 0; i < primes.size(); ++i)
        for (size_t j = i + 1; j < primes.size(); ++j) {
            const PrimeDatum &p = primes[i], &q = primes[j];
            // pick f in one prime, not in the other
            Poly f = p.kind == PrimeDatum::Kind::poly_irreducible ? p.f : q.f;
            require(!f.is_zero(), "rho_injectivity_check: need a nonzero prime in each pair");
            PerfectComplex probe = cone_of(f);
            CohFunction fp = CohFunction::of_residue(alg, p);
            CohFunction fq = CohFunction::of_residue(alg, q);
            bool separated = false;
            for (int n = -shift_window; n <= shift_window && !separated; ++n)
                if (fp.eval(probe.shift(n)) != fq.eval(probe.shift(n)))
                    separated = true;
            if (!separated) {
                rep.ok = false;
                rep.colliding_pair = p.to_string() + " vs " + q.to_string();
                return rep;
            }
            rep.separations.push_back(p.to_string() + "|" + q.to_string() + " via cone(" +
                                      f.to_string() + ")");
        }
    return rep;
}

struct SupportReport {
    bool ok;
    std::vector<std::string> support;
    std::string detail;
};

/* Support dichotomy over k[x]: if the generic point lies in the support,
   all but finitely many sampled primes do, and the exceptions divide a
   fitting invariant of the differentials; if not, the support is finite and
   every member divides a fitting invariant. */
inline SupportReport supp_dichotomy_check(const PerfectComplex &x,
                                          const std::vector<PrimeDatum> &primes)
{
    const CoeffAlgebra &alg = x.algebra();
    require(alg.kind() == AlgKind::poly_ring, "supp_dichotomy_check: polynomial ring only");
    const Field &k = alg.base_field();
    SupportReport rep{true, {}, ""};
    if (x.is_zero()) {
        rep.detail = "zero complex: empty support";
        return rep;
    }
    int lo = x.support_min() - 1, hi = x.support_max() + 1;
    auto in_supp = [&](const PrimeDatum &p) {
        for (int n = lo; n <= hi; ++n)
            if (residue_hom_dim(x, p, n) != 0)
                return true;
        return false;
    };
    // fitting invariants: products of the Smith invariant factors per degree
    std::vector<Poly> fitting;
    for (int d = x.support_min(); d < x.support_max(); ++d) {
        if (x.rank(d) == 0 || x.rank(d + 1) == 0)
            continue;
        PolyMatrix pm(k, x.rank(d + 1), x.rank(d));
        AlgMatrix dm = x.diff(d);
        for (size_t r = 0; r < dm.rows(); ++r)
            for (size_t c = 0; c < dm.cols(); ++c)
                pm.set(r, c, std::get<Poly>(dm.at(r, c).v));
        Poly prod = Poly::constant(k, k.one());
        for (const auto &e : pm.smith_invariant_factors())
            prod = prod * e;
        fitting.push_back(prod);
    }
    auto divides_fitting = [&](const Poly &f) {
        for (const auto &g : fitting)
            if (!g.is_zero() && (g % f).is_zero())
                return true;
        return false;
    };

    bool generic_in = false;
    std::vector<const PrimeDatum *> closed_in, closed_out;
    for (const auto &p : primes) {
        bool member = in_supp(p);
        if (p.kind == PrimeDatum::Kind::zero_ideal) {
            generic_in = member;
            if (member)
                rep.support.push_back(p.to_string());
            continue;
        }
        (member ? closed_in : closed_out).push_back(&p);
        if (member)
            rep.support.push_back(p.to_string());
    }
    if (generic_in) {
        // exceptions must be accounted for by vanishing minors
        for (const auto *p : closed_out)
            if (!divides_fitting(p->f)) {
                rep.ok = false;
                rep.detail = "generic point in support but " + p->to_string() +
                             " is outside without dividing a fitting invariant";
                return rep;
            }
        rep.detail = "generic point in support; " + std::to_string(closed_out.size()) +
                     " exceptional primes, all divide fitting invariants";
    } else {
        for (const auto *p : closed_in)
            if (!divides_fitting(p->f)) {
                rep.ok = false;
                rep.detail = "torsion support member " + p->to_string() +
                             " does not divide any fitting invariant";
                return rep;
            }
        rep.detail = "generic point outside; support of size " + std::to_string(closed_in.size()) +
                     " within the sample, all divide fitting invariants";
    }
    return rep;
}

struct ClosedSetReport {
    bool ok;
    std::string detail;
    std::vector<std::string> witnesses;
};

/* Desk-scale closedness of U = { labels : value on X <= bound }: every label
   of the complement gets an explicit functor-probe witness separating it
   from all of U. Witnesses are simple-functor detectors, or the image
   functors of the projections X_{m,t} -> X_{m,0} for the stalk class. */
inline ClosedSetReport closed_length_set_check(const SpectrumWindow &w, const PerfectComplex &x,
                                               size_t bound)
{
    int win = 2 * w.r_max + 10;
    ClosedSetReport rep{true, "", {}};
    std::vector<CohFunctionPtr> fs;
    for (const auto &label : w.labels)
        fs.push_back(CohFunction::for_label_shared(w.alg, label));
    std::vector<size_t> values;
    for (const auto &f : fs)
        values.push_back(f->eval(x));
    std::vector<size_t> inside, outside;
    for (size_t i = 0; i < w.labels.size(); ++i)
        (values[i] <= bound ? inside : outside).push_back(i);
    if (outside.empty()) {
        rep.detail = "complement empty: trivially closed";
        return rep;
    }

    // chi-hat of the image functor of phi_{m,t}: X_{m,t} -> X_{m,0}
    auto image_functor_value = [&](const CohFunction &chi, int m, int t) -> int64_t {
        PerfectComplex src = PerfectComplex::bar(w.alg, m, t);
        PerfectComplex dst = PerfectComplex::bar(w.alg, m, 0);
        std::map<int, AlgMatrix> comps;
        AlgMatrix one(w.alg, 1, 1);
        one.set(0, 0, w.alg.one());
        comps.emplace(m, std::move(one));
        Triangle tri = cone(ChainMap(src, dst, std::move(comps)));
        // coker(H_src -> H_dst) is copresented by the double rotation
        ObjectTriple rot = rotate_objects(objects_of(tri), 2);
        int64_t coker = static_cast<int64_t>(
            extend_chi([&](const PerfectComplex &c) { return chi.eval(c); }, rot, win));
        return static_cast<int64_t>(chi.eval(dst)) - coker;
    };

    for (size_t oi : outside) {
        bool found = false;
        std::string witness;
        // try the simple-functor detectors first
        for (int n = -w.r_max - 1; n <= w.r_max + 1 && !found; ++n)
            for (int r = 0; r <= w.r_max + 1 && !found; ++r) {
                if (simple_detector(*fs[oi], n, r, win) == 0)
                    continue;
                bool excludes = true;
                for (size_t ui : inside)
                    if (simple_detector(*fs[ui], n, r, win) != 0) {
                        excludes = false;
                        break;
                    }
                if (excludes) {
                    found = true;
                    witness = "detector S(" + std::to_string(n) + "," + std::to_string(r) + ")";
                }
            }
        // then the image functors of the bar projections
        for (int t = 1; t <= 2 * w.r_max + 4 && !found; ++t)
            for (int m = -w.r_max - 1; m <= w.r_max + 1 && !found; ++m) {
                if (image_functor_value(*fs[oi], m, t) == 0)
                    continue;
                bool excludes = true;
                for (size_t ui : inside)
                    if (image_functor_value(*fs[ui], m, t) != 0) {
                        excludes = false;
                        break;
                    }
                if (excludes) {
                    found = true;
                    witness = "image functor of X(" + std::to_string(m) + "," + std::to_string(t) +
                              ") -> X(" + std::to_string(m) + ",0)";
                }
            }
        if (!found) {
            rep.ok = false;
            rep.detail = "no witness separates " + label_to_string(w.labels[oi]) +
                         " from the sublevel set";
            return rep;
        }
        rep.witnesses.push_back(label_to_string(w.labels[oi]) + ": " + witness);
    }
    return rep;
}

/* distinctness of the window labels: some (probe, shift) separates each pair */
inline bool window_labels_distinct(const SpectrumWindow &w)
{
    for (size_t i = 0; i < w.labels.size(); ++i)
        for (size_t j = i + 1; j < w.labels.size(); ++j) {
            bool differ = false;
            for (size_t p = 0; p < w.probes.size() && !differ; ++p)
                if (w.table[i][p] != w.table[j][p])
                    differ = true;
            if (!differ)
                return false;
        }
    return true;
}

} // namespace cohlen
