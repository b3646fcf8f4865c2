#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cohlen/field.hpp"

namespace cohlen {

/* Dense univariate polynomial over an exact field; coefficients low degree
   first with no trailing zeros (zero polynomial = empty vector). */
class Poly {
  public:
    explicit Poly(Field f) : f_(std::move(f)) {}

    Poly(Field f, std::vector<FieldElem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { trim(); }

    static Poly from_ints(const Field &f, std::vector<int64_t> ints)
    {
        std::vector<FieldElem> c;
        c.reserve(ints.size());
        for (int64_t v : ints)
            c.push_back(f.from_int(v));
        return {f, std::move(c)};
    }

    static Poly constant(const Field &f, FieldElem v) { return {f, {std::move(v)}}; }
    static Poly x(const Field &f) { return {f, {f.zero(), f.one()}}; }

    const Field &field() const { return f_; }
    const std::vector<FieldElem> &coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    bool is_one() const
    {
        return c_.size() == 1 && c_[0] == f_.one();
    }

    FieldElem coeff(size_t i) const { return i < c_.size() ? c_[i] : f_.zero(); }
    FieldElem lead() const
    {
        require(!c_.empty(), "Poly: leading coefficient of zero");
        return c_.back();
    }

    bool operator==(const Poly &o) const { return c_ == o.c_; }
    bool operator!=(const Poly &o) const { return !(*this == o); }

    Poly operator+(const Poly &o) const
    {
        std::vector<FieldElem> r(std::max(c_.size(), o.c_.size()), f_.zero());
        for (size_t i = 0; i < r.size(); ++i)
            r[i] = f_.add(coeff(i), o.coeff(i));
        return {f_, std::move(r)};
    }

    Poly operator-() const
    {
        std::vector<FieldElem> r = c_;
        for (auto &x : r)
            x = f_.neg(x);
        return {f_, std::move(r)};
    }

    Poly operator-(const Poly &o) const { return *this + (-o); }

    Poly operator*(const Poly &o) const
    {
        if (is_zero() || o.is_zero())
            return Poly(f_);
        std::vector<FieldElem> r(c_.size() + o.c_.size() - 1, f_.zero());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (f_.is_zero(c_[i]))
                continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = f_.add(r[i + j], f_.mul(c_[i], o.c_[j]));
        }
        return {f_, std::move(r)};
    }

    Poly scale(const FieldElem &v) const
    {
        std::vector<FieldElem> r = c_;
        for (auto &x : r)
            x = f_.mul(x, v);
        return {f_, std::move(r)};
    }

    Poly monic() const
    {
        require(!is_zero(), "Poly: monic of zero");
        return scale(f_.inv(lead()));
    }

    static std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b)
    {
        require(!b.is_zero(), "Poly: division by zero");
        Poly q(a.f_), r = a;
        FieldElem lead_inv = a.f_.inv(b.lead());
        std::vector<FieldElem> qc;
        if (r.degree() >= b.degree())
            qc.assign(static_cast<size_t>(r.degree() - b.degree()) + 1, a.f_.zero());
        while (!r.is_zero() && r.degree() >= b.degree()) {
            size_t shift = static_cast<size_t>(r.degree() - b.degree());
            FieldElem c = a.f_.mul(r.lead(), lead_inv);
            qc[shift] = c;
            std::vector<FieldElem> rc = r.c_;
            for (size_t i = 0; i < b.c_.size(); ++i)
                rc[shift + i] = a.f_.sub(rc[shift + i], a.f_.mul(c, b.c_[i]));
            r = Poly(a.f_, std::move(rc));
        }
        q = Poly(a.f_, std::move(qc));
        return {q, r};
    }

    Poly operator/(const Poly &o) const { return divmod(*this, o).first; }
    Poly operator%(const Poly &o) const { return divmod(*this, o).second; }

    /* exact division: asserts zero remainder */
    static Poly exact_div(const Poly &a, const Poly &b)
    {
        auto [q, r] = divmod(a, b);
        require(r.is_zero(), "Poly: division was not exact");
        return q;
    }

    static Poly gcd(Poly a, Poly b)
    {
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.is_zero() ? a : a.monic();
    }

    FieldElem eval(const FieldElem &x) const
    {
        FieldElem r = f_.zero();
        for (size_t i = c_.size(); i-- > 0;)
            r = f_.add(f_.mul(r, x), c_[i]);
        return r;
    }

    /* evaluate in another field through a coefficient embedding */
    FieldElem eval_mapped(const Field &target, const FieldElem &x,
                          const std::function<FieldElem(const FieldElem &)> &embed) const
    {
        FieldElem r = target.zero();
        for (size_t i = c_.size(); i-- > 0;)
            r = target.add(target.mul(r, x), embed(c_[i]));
        return r;
    }

    Poly derivative() const
    {
        if (c_.size() <= 1)
            return Poly(f_);
        std::vector<FieldElem> r(c_.size() - 1, f_.zero());
        for (size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = f_.mul(c_[i], f_.from_int(static_cast<int64_t>(i)));
        return {f_, std::move(r)};
    }

    std::string to_string() const
    {
        if (is_zero())
            return "0";
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (f_.is_zero(c_[i]))
                continue;
            if (!s.empty())
                s += " + ";
            bool unit_coeff = c_[i] == f_.one() && i > 0;
            if (!unit_coeff)
                s += f_.to_string(c_[i]);
            if (i >= 1) {
                if (!unit_coeff)
                    s += "*";
                s += "x";
                if (i > 1)
                    s += "^" + std::to_string(i);
            }
        }
        return s;
    }

  private:
    Field f_;
    std::vector<FieldElem> c_;

    void trim()
    {
        while (!c_.empty() && f_.is_zero(c_.back()))
            c_.pop_back();
    }
};

/* Trial-division factor search, for the small degrees this library meets.
   Finite prime fields only; returns a monic proper divisor or nothing. */
inline std::optional<Poly> find_monic_divisor(const Poly &f, int max_divisor_degree)
{
    const Field &k = f.field();
    require(k.kind() == FieldKind::prime, "find_monic_divisor: prime fields only");
    int64_t p = k.characteristic();
    for (int d = 1; d <= max_divisor_degree && d <= f.degree() / 2; ++d) {
        int64_t count = 1;
        for (int i = 0; i < d; ++i) {
            count *= p;
            require(count <= 2000000, "find_monic_divisor: search space too large");
        }
        for (int64_t idx = 0; idx < count; ++idx) {
            std::vector<int64_t> cand(static_cast<size_t>(d) + 1, 0);
            int64_t t = idx;
            for (int i = 0; i < d; ++i) {
                cand[static_cast<size_t>(i)] = t % p;
                t /= p;
            }
            cand[static_cast<size_t>(d)] = 1;
            Poly c = Poly::from_ints(k, cand);
            if ((f % c).is_zero())
                return c;
        }
    }
    return std::nullopt;
}

inline bool poly_irreducible(const Poly &f)
{
    require(f.degree() >= 1, "poly_irreducible: degree must be >= 1");
    return !find_monic_divisor(f, f.degree() / 2).has_value();
}

/* Complete factorization into monic irreducibles by repeated trial division.
   Suitable for the small desk-scale degrees used here. */
inline std::vector<std::pair<Poly, int>> factor_poly(const Poly &f0)
{
    Poly f = f0.monic();
    std::vector<std::pair<Poly, int>> out;
    while (f.degree() >= 1) {
        std::optional<Poly> d = find_monic_divisor(f, f.degree() / 2);
        Poly irr = d ? *d : f;
        // d may itself be reducible only if trial division scanned by degree;
        // smallest-degree divisors are automatically irreducible
        int mult = 0;
        while ((f % irr).is_zero()) {
            f = Poly::exact_div(f, irr);
            ++mult;
        }
        bool merged = false;
        for (auto &[g, m] : out)
            if (g == irr) {
                m += mult;
                merged = true;
            }
        if (!merged)
            out.emplace_back(irr, mult);
    }
    return out;
}

} // namespace cohlen
