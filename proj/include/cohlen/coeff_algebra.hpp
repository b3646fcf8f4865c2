#pragma once

#include <variant>
#include <vector>

#include "cohlen/matrix.hpp"
#include "cohlen/poly.hpp"

namespace cohlen {

enum class AlgKind { dual_numbers, poly_ring, poly_quotient };

/* a + b*eps with eps^2 = 0 */
struct DualElem {
    FieldElem a, b;
    bool operator==(const DualElem &o) const { return a == o.a && b == o.b; }
};

/* Element of a coefficient algebra; dual numbers store pairs, the polynomial
   kinds store (reduced) polynomials. */
struct AlgElem {
    std::variant<DualElem, Poly> v;
    bool operator==(const AlgElem &o) const
    {
        if (v.index() != o.v.index())
            return false;
        if (v.index() == 0)
            return std::get<DualElem>(v) == std::get<DualElem>(o.v);
        return std::get<Poly>(v) == std::get<Poly>(o.v);
    }
    bool operator!=(const AlgElem &o) const { return !(*this == o); }
};

/* The coefficient rings complexes are taken over: k[eps], k[x], k[x]/(f).
   Immutable value type. */
class CoeffAlgebra {
  public:
    static CoeffAlgebra dual_numbers(Field base)
    {
        CoeffAlgebra a;
        a.kind_ = AlgKind::dual_numbers;
        a.base_ = std::move(base);
        return a;
    }

    static CoeffAlgebra poly_ring(Field base)
    {
        CoeffAlgebra a;
        a.kind_ = AlgKind::poly_ring;
        a.base_ = std::move(base);
        return a;
    }

    /* modulus monic of degree >= 1; reducible moduli are allowed here */
    static CoeffAlgebra poly_quotient(Field base, Poly modulus)
    {
        require(modulus.degree() >= 1, "poly_quotient: modulus degree must be >= 1");
        require(modulus.lead() == base.one(), "poly_quotient: modulus must be monic");
        CoeffAlgebra a;
        a.kind_ = AlgKind::poly_quotient;
        a.base_ = std::move(base);
        a.mod_ = std::make_shared<const Poly>(std::move(modulus));
        return a;
    }

    AlgKind kind() const { return kind_; }
    const Field &base_field() const { return base_; }

    const Poly &modulus() const
    {
        require(kind_ == AlgKind::poly_quotient, "CoeffAlgebra: no modulus");
        return *mod_;
    }

    bool operator==(const CoeffAlgebra &o) const
    {
        if (kind_ != o.kind_ || base_ != o.base_)
            return false;
        if (kind_ == AlgKind::poly_quotient)
            return *mod_ == *o.mod_;
        return true;
    }
    bool operator!=(const CoeffAlgebra &o) const { return !(*this == o); }

    /* k-dimension; -1 when infinite */
    int k_dim() const
    {
        switch (kind_) {
        case AlgKind::dual_numbers:
            return 2;
        case AlgKind::poly_ring:
            return -1;
        case AlgKind::poly_quotient:
            return mod_->degree();
        }
        throw error("unreachable");
    }

    bool finite_dimensional() const { return k_dim() >= 0; }

    /* local ring with computable units: dual numbers always; a quotient when
       the modulus is a power of one irreducible */
    bool is_local() const
    {
        switch (kind_) {
        case AlgKind::dual_numbers:
            return true;
        case AlgKind::poly_ring:
            return false;
        case AlgKind::poly_quotient: {
            auto factors = factor_poly(*mod_);
            return factors.size() == 1;
        }
        }
        throw error("unreachable");
    }

    AlgElem zero() const { return from_base(base_.zero()); }
    AlgElem one() const { return from_base(base_.one()); }

    AlgElem from_base(FieldElem c) const
    {
        if (kind_ == AlgKind::dual_numbers)
            return {DualElem{std::move(c), base_.zero()}};
        return {Poly::constant(base_, std::move(c))};
    }

    AlgElem eps() const
    {
        require(kind_ == AlgKind::dual_numbers, "CoeffAlgebra: eps only in dual numbers");
        return {DualElem{base_.zero(), base_.one()}};
    }

    AlgElem dual(FieldElem a, FieldElem b) const
    {
        require(kind_ == AlgKind::dual_numbers, "CoeffAlgebra: not dual numbers");
        return {DualElem{std::move(a), std::move(b)}};
    }

    AlgElem from_poly(Poly p) const
    {
        require(kind_ != AlgKind::dual_numbers, "CoeffAlgebra: not a polynomial algebra");
        if (kind_ == AlgKind::poly_quotient)
            p = p % *mod_;
        return {std::move(p)};
    }

    AlgElem var() const { return from_poly(Poly::x(base_)); }

    bool is_zero(const AlgElem &e) const
    {
        if (kind_ == AlgKind::dual_numbers) {
            const auto &d = std::get<DualElem>(e.v);
            return base_.is_zero(d.a) && base_.is_zero(d.b);
        }
        return std::get<Poly>(e.v).is_zero();
    }

    AlgElem add(const AlgElem &x, const AlgElem &y) const
    {
        if (kind_ == AlgKind::dual_numbers) {
            const auto &a = std::get<DualElem>(x.v);
            const auto &b = std::get<DualElem>(y.v);
            return {DualElem{base_.add(a.a, b.a), base_.add(a.b, b.b)}};
        }
        return {std::get<Poly>(x.v) + std::get<Poly>(y.v)};
    }

    AlgElem neg(const AlgElem &x) const
    {
        if (kind_ == AlgKind::dual_numbers) {
            const auto &a = std::get<DualElem>(x.v);
            return {DualElem{base_.neg(a.a), base_.neg(a.b)}};
        }
        return {-std::get<Poly>(x.v)};
    }

    AlgElem sub(const AlgElem &x, const AlgElem &y) const { return add(x, neg(y)); }

    AlgElem mul(const AlgElem &x, const AlgElem &y) const
    {
        if (kind_ == AlgKind::dual_numbers) {
            const auto &a = std::get<DualElem>(x.v);
            const auto &b = std::get<DualElem>(y.v);
            // (a0 + a1 e)(b0 + b1 e) = a0 b0 + (a0 b1 + a1 b0) e
            return {DualElem{base_.mul(a.a, b.a),
                             base_.add(base_.mul(a.a, b.b), base_.mul(a.b, b.a))}};
        }
        Poly p = std::get<Poly>(x.v) * std::get<Poly>(y.v);
        if (kind_ == AlgKind::poly_quotient)
            p = p % *mod_;
        return {std::move(p)};
    }

    AlgElem scale(const AlgElem &x, const FieldElem &c) const { return mul(x, from_base(c)); }

    bool is_unit(const AlgElem &x) const
    {
        switch (kind_) {
        case AlgKind::dual_numbers:
            return !base_.is_zero(std::get<DualElem>(x.v).a);
        case AlgKind::poly_ring:
            return std::get<Poly>(x.v).degree() == 0;
        case AlgKind::poly_quotient: {
            const Poly &p = std::get<Poly>(x.v);
            if (p.is_zero())
                return false;
            return Poly::gcd(p, *mod_).is_one();
        }
        }
        throw error("unreachable");
    }

    AlgElem inv(const AlgElem &x) const
    {
        require(is_unit(x), "CoeffAlgebra: inverse of a non-unit");
        switch (kind_) {
        case AlgKind::dual_numbers: {
            const auto &d = std::get<DualElem>(x.v);
            // (a + b e)^{-1} = a^{-1} - a^{-2} b e
            FieldElem ai = base_.inv(d.a);
            return {DualElem{ai, base_.neg(base_.mul(base_.mul(ai, ai), d.b))}};
        }
        case AlgKind::poly_ring:
            return {Poly::constant(base_, base_.inv(std::get<Poly>(x.v).coeff(0)))};
        case AlgKind::poly_quotient: {
            // extended Euclid against the modulus
            const Poly &p = std::get<Poly>(x.v);
            Poly r0 = *mod_, r1 = p;
            Poly t0(base_), t1 = Poly::constant(base_, base_.one());
            while (!r1.is_zero()) {
                auto [q, r] = Poly::divmod(r0, r1);
                Poly t2 = t0 - q * t1;
                r0 = std::move(r1);
                r1 = std::move(r);
                t0 = std::move(t1);
                t1 = std::move(t2);
            }
            // r0 = gcd, a unit constant here
            FieldElem c = base_.inv(r0.coeff(0));
            return from_poly(t0.scale(c));
        }
        }
        throw error("unreachable");
    }

    /* coefficient of the element in the k-basis {1, eps} resp. {1, x, ...} */
    FieldElem basis_coeff(const AlgElem &x, int i) const
    {
        if (kind_ == AlgKind::dual_numbers) {
            const auto &d = std::get<DualElem>(x.v);
            return i == 0 ? d.a : d.b;
        }
        return std::get<Poly>(x.v).coeff(static_cast<size_t>(i));
    }

    AlgElem from_basis_coeffs(const std::vector<FieldElem> &c) const
    {
        require(finite_dimensional(), "CoeffAlgebra: infinite dimensional");
        if (kind_ == AlgKind::dual_numbers)
            return {DualElem{c.size() > 0 ? c[0] : base_.zero(), c.size() > 1 ? c[1] : base_.zero()}};
        return from_poly(Poly(base_, c));
    }

    /* k-matrix of left multiplication by x on the k-basis (f.d. kinds only) */
    Matrix mult_action(const AlgElem &x) const
    {
        int d = k_dim();
        require(d >= 0, "CoeffAlgebra: mult_action needs finite dimension");
        Matrix m(base_, static_cast<size_t>(d), static_cast<size_t>(d));
        for (int j = 0; j < d; ++j) {
            std::vector<FieldElem> e(static_cast<size_t>(d), base_.zero());
            e[static_cast<size_t>(j)] = base_.one();
            AlgElem prod = mul(x, from_basis_coeffs(e));
            for (int i = 0; i < d; ++i)
                m.set(static_cast<size_t>(i), static_cast<size_t>(j), basis_coeff(prod, i));
        }
        return m;
    }

    std::string to_string(const AlgElem &x) const
    {
        if (kind_ == AlgKind::dual_numbers) {
            const auto &d = std::get<DualElem>(x.v);
            return base_.to_string(d.a) + " + " + base_.to_string(d.b) + "*eps";
        }
        return std::get<Poly>(x.v).to_string();
    }

  private:
    AlgKind kind_ = AlgKind::dual_numbers;
    Field base_ = Field::prime(2);
    std::shared_ptr<const Poly> mod_;
};

/* Dense matrix with coefficient-algebra entries: the differentials of a
   perfect complex and the components of chain maps. */
class AlgMatrix {
  public:
    AlgMatrix(CoeffAlgebra a, size_t rows, size_t cols)
        : alg_(std::move(a)), rows_(rows), cols_(cols), e_(rows * cols, alg_.zero())
    {
    }

    static AlgMatrix identity(const CoeffAlgebra &a, size_t n)
    {
        AlgMatrix m(a, n, n);
        for (size_t i = 0; i < n; ++i)
            m.set(i, i, a.one());
        return m;
    }

    static AlgMatrix scalar(const CoeffAlgebra &a, size_t n, const AlgElem &c)
    {
        AlgMatrix m(a, n, n);
        for (size_t i = 0; i < n; ++i)
            m.set(i, i, c);
        return m;
    }

    const CoeffAlgebra &algebra() const { return alg_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const AlgElem &at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
    void set(size_t r, size_t c, AlgElem v) { e_[r * cols_ + c] = std::move(v); }

    bool operator==(const AlgMatrix &o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    bool is_zero() const
    {
        for (const auto &x : e_)
            if (!alg_.is_zero(x))
                return false;
        return true;
    }

    AlgMatrix operator+(const AlgMatrix &o) const
    {
        require(rows_ == o.rows_ && cols_ == o.cols_, "AlgMatrix: shape mismatch");
        AlgMatrix r = *this;
        for (size_t i = 0; i < e_.size(); ++i)
            r.e_[i] = alg_.add(e_[i], o.e_[i]);
        return r;
    }

    AlgMatrix operator-() const
    {
        AlgMatrix r = *this;
        for (auto &x : r.e_)
            x = alg_.neg(x);
        return r;
    }

    AlgMatrix operator-(const AlgMatrix &o) const { return *this + (-o); }

    AlgMatrix operator*(const AlgMatrix &o) const
    {
        require(cols_ == o.rows_, "AlgMatrix: shape mismatch in *");
        AlgMatrix r(alg_, rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                if (alg_.is_zero(at(i, k)))
                    continue;
                for (size_t j = 0; j < o.cols_; ++j) {
                    if (alg_.is_zero(o.at(k, j)))
                        continue;
                    r.set(i, j, alg_.add(r.at(i, j), alg_.mul(at(i, k), o.at(k, j))));
                }
            }
        return r;
    }

    AlgMatrix scale(const AlgElem &c) const
    {
        AlgMatrix r = *this;
        for (auto &x : r.e_)
            x = alg_.mul(x, c);
        return r;
    }

    /* delete one row and one column */
    AlgMatrix minor_without(size_t row, size_t col) const
    {
        AlgMatrix r(alg_, rows_ - 1, cols_ - 1);
        for (size_t i = 0, ri = 0; i < rows_; ++i) {
            if (i == row)
                continue;
            for (size_t j = 0, rj = 0; j < cols_; ++j) {
                if (j == col)
                    continue;
                r.set(ri, rj, at(i, j));
                ++rj;
            }
            ++ri;
        }
        return r;
    }

  private:
    CoeffAlgebra alg_;
    size_t rows_, cols_;
    std::vector<AlgElem> e_;
};

/* ---- residue fields -------------------------------------------------- */

/* A prime of the coefficient ring: the maximal ideal (eps) of k[eps], the
   zero ideal of k[x], or a monic irreducible (f) of k[x]. */
struct PrimeDatum {
    enum class Kind { dual_maximal, zero_ideal, poly_irreducible } kind;
    Poly f; // only for poly_irreducible

    static PrimeDatum dual_maximal(const Field &base)
    {
        return {Kind::dual_maximal, Poly(base)};
    }
    static PrimeDatum zero_ideal(const Field &base) { return {Kind::zero_ideal, Poly(base)}; }
    static PrimeDatum irreducible(Poly p) { return {Kind::poly_irreducible, std::move(p)}; }

    bool operator==(const PrimeDatum &o) const { return kind == o.kind && f == o.f; }

    std::string to_string() const
    {
        switch (kind) {
        case Kind::dual_maximal:
            return "(eps)";
        case Kind::zero_ideal:
            return "(0)";
        case Kind::poly_irreducible:
            return "(" + f.to_string() + ")";
        }
        return "?";
    }
};

/* Result of residue_field: an honest field, or the fraction-field marker for
   the zero ideal of k[x] (handled downstream by fraction-free ranks). */
struct ResidueField {
    bool is_fraction_field = false;
    Field field;            // meaningful when !is_fraction_field
    Poly modulus;           // the irreducible used, when applicable
};

/* Residue field of a prime. Rejects reducible polynomials with a witness. */
inline ResidueField residue_field(const CoeffAlgebra &a, const PrimeDatum &p)
{
    switch (p.kind) {
    case PrimeDatum::Kind::dual_maximal:
        require(a.kind() == AlgKind::dual_numbers, "residue_field: (eps) needs dual numbers");
        return {false, a.base_field(), Poly(a.base_field())};
    case PrimeDatum::Kind::zero_ideal:
        require(a.kind() == AlgKind::poly_ring, "residue_field: (0) needs a polynomial ring");
        return {true, a.base_field(), Poly(a.base_field())};
    case PrimeDatum::Kind::poly_irreducible: {
        require(a.kind() == AlgKind::poly_ring, "residue_field: (f) needs a polynomial ring");
        const Poly &f = p.f;
        require(f.degree() >= 1, "residue_field: prime polynomial must be nonconstant");
        require(f.lead() == a.base_field().one(), "residue_field: prime polynomial must be monic");
        if (auto d = find_monic_divisor(f, f.degree() / 2))
            throw error("residue_field: polynomial is reducible, divisible by " + d->to_string());
        if (f.degree() == 1)
            return {false, a.base_field(), f};
        // extension field F_p[x]/(f)
        require(a.base_field().kind() == FieldKind::prime,
                "residue_field: extension residues need a prime base field");
        std::vector<int64_t> mod;
        for (int i = 0; i <= f.degree(); ++i)
            mod.push_back(std::get<int64_t>(f.coeff(static_cast<size_t>(i)).v));
        return {false, Field::extension(a.base_field().characteristic(), mod), f};
    }
    }
    throw error("unreachable");
}

} // namespace cohlen
