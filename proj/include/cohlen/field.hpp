#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "cohlen/common.hpp"
#include "cohlen/rational.hpp"

namespace cohlen {

enum class FieldKind { prime, extension, rationals };

/* Residues of a finite extension are stored as coefficient vectors over F_p,
   low degree first, length = deg(modulus). */
using ExtVec = std::vector<int64_t>;

struct FieldElem {
    std::variant<int64_t, ExtVec, Rational> v;

    bool operator==(const FieldElem &o) const { return v == o.v; }
    bool operator!=(const FieldElem &o) const { return !(*this == o); }
};

namespace fpdetail {

inline int64_t norm_mod(int64_t a, int64_t p)
{
    a %= p;
    return a < 0 ? a + p : a;
}

inline int64_t mulmod(int64_t a, int64_t b, int64_t p) { return (a * b) % p; }

inline int64_t powmod(int64_t a, int64_t e, int64_t p)
{
    int64_t r = 1 % p;
    a = norm_mod(a, p);
    while (e > 0) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline int64_t invmod(int64_t a, int64_t p)
{
    a = norm_mod(a, p);
    require(a != 0, "inverse of zero");
    // extended Euclid
    int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        int64_t q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    return norm_mod(t, p);
}

inline bool is_prime(int64_t p)
{
    if (p < 2)
        return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

/* dense F_p polynomial helpers on int64 coefficient vectors (low degree first,
   no trailing zeros) */

inline void ptrim(std::vector<int64_t> &a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline std::vector<int64_t> pmul(const std::vector<int64_t> &a, const std::vector<int64_t> &b, int64_t p)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<int64_t> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    ptrim(r);
    return r;
}

/* remainder of a modulo monic-normalizable b */
inline std::vector<int64_t> pmod(std::vector<int64_t> a, const std::vector<int64_t> &b, int64_t p)
{
    require(!b.empty(), "poly mod by zero");
    int64_t leadinv = invmod(b.back(), p);
    while (a.size() >= b.size()) {
        int64_t c = mulmod(a.back(), leadinv, p);
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[off + i] = norm_mod(a[off + i] - c * b[i], p);
        ptrim(a);
    }
    return a;
}

/* enumerate monic polynomials of a fixed degree to trial-divide a candidate
   modulus; degrees stay tiny at the scales this library targets */
inline bool has_monic_divisor_of_degree(const std::vector<int64_t> &f, int deg, int64_t p)
{
    std::vector<int64_t> cand(static_cast<size_t>(deg) + 1, 0);
    cand[static_cast<size_t>(deg)] = 1;
    int64_t count = 1;
    for (int i = 0; i < deg; ++i) {
        count *= p;
        require(count <= 2000000, "irreducibility trial division out of range");
    }
    for (int64_t idx = 0; idx < count; ++idx) {
        int64_t t = idx;
        for (int i = 0; i < deg; ++i) {
            cand[static_cast<size_t>(i)] = t % p;
            t /= p;
        }
        if (pmod(f, cand, p).empty())
            return true;
    }
    return false;
}

/* returns an empty vector when irreducible, otherwise a witness factor */
inline std::vector<int64_t> reducible_witness(const std::vector<int64_t> &f, int64_t p)
{
    int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; d <= deg / 2; ++d) {
        std::vector<int64_t> cand(static_cast<size_t>(d) + 1, 0);
        cand[static_cast<size_t>(d)] = 1;
        int64_t count = 1;
        for (int i = 0; i < d; ++i) {
            count *= p;
            require(count <= 2000000, "irreducibility trial division out of range");
        }
        for (int64_t idx = 0; idx < count; ++idx) {
            int64_t t = idx;
            for (int i = 0; i < d; ++i) {
                cand[static_cast<size_t>(i)] = t % p;
                t /= p;
            }
            if (pmod(f, cand, p).empty())
                return cand;
        }
    }
    return {};
}

} // namespace fpdetail

/* An exact coefficient field: F_p, F_p[x]/(f) with f monic irreducible, or Q.
   Immutable value type; extension data shared. */
class Field {
  public:
    static Field prime(int64_t p)
    {
        require(fpdetail::is_prime(p), "Field: modulus " + std::to_string(p) + " is not prime");
        Field f;
        f.kind_ = FieldKind::prime;
        f.p_ = p;
        return f;
    }

    /* modulus: coefficients low degree first, must be monic irreducible over F_p */
    static Field extension(int64_t p, std::vector<int64_t> modulus)
    {
        require(fpdetail::is_prime(p), "Field: modulus " + std::to_string(p) + " is not prime");
        for (auto &c : modulus)
            c = fpdetail::norm_mod(c, p);
        fpdetail::ptrim(modulus);
        require(modulus.size() >= 2, "Field: extension modulus must have degree >= 1");
        require(modulus.back() == 1, "Field: extension modulus must be monic");
        auto witness = fpdetail::reducible_witness(modulus, p);
        if (!witness.empty()) {
            std::string w = "[";
            for (size_t i = 0; i < witness.size(); ++i)
                w += (i ? "," : "") + std::to_string(witness[i]);
            w += "]";
            throw error("Field: modulus is reducible, divisible by " + w);
        }
        Field f;
        f.kind_ = FieldKind::extension;
        f.p_ = p;
        f.mod_ = std::make_shared<const std::vector<int64_t>>(std::move(modulus));
        return f;
    }

    static Field rationals()
    {
        Field f;
        f.kind_ = FieldKind::rationals;
        return f;
    }

    FieldKind kind() const { return kind_; }
    int64_t characteristic() const { return kind_ == FieldKind::rationals ? 0 : p_; }

    int ext_degree() const
    {
        return kind_ == FieldKind::extension ? static_cast<int>(mod_->size()) - 1 : 1;
    }

    const std::vector<int64_t> &ext_modulus() const
    {
        require(kind_ == FieldKind::extension, "Field: not an extension field");
        return *mod_;
    }

    bool operator==(const Field &o) const
    {
        if (kind_ != o.kind_)
            return false;
        if (kind_ == FieldKind::rationals)
            return true;
        if (p_ != o.p_)
            return false;
        if (kind_ == FieldKind::extension)
            return *mod_ == *o.mod_;
        return true;
    }
    bool operator!=(const Field &o) const { return !(*this == o); }

    /* number of elements; 0 means infinite */
    uint64_t size() const
    {
        if (kind_ == FieldKind::rationals)
            return 0;
        uint64_t s = 1;
        for (int i = 0; i < ext_degree(); ++i)
            s *= static_cast<uint64_t>(p_);
        return s;
    }

    FieldElem zero() const { return from_int(0); }
    FieldElem one() const { return from_int(1); }

    FieldElem from_int(int64_t v) const
    {
        switch (kind_) {
        case FieldKind::prime:
            return {fpdetail::norm_mod(v, p_)};
        case FieldKind::extension: {
            ExtVec e(static_cast<size_t>(ext_degree()), 0);
            e[0] = fpdetail::norm_mod(v, p_);
            return {e};
        }
        case FieldKind::rationals:
            return {Rational(v)};
        }
        throw error("unreachable");
    }

    /* the class of x in F_p[x]/(f) */
    FieldElem generator() const
    {
        require(kind_ == FieldKind::extension, "Field: generator only for extensions");
        ExtVec e(static_cast<size_t>(ext_degree()), 0);
        if (ext_degree() >= 2)
            e[1] = 1;
        else
            e[0] = fpdetail::norm_mod(-(*mod_)[0], p_); // degree-1 modulus: x = -c
        return {e};
    }

    /* build an element from F_p coefficients (reduced mod the modulus) */
    FieldElem from_coeffs(std::vector<int64_t> c) const
    {
        require(kind_ == FieldKind::extension, "Field: from_coeffs only for extensions");
        for (auto &x : c)
            x = fpdetail::norm_mod(x, p_);
        c = fpdetail::pmod(std::move(c), *mod_, p_);
        c.resize(static_cast<size_t>(ext_degree()), 0);
        return {c};
    }

    bool is_zero(const FieldElem &a) const
    {
        switch (kind_) {
        case FieldKind::prime:
            return std::get<int64_t>(a.v) == 0;
        case FieldKind::extension: {
            for (int64_t c : std::get<ExtVec>(a.v))
                if (c != 0)
                    return false;
            return true;
        }
        case FieldKind::rationals:
            return std::get<Rational>(a.v).is_zero();
        }
        throw error("unreachable");
    }

    FieldElem add(const FieldElem &a, const FieldElem &b) const
    {
        switch (kind_) {
        case FieldKind::prime:
            return {fpdetail::norm_mod(std::get<int64_t>(a.v) + std::get<int64_t>(b.v), p_)};
        case FieldKind::extension: {
            ExtVec r = std::get<ExtVec>(a.v);
            const ExtVec &y = std::get<ExtVec>(b.v);
            for (size_t i = 0; i < r.size(); ++i)
                r[i] = fpdetail::norm_mod(r[i] + y[i], p_);
            return {r};
        }
        case FieldKind::rationals:
            return {std::get<Rational>(a.v) + std::get<Rational>(b.v)};
        }
        throw error("unreachable");
    }

    FieldElem neg(const FieldElem &a) const
    {
        switch (kind_) {
        case FieldKind::prime:
            return {fpdetail::norm_mod(-std::get<int64_t>(a.v), p_)};
        case FieldKind::extension: {
            ExtVec r = std::get<ExtVec>(a.v);
            for (auto &c : r)
                c = fpdetail::norm_mod(-c, p_);
            return {r};
        }
        case FieldKind::rationals:
            return {-std::get<Rational>(a.v)};
        }
        throw error("unreachable");
    }

    FieldElem sub(const FieldElem &a, const FieldElem &b) const { return add(a, neg(b)); }

    FieldElem mul(const FieldElem &a, const FieldElem &b) const
    {
        switch (kind_) {
        case FieldKind::prime:
            return {fpdetail::mulmod(std::get<int64_t>(a.v), std::get<int64_t>(b.v), p_)};
        case FieldKind::extension: {
            std::vector<int64_t> prod = fpdetail::pmul(std::get<ExtVec>(a.v), std::get<ExtVec>(b.v), p_);
            prod = fpdetail::pmod(std::move(prod), *mod_, p_);
            prod.resize(static_cast<size_t>(ext_degree()), 0);
            return {prod};
        }
        case FieldKind::rationals:
            return {std::get<Rational>(a.v) * std::get<Rational>(b.v)};
        }
        throw error("unreachable");
    }

    FieldElem inv(const FieldElem &a) const
    {
        require(!is_zero(a), "Field: inverse of zero");
        switch (kind_) {
        case FieldKind::prime:
            return {fpdetail::invmod(std::get<int64_t>(a.v), p_)};
        case FieldKind::extension: {
            // Fermat: a^(q-2) with q = p^deg
            uint64_t q = size();
            FieldElem r = one(), base = a;
            uint64_t e = q - 2;
            while (e > 0) {
                if (e & 1)
                    r = mul(r, base);
                base = mul(base, base);
                e >>= 1;
            }
            return r;
        }
        case FieldKind::rationals:
            return {Rational(1) / std::get<Rational>(a.v)};
        }
        throw error("unreachable");
    }

    FieldElem div(const FieldElem &a, const FieldElem &b) const { return mul(a, inv(b)); }

    std::string to_string(const FieldElem &a) const
    {
        switch (kind_) {
        case FieldKind::prime:
            return std::to_string(std::get<int64_t>(a.v));
        case FieldKind::extension: {
            const ExtVec &e = std::get<ExtVec>(a.v);
            std::string s = "[";
            for (size_t i = 0; i < e.size(); ++i)
                s += (i ? "," : "") + std::to_string(e[i]);
            return s + "]";
        }
        case FieldKind::rationals:
            return std::get<Rational>(a.v).to_string();
        }
        throw error("unreachable");
    }

  private:
    FieldKind kind_ = FieldKind::prime;
    int64_t p_ = 2;
    std::shared_ptr<const std::vector<int64_t>> mod_;
};

} // namespace cohlen
