#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohlen {

/* Sign-magnitude arbitrary precision integer, base 2^32 limbs.
   Only what exact rational elimination needs: ring ops, divrem, gcd. */
class BigInt {
  public:
    BigInt() = default;

    BigInt(int64_t v)
    {
        if (v == 0)
            return;
        sign_ = v < 0 ? -1 : 1;
        uint64_t m = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
        d_.push_back(static_cast<uint32_t>(m));
        if (m >> 32)
            d_.push_back(static_cast<uint32_t>(m >> 32));
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    bool operator==(const BigInt &o) const { return sign_ == o.sign_ && d_ == o.d_; }
    bool operator!=(const BigInt &o) const { return !(*this == o); }

    bool operator<(const BigInt &o) const
    {
        if (sign_ != o.sign_)
            return sign_ < o.sign_;
        int c = ucmp(d_, o.d_);
        return sign_ >= 0 ? c < 0 : c > 0;
    }

    BigInt operator-() const
    {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt operator+(const BigInt &o) const
    {
        if (sign_ == 0)
            return o;
        if (o.sign_ == 0)
            return *this;
        BigInt r;
        if (sign_ == o.sign_) {
            r.d_ = uadd(d_, o.d_);
            r.sign_ = sign_;
        } else {
            int c = ucmp(d_, o.d_);
            if (c == 0)
                return BigInt();
            if (c > 0) {
                r.d_ = usub(d_, o.d_);
                r.sign_ = sign_;
            } else {
                r.d_ = usub(o.d_, d_);
                r.sign_ = o.sign_;
            }
        }
        return r;
    }

    BigInt operator-(const BigInt &o) const { return *this + (-o); }

    BigInt operator*(const BigInt &o) const
    {
        if (sign_ == 0 || o.sign_ == 0)
            return BigInt();
        BigInt r;
        r.sign_ = sign_ * o.sign_;
        r.d_.assign(d_.size() + o.d_.size(), 0);
        for (size_t i = 0; i < d_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < o.d_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(d_[i]) * o.d_[j] + r.d_[i + j] + carry;
                r.d_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            r.d_[i + o.d_.size()] += static_cast<uint32_t>(carry);
        }
        r.trim();
        return r;
    }

    /* truncated division: q = trunc(a/b), r = a - q*b (sign of r follows a) */
    static void divrem(const BigInt &a, const BigInt &b, BigInt &q, BigInt &r)
    {
        if (b.sign_ == 0)
            throw std::domain_error("BigInt: division by zero");
        if (ucmp(a.d_, b.d_) < 0) {
            q = BigInt();
            r = a;
            return;
        }
        std::vector<uint32_t> qm, rm;
        udivrem(a.d_, b.d_, qm, rm);
        q.d_ = std::move(qm);
        q.trim();
        q.sign_ = q.d_.empty() ? 0 : a.sign_ * b.sign_;
        r.d_ = std::move(rm);
        r.trim();
        r.sign_ = r.d_.empty() ? 0 : a.sign_;
    }

    BigInt operator/(const BigInt &o) const
    {
        BigInt q, r;
        divrem(*this, o, q, r);
        return q;
    }

    BigInt operator%(const BigInt &o) const
    {
        BigInt q, r;
        divrem(*this, o, q, r);
        return r;
    }

    static BigInt abs(const BigInt &a)
    {
        BigInt r = a;
        if (r.sign_ < 0)
            r.sign_ = 1;
        return r;
    }

    /* binary gcd on magnitudes; result nonnegative */
    static BigInt gcd(BigInt a, BigInt b)
    {
        if (a.sign_ < 0)
            a.sign_ = 1;
        if (b.sign_ < 0)
            b.sign_ = 1;
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        int shift = 0;
        while (a.even() && b.even()) {
            a.half();
            b.half();
            ++shift;
        }
        while (a.even())
            a.half();
        while (!b.is_zero()) {
            while (b.even())
                b.half();
            if (ucmp(a.d_, b.d_) > 0)
                std::swap(a, b);
            b = b - a;
            b.sign_ = b.d_.empty() ? 0 : 1;
        }
        for (int i = 0; i < shift; ++i)
            a.dbl();
        return a;
    }

    bool fits_int64() const
    {
        if (d_.size() > 2)
            return false;
        uint64_t m = mag64();
        if (sign_ >= 0)
            return m <= static_cast<uint64_t>(INT64_MAX);
        return m <= static_cast<uint64_t>(INT64_MAX) + 1;
    }

    int64_t to_int64() const
    {
        if (!fits_int64())
            throw std::overflow_error("BigInt: does not fit int64");
        uint64_t m = mag64();
        return sign_ < 0 ? -static_cast<int64_t>(m) : static_cast<int64_t>(m);
    }

    static BigInt from_string(const std::string &s)
    {
        BigInt r;
        size_t i = 0;
        int sg = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-')
                sg = -1;
            ++i;
        }
        if (i == s.size())
            throw std::invalid_argument("BigInt: empty literal");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: bad digit");
            r = r * BigInt(10) + BigInt(s[i] - '0');
        }
        if (!r.is_zero())
            r.sign_ = sg;
        return r;
    }

    std::string to_string() const
    {
        if (is_zero())
            return "0";
        std::string out;
        std::vector<uint32_t> m = d_;
        while (!m.empty()) {
            uint64_t rem = 0;
            for (size_t i = m.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!m.empty() && m.back() == 0)
                m.pop_back();
            std::string chunk = std::to_string(rem);
            if (!m.empty())
                chunk = std::string(9 - chunk.size(), '0') + chunk;
            out = chunk + out;
        }
        return sign_ < 0 ? "-" + out : out;
    }

  private:
    int sign_ = 0;
    std::vector<uint32_t> d_;

    uint64_t mag64() const
    {
        uint64_t m = 0;
        if (d_.size() > 1)
            m = static_cast<uint64_t>(d_[1]) << 32;
        if (!d_.empty())
            m |= d_[0];
        return m;
    }

    bool even() const { return d_.empty() || (d_[0] & 1) == 0; }

    void half()
    {
        uint32_t carry = 0;
        for (size_t i = d_.size(); i-- > 0;) {
            uint32_t next = d_[i] & 1;
            d_[i] = (d_[i] >> 1) | (carry << 31);
            carry = next;
        }
        trim();
        if (d_.empty())
            sign_ = 0;
    }

    void dbl()
    {
        uint32_t carry = 0;
        for (size_t i = 0; i < d_.size(); ++i) {
            uint32_t next = d_[i] >> 31;
            d_[i] = (d_[i] << 1) | carry;
            carry = next;
        }
        if (carry)
            d_.push_back(carry);
    }

    void trim()
    {
        while (!d_.empty() && d_.back() == 0)
            d_.pop_back();
        if (d_.empty())
            sign_ = 0;
    }

    static int ucmp(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b)
    {
        if (a.size() != b.size())
            return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i])
                return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> uadd(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b)
    {
        std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t cur = carry;
            if (i < a.size())
                cur += a[i];
            if (i < b.size())
                cur += b[i];
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        return r;
    }

    /* requires a >= b */
    static std::vector<uint32_t> usub(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b)
    {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            borrow = 0;
            if (cur < 0) {
                cur += (static_cast<int64_t>(1) << 32);
                borrow = 1;
            }
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        return r;
    }

    /* Knuth algorithm D on magnitudes; requires |a| >= |b|, b != 0 */
    static void udivrem(std::vector<uint32_t> a, std::vector<uint32_t> b, std::vector<uint32_t> &q,
                        std::vector<uint32_t> &r)
    {
        if (b.size() == 1) {
            q.assign(a.size(), 0);
            uint64_t rem = 0;
            for (size_t i = a.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | a[i];
                q[i] = static_cast<uint32_t>(cur / b[0]);
                rem = cur % b[0];
            }
            r.clear();
            if (rem)
                r.push_back(static_cast<uint32_t>(rem));
            return;
        }
        // normalize so the divisor's top limb has its high bit set
        int s = 0;
        for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1)
            ++s;
        a = shl(a, s);
        b = shl(b, s);
        size_t n = b.size(), m = a.size() - n;
        a.push_back(0);
        q.assign(m + 1, 0);
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(a[j + n]) << 32) | a[j + n - 1];
            uint64_t qhat = num / b[n - 1];
            uint64_t rhat = num % b[n - 1];
            while (qhat >> 32 ||
                   qhat * b[n - 2] > ((rhat << 32) | a[j + n - 2])) {
                --qhat;
                rhat += b[n - 1];
                if (rhat >> 32)
                    break;
            }
            // multiply-subtract, with add-back correction if we overshot
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * b[i] + carry;
                carry = p >> 32;
                int64_t t = static_cast<int64_t>(a[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
                borrow = 0;
                if (t < 0) {
                    t += (static_cast<int64_t>(1) << 32);
                    borrow = 1;
                }
                a[i + j] = static_cast<uint32_t>(t);
            }
            int64_t t = static_cast<int64_t>(a[j + n]) - static_cast<int64_t>(carry) - borrow;
            if (t < 0) {
                t += (static_cast<int64_t>(1) << 32);
                a[j + n] = static_cast<uint32_t>(t);
                --qhat;
                uint64_t c2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t cur = static_cast<uint64_t>(a[i + j]) + b[i] + c2;
                    a[i + j] = static_cast<uint32_t>(cur);
                    c2 = cur >> 32;
                }
                a[j + n] = static_cast<uint32_t>(a[j + n] + c2);
            } else {
                a[j + n] = static_cast<uint32_t>(t);
            }
            q[j] = static_cast<uint32_t>(qhat);
        }
        a.resize(n);
        r = shr(a, s);
        while (!q.empty() && q.back() == 0)
            q.pop_back();
        while (!r.empty() && r.back() == 0)
            r.pop_back();
    }

    static std::vector<uint32_t> shl(const std::vector<uint32_t> &v, int s)
    {
        if (s == 0)
            return v;
        std::vector<uint32_t> r(v.size() + 1, 0);
        for (size_t i = 0; i < v.size(); ++i) {
            r[i] |= v[i] << s;
            r[i + 1] = static_cast<uint32_t>(static_cast<uint64_t>(v[i]) >> (32 - s));
        }
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        return r;
    }

    static std::vector<uint32_t> shr(const std::vector<uint32_t> &v, int s)
    {
        if (s == 0)
            return v;
        std::vector<uint32_t> r(v.size(), 0);
        for (size_t i = 0; i < v.size(); ++i) {
            r[i] = v[i] >> s;
            if (i + 1 < v.size())
                r[i] |= static_cast<uint32_t>(static_cast<uint64_t>(v[i + 1]) << (32 - s));
        }
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        return r;
    }
};

} // namespace cohlen
