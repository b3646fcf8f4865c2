#pragma once

#include "cohlen/bigint.hpp"

namespace cohlen {

/* Exact rational with canonical form: reduced, positive denominator. */
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t v) : num_(v), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt &num() const { return num_; }
    const BigInt &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational operator+(const Rational &o) const { return {num_ * o.den_ + o.num_ * den_, den_ * o.den_}; }
    Rational operator-(const Rational &o) const { return {num_ * o.den_ - o.num_ * den_, den_ * o.den_}; }
    Rational operator*(const Rational &o) const { return {num_ * o.num_, den_ * o.den_}; }

    Rational operator/(const Rational &o) const
    {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        return {num_ * o.den_, den_ * o.num_};
    }

    Rational operator-() const
    {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    bool operator==(const Rational &o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational &o) const { return !(*this == o); }

    std::string to_string() const
    {
        if (den_ == BigInt(1))
            return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    static Rational from_string(const std::string &s)
    {
        auto slash = s.find('/');
        if (slash == std::string::npos)
            return {BigInt::from_string(s), BigInt(1)};
        return {BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1))};
    }

  private:
    BigInt num_, den_;

    void normalize()
    {
        if (den_.is_zero())
            throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (g != BigInt(1)) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

} // namespace cohlen
