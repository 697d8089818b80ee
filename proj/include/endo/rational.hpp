#pragma once

#include "endo/bigint.hpp"

#include <iosfwd>
#include <string>

namespace endo {

// Exact rational number; denominator kept positive and coprime to the numerator.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    // Parses "p/q" or "p".
    static Rational from_string(const std::string &s);

    const BigInt &num() const { return num_; }
    const BigInt &den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const { return Rational(-num_, den_, nocheck{}); }

    Rational operator+(const Rational &o) const;
    Rational operator-(const Rational &o) const;
    Rational operator*(const Rational &o) const;
    Rational operator/(const Rational &o) const;

    Rational &operator+=(const Rational &o) { return *this = *this + o; }
    Rational &operator-=(const Rational &o) { return *this = *this - o; }
    Rational &operator*=(const Rational &o) { return *this = *this * o; }
    Rational &operator/=(const Rational &o) { return *this = *this / o; }

    bool operator==(const Rational &o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational &o) const { return !(*this == o); }
    bool operator<(const Rational &o) const { return (num_ * o.den_) < (o.num_ * den_); }
    bool operator>(const Rational &o) const { return o < *this; }
    bool operator<=(const Rational &o) const { return !(o < *this); }
    bool operator>=(const Rational &o) const { return !(*this < o); }

    Rational inverse() const;
    Rational abs() const { return num_.is_negative() ? -*this : *this; }

    BigInt floor() const { return BigInt::fdiv(num_, den_); }
    // Representative in [0,1): x - floor(x).
    Rational frac() const;

    std::string to_string() const;

  private:
    struct nocheck {};
    Rational(BigInt n, BigInt d, nocheck) : num_(std::move(n)), den_(std::move(d)) {}
    void normalize();

    BigInt num_;
    BigInt den_;
};

std::ostream &operator<<(std::ostream &os, const Rational &v);

} // namespace endo
