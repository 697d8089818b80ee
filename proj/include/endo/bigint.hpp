#pragma once

#include <cstdint>
#include <string>
#include <vector>
#include <iosfwd>

namespace endo {

// Arbitrary-precision signed integer, sign-magnitude with base 2^32 limbs.
// Small values (<= 1 limb) take fast paths through 64/128-bit arithmetic.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v);
    explicit BigInt(const std::string &decimal);

    static BigInt from_string(const std::string &decimal);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const;
    bool is_odd() const;
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt &o) const;
    BigInt operator-(const BigInt &o) const;
    BigInt operator*(const BigInt &o) const;
    // Truncated division (C semantics: quotient rounds toward zero).
    BigInt operator/(const BigInt &o) const;
    BigInt operator%(const BigInt &o) const;

    BigInt &operator+=(const BigInt &o) { return *this = *this + o; }
    BigInt &operator-=(const BigInt &o) { return *this = *this - o; }
    BigInt &operator*=(const BigInt &o) { return *this = *this * o; }
    BigInt &operator/=(const BigInt &o) { return *this = *this / o; }
    BigInt &operator%=(const BigInt &o) { return *this = *this % o; }

    static void divmod(const BigInt &a, const BigInt &b, BigInt &q, BigInt &r);
    // Floor division helpers (remainder has the sign of the divisor).
    static BigInt fdiv(const BigInt &a, const BigInt &b);
    static BigInt fmod(const BigInt &a, const BigInt &b);

    bool operator==(const BigInt &o) const;
    bool operator!=(const BigInt &o) const { return !(*this == o); }
    bool operator<(const BigInt &o) const;
    bool operator>(const BigInt &o) const { return o < *this; }
    bool operator<=(const BigInt &o) const { return !(o < *this); }
    bool operator>=(const BigInt &o) const { return !(*this < o); }

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt lcm(const BigInt &a, const BigInt &b);
    static BigInt pow(const BigInt &base, unsigned long long e);

    bool fits_longlong() const;
    long long to_longlong() const;   // asserts fits_longlong()
    std::string to_string() const;

  private:
    int sign_ = 0;                   // -1, 0, +1
    std::vector<uint32_t> mag_;      // little-endian limbs, no trailing zeros

    void trim();
    static int cmp_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b);
    static void divmod_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b,
                           std::vector<uint32_t> &q, std::vector<uint32_t> &r);
};

std::ostream &operator<<(std::ostream &os, const BigInt &v);

} // namespace endo
