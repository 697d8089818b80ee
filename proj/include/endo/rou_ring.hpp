#pragma once

#include "endo/cyclotomic.hpp"

#include <string>
#include <vector>

namespace endo {

// Element of the group ring Z[U_m] of the m-th roots of unity: formal integer
// combinations of zeta^0, ..., zeta^{m-1} (zeta^m = 1, no cyclotomic
// relations).
class RootOfUnity {
  public:
    RootOfUnity() : m_(1), c_(1, BigInt(0)) {}
    explicit RootOfUnity(int m) : m_(m), c_(m, BigInt(0)) {}
    RootOfUnity(int m, long long constant) : m_(m), c_(m, BigInt(0)) { c_[0] = BigInt(constant); }

    static RootOfUnity zeta_power(int m, int k); // zeta^k in Z[U_m]
    static RootOfUnity one(int m) { return RootOfUnity(m, 1); }

    int order() const { return m_; }
    const BigInt &coeff(int k) const { return c_[k]; }
    bool is_zero() const;
    bool is_one() const;

    RootOfUnity operator+(const RootOfUnity &o) const;
    RootOfUnity operator-(const RootOfUnity &o) const;
    RootOfUnity operator*(const RootOfUnity &o) const;
    RootOfUnity operator-() const;
    RootOfUnity &operator+=(const RootOfUnity &o) { return *this = *this + o; }
    RootOfUnity &operator*=(const RootOfUnity &o) { return *this = *this * o; }
    bool operator==(const RootOfUnity &o) const;
    bool operator!=(const RootOfUnity &o) const { return !(*this == o); }

    RootOfUnity scaled(const BigInt &k) const;

    Cyclo evaluate() const; // image under zeta -> exp(2 pi i / m)
    std::string to_string() const;

  private:
    int m_;
    std::vector<BigInt> c_;
    void check_same(const RootOfUnity &o) const;
};

} // namespace endo
