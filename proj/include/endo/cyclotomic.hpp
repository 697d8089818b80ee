#pragma once

#include "endo/matrix.hpp"
#include "endo/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace endo {

// Element of Q(zeta_n), stored as a polynomial in zeta_n of degree < phi(n)
// reduced modulo the n-th cyclotomic polynomial.  Binary operations lift both
// operands into Q(zeta_lcm).
class Cyclo {
  public:
    Cyclo() : order_(1), c_{Rational(0)} {}
    Cyclo(long long v) : order_(1), c_{Rational(v)} {}
    Cyclo(const Rational &v) : order_(1), c_{v} {}

    // zeta_den^num, i.e. exp(2*pi*i*num/den).
    static Cyclo root_of_unity(const BigInt &num, const BigInt &den);
    static Cyclo root_of_unity(long long num, long long den) {
        return root_of_unity(BigInt(num), BigInt(den));
    }
    // exp(2*pi*i*q)
    static Cyclo from_exponent(const Rational &q) { return root_of_unity(q.num(), q.den()); }
    static Cyclo imaginary_unit() { return root_of_unity(1, 4); }

    int order() const { return order_; }
    bool is_zero() const;
    bool is_rational() const;
    std::optional<Rational> as_rational() const;

    Cyclo operator-() const;
    Cyclo operator+(const Cyclo &o) const;
    Cyclo operator-(const Cyclo &o) const;
    Cyclo operator*(const Cyclo &o) const;
    Cyclo operator/(const Cyclo &o) const;
    Cyclo &operator+=(const Cyclo &o) { return *this = *this + o; }
    Cyclo &operator-=(const Cyclo &o) { return *this = *this - o; }
    Cyclo &operator*=(const Cyclo &o) { return *this = *this * o; }

    bool operator==(const Cyclo &o) const;
    bool operator!=(const Cyclo &o) const { return !(*this == o); }

    Cyclo inverse() const;
    // Complex conjugation: zeta -> zeta^{-1}.
    Cyclo conj() const;

    // If *this equals exp(2*pi*i*q) for some rational q, returns q in [0,1).
    std::optional<Rational> as_root_of_unity() const;

    std::string to_string() const;

    static const std::vector<Rational> &cyclotomic_poly(int n); // monic, as coefficient vector

  private:
    int order_;
    std::vector<Rational> c_; // coefficients of 1, zeta, ..., deg < phi(order_)

    Cyclo(int order, std::vector<Rational> coeffs) : order_(order), c_(std::move(coeffs)) {}
    static Cyclo make_reduced(int order, std::vector<Rational> poly);
    Cyclo lifted_to(int m) const; // order_ | m; no shrinking
    void shrink();                // lower the order when the value allows it
    static int phi(int n);
};

using CycMat = Mat<Cyclo>;

CycMat to_cyclotomic(const Mat<Rational> &m);
CycMat to_cyclotomic(const Mat<BigInt> &m);
CycMat conj(const CycMat &m);

} // namespace endo
