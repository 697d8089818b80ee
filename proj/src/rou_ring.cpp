#include "endo/rou_ring.hpp"

#include <sstream>
#include <stdexcept>

namespace endo {

RootOfUnity RootOfUnity::zeta_power(int m, int k) {
    RootOfUnity r(m);
    int kk = ((k % m) + m) % m;
    r.c_[kk] = BigInt(1);
    return r;
}

bool RootOfUnity::is_zero() const {
    for (const auto &x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool RootOfUnity::is_one() const {
    if (!c_[0].is_one()) return false;
    for (int k = 1; k < m_; ++k)
        if (!c_[k].is_zero()) return false;
    return true;
}

void RootOfUnity::check_same(const RootOfUnity &o) const {
    if (m_ != o.m_) throw std::invalid_argument("Z[U_m]: mixed orders");
}

RootOfUnity RootOfUnity::operator+(const RootOfUnity &o) const {
    check_same(o);
    RootOfUnity r(m_);
    for (int k = 0; k < m_; ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

RootOfUnity RootOfUnity::operator-(const RootOfUnity &o) const {
    check_same(o);
    RootOfUnity r(m_);
    for (int k = 0; k < m_; ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity &o) const {
    check_same(o);
    RootOfUnity r(m_);
    for (int a = 0; a < m_; ++a) {
        if (c_[a].is_zero()) continue;
        for (int b = 0; b < m_; ++b) {
            if (o.c_[b].is_zero()) continue;
            r.c_[(a + b) % m_] += c_[a] * o.c_[b];
        }
    }
    return r;
}

RootOfUnity RootOfUnity::operator-() const {
    RootOfUnity r(m_);
    for (int k = 0; k < m_; ++k) r.c_[k] = -c_[k];
    return r;
}

bool RootOfUnity::operator==(const RootOfUnity &o) const { return m_ == o.m_ && c_ == o.c_; }

RootOfUnity RootOfUnity::scaled(const BigInt &k) const {
    RootOfUnity r(m_);
    for (int i = 0; i < m_; ++i) r.c_[i] = c_[i] * k;
    return r;
}

Cyclo RootOfUnity::evaluate() const {
    Cyclo acc(0);
    for (int k = 0; k < m_; ++k) {
        if (c_[k].is_zero()) continue;
        acc += Cyclo(Rational(c_[k])) * Cyclo::root_of_unity(k, m_);
    }
    return acc;
}

std::string RootOfUnity::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < m_; ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        if (k == 0) os << c_[k].to_string();
        else if (c_[k].is_one()) os << "z^" << k;
        else os << c_[k].to_string() << "*z^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace endo
