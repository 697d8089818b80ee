#include "endo/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

namespace endo {

namespace {
inline uint64_t lo32(uint64_t x) { return x & 0xffffffffull; }
} // namespace

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // Avoid UB on LLONG_MIN by going through unsigned.
    uint64_t u = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
    mag_.push_back(static_cast<uint32_t>(lo32(u)));
    if (u >> 32) mag_.push_back(static_cast<uint32_t>(u >> 32));
}

BigInt::BigInt(const std::string &decimal) { *this = from_string(decimal); }

BigInt BigInt::from_string(const std::string &decimal) {
    BigInt r;
    size_t i = 0;
    bool neg = false;
    if (i < decimal.size() && (decimal[i] == '-' || decimal[i] == '+')) {
        neg = decimal[i] == '-';
        ++i;
    }
    if (i >= decimal.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (; i < decimal.size(); ++i) {
        char c = decimal[i];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
        r = r * BigInt(10) + BigInt(c - '0');
    }
    if (neg) r = -r;
    return r;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

bool BigInt::is_odd() const { return !mag_.empty() && (mag_[0] & 1u); }

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

int BigInt::cmp_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b) {
    const std::vector<uint32_t> &x = a.size() >= b.size() ? a : b;
    const std::vector<uint32_t> &y = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(x.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0);
        r[i] = static_cast<uint32_t>(lo32(s));
        carry = s >> 32;
    }
    r[x.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// requires |a| >= |b|
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += (1ll << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(d);
    }
    assert(borrow == 0);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = r[i + j] + carry + static_cast<uint64_t>(a[i]) * b[j];
            r[i + j] = static_cast<uint32_t>(lo32(cur));
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = r[k] + carry;
            r[k] = static_cast<uint32_t>(lo32(cur));
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Schoolbook long division on limbs; fine at the sizes this library sees.
void BigInt::divmod_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b,
                        std::vector<uint32_t> &q, std::vector<uint32_t> &r) {
    assert(!b.empty());
    if (cmp_mag(a, b) < 0) {
        q.clear();
        r = a;
        return;
    }
    if (b.size() == 1) {
        q.assign(a.size(), 0);
        uint64_t rem = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / b[0]);
            rem = cur % b[0];
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        r.clear();
        if (rem) r.push_back(static_cast<uint32_t>(rem));
        return;
    }
    if (a.size() <= 4 && b.size() <= 2) {
        // fits in 128 bits
        unsigned __int128 ua = 0, ub = 0;
        for (size_t i = a.size(); i-- > 0;) ua = (ua << 32) | a[i];
        for (size_t i = b.size(); i-- > 0;) ub = (ub << 32) | b[i];
        unsigned __int128 uq = ua / ub, ur = ua % ub;
        q.clear();
        r.clear();
        while (uq) {
            q.push_back(static_cast<uint32_t>(uq & 0xffffffffu));
            uq >>= 32;
        }
        while (ur) {
            r.push_back(static_cast<uint32_t>(ur & 0xffffffffu));
            ur >>= 32;
        }
        return;
    }
    // Knuth-style normalized division.
    int shift = 0;
    uint32_t top = b.back();
    while ((top & 0x80000000u) == 0) {
        top <<= 1;
        ++shift;
    }
    auto shl = [&](const std::vector<uint32_t> &v) {
        if (shift == 0) return v;
        std::vector<uint32_t> o(v.size() + 1, 0);
        for (size_t i = 0; i < v.size(); ++i) {
            o[i] |= v[i] << shift;
            o[i + 1] |= static_cast<uint32_t>(static_cast<uint64_t>(v[i]) >> (32 - shift));
        }
        while (!o.empty() && o.back() == 0) o.pop_back();
        return o;
    };
    std::vector<uint32_t> u = shl(a), v = shl(b);
    size_t n = v.size(), m = u.size() - n;
    u.resize(u.size() + 1, 0);
    q.assign(m + 1, 0);
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = num / v[n - 1];
        uint64_t rhat = num % v[n - 1];
        while (qhat >= (1ull << 32) ||
               (n >= 2 && qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2]))) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= (1ull << 32)) break;
        }
        // multiply-subtract
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(lo32(p)) - borrow;
            if (t < 0) {
                t += (1ll << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<uint32_t>(t);
        }
        int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large
            t += (1ll << 32);
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<uint32_t>(lo32(s));
                c2 = s >> 32;
            }
            t += static_cast<int64_t>(c2);
        }
        u[j + n] = static_cast<uint32_t>(t);
        q[j] = static_cast<uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    // denormalize remainder
    u.resize(n);
    if (shift) {
        for (size_t i = 0; i < n; ++i) {
            uint32_t hi = (i + 1 < n) ? u[i + 1] : 0;
            u[i] = (u[i] >> shift) | (hi << (32 - shift));
        }
    }
    while (!u.empty() && u.back() == 0) u.pop_back();
    r = u;
}

BigInt BigInt::operator+(const BigInt &o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = sign_;
            r.mag_ = sub_mag(mag_, o.mag_);
        } else {
            r.sign_ = o.sign_;
            r.mag_ = sub_mag(o.mag_, mag_);
        }
    }
    return r;
}

BigInt BigInt::operator-(const BigInt &o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt &o) const {
    if (sign_ == 0 || o.sign_ == 0) return BigInt();
    if (mag_.size() == 1 && o.mag_.size() == 1) {
        uint64_t p = static_cast<uint64_t>(mag_[0]) * o.mag_[0];
        BigInt r;
        r.sign_ = sign_ * o.sign_;
        r.mag_.push_back(static_cast<uint32_t>(lo32(p)));
        if (p >> 32) r.mag_.push_back(static_cast<uint32_t>(p >> 32));
        return r;
    }
    BigInt r;
    r.sign_ = sign_ * o.sign_;
    r.mag_ = mul_mag(mag_, o.mag_);
    r.trim();
    return r;
}

void BigInt::divmod(const BigInt &a, const BigInt &b, BigInt &q, BigInt &r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (a.sign_ == 0) {
        q = BigInt();
        r = BigInt();
        return;
    }
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt BigInt::operator/(const BigInt &o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt &o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

BigInt BigInt::fdiv(const BigInt &a, const BigInt &b) {
    BigInt q, r;
    divmod(a, b, q, r);
    if (!r.is_zero() && (r.sign_ * b.sign_ < 0)) q -= BigInt(1);
    return q;
}

BigInt BigInt::fmod(const BigInt &a, const BigInt &b) {
    BigInt q, r;
    divmod(a, b, q, r);
    if (!r.is_zero() && (r.sign_ * b.sign_ < 0)) r += b;
    return r;
}

bool BigInt::operator==(const BigInt &o) const {
    return sign_ == o.sign_ && mag_ == o.mag_;
}

bool BigInt::operator<(const BigInt &o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

BigInt BigInt::lcm(const BigInt &a, const BigInt &b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    return (a * b).abs() / gcd(a, b);
}

BigInt BigInt::pow(const BigInt &base, unsigned long long e) {
    BigInt r(1), b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool BigInt::fits_longlong() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    uint64_t u = (static_cast<uint64_t>(mag_[1]) << 32) | mag_[0];
    if (sign_ > 0) return u <= 0x7fffffffffffffffull;
    return u <= 0x8000000000000000ull;
}

long long BigInt::to_longlong() const {
    assert(fits_longlong());
    uint64_t u = 0;
    for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    return sign_ < 0 ? -static_cast<long long>(u) : static_cast<long long>(u);
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
        uint64_t rem = 0;
        for (size_t i = m.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<uint32_t>(cur / 1000000000ull);
            rem = cur % 1000000000ull;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::ostream &operator<<(std::ostream &os, const BigInt &v) { return os << v.to_string(); }

} // namespace endo
