#pragma once

#include "endo/rational.hpp"

#include <cassert>
#include <vector>

namespace endo {

// Polynomials over Q, little-endian coefficient vectors.
using PolyQ = std::vector<Rational>;

inline void poly_trim(PolyQ &p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int poly_deg(const PolyQ &p) { return static_cast<int>(p.size()) - 1; }

inline PolyQ poly_mul(const PolyQ &a, const PolyQ &b) {
    if (a.empty() || b.empty()) return {};
    PolyQ r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    poly_trim(r);
    return r;
}

inline void poly_divmod(const PolyQ &a, const PolyQ &b, PolyQ &q, PolyQ &r) {
    r = a;
    poly_trim(r);
    q.clear();
    PolyQ bb = b;
    poly_trim(bb);
    assert(!bb.empty());
    if (r.size() < bb.size()) return;
    q.assign(r.size() - bb.size() + 1, Rational(0));
    Rational lead = bb.back();
    while (r.size() >= bb.size() && !r.empty()) {
        Rational f = r.back() / lead;
        size_t shift = r.size() - bb.size();
        q[shift] = f;
        for (size_t j = 0; j < bb.size(); ++j) r[shift + j] -= f * bb[j];
        poly_trim(r);
    }
}

inline PolyQ poly_mod(const PolyQ &a, const PolyQ &b) {
    PolyQ q, r;
    poly_divmod(a, b, q, r);
    return r;
}

inline PolyQ poly_gcd(PolyQ a, PolyQ b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        PolyQ r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto &x : a) x /= lead;
    }
    return a;
}

inline PolyQ poly_derivative(const PolyQ &p) {
    PolyQ r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rational(static_cast<long long>(i)));
    poly_trim(r);
    return r;
}

inline PolyQ poly_lcm(const PolyQ &a, const PolyQ &b) {
    if (a.empty() || b.empty()) return {};
    PolyQ g = poly_gcd(a, b);
    PolyQ q, r;
    poly_divmod(a, g, q, r);
    assert(r.empty());
    return poly_mul(q, b);
}

} // namespace endo
