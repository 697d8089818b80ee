#include "endo/smith.hpp"

#include <cassert>
#include <stdexcept>

namespace endo {

IntMat to_integer(const RatMat &m) {
    IntMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            assert(m(i, j).is_integer());
            r(i, j) = m(i, j).num();
        }
    return r;
}

RatMat to_rational(const IntMat &m) {
    RatMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

RatVec to_rational(const IntVec &v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

namespace {

void row_op(IntMat &D, IntMat &U, int dst, int src, const BigInt &f) {
    for (int j = 0; j < D.cols(); ++j) D(dst, j) += f * D(src, j);
    for (int j = 0; j < U.cols(); ++j) U(dst, j) += f * U(src, j);
}

void col_op(IntMat &D, IntMat &V, int dst, int src, const BigInt &f) {
    for (int i = 0; i < D.rows(); ++i) D(i, dst) += f * D(i, src);
    for (int i = 0; i < V.rows(); ++i) V(i, dst) += f * V(i, src);
}

void swap_rows(IntMat &D, IntMat &U, int i, int j) {
    D.swap_rows(i, j);
    U.swap_rows(i, j);
}

void swap_cols(IntMat &D, IntMat &V, int i, int j) {
    for (int r = 0; r < D.rows(); ++r) std::swap(D(r, i), D(r, j));
    for (int r = 0; r < V.rows(); ++r) std::swap(V(r, i), V(r, j));
}

} // namespace

SmithResult smith_normal_form(const IntMat &M) {
    int m = M.rows(), n = M.cols();
    SmithResult res{IntMat::identity(m), M, IntMat::identity(n)};
    IntMat &D = res.D;
    IntMat &U = res.U;
    IntMat &V = res.V;
    int k = 0;
    int nmin = std::min(m, n);
    while (k < nmin) {
        // find smallest nonzero |entry| in the trailing block
        int pi = -1, pj = -1;
        BigInt best;
        for (int i = k; i < m; ++i)
            for (int j = k; j < n; ++j) {
                if (D(i, j).is_zero()) continue;
                BigInt a = D(i, j).abs();
                if (pi < 0 || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break; // trailing block zero
        if (pi != k) swap_rows(D, U, pi, k);
        if (pj != k) swap_cols(D, V, pj, k);

        bool reduced = false;
        while (!reduced) {
            reduced = true;
            for (int i = k + 1; i < m; ++i) {
                if (D(i, k).is_zero()) continue;
                BigInt q = BigInt::fdiv(D(i, k), D(k, k));
                row_op(D, U, i, k, -q);
                if (!D(i, k).is_zero()) {
                    swap_rows(D, U, i, k); // strictly smaller remainder becomes pivot
                    reduced = false;
                }
            }
            for (int j = k + 1; j < n; ++j) {
                if (D(k, j).is_zero()) continue;
                BigInt q = BigInt::fdiv(D(k, j), D(k, k));
                col_op(D, V, j, k, -q);
                if (!D(k, j).is_zero()) {
                    swap_cols(D, V, j, k);
                    reduced = false;
                }
            }
        }
        // pivot divides the rest of the block?
        bool divides = true;
        for (int i = k + 1; i < m && divides; ++i)
            for (int j = k + 1; j < n && divides; ++j)
                if (!(D(i, j) % D(k, k)).is_zero()) {
                    row_op(D, U, k, i, BigInt(1));
                    divides = false;
                }
        if (!divides) continue; // re-reduce with the new row folded in
        if (D(k, k).is_negative()) {
            for (int j = 0; j < n; ++j) D(k, j) = -D(k, j);
            for (int j = 0; j < m; ++j) U(k, j) = -U(k, j);
        }
        ++k;
    }
    return res;
}

bool solve_integer(const IntMat &A, const IntVec &b, IntVec &x) {
    assert(static_cast<int>(b.size()) == A.rows());
    SmithResult s = smith_normal_form(A);
    IntVec c = s.U * b; // U A V = D  =>  A = U^-1 D V^-1; solve D y = U b, x = V y
    IntVec y(A.cols(), BigInt(0));
    int nmin = std::min(A.rows(), A.cols());
    for (int i = 0; i < nmin; ++i) {
        if (s.D(i, i).is_zero()) {
            if (!c[i].is_zero()) return false;
        } else {
            if (!(c[i] % s.D(i, i)).is_zero()) return false;
            y[i] = c[i] / s.D(i, i);
        }
    }
    for (int i = nmin; i < A.rows(); ++i)
        if (!c[i].is_zero()) return false;
    x = s.V * y;
    return true;
}

bool in_lattice_span(const IntMat &gens, const IntVec &v) {
    if (gens.rows() == 0) {
        for (const auto &e : v)
            if (!e.is_zero()) return false;
        return true;
    }
    IntVec x;
    return solve_integer(gens.transpose(), v, x);
}

bool in_rational_span_subgroup(const RatMat &gens, const RatVec &v) {
    if (gens.rows() == 0) {
        for (const auto &e : v)
            if (!e.is_zero()) return false;
        return true;
    }
    BigInt den = common_denominator(gens);
    den = BigInt::lcm(den, common_denominator(v));
    IntMat g(gens.rows(), gens.cols());
    for (int i = 0; i < gens.rows(); ++i)
        for (int j = 0; j < gens.cols(); ++j) {
            Rational scaled = gens(i, j) * Rational(den);
            g(i, j) = scaled.num();
        }
    IntVec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = (v[i] * Rational(den)).num();
    return in_lattice_span(g, w);
}

bool mixed_member(const RatMat &rational_cols, const RatMat &integral_cols, const RatVec &u) {
    int n = static_cast<int>(u.size());
    // Quotient out the column space of R: find a basis of the left kernel of R
    // (rows t with t R = 0); membership reduces to t G n = t u over Z in the
    // quotient coordinates.
    RatMat R = rational_cols;
    if (R.cols() == 0) R = RatMat(n, 0);
    assert(R.rows() == n);
    RatMat Rt = R.transpose();
    std::vector<RatVec> lk = kernel_basis(Rt); // vectors t with R^T . t... careful: kernel of R^T = left kernel of R
    if (lk.empty()) return true;               // R spans everything
    RatMat T = RatMat::from_rows(lk);          // q x n, T R = 0
    RatVec tu = T * u;
    RatMat TG(T.rows(), integral_cols.cols());
    if (integral_cols.cols() > 0) TG = T * integral_cols;
    // Need: exists integer vector n with TG n = tu.
    return in_rational_span_subgroup(TG.transpose(), tu);
}

IntMat saturate_rows(const IntMat &rows) {
    if (rows.rows() == 0) return rows;
    int n = rows.cols();
    // Saturation = kernel-of-kernel: compute a rational kernel K of rows^T
    // (vectors orthogonal in the functional sense), then integral kernel of K.
    RatMat rq = to_rational(rows);
    std::vector<RatVec> complement = kernel_basis(rq); // v with rows . v = 0
    if (complement.empty()) {
        // row span is all of Q^n: saturation is Z^n
        return IntMat::identity(n);
    }
    RatMat C = RatMat::from_rows(complement); // c x n
    // integral vectors w with C w = 0: clear denominators, use SNF
    BigInt den = common_denominator(C);
    IntMat Ci(C.rows(), n);
    for (int i = 0; i < C.rows(); ++i)
        for (int j = 0; j < n; ++j) Ci(i, j) = (C(i, j) * Rational(den)).num();
    SmithResult s = smith_normal_form(Ci);
    // kernel of Ci = V * (unit vectors for zero diagonal entries)
    int nmin = std::min(Ci.rows(), Ci.cols());
    std::vector<IntVec> basis;
    for (int j = 0; j < n; ++j) {
        bool zero_col = j >= nmin || s.D(j, j).is_zero();
        if (!zero_col) continue;
        basis.push_back(s.V.col(j));
    }
    if (basis.empty()) return IntMat(0, n);
    return IntMat::from_rows(basis);
}

IntMat clear_denominators(const RatMat &m) {
    BigInt d = common_denominator(m);
    IntMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = (m(i, j) * Rational(d)).num();
    return r;
}

BigInt common_denominator(const RatMat &m) {
    BigInt d(1);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) d = BigInt::lcm(d, m(i, j).den());
    return d;
}

BigInt common_denominator(const RatVec &v) {
    BigInt d(1);
    for (const auto &x : v) d = BigInt::lcm(d, x.den());
    return d;
}

} // namespace endo
