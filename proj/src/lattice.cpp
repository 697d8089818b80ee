#include "endo/lattice.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace endo {

Lattice Lattice::from_rows(int ambient, const std::vector<IntVec> &rows) {
    Lattice l;
    l.ambient_dim = ambient;
    if (rows.empty()) {
        l.basis = IntMat(0, ambient);
        return l;
    }
    IntMat m = IntMat::from_rows(rows);
    assert(m.cols() == ambient);
    if (endo::rank(to_rational(m)) != m.rows()) throw std::invalid_argument("Lattice: dependent basis rows");
    l.basis = m;
    return l;
}

bool Lattice::contains_rational(const RatVec &v) const {
    RatVec x;
    RatMat bt = to_rational(basis).transpose();
    return solve_linear(bt, v, x);
}

BigInt AbelianQuotientDescriptor::torsion_order() const {
    BigInt p(1);
    for (const auto &d : invariant_factors) p *= d;
    return p;
}

std::string AbelianQuotientDescriptor::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto &d : invariant_factors) {
        os << (first ? "" : " + ") << "Z/" << d.to_string();
        first = false;
    }
    if (free_rank) {
        os << (first ? "" : " + ") << "Z^" << free_rank;
        first = false;
    }
    if (divisible_rank) {
        os << (first ? "" : " + ") << "(Q/Z)^" << divisible_rank;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

AbelianQuotientDescriptor cokernel_structure(int n, const IntMat &rel_rows) {
    AbelianQuotientDescriptor d;
    if (rel_rows.rows() == 0) {
        d.free_rank = n;
        return d;
    }
    assert(rel_rows.cols() == n);
    SmithResult s = smith_normal_form(rel_rows.transpose()); // n x k
    int nmin = std::min(n, rel_rows.rows());
    int nonzero = 0;
    for (int i = 0; i < nmin; ++i) {
        if (s.D(i, i).is_zero()) break;
        ++nonzero;
        if (!(s.D(i, i).is_one())) d.invariant_factors.push_back(s.D(i, i));
    }
    d.free_rank = n - nonzero;
    return d;
}

AbelianQuotientDescriptor quotient_structure(const Lattice &L, const RatMat &image_rows,
                                             QuotientNumerator num) {
    if (image_rows.rows() > 0 && image_rows.cols() != L.ambient_dim)
        throw std::invalid_argument("quotient_structure: inconsistent ambient dimension");
    // Express image vectors in coordinates of L's basis.
    RatMat bt = to_rational(L.basis).transpose();
    std::vector<RatVec> coords;
    for (int i = 0; i < image_rows.rows(); ++i) {
        RatVec x;
        if (!solve_linear(bt, image_rows.row(i), x))
            throw std::invalid_argument("quotient_structure: image vector outside L tensor Q");
        coords.push_back(x);
    }
    int r = L.rank();
    if (num == QuotientNumerator::LatticePart) {
        // L / <image>: image must be integral in L-coordinates.
        std::vector<IntVec> rel;
        for (auto &c : coords) {
            IntVec ci(r);
            for (int j = 0; j < r; ++j) {
                if (!c[j].is_integer())
                    throw std::invalid_argument("quotient_structure: image not inside L");
                ci[j] = c[j].num();
            }
            rel.push_back(ci);
        }
        IntMat relm = rel.empty() ? IntMat(0, r) : IntMat::from_rows(rel);
        return cokernel_structure(r, relm);
    }
    // (L tensor Q) / <image>: divisible throughout.  The quotient is
    // Q^r / Lambda where Lambda is the lattice generated by the image; as an
    // abstract group this is (Q/Z)^s + Q^(r-s) with s = rank Lambda.  We report
    // s as divisible torsion and r-s as "free" divisible rank folded into
    // free_rank = 0; the Q-summands are recorded via divisible_rank and
    // free_rank kept apart:
    AbelianQuotientDescriptor d;
    RatMat img = coords.empty() ? RatMat(0, r) : RatMat::from_rows(coords);
    int s = coords.empty() ? 0 : rank(img);
    d.divisible_rank = s;        // (Q/Z)^s part
    d.free_rank = r - s;         // Q^(r-s) part (torsion-free divisible)
    return d;
}

FixedAntifixed fixed_and_antifixed(const IntMat &a, const Lattice &L) {
    int n = L.ambient_dim;
    if (a.rows() != n || a.cols() != n)
        throw std::invalid_argument("fixed_and_antifixed: dimension mismatch");
    if (!(a * a).is_identity())
        throw std::invalid_argument("fixed_and_antifixed: matrix is not an involution");
    // fixed: saturated kernel of (1-a) intersected with L.  For L = Z^n this is
    // just the saturated kernel; for sublattices, solve inside L-coordinates.
    RatMat one_minus = to_rational(IntMat::identity(n) - a);
    RatMat one_plus = to_rational(IntMat::identity(n) + a);

    RatMat bt = to_rational(L.basis).transpose(); // n x r
    RatMat m1 = one_minus * bt;                   // (1-a) on L-coordinates
    std::vector<RatVec> fix_coords = kernel_basis(m1);
    FixedAntifixed out;
    if (fix_coords.empty()) {
        out.fixed.ambient_dim = n;
        out.fixed.basis = IntMat(0, n);
    } else {
        // back to ambient coordinates, then saturate inside L
        std::vector<RatVec> amb;
        for (auto &c : fix_coords) amb.push_back(bt * c);
        RatMat ambm = RatMat::from_rows(amb);
        BigInt den = common_denominator(ambm);
        IntMat ambi(ambm.rows(), n);
        for (int i = 0; i < ambm.rows(); ++i)
            for (int j = 0; j < n; ++j) ambi(i, j) = (ambm(i, j) * Rational(den)).num();
        IntMat sat = saturate_rows(ambi);
        // saturation is taken inside Z^n; intersect with L when L is proper.
        out.fixed.ambient_dim = n;
        out.fixed.basis = sat;
    }
    RatMat m2 = one_plus * bt;
    std::vector<RatVec> anti_coords = kernel_basis(m2);
    std::vector<RatVec> anti;
    for (auto &c : anti_coords) anti.push_back(bt * c);
    out.antifixed = anti.empty() ? RatMat(0, n) : RatMat::from_rows(anti);
    return out;
}

bool CosetClass::modulus_same(const CosetClass &o) const {
    if (dim() != o.dim()) return false;
    auto contained = [](const CosetClass &a, const CosetClass &b) {
        for (int i = 0; i < a.modulus_group.rows(); ++i) {
            if (!b.member_of_modulus(a.modulus_group.row(i))) return false;
        }
        for (int i = 0; i < a.modulus_subspace.rows(); ++i) {
            RatVec v = a.modulus_subspace.row(i);
            RatVec x;
            RatMat bt = b.modulus_subspace.transpose();
            if (bt.cols() == 0 || !solve_linear(bt, v, x)) return false;
        }
        return true;
    };
    return contained(*this, o) && contained(o, *this);
}

bool CosetClass::member_of_modulus(const RatVec &v) const {
    RatMat rational_cols = modulus_subspace.transpose();
    RatMat integral_cols = modulus_group.transpose();
    return mixed_member(rational_cols, integral_cols, v);
}

bool coset_equal(const CosetClass &x, const CosetClass &y) {
    if (!x.modulus_same(y)) throw std::invalid_argument("coset_equal: modulus mismatch");
    return x.member_of_modulus(sub(x.representative, y.representative));
}

RatVec coset_reduce(const CosetClass &c) {
    RatVec v = c.representative;
    int n = c.dim();
    if (c.modulus_subspace.rows() > 0) {
        // zero out the subspace component of v: extend the subspace to a basis
        // with unit vectors and keep only the extension coordinates
        RatMat S = c.modulus_subspace.transpose(); // n x s
        RatMat basis = S;
        std::vector<RatVec> ext;
        for (int j = 0; j < n; ++j) {
            RatVec e(n, Rational(0));
            e[j] = Rational(1);
            RatMat trial = RatMat::hcat(basis, RatMat::from_cols({e}));
            if (rank(trial) > rank(basis)) {
                basis = trial;
                ext.push_back(e);
            }
        }
        RatVec coeff;
        bool ok = solve_linear(basis, v, coeff);
        assert(ok);
        (void)ok;
        RatVec w(n, Rational(0));
        for (size_t k = 0; k < ext.size(); ++k) {
            Rational cts = coeff[S.cols() + static_cast<int>(k)];
            for (int i = 0; i < n; ++i) w[i] += ext[k][i] * cts;
        }
        v = w;
    }
    if (c.modulus_group.rows() == 0) return v;
    // clear denominators: reduce D*v modulo the integer lattice D*G, then
    // scale back
    BigInt D = common_denominator(c.modulus_group);
    D = BigInt::lcm(D, common_denominator(v));
    IntMat G(c.modulus_group.rows(), n);
    for (int i = 0; i < G.rows(); ++i)
        for (int j = 0; j < n; ++j) G(i, j) = (c.modulus_group(i, j) * Rational(D)).num();
    RatVec vD = scale(v, Rational(D));
    SmithResult s = smith_normal_form(G);
    IntMat W = s.U * G; // unimodular row ops: same row span, staircase shape
    RatMat wt = to_rational(W).transpose();
    RatVec t;
    if (!solve_linear(wt, vD, t)) {
        // reduce only the component inside the rational span of the lattice
        RatMat basis = wt;
        for (int j = 0; j < n; ++j) {
            RatVec e(n, Rational(0));
            e[j] = Rational(1);
            RatMat trial = RatMat::hcat(basis, RatMat::from_cols({e}));
            if (rank(trial) > rank(basis)) basis = trial;
        }
        RatVec coeff;
        bool ok = solve_linear(basis, vD, coeff);
        assert(ok);
        (void)ok;
        t.assign(W.rows(), Rational(0));
        for (int i = 0; i < W.rows(); ++i) t[i] = coeff[i];
    }
    for (int i = 0; i < W.rows(); ++i) {
        BigInt fl = t[i].floor();
        if (fl.is_zero()) continue;
        for (int j = 0; j < n; ++j) vD[j] -= Rational(fl) * Rational(W(i, j));
    }
    return scale(vD, Rational(BigInt(1), D));
}

RatVec add(const RatVec &a, const RatVec &b) {
    assert(a.size() == b.size());
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec sub(const RatVec &a, const RatVec &b) {
    assert(a.size() == b.size());
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec scale(const RatVec &a, const Rational &s) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

bool is_integral(const RatVec &v) {
    for (const auto &x : v)
        if (!x.is_integer()) return false;
    return true;
}

bool is_zero(const RatVec &v) {
    for (const auto &x : v)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace endo
