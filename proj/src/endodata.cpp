#include "endo/endodata.hpp"

#include "endo/polyq.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace endo {

namespace {

// index of X in the gl_N coordinate flattening (row-major)
inline int flat(int i, int j, int n) { return i * n + j; }

// matrix of the operator X -> -P X^T P^{-1} on gl_N (the differential of
// x -> P (x^T)^{-1} P^{-1})
RatMat transpose_twist_operator(const RatMat &P) {
    int n = P.rows();
    RatMat Pinv = inverse(P);
    RatMat op(n * n, n * n);
    // T(E_ab) = -P E_ba P^{-1}: entry (i,j) of the image is -P(i,b) Pinv(a,j)
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    op(flat(i, j, n), flat(a, b, n)) = -(P(i, b) * Pinv(a, j));
    return op;
}

RatMat conj_operator(const RatMat &S) {
    int n = S.rows();
    RatMat Sinv = inverse(S);
    RatMat op(n * n, n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    op(flat(i, j, n), flat(a, b, n)) = S(i, a) * Sinv(b, j);
    return op;
}

// minimal polynomial of a square rational matrix by lcm of local annihilators
PolyQ minimal_polynomial(const RatMat &T) {
    int n = T.rows();
    PolyQ m{Rational(1)};
    for (int start = 0; start < n; ++start) {
        // check whether m already annihilates e_start
        RatVec v(n, Rational(0));
        v[start] = Rational(1);
        {
            RatVec acc(n, Rational(0));
            RatVec pw = v;
            for (size_t k = 0; k < m.size(); ++k) {
                for (int i = 0; i < n; ++i) acc[i] += m[k] * pw[i];
                if (k + 1 < m.size()) pw = T * pw;
            }
            if (is_zero(acc)) continue;
        }
        // Krylov iteration from e_start
        std::vector<RatVec> iterates{v};
        RatVec cur = v;
        PolyQ local;
        while (true) {
            cur = T * cur;
            // solve [iterates] c = cur
            RatMat A = RatMat::from_cols(iterates);
            RatVec c;
            if (solve_linear(A, cur, c)) {
                local.assign(iterates.size() + 1, Rational(0));
                for (size_t k = 0; k < c.size(); ++k) local[k] = -c[k];
                local[iterates.size()] = Rational(1);
                break;
            }
            iterates.push_back(cur);
        }
        m = poly_lcm(m, local);
        if (poly_deg(m) == n) break;
    }
    // normalize monic
    Rational lead = m.back();
    for (auto &x : m) x /= lead;
    return m;
}

IntMat antidiag_ones(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, n - 1 - i) = BigInt(1);
    return m;
}

IntMat alternating_antidiag(int n) {
    assert(n % 2 == 0);
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, n - 1 - i) = BigInt(i < n / 2 ? 1 : -1);
    return m;
}

} // namespace

void TwistingAutomorphismGL::validate() const {
    if (tilde_J.rows() != N || tilde_J.cols() != N)
        throw std::invalid_argument("twisting: size mismatch");
    RatMat J = to_rational(tilde_J);
    if (det(J).is_zero()) throw std::invalid_argument("twisting: singular tilde_J");
    // theta^2 = Int(tilde_J (tilde_J^T)^{-1}) must be inner by a central element
    RatMat c = J * inverse(J.transpose());
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i == j) {
                if (c(i, j) != c(0, 0)) throw std::invalid_argument("twisting: theta not involutive");
            } else if (!c(i, j).is_zero()) {
                throw std::invalid_argument("twisting: theta not involutive");
            }
        }
}

bool preserves_standard_pinning(const TwistingAutomorphismGL &theta) {
    int N = theta.N;
    RatMat J = to_rational(theta.tilde_J);
    RatMat Jinv = inverse(J);
    for (int i = 0; i + 1 < N; ++i) {
        RatMat u = RatMat::identity(N);
        u(i, i + 1) = Rational(1);
        RatMat img = J * inverse(u.transpose()) * Jinv;
        // must be I + E_{j,j+1} for some j, with the same coefficient
        bool hit = false;
        for (int j = 0; j + 1 < N && !hit; ++j) {
            RatMat expect = RatMat::identity(N);
            expect(j, j + 1) = Rational(1);
            if (img == expect) hit = true;
        }
        if (!hit) return false;
    }
    return true;
}

TwistingAutomorphismGL make_tilde_J(int N) {
    if (N < 1) throw std::invalid_argument("make_tilde_J: N >= 1 required");
    TwistingAutomorphismGL t;
    t.N = N;
    IntMat D(N, N);
    for (int i = 0; i < N; ++i) D(i, i) = BigInt(i % 2 == 0 ? 1 : -1);
    t.tilde_J = D * antidiag_ones(N);
    t.validate();
    if (!preserves_standard_pinning(t))
        throw std::logic_error("make_tilde_J: Whittaker triple not preserved");
    return t;
}

TwistedEndoDatum make_endoscopic_datum(int N, int N_O, int N_S_prime) {
    if (N_O < 0 || N_S_prime < 0 || N != N_O + 2 * N_S_prime)
        throw std::invalid_argument("make_endoscopic_datum: need N = N_O + 2 N_S'");
    TwistedEndoDatum d;
    d.N = N;
    d.N_O = N_O;
    d.N_S_prime = N_S_prime;
    TwistingAutomorphismGL theta = make_tilde_J(N);
    d.tilde_J = theta.tilde_J;
    // J_{O,S}: symmetric block of size N_O, then alternating of size 2 N_S'
    IntMat J(N, N);
    IntMat symb = antidiag_ones(N_O);
    for (int i = 0; i < N_O; ++i)
        for (int j = 0; j < N_O; ++j) J(i, j) = symb(i, j);
    if (N_S_prime > 0) {
        IntMat alt = alternating_antidiag(2 * N_S_prime);
        for (int i = 0; i < 2 * N_S_prime; ++i)
            for (int j = 0; j < 2 * N_S_prime; ++j) J(N_O + i, N_O + j) = alt(i, j);
    }
    d.J_OS = J;
    d.s = to_integer(inverse(to_rational(J)) * to_rational(d.tilde_J));

    MatrixGroupModel so;
    so.kind = GroupKind::SO;
    so.n = N_O;
    so.form = symb;
    MatrixGroupModel sp;
    sp.kind = GroupKind::Sp;
    sp.n = 2 * N_S_prime;
    sp.form = N_S_prime > 0 ? alternating_antidiag(2 * N_S_prime) : IntMat(0, 0);
    MatrixGroupModel prod;
    prod.kind = GroupKind::Product;
    if (N_O > 0) prod.factors.push_back(so);
    if (N_S_prime > 0) prod.factors.push_back(sp);
    d.H_dual = prod;

    d.gamma_semidirect = (N_O > 0 && N_O % 2 == 0);
    d.D_H.order = 2;
    d.D_H.fixes_splitting = true;
    d.D_H.h_is_identity = !d.gamma_semidirect;

    // invariants required by the definition
    FixedSubalgebra fa = fixed_point_subalgebra(d.s, theta);
    if (fa.dimension != d.expected_fixed_dim())
        throw std::logic_error("make_endoscopic_datum: fixed-point dimension mismatch");
    if (!check_semisimplicity(to_rational(d.s), theta))
        throw std::logic_error("make_endoscopic_datum: endoscopic element not semisimple");
    return d;
}

std::vector<TwistedEndoDatum> enumerate_elliptic_data(int N) {
    if (N < 1) throw std::invalid_argument("enumerate_elliptic_data: N >= 1 required");
    std::vector<TwistedEndoDatum> out;
    for (int ns = 0; 2 * ns <= N; ++ns) out.push_back(make_endoscopic_datum(N, N - 2 * ns, ns));
    return out;
}

FixedSubalgebra fixed_point_subalgebra(const IntMat &s, const TwistingAutomorphismGL &theta) {
    int n = theta.N;
    RatMat P = to_rational(s) * to_rational(theta.tilde_J);
    RatMat op = transpose_twist_operator(P); // X -> Ad(s) d(theta) X = -(s J) X^T (s J)^{-1}
    RatMat sys = op - RatMat::identity(n * n);
    auto ker = kernel_basis(sys);
    FixedSubalgebra fa;
    fa.dimension = static_cast<int>(ker.size());
    fa.basis.reserve(ker.size());
    for (const auto &v : ker) {
        RatMat B(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) B(i, j) = v[flat(i, j, n)];
        fa.basis.push_back(B);
    }
    // bracket closure: [B_i, B_j] must lie in the span
    fa.bracket_closed = true;
    if (!ker.empty()) {
        RatMat span = RatMat::from_cols(ker);
        for (size_t i = 0; i < fa.basis.size() && fa.bracket_closed; ++i)
            for (size_t j = i + 1; j < fa.basis.size() && fa.bracket_closed; ++j) {
                RatMat br = fa.basis[i] * fa.basis[j] - fa.basis[j] * fa.basis[i];
                RatVec v(n * n);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) v[flat(a, b, n)] = br(a, b);
                RatVec x;
                if (!solve_linear(span, v, x)) fa.bracket_closed = false;
            }
    }
    std::ostringstream os;
    os << "dim " << fa.dimension << (fa.bracket_closed ? ", closed under bracket" : ", NOT closed");
    fa.type_certificate = os.str();
    return fa;
}

bool check_semisimplicity_operator(const RatMat &op) {
    PolyQ m = minimal_polynomial(op);
    PolyQ g = poly_gcd(m, poly_derivative(m));
    return poly_deg(g) == 0;
}

bool check_semisimplicity(const RatMat &s, const TwistingAutomorphismGL &theta) {
    RatMat P = s * to_rational(theta.tilde_J);
    return check_semisimplicity_operator(transpose_twist_operator(P));
}

bool check_semisimplicity_untwisted(const RatMat &s) {
    return check_semisimplicity_operator(conj_operator(s));
}

std::optional<int> twisted_automorphism_order(const CycMat &s, const IntMat &tilde_J, int bound) {
    // sigma = F_{M,-} with M = s * tilde_J, where F_{A,-} x = A (x^T)^{-1} A^{-1}
    // and F_{A,+} x = A x A^{-1}.  Composition: sigma o F_{B,+} = F_{M B^{-T},-},
    // sigma o F_{B,-} = F_{M B^{-T},+}.
    int n = s.rows();
    CycMat M = s * to_cyclotomic(tilde_J);
    CycMat A = M;
    bool twisted = true; // current power is F_{A, -} if true else F_{A, +}
    for (int k = 1; k <= bound; ++k) {
        if (!twisted) {
            // identity iff A scalar
            bool scalar = true;
            for (int i = 0; i < n && scalar; ++i)
                for (int j = 0; j < n && scalar; ++j) {
                    if (i == j) {
                        if (!(A(i, i) == A(0, 0))) scalar = false;
                    } else if (!A(i, j).is_zero()) {
                        scalar = false;
                    }
                }
            if (scalar) return k;
        }
        // compose sigma with F_{A, +/-}
        CycMat Ait = inverse(A.transpose());
        A = M * Ait;
        twisted = !twisted;
    }
    return std::nullopt;
}

namespace {

std::vector<std::pair<Rational, CycMat>> connected_center_candidates(const TwistedEndoDatum &d,
                                                                     int max_den) {
    std::vector<std::pair<Rational, CycMat>> out;
    if (d.N_O != 2) return out;
    for (int b = 1; b <= max_den; ++b)
        for (int a = 0; a < b; ++a) {
            Rational q(a, b);
            if (q.num() != BigInt(a)) continue; // only reduced a/b once
            CycMat z = CycMat::identity(d.N);
            z(0, 0) = Cyclo::from_exponent(q);
            z(1, 1) = Cyclo::from_exponent(-q);
            out.emplace_back(q, z);
        }
    return out;
}

} // namespace

FiniteOrderCertificate finite_order_replacement(const TwistedEndoDatum &d) {
    return finite_order_replacement_for(d, to_cyclotomic(d.s));
}

FiniteOrderCertificate finite_order_replacement_for(const TwistedEndoDatum &d, const CycMat &s) {
    FiniteOrderCertificate cert;
    auto ord = twisted_automorphism_order(s, d.tilde_J);
    // canonical order of the defining datum
    auto base = twisted_automorphism_order(to_cyclotomic(d.s), d.tilde_J);
    assert(base.has_value());
    if (ord && *ord <= *base) {
        cert.was_finite = true;
        cert.order = *ord;
        cert.s_prime = s;
        cert.central_shift_exponent = RatVec(1, Rational(0));
        return cert;
    }
    // rescale through the connected centre of dual H
    int best = ord ? *ord : -1;
    CycMat best_s = s;
    Rational best_q(0);
    for (auto &[q, z] : connected_center_candidates(d, 12)) {
        CycMat cand = s * z;
        auto o = twisted_automorphism_order(cand, d.tilde_J);
        if (!o) continue;
        if (best < 0 || *o < best) {
            best = *o;
            best_s = cand;
            best_q = q;
        }
    }
    if (best < 0) throw std::logic_error("finite_order_replacement: no finite-order representative found");
    cert.was_finite = (best_s == s);
    cert.order = best;
    cert.s_prime = best_s;
    cert.central_shift_exponent = RatVec(1, best_q);
    return cert;
}

bool in_connected_center_of_dual_H(const TwistedEndoDatum &d, const CycMat &x) {
    int n = d.N;
    // x must be in dual H: x^T J x = J
    CycMat J = to_cyclotomic(d.J_OS);
    if (!(x.transpose() * J * x == J)) return false;
    // must centralize the fixed subalgebra
    TwistingAutomorphismGL th;
    th.N = n;
    th.tilde_J = d.tilde_J;
    FixedSubalgebra fa = fixed_point_subalgebra(d.s, th);
    CycMat xinv = inverse(x);
    for (const auto &B : fa.basis) {
        CycMat Bc = to_cyclotomic(B);
        if (!(x * Bc * xinv == Bc)) return false;
    }
    // connected part: identity outside an SO_2 block, diagonal inside
    if (d.N_O == 2) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                bool in_block = i < 2 && j < 2;
                if (in_block) {
                    if (i != j && !x(i, j).is_zero()) return false;
                } else if (!(x(i, j) == (i == j ? Cyclo(1) : Cyclo(0)))) {
                    return false;
                }
            }
        return x(0, 0) * x(1, 1) == Cyclo(1);
    }
    return x.is_identity();
}

namespace {

std::vector<RatMat> lie_algebra_of_form(const IntMat &J) {
    // {X : X^T J + J X = 0}; entry (i,j) of the constraint is
    // sum_a X(a,i) J(a,j) + sum_a J(i,a) X(a,j).
    int n = J.rows();
    RatMat Jq = to_rational(J);
    RatMat sys(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    Rational coef(0);
                    if (b == i) coef += Jq(a, j);
                    if (b == j) coef += Jq(i, a);
                    sys(flat(i, j, n), flat(a, b, n)) = coef;
                }
    auto ker = kernel_basis(sys);
    std::vector<RatMat> out;
    for (const auto &v : ker) {
        RatMat B(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) B(i, j) = v[flat(i, j, n)];
        out.push_back(B);
    }
    return out;
}

bool same_span(const std::vector<RatMat> &A, const std::vector<RatMat> &B, int n) {
    if (A.size() != B.size()) return false;
    std::vector<RatVec> rows;
    for (const auto &m : A) {
        RatVec v(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v[flat(i, j, n)] = m(i, j);
        rows.push_back(v);
    }
    int ra = rank(RatMat::from_rows(rows));
    for (const auto &m : B) {
        RatVec v(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v[flat(i, j, n)] = m(i, j);
        rows.push_back(v);
    }
    return rank(RatMat::from_rows(rows)) == ra;
}

} // namespace

EquivalenceResult data_equivalent(const TwistedEndoDatum &d1, const TwistedEndoDatum &d2) {
    EquivalenceResult res;
    if (d1.N != d2.N) {
        res.status = EquivalenceStatus::Inequivalent;
        res.detail = "ambient sizes differ";
        return res;
    }
    if (d1.expected_fixed_dim() != d2.expected_fixed_dim()) {
        res.status = EquivalenceStatus::Inequivalent;
        res.detail = "fixed-point subalgebra dimensions differ";
        return res;
    }
    int n = d1.N;
    auto h1 = lie_algebra_of_form(d1.J_OS);
    auto h2 = lie_algebra_of_form(d2.J_OS);
    // candidate witnesses: identity, then signed permutations for small N
    std::vector<CycMat> candidates;
    candidates.push_back(CycMat::identity(n));
    if (n <= 4) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        do {
            for (int mask = 0; mask < (1 << n); ++mask) {
                CycMat g(n, n);
                for (int i = 0; i < n; ++i)
                    g(perm[i], i) = Cyclo((mask >> i) & 1 ? -1 : 1);
                candidates.push_back(g);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    CycMat s2 = to_cyclotomic(d2.s);
    CycMat Jt = to_cyclotomic(d1.tilde_J);
    for (const auto &g : candidates) {
        // condition 1: g h2 g^{-1} = h1 (Lie-algebra level)
        CycMat ginv = inverse(g);
        std::vector<RatMat> conj2;
        bool rational_ok = true;
        for (const auto &B : h2) {
            CycMat c = g * to_cyclotomic(B) * ginv;
            RatMat cr(n, n);
            for (int i = 0; i < n && rational_ok; ++i)
                for (int j = 0; j < n && rational_ok; ++j) {
                    auto r = c(i, j).as_rational();
                    if (!r) rational_ok = false;
                    else cr(i, j) = *r;
                }
            if (!rational_ok) break;
            conj2.push_back(cr);
        }
        if (!rational_ok || !same_span(h1, conj2, n)) continue;
        // condition 2: descriptor-level D_H match
        if (d1.D_H.order != d2.D_H.order || d1.D_H.fixes_splitting != d2.D_H.fixes_splitting) continue;
        // condition 3: s1^{-1} g s2 theta(g)^{-1} in connected centre
        CycMat theta_g = Jt * inverse(g.transpose()) * inverse(Jt);
        CycMat z = inverse(to_cyclotomic(d1.s)) * g * s2 * inverse(theta_g);
        if (in_connected_center_of_dual_H(d1, z)) {
            res.status = EquivalenceStatus::Equivalent;
            res.witness = g;
            res.detail = "witness found";
            return res;
        }
    }
    res.status = EquivalenceStatus::NotFoundInCandidates;
    res.detail = "no witness in the candidate set; equivalence undecided";
    return res;
}

EquivalenceResult data_equivalent_elements(const TwistedEndoDatum &d, const CycMat &s1) {
    EquivalenceResult res;
    CycMat z = inverse(to_cyclotomic(d.s)) * s1;
    if (in_connected_center_of_dual_H(d, z)) {
        res.status = EquivalenceStatus::Equivalent;
        res.witness = CycMat::identity(d.N);
        res.detail = "identity witness with central shift";
    } else {
        res.status = EquivalenceStatus::NotFoundInCandidates;
        res.detail = "central shift not in the connected centre";
    }
    return res;
}

EndoGroupDescriptor endoscopic_group(const TwistedEndoDatum &d) {
    EndoGroupDescriptor g;
    MatrixGroupModel prod;
    prod.kind = GroupKind::Product;
    auto so = [](int n) {
        MatrixGroupModel m;
        m.kind = GroupKind::SO;
        m.n = n;
        m.form = antidiag_ones(n);
        return m;
    };
    auto sp = [](int n) {
        MatrixGroupModel m;
        m.kind = GroupKind::Sp;
        m.n = n;
        m.form = alternating_antidiag(n);
        return m;
    };
    int so_part = 2 * d.N_S_prime + 1;
    if (d.N_O == 0) {
        prod.factors.push_back(so(so_part));
    } else if (d.N_O % 2 == 1) {
        if (d.N_O > 1) prod.factors.push_back(sp(d.N_O - 1));
        prod.factors.push_back(so(so_part));
    } else {
        prod.factors.push_back(so(d.N_O));
        prod.factors.push_back(so(so_part));
    }
    g.H = prod;
    g.gamma_semidirect = d.gamma_semidirect;
    g.display = prod.describe();
    return g;
}

} // namespace endo
