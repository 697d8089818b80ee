#include "endo/rootdatum.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace endo {

IntMat BasedRootDatum::cartan_matrix() const {
    int s = num_simple();
    IntMat c(s, s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            BigInt acc(0);
            for (int k = 0; k < rank; ++k) acc += simple_roots[i][k] * simple_coroots[j][k];
            c(i, j) = acc;
        }
    return c;
}

void BasedRootDatum::validate() const {
    for (const auto &v : simple_roots)
        if (static_cast<int>(v.size()) != rank) throw std::invalid_argument("root datum: bad root length");
    for (const auto &v : simple_coroots)
        if (static_cast<int>(v.size()) != rank) throw std::invalid_argument("root datum: bad coroot length");
    if (simple_roots.size() != simple_coroots.size())
        throw std::invalid_argument("root datum: root/coroot count mismatch");
    int s = num_simple();
    if (s == 0) return;
    IntMat c = cartan_matrix();
    for (int i = 0; i < s; ++i) {
        if (c(i, i) != BigInt(2)) throw std::invalid_argument("root datum: Cartan diagonal != 2");
        for (int j = 0; j < s; ++j) {
            if (i == j) continue;
            if (c(i, j) > BigInt(0)) throw std::invalid_argument("root datum: positive off-diagonal");
            if (c(i, j).is_zero() != c(j, i).is_zero())
                throw std::invalid_argument("root datum: asymmetric zero pattern");
        }
    }
    // symmetrize: find d_i > 0 with d_i c_ij = d_j c_ji, then Sylvester check
    std::vector<Rational> dvec(s, Rational(0));
    for (int start = 0; start < s; ++start) {
        if (!dvec[start].is_zero()) continue;
        dvec[start] = Rational(1);
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < s; ++j) {
                if (c(i, j).is_zero() || !dvec[j].is_zero()) continue;
                dvec[j] = dvec[i] * Rational(c(i, j)) / Rational(c(j, i));
                stack.push_back(j);
            }
        }
    }
    RatMat sym(s, s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) sym(i, j) = dvec[i] * Rational(c(i, j));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            if (sym(i, j) != sym(j, i)) throw std::invalid_argument("root datum: not symmetrizable");
    // leading principal minors positive <=> positive definite <=> finite type
    for (int k = 1; k <= s; ++k) {
        RatMat lead(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) lead(i, j) = sym(i, j);
        if (!(det(lead) > Rational(0))) throw std::invalid_argument("root datum: not finite type");
    }
    // roots must be independent
    if (rank > 0) {
        RatMat rootm(s, rank);
        for (int i = 0; i < s; ++i)
            for (int k = 0; k < rank; ++k) rootm(i, k) = Rational(simple_roots[i][k]);
        if (endo::rank(rootm) != s) throw std::invalid_argument("root datum: dependent simple roots");
    }
}

BasedRootDatum BasedRootDatum::gl(int n) {
    BasedRootDatum d;
    d.rank = n;
    d.name = "GL" + std::to_string(n);
    for (int i = 0; i + 1 < n; ++i) {
        IntVec a(n, BigInt(0));
        a[i] = BigInt(1);
        a[i + 1] = BigInt(-1);
        d.simple_roots.push_back(a);
        d.simple_coroots.push_back(a);
    }
    return d;
}

BasedRootDatum BasedRootDatum::torus(int n) {
    BasedRootDatum d;
    d.rank = n;
    d.name = "T" + std::to_string(n);
    return d;
}

BasedRootDatum BasedRootDatum::sp(int even_n) {
    if (even_n % 2) throw std::invalid_argument("sp: odd size");
    int n = even_n / 2;
    BasedRootDatum d;
    d.rank = n;
    d.name = "Sp" + std::to_string(even_n);
    for (int i = 0; i + 1 < n; ++i) {
        IntVec a(n, BigInt(0));
        a[i] = BigInt(1);
        a[i + 1] = BigInt(-1);
        d.simple_roots.push_back(a);
        d.simple_coroots.push_back(a);
    }
    if (n >= 1) {
        IntVec a(n, BigInt(0)), av(n, BigInt(0));
        a[n - 1] = BigInt(2);
        av[n - 1] = BigInt(1);
        d.simple_roots.push_back(a);
        d.simple_coroots.push_back(av);
    }
    return d;
}

BasedRootDatum BasedRootDatum::so(int m) {
    BasedRootDatum d;
    d.name = "SO" + std::to_string(m);
    if (m % 2 == 1) { // type B_n, SO_{2n+1}
        int n = (m - 1) / 2;
        d.rank = n;
        for (int i = 0; i + 1 < n; ++i) {
            IntVec a(n, BigInt(0));
            a[i] = BigInt(1);
            a[i + 1] = BigInt(-1);
            d.simple_roots.push_back(a);
            d.simple_coroots.push_back(a);
        }
        if (n >= 1) {
            IntVec a(n, BigInt(0)), av(n, BigInt(0));
            a[n - 1] = BigInt(1);
            av[n - 1] = BigInt(2);
            d.simple_roots.push_back(a);
            d.simple_coroots.push_back(av);
        }
    } else { // type D_n, SO_{2n}
        int n = m / 2;
        d.rank = n;
        for (int i = 0; i + 1 < n; ++i) {
            IntVec a(n, BigInt(0));
            a[i] = BigInt(1);
            a[i + 1] = BigInt(-1);
            d.simple_roots.push_back(a);
            d.simple_coroots.push_back(a);
        }
        if (n >= 2) {
            IntVec a(n, BigInt(0));
            a[n - 2] = BigInt(1);
            a[n - 1] = BigInt(1);
            d.simple_roots.push_back(a);
            d.simple_coroots.push_back(a);
        }
    }
    return d;
}

BasedRootDatum dual_datum(const BasedRootDatum &d) {
    BasedRootDatum r;
    r.rank = d.rank;
    r.simple_roots = d.simple_coroots;
    r.simple_coroots = d.simple_roots;
    r.name = d.name.empty() ? std::string("dual") : ("dual(" + d.name + ")");
    return r;
}

IntMat DatumAutomorphism::on_cocharacters() const {
    RatMat inv_t = inverse(to_rational(on_characters)).transpose();
    return to_integer(inv_t);
}

int DatumAutomorphism::order() const {
    IntMat p = on_characters;
    IntMat id = IntMat::identity(p.rows());
    for (int k = 1; k <= 10000; ++k) {
        if (p == id) return k;
        p = p * on_characters;
    }
    throw std::logic_error("DatumAutomorphism: order bound exceeded");
}

void DatumAutomorphism::validate(const BasedRootDatum &d) const {
    if (on_characters.rows() != d.rank || on_characters.cols() != d.rank)
        throw std::invalid_argument("automorphism: size mismatch");
    Rational dt = det(to_rational(on_characters));
    if (dt != Rational(1) && dt != Rational(-1))
        throw std::invalid_argument("automorphism: matrix not unimodular");
    if (static_cast<int>(root_perm.size()) != d.num_simple())
        throw std::invalid_argument("automorphism: permutation size mismatch");
    IntMat cochar = on_cocharacters();
    for (int i = 0; i < d.num_simple(); ++i) {
        int pi = root_perm[i];
        if (pi < 0 || pi >= d.num_simple()) throw std::invalid_argument("automorphism: bad permutation");
        IntVec r = on_characters * d.simple_roots[i];
        if (r != d.simple_roots[pi]) throw std::invalid_argument("automorphism: does not permute simple roots");
        IntVec rv = cochar * d.simple_coroots[i];
        if (rv != d.simple_coroots[pi])
            throw std::invalid_argument("automorphism: does not permute simple coroots");
    }
    order(); // throws if not finite
}

DatumAutomorphism DatumAutomorphism::identity(const BasedRootDatum &d) {
    DatumAutomorphism a;
    a.on_characters = IntMat::identity(d.rank);
    a.root_perm.resize(d.num_simple());
    for (int i = 0; i < d.num_simple(); ++i) a.root_perm[i] = i;
    return a;
}

DatumAutomorphism DatumAutomorphism::gl_outer(int n) {
    // chi_i -> -chi_{n+1-i} on the diagonal torus
    DatumAutomorphism a;
    a.on_characters = IntMat(n, n);
    for (int i = 0; i < n; ++i) a.on_characters(i, n - 1 - i) = BigInt(-1);
    a.root_perm.resize(n > 0 ? n - 1 : 0);
    for (int i = 0; i + 1 < n; ++i) a.root_perm[i] = n - 2 - i;
    return a;
}

DatumAutomorphism transfer_automorphism(const DatumAutomorphism &theta) {
    DatumAutomorphism t;
    t.on_characters = theta.on_cocharacters();
    t.root_perm = theta.root_perm;
    return t;
}

bool check_compatible(const DatumAutomorphism &theta_G, const DatumAutomorphism &theta_dual) {
    return transfer_automorphism(theta_G) == theta_dual;
}

bool commutes_with_first_invariant(const DatumAutomorphism &theta, const DatumAutomorphism &a) {
    if (!(theta.on_characters * a.on_characters == a.on_characters * theta.on_characters)) return false;
    if (theta.root_perm.size() != a.root_perm.size()) return false;
    for (size_t i = 0; i < theta.root_perm.size(); ++i) {
        if (theta.root_perm[a.root_perm[i]] != a.root_perm[theta.root_perm[i]]) return false;
    }
    return true;
}

bool CentralElement::has_transcendental() const {
    for (const auto &x : transcendental)
        if (!x.is_zero()) return true;
    return false;
}

RatMat central_subspace(const BasedRootDatum &d) {
    if (d.num_simple() == 0) return to_rational(IntMat::identity(d.rank));
    RatMat roots(d.num_simple(), d.rank);
    for (int i = 0; i < d.num_simple(); ++i)
        for (int k = 0; k < d.rank; ++k) roots(i, k) = Rational(d.simple_roots[i][k]);
    auto ker = kernel_basis(roots);
    return ker.empty() ? RatMat(0, d.rank) : RatMat::from_rows(ker);
}

RatMat central_exponent_group(const BasedRootDatum &d) {
    // {v : <alpha_i, v> in Z for all i} as Z-generators, X_* included
    int n = d.rank;
    if (d.num_simple() == 0) return to_rational(IntMat::identity(n));
    IntMat R(d.num_simple(), n);
    for (int i = 0; i < d.num_simple(); ++i)
        for (int k = 0; k < n; ++k) R(i, k) = d.simple_roots[i][k];
    SmithResult s = smith_normal_form(R); // U R V = D
    // v = V w with D w integral in the pivot coordinates
    std::vector<RatVec> gens;
    int nmin = std::min(R.rows(), n);
    RatMat V = to_rational(s.V);
    for (int j = 0; j < n; ++j) {
        RatVec col(n);
        for (int i = 0; i < n; ++i) col[i] = V(i, j);
        if (j < nmin && !s.D(j, j).is_zero()) {
            gens.push_back(scale(col, Rational(BigInt(1), s.D(j, j))));
        } else {
            gens.push_back(col); // free direction: whole Q-line is central; keep
                                 // the lattice generator, subspace handled separately
        }
    }
    return RatMat::from_rows(gens);
}

bool is_central_exponent(const BasedRootDatum &d, const RatVec &v) {
    for (const auto &alpha : d.simple_roots) {
        Rational acc(0);
        for (int k = 0; k < d.rank; ++k) acc += Rational(alpha[k]) * v[k];
        if (!acc.is_integer()) return false;
    }
    return true;
}

IntMat ExtendedGroupInvariants::galois_exponent_action() const {
    IntMat b = a.on_cocharacters();
    if (!antiholomorphic) return b;
    return -b;
}

CosetClass ExtendedGroupInvariants::z_bar() const {
    IntMat S = galois_exponent_action();
    int n = datum.rank;
    IntMat one_plus = IntMat::identity(n) + S;
    RatMat Lz = central_exponent_group(datum);
    RatMat Vc = central_subspace(datum);
    // modulus group: X_* plus (1+S) L_Z; modulus subspace: (1+S) V_c
    std::vector<RatVec> gens;
    for (int i = 0; i < n; ++i) {
        RatVec e(n, Rational(0));
        e[i] = Rational(1);
        gens.push_back(e);
    }
    RatMat oneS = to_rational(one_plus);
    for (int i = 0; i < Lz.rows(); ++i) gens.push_back(oneS * Lz.row(i));
    std::vector<RatVec> sub;
    for (int i = 0; i < Vc.rows(); ++i) {
        RatVec w = oneS * Vc.row(i);
        if (!is_zero(w)) sub.push_back(w);
    }
    CosetClass c;
    c.representative = z_bar_rep;
    c.modulus_group = RatMat::from_rows(gens);
    c.modulus_subspace = sub.empty() ? RatMat(0, n) : RatMat::from_rows(sub);
    return c;
}

void ExtendedGroupInvariants::validate() const {
    datum.validate();
    a.validate(datum);
    if (static_cast<int>(z_bar_rep.size()) != datum.rank)
        throw std::invalid_argument("invariants: z_bar size");
    if (!is_central_exponent(datum, z_bar_rep))
        throw std::invalid_argument("invariants: z_bar not central");
    // sigma_Z-fixedness of the class: S z - z must lie in X_* + (1+S)-parts
    IntMat S = galois_exponent_action();
    RatVec img = to_rational(S) * z_bar_rep;
    CosetClass c = z_bar();
    if (!c.member_of_modulus(sub(img, z_bar_rep)))
        throw std::invalid_argument("invariants: z_bar not Galois-fixed");
    if (z_canonical && !is_central_exponent(datum, *z_canonical))
        throw std::invalid_argument("invariants: z_canonical not central");
}

ExtensionCheck extension_exists(const DatumAutomorphism &theta, const ExtendedGroupInvariants &inv) {
    ExtensionCheck out;
    out.commutes = commutes_with_first_invariant(theta, inv.a);
    if (!out.commutes) return out;
    IntMat b = theta.on_cocharacters();
    out.theta_z_rep = to_rational(b) * inv.z_bar_rep;
    out.difference = sub(out.theta_z_rep, inv.z_bar_rep);
    CosetClass c = inv.z_bar();
    out.fixes_z_bar = c.member_of_modulus(out.difference);
    return out;
}

AbelianQuotientDescriptor extension_ambiguity(const ExtendedGroupInvariants &inv) {
    // ker(1 + sigma_Z) on Z(G) through its character group:
    // X*(Z) = Z^n / <simple roots>, K^ = X*(Z) / (1 + sigma^T) X*(Z).
    int n = inv.datum.rank;
    IntMat S = inv.galois_exponent_action();
    IntMat one_plus_t = IntMat::identity(n) + S; // rows of this span (1+S^T) Z^n as columns... see below
    std::vector<IntVec> rel;
    for (const auto &alpha : inv.datum.simple_roots) rel.push_back(alpha);
    // (1+S^T) Z^n = column span of (1+S^T) = row span of (1+S)
    for (int i = 0; i < n; ++i) rel.push_back(one_plus_t.row(i));
    return cokernel_structure(n, IntMat::from_rows(rel));
}

EGroupExtension cocycle_twist(const EGroupExtension &ext, const RatVec &a_exponent,
                              const ExtendedGroupInvariants &egroup_inv) {
    if (egroup_inv.antiholomorphic)
        throw std::invalid_argument("cocycle_twist: expected E-group invariants");
    if (!is_central_exponent(egroup_inv.datum, a_exponent))
        throw std::invalid_argument("cocycle_twist: a(gamma) not central");
    // a(gamma) must lie in ker(1 + theta_Z): (1+S) e in X_* (exact lattice)
    IntMat S = egroup_inv.galois_exponent_action();
    RatVec img = to_rational(IntMat::identity(egroup_inv.datum.rank) + S) * a_exponent;
    if (!is_integral(img)) throw std::invalid_argument("cocycle_twist: a(gamma) not in ker(1+theta_Z)");
    EGroupExtension out = ext;
    out.delta_shift = sub(ext.delta_shift, a_exponent);
    return out;
}

OrderResult automorphism_order(int m, const CentralElement &z1, const DatumAutomorphism &theta) {
    OrderResult res;
    IntMat b = theta.on_cocharacters();
    IntMat pow = IntMat::identity(b.rows());
    // check theta^m = 1
    for (int k = 0; k < m; ++k) pow = pow * b;
    if (!pow.is_identity()) throw std::invalid_argument("automorphism_order: theta^m != 1");
    RatVec v2(z1.exponent.size(), Rational(0));
    RatVec w2(z1.exponent.size(), Rational(0));
    RatMat bq = to_rational(b);
    RatVec v = z1.exponent;
    RatVec w = z1.transcendental.empty() ? RatVec(z1.exponent.size(), Rational(0)) : z1.transcendental;
    for (int k = 0; k < m; ++k) {
        v2 = add(v2, v);
        w2 = add(w2, w);
        v = bq * v;
        w = bq * w;
    }
    res.z2 = CentralElement{v2, w2};
    if (res.z2.has_transcendental()) {
        res.finite = false;
        return res;
    }
    // order of exp(2 pi i v2) in the torus: least l with l*v2 integral
    BigInt l(1);
    for (const auto &x : v2) l = BigInt::lcm(l, x.den());
    res.finite = true;
    res.order = BigInt(m) * l;
    return res;
}

void MatrixGroupModel::validate() const {
    switch (kind) {
        case GroupKind::GL:
            if (n <= 0) throw std::invalid_argument("model: GL size");
            break;
        case GroupKind::SO: {
            if (form.rows() != n || form.cols() != n) throw std::invalid_argument("model: form size");
            if (det(to_rational(form)).is_zero()) throw std::invalid_argument("model: degenerate form");
            if (!(form == form.transpose())) throw std::invalid_argument("model: SO form not symmetric");
            break;
        }
        case GroupKind::Sp: {
            if (n % 2) throw std::invalid_argument("model: Sp odd size");
            if (form.rows() != n || form.cols() != n) throw std::invalid_argument("model: form size");
            if (det(to_rational(form)).is_zero()) throw std::invalid_argument("model: degenerate form");
            if (!(form == -form.transpose())) throw std::invalid_argument("model: Sp form not alternating");
            break;
        }
        case GroupKind::Product:
            for (const auto &f : factors) f.validate();
            break;
    }
}

std::string MatrixGroupModel::describe() const {
    switch (kind) {
        case GroupKind::GL: return "GL" + std::to_string(n);
        case GroupKind::SO: return "SO" + std::to_string(n);
        case GroupKind::Sp: return "Sp" + std::to_string(n);
        case GroupKind::Product: {
            std::ostringstream os;
            for (size_t i = 0; i < factors.size(); ++i) os << (i ? " x " : "") << factors[i].describe();
            if (factors.empty()) os << "1";
            return os.str();
        }
    }
    return "?";
}

CycMat gl_twist_apply(const CycMat &tilde_j, const CycMat &x) {
    CycMat xti = inverse(x.transpose());
    return tilde_j * xti * inverse(tilde_j);
}

TwistedPowerReport verify_twisted_power_identity(const CycMat &g, const StrongRealFormGL &delta,
                                                 const CycMat &tilde_j, int m) {
    int n = g.rows();
    TwistedPowerReport rep;
    rep.element = CycMat::identity(n);

    auto theta = [&](const CycMat &x) { return gl_twist_apply(tilde_j, x); };
    auto sigma_q = [&](const CycMat &x) { return conj(x); };
    auto sigma_delta = [&](const CycMat &x) { return delta.d * conj(x) * inverse(delta.d); };

    // precondition: theta^Gamma(Int(g)(delta)) = delta, i.e.
    // theta(g d sigma_q(g)^{-1}) = d
    CycMat lhs_pre = theta(g * delta.d * inverse(sigma_q(g)));
    rep.precondition_fixes_delta = lhs_pre == delta.d;
    if (!rep.precondition_fixes_delta) return rep;

    // h = theta(g) theta^2(g) ... theta^m(g)
    CycMat h = CycMat::identity(n);
    CycMat cur = g;
    for (int k = 1; k <= m; ++k) {
        cur = theta(cur);
        h = h * cur;
    }
    rep.element = h;

    // compare (theta o Int(g))^m with Int(h) on group generators
    auto F = [&](const CycMat &x) { return theta(g * x * inverse(g)); };
    auto apply_m = [&](CycMat x) {
        for (int k = 0; k < m; ++k) x = F(x);
        return x;
    };
    CycMat hinv = inverse(h);
    bool equal = true;
    for (int i = 0; i < n && equal; ++i)
        for (int j = 0; j < n && equal; ++j) {
            CycMat gen = CycMat::identity(n);
            if (i == j) {
                gen(i, i) = Cyclo(2); // diagonal unit generator
            } else {
                gen(i, j) = Cyclo(1); // elementary unipotent
            }
            CycMat a = apply_m(gen);
            CycMat b = h * gen * hinv;
            equal = a == b;
        }
    rep.power_identity = equal;
    rep.element_sigma_fixed = sigma_delta(h) == h;
    return rep;
}

} // namespace endo
