#include "endo/torus.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace endo {

namespace {

RatVec mat_apply(const IntMat &m, const RatVec &v) { return to_rational(m) * v; }

// theta must fix the class of z = exp(2 pi i lambda_z) modulo X_*.
bool fixes_z(const IntMat &action, const RatVec &lambda_z) {
    RatVec img = to_rational(action) * lambda_z;
    return is_integral(sub(img, lambda_z));
}

} // namespace

void RealTorusDatum::validate() const {
    if (a_char.rows() != rank || a_char.cols() != rank)
        throw std::invalid_argument("torus: involution size mismatch");
    if (!(a_char * a_char).is_identity()) throw std::invalid_argument("torus: a is not an involution");
    if (static_cast<int>(z_exponent.size()) != rank) throw std::invalid_argument("torus: z size");
    // z must be theta_Z-fixed: a(lambda_z) = lambda_z mod X_*(dual T)
    if (!fixes_z(a_char, z_exponent)) throw std::invalid_argument("torus: z not theta_Z-fixed");
    if (j_lattice) {
        if (j_lattice->cols() != rank) throw std::invalid_argument("torus: J lattice size");
        // Z^rank <= L_J: standard basis vectors must be Z-combinations of rows
        for (int i = 0; i < rank; ++i) {
            RatVec e(rank, Rational(0));
            e[i] = Rational(1);
            if (!in_rational_span_subgroup(*j_lattice, e))
                throw std::invalid_argument("torus: J lattice does not contain X^*");
        }
    }
}

IntMat RealTorusDatum::a_cochar() const { return a_char.transpose(); }

RealTorusDatum RealTorusDatum::split(int n) {
    RealTorusDatum t;
    t.rank = n;
    t.a_char = IntMat::identity(n);
    t.z_exponent = RatVec(n, Rational(0));
    return t;
}

RealTorusDatum RealTorusDatum::compact(int n) {
    RealTorusDatum t;
    t.rank = n;
    t.a_char = -IntMat::identity(n);
    t.z_exponent = RatVec(n, Rational(0));
    return t;
}

CosetClass nu_coset(const RealTorusDatum &T, const RatVec &nu_rep) {
    CosetClass c;
    c.representative = nu_rep;
    c.modulus_group = to_rational(IntMat::identity(T.rank) * BigInt(kNuModulusScale));
    c.modulus_subspace = RatMat(0, T.rank);
    return c;
}

CosetClass tau_coset(const RealTorusDatum &T, const RatVec &tau_rep) {
    std::vector<RatVec> gens;
    IntMat one_minus = IntMat::identity(T.rank) - T.a_char;
    for (int i = 0; i < T.rank; ++i) {
        RatVec e(T.rank, Rational(0));
        e[i] = Rational(1);
        gens.push_back(e);
        RatVec w(T.rank);
        for (int j = 0; j < T.rank; ++j) w[j] = Rational(one_minus(j, i));
        if (!is_zero(w)) gens.push_back(w);
    }
    CosetClass c;
    c.representative = tau_rep;
    c.modulus_group = RatMat::from_rows(gens);
    c.modulus_subspace = RatMat(0, T.rank);
    return c;
}

CosetClass mu_coset(const RealTorusDatum &T, const RatVec &mu_rep) {
    IntMat one_minus = IntMat::identity(T.rank) - T.a_cochar();
    std::vector<RatVec> gens;
    for (int i = 0; i < T.rank; ++i) {
        RatVec w(T.rank);
        for (int j = 0; j < T.rank; ++j) w[j] = Rational(one_minus(j, i));
        if (!is_zero(w)) gens.push_back(w);
    }
    CosetClass c;
    c.representative = mu_rep;
    c.modulus_group = gens.empty() ? RatMat(0, T.rank) : RatMat::from_rows(gens);
    c.modulus_subspace = RatMat(0, T.rank);
    return c;
}

bool geometric_param_valid(const RealTorusDatum &T, const TorusGeometricParam &g) {
    // tau + a(tau) + lambda_z = lambda  (mod X_*(dual T) = Z^rank)
    RatVec lhs = add(add(g.tau, mat_apply(T.a_char, g.tau)), T.z_exponent);
    return is_integral(sub(lhs, g.lambda));
}

bool geometric_param_equal(const RealTorusDatum &T, const TorusGeometricParam &g1,
                           const TorusGeometricParam &g2) {
    if (g1.lambda != g2.lambda) return false;
    CosetClass c = tau_coset(T, g1.tau);
    return c.member_of_modulus(sub(g1.tau, g2.tau));
}

TorusGeometricParam llc_forward(const TorusQuasicharacterParam &p, const RealTorusDatum &T) {
    RatVec k = sub(p.nu, T.z_exponent);
    if (!is_integral(k))
        throw std::invalid_argument("llc_forward: nu not in lambda_z + X*(T)");
    TorusGeometricParam g;
    g.lambda = p.d_pi;
    // tau = (d_pi + nu)/2 - lambda_z; the constraint class encodes y^2 = exp(2 pi i lambda)
    g.tau = sub(scale(add(p.d_pi, p.nu), Rational(1, 2)), T.z_exponent);
    if (!geometric_param_valid(T, g))
        throw std::invalid_argument("llc_forward: (nu, d_pi) violates the parity constraint");
    return g;
}

TorusQuasicharacterParam llc_backward(const TorusGeometricParam &g, const RealTorusDatum &T) {
    if (!geometric_param_valid(T, g)) throw std::invalid_argument("llc_backward: constraint violated");
    TorusQuasicharacterParam p;
    p.d_pi = g.lambda;
    p.nu = add(sub(scale(g.tau, Rational(2)), g.lambda), scale(T.z_exponent, Rational(2)));
    if (!is_integral(sub(p.nu, T.z_exponent)))
        throw std::invalid_argument("llc_backward: parameter is not in the image of llc_forward");
    return p;
}

StrongRealFormClassification classify_strong_real_forms(const RealTorusDatum &T) {
    StrongRealFormClassification out;
    Lattice std_lat = Lattice::standard(T.rank);
    FixedAntifixed fa = fixed_and_antifixed(T.a_cochar(), std_lat);
    out.antifixed_span = fa.antifixed;
    // (X_* tensor Q)^{-a} / (1-a) X_*: numerator is the antifixed span;
    // the image (1-a)X_* is generated by the columns of (1-a)
    IntMat one_minus = IntMat::identity(T.rank) - T.a_cochar();
    std::vector<RatVec> img;
    for (int j = 0; j < T.rank; ++j) {
        RatVec w(T.rank);
        for (int i = 0; i < T.rank; ++i) w[i] = Rational(one_minus(i, j));
        if (!is_zero(w)) img.push_back(w);
    }
    RatMat img_m = img.empty() ? RatMat(0, T.rank) : RatMat::from_rows(img);
    if (fa.antifixed.rows() == 0) {
        out.descriptor = AbelianQuotientDescriptor{};
    } else {
        // saturated lattice spanning the antifixed space
        IntMat sat = saturate_rows(clear_denominators(img_m));
        Lattice L;
        L.ambient_dim = T.rank;
        L.basis = sat;
        out.descriptor = quotient_structure(L, img_m, QuotientNumerator::RationalSpan);
    }
    RealTorusDatum copy = T;
    out.make_class = [copy](const RatVec &mu) {
        RatVec img_mu = to_rational(copy.a_cochar()) * mu;
        if (!is_zero(add(img_mu, scale(mu, Rational(-1)))) && !is_zero(add(img_mu, mu)))
            throw std::invalid_argument("strong real form: representative not anti-fixed");
        return StrongRealFormClass{mu};
    };
    return out;
}

CosetClass strong_form_to_torus_part(const RealTorusDatum &T, const StrongRealFormClass &f) {
    // t = exp(pi i mu), class taken in T^{-sigma,fin} / T_0^{-sigma}; the
    // identity component contributes the rational span of ker(1 + sigma) and
    // the exponential kills X_*.
    RatVec rep = scale(f.mu, Rational(1, 2));
    IntMat S = -T.a_cochar(); // antiholomorphic action on X_* exponents
    RatMat k1 = to_rational(IntMat::identity(T.rank) + S);
    auto ker = kernel_basis(k1);
    CosetClass c;
    c.representative = rep;
    c.modulus_group = to_rational(IntMat::identity(T.rank));
    c.modulus_subspace = ker.empty() ? RatMat(0, T.rank) : RatMat::from_rows(ker);
    return c;
}

StrongRealFormClass torus_part_to_mu(const RealTorusDatum &T, const CosetClass &t_class) {
    RatVec mu = scale(t_class.representative, Rational(2));
    // representative must be anti-fixed up to the quotient; reduce into the
    // anti-fixed space by removing the fixed component
    IntMat a = T.a_cochar();
    RatVec anti = scale(sub(mu, to_rational(a) * mu), Rational(1, 2));
    return StrongRealFormClass{anti};
}

ComponentCharacter mu_to_character(const RealTorusDatum &T, const StrongRealFormClass &f) {
    (void)T;
    return ComponentCharacter{f.mu};
}

TorusRepSide act_on_rep_side(const TorusAutomorphismPair &pair, const TorusRepSide &x,
                             const RealTorusDatum &T) {
    const IntMat &M = pair.theta.on_characters;
    if (!(M * T.a_char == T.a_char * M))
        throw std::invalid_argument("act_on_rep_side: theta does not commute with a");
    IntMat Minv = to_integer(inverse(to_rational(M)));
    TorusRepSide out;
    // pi o theta: pullback on nu and d_pi, plus the central-character twist
    // matching a cocycle-twisted dual extension.
    out.param.d_pi = mat_apply(Minv, x.param.d_pi);
    out.param.nu = add(mat_apply(Minv, x.param.nu), scale(pair.delta_shift, Rational(kNuModulusScale)));
    // d theta^{-1} on mu
    out.form.mu = mat_apply(M.transpose(), x.form.mu);
    return out;
}

TorusParamSide act_on_param_side(const TorusAutomorphismPair &pair, const TorusParamSide &x,
                                 const RealTorusDatum &T) {
    const IntMat &M = pair.theta.on_characters;
    IntMat Minv = to_integer(inverse(to_rational(M)));
    if (!fixes_z(Minv, T.z_exponent))
        throw std::invalid_argument("act_on_param_side: dual automorphism moves z");
    if (T.j_lattice) {
        // Q-stability: the lift must preserve L_J
        for (int i = 0; i < T.j_lattice->rows(); ++i) {
            RatVec img = to_rational(Minv) * T.j_lattice->row(i);
            if (!in_rational_span_subgroup(*T.j_lattice, img))
                throw std::invalid_argument("act_on_param_side: Q-descriptor not preserved");
        }
    }
    TorusParamSide out;
    out.geom.lambda = mat_apply(Minv, x.geom.lambda);
    out.geom.tau = add(mat_apply(Minv, x.geom.tau), pair.delta_shift);
    out.mu_char = mat_apply(M.transpose(), x.mu_char);
    return out;
}

EquivarianceReport verify_equivariance(const RealTorusDatum &T, const TorusAutomorphismPair &pair,
                                       int sample_bound) {
    T.validate();
    pair.theta.validate(BasedRootDatum::torus(T.rank));
    if (!(pair.theta.on_characters * T.a_char == T.a_char * pair.theta.on_characters))
        throw std::invalid_argument("verify_equivariance: incompatible pair (theta a != a theta)");
    IntMat Minv = to_integer(inverse(to_rational(pair.theta.on_characters)));
    if (!fixes_z(Minv, T.z_exponent))
        throw std::invalid_argument("verify_equivariance: pair does not fix z");

    EquivarianceReport rep;
    // rational grid of height <= sample_bound: p/q reduced, |p| <= bound, 1 <= q <= bound
    std::vector<Rational> grid;
    for (int q = 1; q <= sample_bound; ++q)
        for (int p = -sample_bound; p <= sample_bound; ++p) {
            Rational r(p, q);
            bool seen = false;
            for (const auto &g : grid)
                if (g == r) {
                    seen = true;
                    break;
                }
            if (!seen) grid.push_back(r);
        }
    // nu representatives: lambda_z + {0,1}^rank (classes mod 2 X*)
    std::vector<RatVec> nus;
    int ncombos = 1 << T.rank;
    for (int mask = 0; mask < ncombos; ++mask) {
        RatVec nu = T.z_exponent;
        for (int i = 0; i < T.rank; ++i)
            if (mask & (1 << i)) nu[i] += Rational(1);
        nus.push_back(nu);
    }
    // enumerate d_pi vectors over the grid
    std::vector<int> idx(T.rank, 0);
    long long total = 1;
    for (int i = 0; i < T.rank; ++i) total *= static_cast<long long>(grid.size());
    for (long long it = 0; it < total; ++it) {
        long long code = it;
        RatVec dpi(T.rank);
        for (int i = 0; i < T.rank; ++i) {
            dpi[i] = grid[code % grid.size()];
            code /= static_cast<long long>(grid.size());
        }
        for (const auto &nu : nus) {
            TorusQuasicharacterParam p{dpi, nu};
            TorusGeometricParam fwd;
            try {
                fwd = llc_forward(p, T);
            } catch (const std::invalid_argument &) {
                continue; // pair not a valid quasicharacter parameter
            }
            ++rep.cases_checked;
            TorusRepSide rs{p, StrongRealFormClass{RatVec(T.rank, Rational(0))}};
            TorusRepSide moved = act_on_rep_side(pair, rs, T);
            TorusGeometricParam lhs;
            try {
                lhs = llc_forward(moved.param, T);
            } catch (const std::invalid_argument &e) {
                rep.failures.push_back({p, std::string("forward of moved parameter failed: ") + e.what()});
                continue;
            }
            TorusParamSide ps{fwd, RatVec(T.rank, Rational(0))};
            TorusParamSide rhs = act_on_param_side(pair, ps, T);
            if (!geometric_param_equal(T, lhs, rhs.geom)) {
                rep.failures.push_back({p, "llc_forward does not intertwine the actions"});
            }
            // round trip while we are here
            TorusQuasicharacterParam back = llc_backward(fwd, T);
            if (back.d_pi != p.d_pi || !coset_equal(nu_coset(T, back.nu), nu_coset(T, p.nu))) {
                rep.failures.push_back({p, "llc_backward . llc_forward != id"});
            }
        }
    }
    return rep;
}

} // namespace endo
