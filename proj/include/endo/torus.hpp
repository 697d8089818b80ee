#pragma once

#include "endo/rootdatum.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace endo {

// Real algebraic torus datum: X*(T) = Z^rank with involution a (pushforward
// on X*), the E-group's second invariant z = exp(2*pi*i*lambda_z), and an
// optional finite subgroup J (as a lattice L_J between Z^rank and Q^rank)
// encoding the quotient Q of the algebraic fundamental group.
struct RealTorusDatum {
    int rank = 0;
    IntMat a_char;            // involution on X*
    RatVec z_exponent;        // lambda_z
    std::optional<RatMat> j_lattice; // rows generate L_J, Z^rank <= L_J; empty = trivial J

    void validate() const;
    IntMat a_cochar() const;  // involution on X_* = a_char^T (involution)

    static RealTorusDatum split(int n);            // a = +1, z = 1
    static RealTorusDatum compact(int n);          // a = -1, z = 1
};

// Quasicharacter parameter (nu, dpi).  nu is a coset representative in
// lambda_z + X*(T); its modulus is the convention lattice 2 X*(T) (see
// nu_modulus below).
struct TorusQuasicharacterParam {
    RatVec d_pi;
    RatVec nu;
};

// Geometric parameter (y, Lambda) for the torus: Lambda = {lambda} and
// y = exp(2*pi*i*tau) * delta with constraint tau + a(tau) + lambda_z = lambda
// modulo X_*(dual T).
struct TorusGeometricParam {
    RatVec lambda;
    RatVec tau;
};

// Strong real form class: mu in (X_*(T) tensor Q)^{-a} / (1-a) X_*(T).
struct StrongRealFormClass {
    RatVec mu;
};

// Convention constants (pinned against the worked GL_2 example; see README).
// nu lives modulo kNuModulusScale * X*(T).
inline constexpr int kNuModulusScale = 2;

CosetClass nu_coset(const RealTorusDatum &T, const RatVec &nu_rep);
CosetClass tau_coset(const RealTorusDatum &T, const RatVec &tau_rep);  // mod X_* + (1-a)X_*
CosetClass mu_coset(const RealTorusDatum &T, const RatVec &mu_rep);    // mod (1-a)X_*

bool geometric_param_valid(const RealTorusDatum &T, const TorusGeometricParam &g);
bool geometric_param_equal(const RealTorusDatum &T, const TorusGeometricParam &g1,
                           const TorusGeometricParam &g2);

// pi <-> (nu, dpi) <-> (y, dpi): the forward map of the Langlands
// correspondence for T(R).  Throws when nu is outside lambda_z + X*(T) or the
// pair violates the parity constraint.
TorusGeometricParam llc_forward(const TorusQuasicharacterParam &p, const RealTorusDatum &T);
TorusQuasicharacterParam llc_backward(const TorusGeometricParam &g, const RealTorusDatum &T);

struct StrongRealFormClassification {
    AbelianQuotientDescriptor descriptor; // of (X_* tensor Q)^{-a} / (1-a) X_*
    RatMat antifixed_span;                // rows span the anti-fixed subspace
    std::function<StrongRealFormClass(const RatVec &)> make_class;
};

StrongRealFormClassification classify_strong_real_forms(const RealTorusDatum &T);

// The second half of the correspondence factors through three bijections,
// implemented (and tested) separately:
//   strong real forms  <->  T^{-sigma,fin} / T_0^{-sigma}
//                      <->  (X_* tensor Q)^{-a} / (1-a) X_*
//                      <->  characters of A^{loc,alg}.
// Classes in T^{-sigma,fin}/T_0^{-sigma} are carried by the exponent of
// t = exp(pi i mu).
CosetClass strong_form_to_torus_part(const RealTorusDatum &T, const StrongRealFormClass &f);
StrongRealFormClass torus_part_to_mu(const RealTorusDatum &T, const CosetClass &t_class);
// Character tag of the component-group side; the identification is the lattice
// isomorphism X_*(T) = X^*(dual T), so the data is the mu-vector itself.
struct ComponentCharacter {
    RatVec mu_exponent;
};
ComponentCharacter mu_to_character(const RealTorusDatum &T, const StrongRealFormClass &f);

// Automorphism pair acting on the two sides of the correspondence.  theta is
// the automorphism of T (via its datum action), theta_dual the compatible dual
// automorphism, extension carries the value shift on delta (cocycle data).
struct TorusAutomorphismPair {
    DatumAutomorphism theta;      // on X*(T)
    RatVec delta_shift;           // dual extension: theta^Gamma(delta) = exp(2 pi i shift) delta
};

struct TorusRepSide {
    TorusQuasicharacterParam param;
    StrongRealFormClass form;
};
struct TorusParamSide {
    TorusGeometricParam geom;
    RatVec mu_char; // character data of A^{loc,alg} carried as a mu-vector
};

TorusRepSide act_on_rep_side(const TorusAutomorphismPair &pair, const TorusRepSide &x,
                             const RealTorusDatum &T);
TorusParamSide act_on_param_side(const TorusAutomorphismPair &pair, const TorusParamSide &x,
                                 const RealTorusDatum &T);

struct EquivarianceReport {
    long long cases_checked = 0;
    struct Failure {
        TorusQuasicharacterParam input;
        std::string what;
    };
    std::vector<Failure> failures;
    bool ok() const { return failures.empty(); }
};

// Exhaustively checks llc_forward(theta . x) == theta_dual . llc_forward(x)
// over all parameters with entries of height <= sample_bound (numerator and
// denominator bounds), including the strong-real-form side.
EquivarianceReport verify_equivariance(const RealTorusDatum &T, const TorusAutomorphismPair &pair,
                                       int sample_bound);

} // namespace endo
