#pragma once

#include "endo/cyclotomic.hpp"
#include "endo/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace endo {

// Based root datum on X* = X_* = Z^rank with the dot-product pairing.
// Simple roots live in X*, simple coroots in X_*.
struct BasedRootDatum {
    int rank = 0;
    std::vector<IntVec> simple_roots;
    std::vector<IntVec> simple_coroots;
    std::string name;

    int num_simple() const { return static_cast<int>(simple_roots.size()); }
    IntMat cartan_matrix() const; // <alpha_i, alpha_j^vee>
    void validate() const;        // throws unless a finite-type based root datum

    bool operator==(const BasedRootDatum &o) const {
        return rank == o.rank && simple_roots == o.simple_roots && simple_coroots == o.simple_coroots;
    }

    static BasedRootDatum gl(int n);
    static BasedRootDatum torus(int n);
    static BasedRootDatum sp(int even_n);   // Sp_n, n even (type C)
    static BasedRootDatum so(int n);        // SO_n (type B or D)
};

BasedRootDatum dual_datum(const BasedRootDatum &d);

// Automorphism of a based root datum.  `on_characters` is the pushforward
// action on X* (chi -> chi o theta^{-1}); the X_* action is its
// inverse-transpose.  Must permute the simple roots by `root_perm` and have
// finite order.
struct DatumAutomorphism {
    IntMat on_characters;
    std::vector<int> root_perm;

    IntMat on_cocharacters() const;
    int order() const; // finite by validation
    void validate(const BasedRootDatum &d) const;
    static DatumAutomorphism identity(const BasedRootDatum &d);
    // GL_N outer automorphism induced by x -> tilde_J (x^T)^-1 tilde_J^-1,
    // i.e. -w0 on the diagonal torus.
    static DatumAutomorphism gl_outer(int n);

    bool operator==(const DatumAutomorphism &o) const {
        return on_characters == o.on_characters && root_perm == o.root_perm;
    }
};

DatumAutomorphism transfer_automorphism(const DatumAutomorphism &theta);
bool check_compatible(const DatumAutomorphism &theta_G, const DatumAutomorphism &theta_dual);
bool commutes_with_first_invariant(const DatumAutomorphism &theta, const DatumAutomorphism &a);

// ---- centre bookkeeping ----------------------------------------------------
// Central elements are represented by rational cocharacter exponents:
// z = exp(2*pi*i*v).  An optional transcendental direction w encodes
// exp(2*pi*i*t*w) for a formal transcendental t, which is how infinite-order
// central elements enter finite-order tests.
struct CentralElement {
    RatVec exponent;
    RatVec transcendental; // empty means none

    bool has_transcendental() const;
    static CentralElement rational(RatVec v) { return CentralElement{std::move(v), {}}; }
};

RatMat central_subspace(const BasedRootDatum &d);        // rows span {v : <alpha,v> = 0}
RatMat central_exponent_group(const BasedRootDatum &d);  // rows: Z-generators of {v : <alpha,v> in Z}
bool is_central_exponent(const BasedRootDatum &d, const RatVec &v);

// Invariants (a, z_bar) of a weak extended group or weak E-group.  The flag
// distinguishes the Galois action: antiholomorphic sigma_Z for extended
// groups, holomorphic theta_Z for E-groups.  On exponents sigma_Z acts by
// -a_* and theta_Z by +a_*.
struct ExtendedGroupInvariants {
    BasedRootDatum datum;
    DatumAutomorphism a;
    bool antiholomorphic = true;
    RatVec z_bar_rep;                  // representative exponent of z_bar
    std::optional<RatVec> z_canonical; // present when a Whittaker datum is fixed

    IntMat galois_exponent_action() const; // the matrix S above
    CosetClass z_bar() const;              // z_bar_rep modulo (1+sigma_Z)Z(G) and X_*
    void validate() const;                 // z_bar_rep central and sigma_Z-fixed
};

struct ExtensionCheck {
    bool commutes = false;
    bool fixes_z_bar = false;
    RatVec theta_z_rep; // image of z_bar_rep under theta
    RatVec difference;  // theta(z) - z, the vector tested for membership
    bool exists() const { return commutes && fixes_z_bar; }
};

// Proposition: theta extends to the (weak) extended group iff it commutes with
// a and fixes z_bar.  Returns the coset-computation transcript.
ExtensionCheck extension_exists(const DatumAutomorphism &theta, const ExtendedGroupInvariants &inv);

// Structure of ker(1 + sigma_Z) on Z(G): the ambiguity group for extensions.
AbelianQuotientDescriptor extension_ambiguity(const ExtendedGroupInvariants &inv);

// A concrete extension of a dual automorphism to the E-group, recorded by its
// value on a base point: theta^Gamma(delta) = exp(2*pi*i*delta_shift) * delta.
struct EGroupExtension {
    DatumAutomorphism dual_theta;
    RatVec delta_shift;
};

// Twist by the one-cocycle with value a_gamma = exp(2*pi*i*a_exponent) in
// ker(1 + theta_Z): the value on delta is divided by a_gamma.
EGroupExtension cocycle_twist(const EGroupExtension &ext, const RatVec &a_exponent,
                              const ExtendedGroupInvariants &egroup_inv);

struct OrderResult {
    bool finite = false;
    BigInt order;            // meaningful when finite
    CentralElement z2;       // (1 + theta + ... + theta^{m-1})(z1)
};

// Finite-order criterion for extensions theta^Gamma(delta) = z1 * delta where
// theta has order m on the underlying group.
OrderResult automorphism_order(int m, const CentralElement &z1, const DatumAutomorphism &theta);

// ---- concrete matrix models ------------------------------------------------
enum class GroupKind { GL, SO, Sp, Product };

struct MatrixGroupModel {
    GroupKind kind = GroupKind::GL;
    int n = 0;
    IntMat form; // defining bilinear form for SO/Sp
    std::vector<MatrixGroupModel> factors;

    void validate() const;
    std::string describe() const;
};

// Strong real form delta = d * delta_q of GL_N^Gamma where delta_q acts by
// entrywise complex conjugation.
struct StrongRealFormGL {
    CycMat d;
};

struct TwistedPowerReport {
    bool precondition_fixes_delta = false;
    bool power_identity = false;
    bool element_sigma_fixed = false;
    CycMat element; // (theta + theta^2 + ... + theta^m)(g)
    bool ok() const { return precondition_fixes_delta && power_identity && element_sigma_fixed; }
};

// Lemma-level check: (theta^Gamma o Int(g))^m = Int((theta+...+theta^m)(g))
// as automorphisms of GL_N, and the product element lies in G(R, delta).
TwistedPowerReport verify_twisted_power_identity(const CycMat &g, const StrongRealFormGL &delta,
                                                 const CycMat &tilde_j, int m);

// theta(x) = tilde_j (x^T)^{-1} tilde_j^{-1} evaluated exactly.
CycMat gl_twist_apply(const CycMat &tilde_j, const CycMat &x);

} // namespace endo
