#pragma once

#include "endo/rootdatum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace endo {

// The twisting automorphism theta(x) = tilde_J (x^T)^{-1} tilde_J^{-1} of GL_N.
struct TwistingAutomorphismGL {
    int N = 0;
    IntMat tilde_J;

    void validate() const; // tilde_J * (tilde_J^T)^{-1} central, theta an involution
};

// tilde_J = diag(1,-1,1,...) * antidiag(1,...,1); fixes the standard Whittaker
// triple of GL_N.
TwistingAutomorphismGL make_tilde_J(int N);

// Distinguishedness of the twist: theta maps each simple unipotent
// I + t E_{i,i+1} to another one with the same coefficient, so the standard
// pinning (and with it the Whittaker triple) is preserved.
bool preserves_standard_pinning(const TwistingAutomorphismGL &theta);

// Twisted endoscopic datum for (GL_N, theta): the pair (N_O, N_S') with
// N = N_O + 2 N_S', the endoscopic element s = J_{O,S}^{-1} tilde_J, and the
// fixed-point group SO_{N_O} x Sp_{2 N_S'}.
struct TwistedEndoDatum {
    int N = 0;
    int N_O = 0;
    int N_S_prime = 0;
    IntMat J_OS;        // bilinear form: symmetric block + alternating block
    IntMat s;           // J_OS^{-1} * tilde_J
    IntMat tilde_J;
    MatrixGroupModel H_dual;      // SO_{N_O} x Sp_{2 N_S'}
    bool gamma_semidirect = false; // nontrivial semidirect with Gamma possible
    struct DHDescriptor {
        int order = 2;
        bool fixes_splitting = true;
        bool h_is_identity = true; // direct-product case
    } D_H;

    int expected_fixed_dim() const { return N_O * (N_O - 1) / 2 + N_S_prime * (2 * N_S_prime + 1); }
};

TwistedEndoDatum make_endoscopic_datum(int N, int N_O, int N_S_prime);
std::vector<TwistedEndoDatum> enumerate_elliptic_data(int N);

struct FixedSubalgebra {
    int dimension = 0;
    bool bracket_closed = false;
    std::string type_certificate; // e.g. "so_2 + sp_2 (dim 1+3)"
    std::vector<RatMat> basis;    // basis matrices of the fixed subalgebra
};

// Solves Ad(s) d(theta) X = X on gl_N exactly.
FixedSubalgebra fixed_point_subalgebra(const IntMat &s, const TwistingAutomorphismGL &theta);

// Is X -> Ad(s) d(theta) X diagonalizable (squarefree minimal polynomial)?
bool check_semisimplicity(const RatMat &s, const TwistingAutomorphismGL &theta);
// Same question for Ad(s) alone (theta trivial).
bool check_semisimplicity_untwisted(const RatMat &s);
// Core test on an explicit operator matrix.
bool check_semisimplicity_operator(const RatMat &op);

struct FiniteOrderCertificate {
    bool was_finite = true;  // input already of finite order
    int order = 0;           // order of Int(s') o theta as an automorphism
    CycMat s_prime;
    RatVec central_shift_exponent; // s' = s * z with z in (Z(H_dual)^{theta_Z})_0
};

// Finite-order replacement of the endoscopic element within its equivalence
// class s * (Z(dual H)^{theta_Z})_0.
FiniteOrderCertificate finite_order_replacement(const TwistedEndoDatum &d);
FiniteOrderCertificate finite_order_replacement_for(const TwistedEndoDatum &d, const CycMat &s);

// Order of the automorphism x -> s theta(x) s^{-1} on GL_N, or nullopt when
// the iteration bound is exceeded.
std::optional<int> twisted_automorphism_order(const CycMat &s, const IntMat &tilde_J, int bound = 96);

enum class EquivalenceStatus { Equivalent, Inequivalent, NotFoundInCandidates };

struct EquivalenceResult {
    EquivalenceStatus status = EquivalenceStatus::NotFoundInCandidates;
    std::optional<CycMat> witness; // g with the three properties of the definition
    std::string detail;
};

// Searches monomial/block candidates for a witness g conjugating d1 to d2.
// Inequivalence is reported only on invariant separation; an unsuccessful
// search is reported as such, never as inequivalence.
EquivalenceResult data_equivalent(const TwistedEndoDatum &d1, const TwistedEndoDatum &d2);

// Variant comparing d against a replaced endoscopic element s1 (same N, theta).
EquivalenceResult data_equivalent_elements(const TwistedEndoDatum &d, const CycMat &s1);

struct EndoGroupDescriptor {
    MatrixGroupModel H;            // the endoscopic group as a classical product
    bool whittaker_normalized = true;
    bool second_invariant_trivial = true;
    bool gamma_semidirect = false;
    std::string display;
};

// H = SO_{N_O} x SO_{2N_S'+1} (N_O nonzero even), Sp_{N_O-1} x SO_{2N_S'+1}
// (N_O odd), SO_{2N_S'+1} (N_O = 0).
EndoGroupDescriptor endoscopic_group(const TwistedEndoDatum &d);

// Membership of x in (Z(dual H)^{theta_Z})_0: x central in dual H and on the
// connected-center parametrization.
bool in_connected_center_of_dual_H(const TwistedEndoDatum &d, const CycMat &x);

} // namespace endo
