#pragma once

#include "endo/clans.hpp"
#include "endo/cyclotomic.hpp"
#include "endo/rootdatum.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace endo {

// Infinitesimal character for GL_N: the multiset of eigenvalues of the
// semisimple element lambda.
struct InfinitesimalCharacter {
    RatVec lambda;

    bool regular() const;
    int n() const { return static_cast<int>(lambda.size()); }
};

struct CanonicalFlat {
    std::vector<std::vector<int>> levi_blocks; // index classes of integral differences
    int nilradical_dim = 0;
    bool parabolic_is_borel = false;
    bool parabolic_is_full_group = false; // P(lambda) = centralizer = whole group
};

// Canonical flat data of a diagonal semisimple lambda in gl_n: the parabolic
// P(lambda) = L(lambda) N(lambda) from the positive-integer eigenvalues of
// ad(lambda).
CanonicalFlat canonical_flat(const RatVec &lambda);

// A-parameter for GL_N (or a classical dual group inside it): a sum of
// summands (W_R-datum tensor SL_2-dimension).
struct AParameterSummand {
    enum class WType { TrivialChar, SignChar, Quasicharacter, DiscreteSeries };
    WType wtype = WType::TrivialChar;
    Rational exponent;     // s for |.|^s quasicharacters, half-integer k/2 for DS
    int sl2_dim = 1;
};

struct AParameter {
    std::vector<AParameterSummand> summands;
    std::string target; // "GL<N>" or a dual-group tag such as "SL2"

    int total_dim() const;
    void validate() const;
};

// L-parameter in diagonal normal form: the restriction to C^* is recorded by
// exponent pairs z^a zbar^b, and the value at j by a permutation matrix with
// root-of-unity entries times the delta marker.
struct LParameter {
    std::vector<std::pair<Rational, Rational>> cx_exponents; // (a_i, b_i)
    CycMat j_value;                                          // phi(j), N x N
    std::string target;
};

LParameter a_to_l_parameter(const AParameter &psi);

struct GeometricParameterPoint {
    RatVec lambda;     // flat representative, weakly decreasing within blocks
    RatVec y_exponent; // tau with y = exp(2 pi i tau) * delta
    CycMat y_matrix;   // exp(2 pi i tau) as an exact matrix

    void check_square_identity() const; // y^2 = exp(2 pi i lambda)
};

// Geometric parameter of an L-parameter: y = exp(pi i (lambda + 2 rho)) phi(j)
// with rho the half sum for the integral system of lambda.  Normalization
// pinned by the GL_2 worked example (y = diag(-i, i) at lambda = (1/2,-1/2)).
GeometricParameterPoint parameter_point(const LParameter &phi);

struct OrbitEntry {
    Clan label;
    int dimension = 0;
    std::string component_group = "trivial";
    int sigma_image = -1;     // index in the table
    bool smooth_closure = false;
    std::string display;      // e.g. "S1"
};

struct OrbitTable {
    std::string ambient;      // "GL2", "SL2", ...
    RatVec lambda;
    RatVec y_exponent;
    int p = 0, q = 0;         // signature of the y-centralizer
    std::vector<int> plus_coords, minus_coords; // original coordinates of the eigensplit
    std::vector<OrbitEntry> orbits;
    std::vector<std::pair<int, int>> closure; // (small, big) index pairs, reflexive
    int sigma_order = 1;      // order m of sigma acting on this block

    int index_of(const Clan &c) const;
    bool closure_leq(int a, int b) const;
    std::vector<int> closure_of(int b) const; // all a with a <= b
    int open_orbit() const;                   // unique maximal element
};

// Orbit of a concrete flag (columns spanning the chain) in the table.
int classify_in_table(const OrbitTable &table, const RatMat &flag);
// Orbit of the standard coordinate flag e_1 < e_1,e_2 < ...; this is the orbit
// of the parameter point itself when lambda is in standard order.
int orbit_of_standard_flag(const OrbitTable &table);

// Orbit table of dual-G_y acting on the complete flag variety, for regular
// lambda and an involution-inducing y (two eigenvalue classes).  GL component
// groups are trivial.
OrbitTable build_orbit_table(const InfinitesimalCharacter &ic, const GeometricParameterPoint &pt,
                             const std::string &ambient);

// sigma = Int(s) o theta acting on the orbits through representative flags.
// Returns the permutation of table indices and stores it in sigma_image.
std::vector<int> sigma_action(OrbitTable &table, const CycMat &s, const IntMat &tilde_J);

// Identity permutation case (standard endoscopy: theta trivial, s central).
std::vector<int> sigma_action_trivial(OrbitTable &table);

// Orbit-level restriction map along dual-H -> dual-G.  Supported embeddings:
// same-space (N_H = N) and block-diagonal products.
struct OrbitRestriction {
    std::vector<int> h_to_g; // h_table index -> g_table index
};

OrbitRestriction restriction_orbit_map(const OrbitTable &h_table, const OrbitTable &g_table);

// Block-diagonal ambient: orbits are products of per-block orbits, labelled by
// index tuples in row-major order.
struct ProductOrbitTable {
    std::vector<OrbitTable> blocks;

    long long size() const;
    std::vector<int> unflatten(long long idx) const;
    long long flatten(const std::vector<int> &tuple) const;
    int dimension(long long idx) const;
    bool closure_leq(long long a, long long b) const; // product order
};

// Componentwise restriction along per-block maps.
std::vector<long long> restriction_product_map(const ProductOrbitTable &h,
                                               const ProductOrbitTable &g,
                                               const std::vector<OrbitRestriction> &block_maps);

} // namespace endo
