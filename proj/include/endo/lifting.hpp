#pragma once

#include "endo/orbits.hpp"
#include "endo/rou_ring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace endo {

// Complete geometric parameter label over an orbit table: an orbit plus a
// character of its (here always abelian, usually trivial) component group,
// with the Kottwitz sign and sigma-fixedness bookkeeping.
struct CompleteParamLabel {
    int orbit = -1;
    std::string tau = "1";     // character of the component group
    int kottwitz_sign = 1;     // e(xi)
    bool sigma_fixed = true;

    bool operator<(const CompleteParamLabel &o) const {
        if (orbit != o.orbit) return orbit < o.orbit;
        return tau < o.tau;
    }
    bool operator==(const CompleteParamLabel &o) const { return orbit == o.orbit && tau == o.tau; }
};

// labels (S_i, trivial) for every orbit of the table, with sigma-fixedness
// filled from sigma_image.
std::vector<CompleteParamLabel> standard_labels(const OrbitTable &table);

// Z[U_m]-combination of irreducible-representation labels (pi(xi), zeta I_xi).
struct TwistedVirtualCharacter {
    int m = 1;
    std::map<CompleteParamLabel, RootOfUnity> terms;

    void add_term(const CompleteParamLabel &l, const RootOfUnity &c);
    bool is_zero() const;
};

enum class SheafBasis { Perverse, Constructible };

// Z[U_m]-combination of sheaf labels; each P(xi) carries its canonical
// automorphism sigma_xi (tags relative to it are roots of unity).
struct TwistedSheafClass {
    int m = 1;
    SheafBasis basis = SheafBasis::Perverse;
    std::map<CompleteParamLabel, RootOfUnity> terms;

    void add_term(const CompleteParamLabel &l, const RootOfUnity &c);
};

// chi(P(xi)) rows: multiplicities of mu(xi') in chi(P(xi)).
struct ChiMatrix {
    std::vector<CompleteParamLabel> labels;
    Mat<BigInt> entries; // entries(i, j) = multiplicity of mu(labels[j]) in chi(P(labels[i]))
    std::vector<std::string> row_provenance; // "smooth-closure" | "user-supplied"

    int index_of(const CompleteParamLabel &l) const;
    BigInt determinant() const;
    bool unit_diagonal() const;
};

// Change of basis through the chi matrix: a perverse-basis class becomes a
// constructible-basis class (chi is applied row-wise) and back through the
// integer inverse; the two conversions are mutually inverse.
TwistedSheafClass convert_basis(const TwistedSheafClass &s, const ChiMatrix &chi);

// chi(P(xi)) = (-1)^{dim S_xi} sum over orbits in the closure of S_xi, valid
// when the closure is smooth and tau trivial.
std::vector<std::pair<CompleteParamLabel, BigInt>> chi_row_smooth(const CompleteParamLabel &xi,
                                                                  const OrbitTable &table);

// Full chi matrix from the smooth-closure rule plus user-supplied rows.
ChiMatrix build_chi_matrix(const OrbitTable &table,
                           const std::map<int, std::vector<std::pair<int, BigInt>>> &user_rows = {});

// <pi(xi'), P(xi)> = e(xi) (-1)^{dim S_xi} delta_{xi,xi'}; the sign convention
// is pinned by the worked GL_2 example.
BigInt pair_irreducibles(const CompleteParamLabel &xi_rep, const CompleteParamLabel &xi_sheaf,
                         const OrbitTable &table);

RootOfUnity pair_twisted(const TwistedVirtualCharacter &c, const TwistedSheafClass &s,
                         const OrbitTable &table);

// Normalization certificate for sigma_xi: the root of unity by which the given
// automorphism tag acts on the multiplicity-one mu(xi)-constituent; canonical
// means 1.
struct SigmaNormalization {
    RootOfUnity ratio;
    bool canonical() const { return ratio.is_one(); }
};

SigmaNormalization canonical_sigma(const CompleteParamLabel &xi, const ChiMatrix &chi,
                                   const RootOfUnity &given_tag);

// Microlocal multiplicity table: tr tau^mic_S(P(xi))(h) and the twisted value
// at sigma_xi.  Entries default through the smooth-closure rule:
// off-diagonal 0 when closure(S_xi) is smooth, diagonal trivial of dimension 1.
struct MicrolocalTable {
    int m = 1;
    struct Entry {
        RootOfUnity at_identity;
        RootOfUnity at_sigma;
        std::string provenance; // "diagonal-rule" | "smooth-closure-rule" | "user-supplied"
    };
    std::map<std::pair<int, CompleteParamLabel>, Entry> entries; // key: (orbit S, xi)

    void set(int S, const CompleteParamLabel &xi, RootOfUnity id_val, RootOfUnity sig_val,
             const std::string &prov);
    std::optional<Entry> lookup(int S, const CompleteParamLabel &xi) const;
};

// Table following the smooth-closure rule for every orbit of `table`.
MicrolocalTable microlocal_from_smooth_rule(const OrbitTable &table, int m);

// eta^mic_S(h): untwisted virtual character (coefficients still in Z[U_m] to
// allow root-of-unity traces).
TwistedVirtualCharacter eta_mic(int S, const OrbitTable &table, const MicrolocalTable &mic,
                                bool at_identity = true);

// eta^mic_S(h sigma) on the endoscopic side: sigma acts trivially, so every
// pi(xi) appears as (pi(xi), 1).
TwistedVirtualCharacter eta_mic_twisted_H(int S, const OrbitTable &table_H,
                                          const MicrolocalTable &mic);

// eta^mic_{S'}(sigma) on the ambient side: only sigma-fixed labels contribute,
// with coefficients tr tau^mic_{S'}(P(xi))(sigma_xi).
TwistedVirtualCharacter eta_mic_twisted_G(int S_prime, const OrbitTable &table_G,
                                          const MicrolocalTable &mic);

// Pullback of a sheaf class along the orbit restriction map (epsilon^*).
TwistedSheafClass restrict_sheaf_class(const TwistedSheafClass &s, const OrbitRestriction &rest,
                                       const OrbitTable &h_table);

struct LiftReport {
    struct Line {
        CompleteParamLabel basis_label;
        RootOfUnity lhs;
        RootOfUnity rhs;
        bool match;
    };
    std::vector<Line> lines;
    bool ok() const {
        for (const auto &l : lines)
            if (!l.match) return false;
        return true;
    }
    std::vector<RootOfUnity> lhs_vector() const;
};

// Checks <eta_G, (P(xi), sigma_xi)> = <eta_H, eps^*(P(xi), sigma_xi)> for
// every basis label of the G-table.
LiftReport lift_and_verify(const TwistedVirtualCharacter &eta_H,
                           const TwistedVirtualCharacter &eta_G, const OrbitTable &g_table,
                           const OrbitTable &h_table, const OrbitRestriction &rest);

// A-packet of psi through the table: labels with nonzero microlocal trace on
// the orbit of the associated L-parameter.
std::vector<CompleteParamLabel> a_packet(const AParameter &psi, const OrbitTable &table,
                                         const MicrolocalTable &mic);

struct DegenerationReport {
    bool sigma_action_identity = false;
    bool pairings_match = false;
    bool eta_matches_untwisted = false;
    bool ok() const { return sigma_action_identity && pairings_match && eta_matches_untwisted; }
};

// With theta trivial the twisted pipeline must reduce to the untwisted one
// tensored with 1 in U_m.
DegenerationReport standard_endoscopy_degenerate(OrbitTable table, const MicrolocalTable &mic);

} // namespace endo
