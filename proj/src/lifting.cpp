#include "endo/lifting.hpp"

#include <cassert>
#include <stdexcept>

namespace endo {

std::vector<CompleteParamLabel> standard_labels(const OrbitTable &table) {
    std::vector<CompleteParamLabel> out;
    for (size_t i = 0; i < table.orbits.size(); ++i) {
        CompleteParamLabel l;
        l.orbit = static_cast<int>(i);
        l.tau = "1";
        l.kottwitz_sign = 1; // quasisplit default
        l.sigma_fixed = table.orbits[i].sigma_image == static_cast<int>(i);
        out.push_back(l);
    }
    return out;
}

void TwistedVirtualCharacter::add_term(const CompleteParamLabel &l, const RootOfUnity &c) {
    if (c.is_zero()) return;
    auto it = terms.find(l);
    if (it == terms.end()) {
        terms.emplace(l, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

bool TwistedVirtualCharacter::is_zero() const { return terms.empty(); }

void TwistedSheafClass::add_term(const CompleteParamLabel &l, const RootOfUnity &c) {
    if (c.is_zero()) return;
    auto it = terms.find(l);
    if (it == terms.end()) {
        terms.emplace(l, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

int ChiMatrix::index_of(const CompleteParamLabel &l) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == l) return static_cast<int>(i);
    return -1;
}

BigInt ChiMatrix::determinant() const {
    Rational d = det(to_rational(entries));
    assert(d.is_integer());
    return d.num();
}

bool ChiMatrix::unit_diagonal() const {
    for (int i = 0; i < entries.rows(); ++i) {
        BigInt a = entries(i, i).abs();
        if (!a.is_one()) return false;
    }
    return true;
}

TwistedSheafClass convert_basis(const TwistedSheafClass &s, const ChiMatrix &chi) {
    int k = static_cast<int>(chi.labels.size());
    Mat<BigInt> m = chi.entries;
    if (s.basis == SheafBasis::Constructible) {
        // constructible -> perverse through the inverse, integral because
        // |det chi| = 1
        RatMat inv = inverse(to_rational(chi.entries));
        m = Mat<BigInt>(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                assert(inv(i, j).is_integer());
                m(i, j) = inv(i, j).num();
            }
    }
    TwistedSheafClass out;
    out.m = s.m;
    out.basis = s.basis == SheafBasis::Perverse ? SheafBasis::Constructible : SheafBasis::Perverse;
    for (const auto &[label, coef] : s.terms) {
        int i = chi.index_of(label);
        if (i < 0) throw std::invalid_argument("convert_basis: label not in chi matrix");
        for (int j = 0; j < k; ++j) {
            if (m(i, j).is_zero()) continue;
            out.add_term(chi.labels[j], coef.scaled(m(i, j)));
        }
    }
    return out;
}

std::vector<std::pair<CompleteParamLabel, BigInt>> chi_row_smooth(const CompleteParamLabel &xi,
                                                                  const OrbitTable &table) {
    if (xi.tau != "1")
        throw std::invalid_argument("chi_row_smooth: rule requires trivial tau");
    if (!table.orbits[xi.orbit].smooth_closure)
        throw std::invalid_argument("chi_row_smooth: closure not flagged smooth; supply the row");
    int d = table.orbits[xi.orbit].dimension;
    BigInt sign = (d % 2 == 0) ? BigInt(1) : BigInt(-1);
    std::vector<std::pair<CompleteParamLabel, BigInt>> row;
    for (int a : table.closure_of(xi.orbit)) {
        CompleteParamLabel l;
        l.orbit = a;
        l.tau = "1";
        row.emplace_back(l, sign);
    }
    return row;
}

ChiMatrix build_chi_matrix(const OrbitTable &table,
                           const std::map<int, std::vector<std::pair<int, BigInt>>> &user_rows) {
    ChiMatrix chi;
    chi.labels = standard_labels(table);
    int k = static_cast<int>(chi.labels.size());
    chi.entries = Mat<BigInt>(k, k);
    chi.row_provenance.assign(k, "");
    for (int i = 0; i < k; ++i) {
        auto user = user_rows.find(i);
        if (user != user_rows.end()) {
            for (auto &[j, mult] : user->second) chi.entries(i, j) = mult;
            chi.row_provenance[i] = "user-supplied";
            continue;
        }
        for (auto &[label, mult] : chi_row_smooth(chi.labels[i], table)) {
            int j = chi.index_of(label);
            assert(j >= 0);
            chi.entries(i, j) = mult;
        }
        chi.row_provenance[i] = "smooth-closure";
    }
    return chi;
}

BigInt pair_irreducibles(const CompleteParamLabel &xi_rep, const CompleteParamLabel &xi_sheaf,
                         const OrbitTable &table) {
    if (!(xi_rep == xi_sheaf)) return BigInt(0);
    int d = table.orbits[xi_sheaf.orbit].dimension;
    BigInt v(xi_sheaf.kottwitz_sign);
    if (d % 2) v = -v;
    return v;
}

RootOfUnity pair_twisted(const TwistedVirtualCharacter &c, const TwistedSheafClass &s,
                         const OrbitTable &table) {
    if (c.m != s.m) throw std::invalid_argument("pair_twisted: mixed U_m orders");
    RootOfUnity acc(c.m);
    for (const auto &[lc, zc] : c.terms) {
        for (const auto &[ls, zs] : s.terms) {
            BigInt base = pair_irreducibles(lc, ls, table);
            if (base.is_zero()) continue;
            acc += (zc * zs).scaled(base);
        }
    }
    return acc;
}

SigmaNormalization canonical_sigma(const CompleteParamLabel &xi, const ChiMatrix &chi,
                                   const RootOfUnity &given_tag) {
    if (!xi.sigma_fixed)
        throw std::invalid_argument("canonical_sigma: label is not sigma-fixed");
    int i = chi.index_of(xi);
    if (i < 0) throw std::invalid_argument("canonical_sigma: label not in chi matrix");
    BigInt diag = chi.entries(i, i).abs();
    if (!diag.is_one())
        throw std::invalid_argument("canonical_sigma: mu(xi) multiplicity is not one");
    // the induced operator on the mu(xi)-constituent is the tag itself
    SigmaNormalization out{given_tag};
    return out;
}

void MicrolocalTable::set(int S, const CompleteParamLabel &xi, RootOfUnity id_val,
                          RootOfUnity sig_val, const std::string &prov) {
    entries[{S, xi}] = Entry{id_val, sig_val, prov};
}

std::optional<MicrolocalTable::Entry> MicrolocalTable::lookup(int S,
                                                              const CompleteParamLabel &xi) const {
    auto it = entries.find({S, xi});
    if (it == entries.end()) return std::nullopt;
    return it->second;
}

MicrolocalTable microlocal_from_smooth_rule(const OrbitTable &table, int m) {
    MicrolocalTable mic;
    mic.m = m;
    auto labels = standard_labels(table);
    for (const auto &xi : labels) {
        // diagonal: tau^mic_{S_xi}(P(xi)) is the trivial one-dimensional
        // representation; the canonical sigma_xi acts by 1
        mic.set(xi.orbit, xi, RootOfUnity::one(m), RootOfUnity::one(m), "diagonal-rule");
        if (!table.orbits[xi.orbit].smooth_closure) continue;
        for (size_t S = 0; S < table.orbits.size(); ++S) {
            if (static_cast<int>(S) == xi.orbit) continue;
            mic.set(static_cast<int>(S), xi, RootOfUnity(m), RootOfUnity(m), "smooth-closure-rule");
        }
    }
    return mic;
}

namespace {

RootOfUnity eta_coefficient(int S, const OrbitTable &table, const MicrolocalTable &mic,
                            const CompleteParamLabel &xi, bool twisted) {
    auto e = mic.lookup(S, xi);
    if (!e) return RootOfUnity(mic.m); // absent = 0 (rule or unsupported)
    RootOfUnity tr = twisted ? e->at_sigma : e->at_identity;
    if (tr.is_zero()) return tr;
    int sign_exp = table.orbits[xi.orbit].dimension - table.orbits[S].dimension;
    BigInt sgn(xi.kottwitz_sign);
    if (((sign_exp % 2) + 2) % 2 == 1) sgn = -sgn;
    return tr.scaled(sgn);
}

} // namespace

TwistedVirtualCharacter eta_mic(int S, const OrbitTable &table, const MicrolocalTable &mic,
                                bool at_identity) {
    TwistedVirtualCharacter eta;
    eta.m = mic.m;
    for (const auto &xi : standard_labels(table)) {
        eta.add_term(xi, eta_coefficient(S, table, mic, xi, !at_identity));
    }
    return eta;
}

TwistedVirtualCharacter eta_mic_twisted_H(int S, const OrbitTable &table_H,
                                          const MicrolocalTable &mic) {
    // sigma acts trivially on everything built from dual H: all labels are
    // sigma-fixed and each pi(xi) is tagged with the identity operator.
    TwistedVirtualCharacter eta;
    eta.m = mic.m;
    for (const auto &xi : standard_labels(table_H)) {
        if (!xi.sigma_fixed)
            throw std::invalid_argument("eta_mic_twisted_H: non-sigma-fixed label on the H side");
        eta.add_term(xi, eta_coefficient(S, table_H, mic, xi, false));
    }
    return eta;
}

TwistedVirtualCharacter eta_mic_twisted_G(int S_prime, const OrbitTable &table_G,
                                          const MicrolocalTable &mic) {
    const OrbitEntry &sp = table_G.orbits[S_prime];
    if (sp.sigma_image != S_prime)
        throw std::invalid_argument("eta_mic_twisted_G: orbit is not sigma-stable");
    TwistedVirtualCharacter eta;
    eta.m = mic.m;
    for (const auto &xi : standard_labels(table_G)) {
        if (!xi.sigma_fixed) continue; // tau^mic(sigma_xi) = 0 when sigma.xi != xi
        eta.add_term(xi, eta_coefficient(S_prime, table_G, mic, xi, true));
    }
    return eta;
}

TwistedSheafClass restrict_sheaf_class(const TwistedSheafClass &s, const OrbitRestriction &rest,
                                       const OrbitTable &h_table) {
    (void)h_table;
    // epsilon^* sends (P(xi_k), sigma_xi_k) to the matching H-side sheaf with
    // its canonical normalization; at the Grothendieck-group level this is a
    // relabelling along the inverse of the orbit map.
    TwistedSheafClass out;
    out.m = s.m;
    out.basis = s.basis;
    for (const auto &[label, coef] : s.terms) {
        int h_orbit = -1;
        for (size_t h = 0; h < rest.h_to_g.size(); ++h)
            if (rest.h_to_g[h] == label.orbit) {
                h_orbit = static_cast<int>(h);
                break;
            }
        if (h_orbit < 0) continue; // support outside the image restricts to zero
        CompleteParamLabel hl = label;
        hl.orbit = h_orbit;
        out.add_term(hl, coef);
    }
    return out;
}

LiftReport lift_and_verify(const TwistedVirtualCharacter &eta_H,
                           const TwistedVirtualCharacter &eta_G, const OrbitTable &g_table,
                           const OrbitTable &h_table, const OrbitRestriction &rest) {
    LiftReport rep;
    for (const auto &xi : standard_labels(g_table)) {
        if (!xi.sigma_fixed) continue;
        TwistedSheafClass basis_elt;
        basis_elt.m = eta_G.m;
        basis_elt.add_term(xi, RootOfUnity::one(eta_G.m));
        RootOfUnity lhs = pair_twisted(eta_G, basis_elt, g_table);
        TwistedSheafClass restricted = restrict_sheaf_class(basis_elt, rest, h_table);
        RootOfUnity rhs = pair_twisted(eta_H, restricted, h_table);
        rep.lines.push_back({xi, lhs, rhs, lhs == rhs});
    }
    return rep;
}

std::vector<RootOfUnity> LiftReport::lhs_vector() const {
    std::vector<RootOfUnity> v;
    for (const auto &l : lines) v.push_back(l.lhs);
    return v;
}

std::vector<CompleteParamLabel> a_packet(const AParameter &psi, const OrbitTable &table,
                                         const MicrolocalTable &mic) {
    LParameter phi = a_to_l_parameter(psi);
    GeometricParameterPoint pt = parameter_point(phi);
    // the orbit of the parameter point: its flat corresponds to the standard
    // coordinate flag once lambda is in standard order
    if (pt.lambda != table.lambda)
        throw std::invalid_argument("a_packet: parameter has a different infinitesimal character");
    int S_psi = orbit_of_standard_flag(table);
    std::vector<CompleteParamLabel> packet;
    for (const auto &xi : standard_labels(table)) {
        auto e = mic.lookup(S_psi, xi);
        if (e && !e->at_identity.is_zero()) packet.push_back(xi);
    }
    return packet;
}

DegenerationReport standard_endoscopy_degenerate(OrbitTable table, const MicrolocalTable &mic) {
    DegenerationReport rep;
    auto perm = sigma_action_trivial(table);
    rep.sigma_action_identity = true;
    for (size_t i = 0; i < perm.size(); ++i) rep.sigma_action_identity &= perm[i] == static_cast<int>(i);
    // pairing values are unchanged by tensoring with 1 in U_m
    rep.pairings_match = true;
    auto labels = standard_labels(table);
    for (const auto &a : labels)
        for (const auto &b : labels) {
            BigInt base = pair_irreducibles(a, b, table);
            TwistedVirtualCharacter c;
            c.m = mic.m;
            c.add_term(a, RootOfUnity::one(mic.m));
            TwistedSheafClass s;
            s.m = mic.m;
            s.add_term(b, RootOfUnity::one(mic.m));
            RootOfUnity tw = pair_twisted(c, s, table);
            RootOfUnity expect = RootOfUnity(mic.m, 0) + RootOfUnity::one(mic.m).scaled(base);
            rep.pairings_match &= tw == expect;
        }
    // eta with sigma equals eta at the identity tensored with 1
    rep.eta_matches_untwisted = true;
    for (size_t S = 0; S < table.orbits.size(); ++S) {
        TwistedVirtualCharacter tw = eta_mic_twisted_G(static_cast<int>(S), table, mic);
        TwistedVirtualCharacter um = eta_mic(static_cast<int>(S), table, mic, true);
        rep.eta_matches_untwisted &= tw.terms == um.terms;
    }
    return rep;
}

} // namespace endo
