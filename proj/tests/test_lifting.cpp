#include "endo/endodata.hpp"
#include "endo/lifting.hpp"
#include "endo/verify_gl2.hpp"

#include <doctest.h>

#include <random>

using namespace endo;

namespace {

OrbitTable gl2_table(const std::string &ambient) {
    AParameter psi;
    psi.target = ambient;
    psi.summands.push_back({AParameterSummand::WType::TrivialChar, Rational(0), 2});
    GeometricParameterPoint pt = parameter_point(a_to_l_parameter(psi));
    OrbitTable t = build_orbit_table(InfinitesimalCharacter{pt.lambda}, pt, ambient);
    sigma_action_trivial(t);
    t.sigma_order = 2;
    return t;
}

// synthetic chain table: k orbits with dims 0..k-1, closure a chain, smooth
// flags everywhere (a fixture for matched-table tests)
OrbitTable chain_table(int k, int m) {
    OrbitTable t;
    t.ambient = "fixture";
    t.p = k;
    t.q = 0;
    t.sigma_order = m;
    for (int i = 0; i < k; ++i) {
        OrbitEntry e;
        Clan c;
        c.p = 1;
        c.q = 0;
        c.symbols = {1};
        e.label = c;
        e.dimension = i;
        e.sigma_image = i;
        e.smooth_closure = true;
        e.display = "S" + std::to_string(i + 1);
        t.orbits.push_back(e);
    }
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) t.closure.emplace_back(a, b);
    return t;
}

} // namespace

TEST_CASE("chi rows under the smooth-closure rule") {
    OrbitTable t = gl2_table("GL2");
    auto labels = standard_labels(t);
    SUBCASE("point orbits: +mu(xi)") {
        auto row = chi_row_smooth(labels[0], t);
        REQUIRE(row.size() == 1);
        CHECK(row[0].second == BigInt(1));
        auto row2 = chi_row_smooth(labels[1], t);
        REQUIRE(row2.size() == 1);
        CHECK(row2[0].second == BigInt(1));
    }
    SUBCASE("open orbit: -(mu1 + mu2 + mu3)") {
        auto row = chi_row_smooth(labels[2], t);
        CHECK(row.size() == 3);
        for (auto &[l, m] : row) CHECK(m == BigInt(-1));
    }
    SUBCASE("rows without the smoothness flag must be user-supplied") {
        OrbitTable bad = t;
        bad.orbits[2].smooth_closure = false;
        CHECK_THROWS_AS(chi_row_smooth(labels[2], bad), std::invalid_argument);
    }
}

TEST_CASE("chi matrix invariants") {
    SUBCASE("GL2 example: |det| = 1, unit diagonal") {
        OrbitTable t = gl2_table("GL2");
        ChiMatrix chi = build_chi_matrix(t);
        CHECK(chi.determinant().abs().is_one());
        CHECK(chi.unit_diagonal());
    }
    SUBCASE("chain fixtures keep |det| = 1") {
        for (int k = 1; k <= 5; ++k) {
            ChiMatrix chi = build_chi_matrix(chain_table(k, 2));
            CHECK(chi.determinant().abs().is_one());
            CHECK(chi.unit_diagonal());
        }
    }
    SUBCASE("user-supplied rows are honored and flagged") {
        OrbitTable t = chain_table(3, 2);
        std::map<int, std::vector<std::pair<int, BigInt>>> user;
        user[2] = {{0, BigInt(2)}, {2, BigInt(-1)}};
        ChiMatrix chi = build_chi_matrix(t, user);
        CHECK(chi.entries(2, 0) == BigInt(2));
        CHECK(chi.row_provenance[2] == "user-supplied");
        CHECK(chi.row_provenance[0] == "smooth-closure");
    }
}

TEST_CASE("basis conversion through the chi matrix") {
    OrbitTable t = gl2_table("GL2");
    ChiMatrix chi = build_chi_matrix(t);
    auto labels = standard_labels(t);
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 25; ++trial) {
        TwistedSheafClass s;
        s.m = 2;
        for (const auto &l : labels)
            s.add_term(l, RootOfUnity::zeta_power(2, rng() % 2)
                              .scaled(BigInt(static_cast<long long>(rng() % 7) - 3)));
        TwistedSheafClass c = convert_basis(s, chi);
        CHECK(c.basis == SheafBasis::Constructible);
        TwistedSheafClass back = convert_basis(c, chi);
        CHECK(back.basis == SheafBasis::Perverse);
        CHECK(back.terms == s.terms);
    }
    // the single perverse class P(xi3) expands to the signed closure sum
    TwistedSheafClass p3;
    p3.m = 2;
    p3.add_term(labels[2], RootOfUnity::one(2));
    TwistedSheafClass mu = convert_basis(p3, chi);
    CHECK(mu.terms.size() == 3);
    for (auto &[l, z] : mu.terms) CHECK(z == -RootOfUnity::one(2));
}

TEST_CASE("pairings") {
    OrbitTable t = gl2_table("GL2");
    auto labels = standard_labels(t);
    SUBCASE("pair_irreducibles is e(xi) (-1)^dim on the diagonal") {
        CHECK(pair_irreducibles(labels[0], labels[0], t) == BigInt(1));
        CHECK(pair_irreducibles(labels[0], labels[1], t) == BigInt(0));
        CHECK(pair_irreducibles(labels[2], labels[2], t) == BigInt(-1));
    }
    SUBCASE("pair_twisted multiplies the root-of-unity tags") {
        int m = 4;
        TwistedVirtualCharacter c;
        c.m = m;
        c.add_term(labels[0], RootOfUnity::zeta_power(m, 1));
        TwistedSheafClass s;
        s.m = m;
        s.add_term(labels[0], RootOfUnity::zeta_power(m, 1));
        RootOfUnity v = pair_twisted(c, s, t);
        CHECK(v == RootOfUnity::zeta_power(m, 2));
    }
    SUBCASE("zero pairs to zero") {
        TwistedVirtualCharacter c;
        c.m = 2;
        TwistedSheafClass s;
        s.m = 2;
        s.add_term(labels[1], RootOfUnity::one(2));
        CHECK(pair_twisted(c, s, t).is_zero());
    }
    SUBCASE("bilinearity on random combinations") {
        std::mt19937 rng(17);
        int m = 2;
        for (int trial = 0; trial < 40; ++trial) {
            auto rnd_char = [&]() {
                TwistedVirtualCharacter c;
                c.m = m;
                for (const auto &l : labels)
                    c.add_term(l, RootOfUnity::zeta_power(m, rng() % m)
                                      .scaled(BigInt(static_cast<long long>(rng() % 5) - 2)));
                return c;
            };
            auto rnd_sheaf = [&]() {
                TwistedSheafClass s;
                s.m = m;
                for (const auto &l : labels)
                    s.add_term(l, RootOfUnity::zeta_power(m, rng() % m)
                                      .scaled(BigInt(static_cast<long long>(rng() % 5) - 2)));
                return s;
            };
            TwistedVirtualCharacter c1 = rnd_char(), c2 = rnd_char();
            TwistedSheafClass s1 = rnd_sheaf();
            TwistedVirtualCharacter sum;
            sum.m = m;
            for (auto &[l, z] : c1.terms) sum.add_term(l, z);
            for (auto &[l, z] : c2.terms) sum.add_term(l, z);
            RootOfUnity lhs = pair_twisted(sum, s1, t);
            RootOfUnity rhs = pair_twisted(c1, s1, t) + pair_twisted(c2, s1, t);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("canonical sigma normalization") {
    OrbitTable t = gl2_table("GL2");
    ChiMatrix chi = build_chi_matrix(t);
    auto labels = standard_labels(t);
    SUBCASE("already-canonical tags certify as 1") {
        auto cert = canonical_sigma(labels[0], chi, RootOfUnity::one(2));
        CHECK(cert.canonical());
    }
    SUBCASE("rescaled input records the ratio") {
        auto cert = canonical_sigma(labels[0], chi, RootOfUnity::zeta_power(2, 1));
        CHECK_FALSE(cert.canonical());
        CHECK(cert.ratio == RootOfUnity::zeta_power(2, 1));
    }
    SUBCASE("non-sigma-fixed labels are rejected") {
        CompleteParamLabel bad = labels[0];
        bad.sigma_fixed = false;
        CHECK_THROWS_AS(canonical_sigma(bad, chi, RootOfUnity::one(2)), std::invalid_argument);
    }
}

TEST_CASE("eta characters") {
    OrbitTable t = gl2_table("GL2");
    MicrolocalTable mic = microlocal_from_smooth_rule(t, 2);
    SUBCASE("isolated closed orbit gives a single term") {
        TwistedVirtualCharacter eta = eta_mic(0, t, mic);
        REQUIRE(eta.terms.size() == 1);
        CHECK(eta.terms.begin()->first.orbit == 0);
        CHECK(eta.terms.begin()->second.is_one());
    }
    SUBCASE("twisted H side equals the untwisted character tensored with 1") {
        TwistedVirtualCharacter a = eta_mic_twisted_H(0, t, mic);
        TwistedVirtualCharacter b = eta_mic(0, t, mic);
        CHECK(a.terms == b.terms);
    }
    SUBCASE("eta on the open orbit picks up only its own term under the smooth rule") {
        TwistedVirtualCharacter eta = eta_mic_twisted_G(2, t, mic);
        REQUIRE(eta.terms.size() == 1);
        CHECK(eta.terms.begin()->first.orbit == 2);
    }
    SUBCASE("non-sigma-stable orbits are rejected") {
        OrbitTable t2 = t;
        t2.orbits[0].sigma_image = 1;
        t2.orbits[1].sigma_image = 0;
        CHECK_THROWS_AS(eta_mic_twisted_G(0, t2, mic), std::invalid_argument);
        // and non-fixed labels contribute zero terms to a stable orbit's eta
        TwistedVirtualCharacter eta = eta_mic_twisted_G(2, t2, mic);
        for (auto &[l, z] : eta.terms) CHECK(l.orbit == 2);
    }
}

TEST_CASE("lifting identity on matched tables") {
    SUBCASE("GL2 example end-to-end") {
        Gl2Report rep = run_gl2_verification();
        CHECK(rep.ok());
        REQUIRE(rep.lift.lines.size() == 3);
        CHECK(rep.lift.lines[0].lhs.is_one());
        CHECK(rep.lift.lines[1].lhs.is_zero());
        CHECK(rep.lift.lines[2].lhs.is_zero());
    }
    SUBCASE("synthetic matched chain fixtures verify with zero mismatches") {
        for (int k = 2; k <= 4; ++k) {
            for (int m : {2, 3}) {
                OrbitTable g = chain_table(k, m);
                OrbitTable h = chain_table(k, m);
                MicrolocalTable mic_g = microlocal_from_smooth_rule(g, m);
                MicrolocalTable mic_h = microlocal_from_smooth_rule(h, m);
                OrbitRestriction rest;
                rest.h_to_g.resize(k);
                for (int i = 0; i < k; ++i) rest.h_to_g[i] = i;
                for (int S = 0; S < k; ++S) {
                    TwistedVirtualCharacter eg = eta_mic_twisted_G(S, g, mic_g);
                    TwistedVirtualCharacter eh = eta_mic_twisted_H(S, h, mic_h);
                    LiftReport rep = lift_and_verify(eh, eg, g, h, rest);
                    CHECK(rep.ok());
                }
            }
        }
    }
    SUBCASE("single-coefficient mutations are detected") {
        int k = 3, m = 2;
        OrbitTable g = chain_table(k, m);
        OrbitTable h = chain_table(k, m);
        MicrolocalTable mic_g = microlocal_from_smooth_rule(g, m);
        MicrolocalTable mic_h = microlocal_from_smooth_rule(h, m);
        OrbitRestriction rest;
        rest.h_to_g = {0, 1, 2};
        TwistedVirtualCharacter eg = eta_mic_twisted_G(1, g, mic_g);
        TwistedVirtualCharacter eh = eta_mic_twisted_H(1, h, mic_h);
        // perturb one coefficient of eta_G
        CompleteParamLabel l0 = standard_labels(g)[0];
        eg.add_term(l0, RootOfUnity::one(m));
        LiftReport rep = lift_and_verify(eh, eg, g, h, rest);
        CHECK_FALSE(rep.ok());
        int mismatches = 0;
        for (auto &line : rep.lines)
            if (!line.match) ++mismatches;
        CHECK(mismatches == 1);
    }
    SUBCASE("mutation switches of the GL2 pipeline trip their checkpoints") {
        Gl2Options flip;
        flip.pairing_sign = -1;
        CHECK_FALSE(run_gl2_verification(flip).pairing_ok);
        Gl2Options inject;
        inject.inject_offdiagonal = true;
        Gl2Report rep = run_gl2_verification(inject);
        CHECK_FALSE(rep.pairing_ok);
    }
}

TEST_CASE("A-packets") {
    SUBCASE("GL2 unipotent parameter: the trivial representation only") {
        Gl2Report rep = run_gl2_verification();
        CHECK(rep.packet_G == std::vector<std::string>{"S1"});
        CHECK(rep.packet_H == std::vector<std::string>{"S1"});
    }
    SUBCASE("tempered parameter on GL1: A-packet = L-packet singleton") {
        AParameter psi;
        psi.target = "GL1";
        psi.summands.push_back({AParameterSummand::WType::TrivialChar, Rational(0), 1});
        GeometricParameterPoint pt = parameter_point(a_to_l_parameter(psi));
        OrbitTable t = build_orbit_table(InfinitesimalCharacter{pt.lambda}, pt, "GL1");
        sigma_action_trivial(t);
        MicrolocalTable mic = microlocal_from_smooth_rule(t, 2);
        auto packet = a_packet(psi, t, mic);
        CHECK(packet.size() == 1);
    }
    SUBCASE("L-packet is contained in the A-packet (coefficient positivity)") {
        OrbitTable t = gl2_table("GL2");
        MicrolocalTable mic = microlocal_from_smooth_rule(t, 2);
        for (size_t S = 0; S < t.orbits.size(); ++S) {
            TwistedVirtualCharacter eta = eta_mic(static_cast<int>(S), t, mic);
            CompleteParamLabel own;
            own.orbit = static_cast<int>(S);
            REQUIRE(eta.terms.count(own) == 1);
            // coefficient on its own orbit is e(xi) * dim tau = +1
            CHECK(eta.terms.at(own).is_one());
        }
    }
}

TEST_CASE("chi matrix is unitriangular along the closure order") {
    OrbitTable t = gl2_table("GL2");
    ChiMatrix chi = build_chi_matrix(t);
    for (int i = 0; i < chi.entries.rows(); ++i)
        for (int j = 0; j < chi.entries.cols(); ++j) {
            if (chi.entries(i, j).is_zero()) continue;
            CHECK(t.closure_leq(chi.labels[j].orbit, chi.labels[i].orbit));
        }
}

TEST_CASE("nontrivial sigma on the GL4 block") {
    AParameter psi;
    psi.target = "GL4";
    psi.summands.push_back({AParameterSummand::WType::TrivialChar, Rational(0), 4});
    GeometricParameterPoint pt = parameter_point(a_to_l_parameter(psi));
    OrbitTable t = build_orbit_table(InfinitesimalCharacter{pt.lambda}, pt, "GL4");
    TwistedEndoDatum d = make_endoscopic_datum(4, 0, 2);
    auto perm = sigma_action(t, to_cyclotomic(d.s), d.tilde_J);
    SUBCASE("the action is an involutive closure-poset automorphism") {
        bool nontrivial = false;
        for (size_t i = 0; i < perm.size(); ++i) {
            CHECK(perm[perm[i]] == static_cast<int>(i));
            CHECK(t.orbits[perm[i]].dimension == t.orbits[i].dimension);
            if (perm[i] != static_cast<int>(i)) nontrivial = true;
        }
        CHECK(nontrivial);
        for (auto &[a, b] : t.closure) CHECK(t.closure_leq(perm[a], perm[b]));
    }
    SUBCASE("twisted eta is supported on sigma-fixed labels only") {
        MicrolocalTable mic = microlocal_from_smooth_rule(t, 2);
        int S = orbit_of_standard_flag(t);
        REQUIRE(t.orbits[S].sigma_image == S);
        TwistedVirtualCharacter eta = eta_mic_twisted_G(S, t, mic);
        REQUIRE(!eta.is_zero());
        for (auto &[l, z] : eta.terms) {
            CHECK(l.sigma_fixed);
            CHECK(t.orbits[l.orbit].sigma_image == l.orbit);
        }
    }
}

TEST_CASE("user-supplied microlocal entries flow through eta and the lift check") {
    int k = 3, m = 2;
    OrbitTable g = chain_table(k, m);
    OrbitTable h = chain_table(k, m);
    MicrolocalTable mic_g = microlocal_from_smooth_rule(g, m);
    MicrolocalTable mic_h = microlocal_from_smooth_rule(h, m);
    // a genuine off-diagonal multiplicity on both sides, with a root of unity
    // at sigma
    CompleteParamLabel xi2;
    xi2.orbit = 2;
    RootOfUnity tr = RootOfUnity::zeta_power(m, 1);
    // G side: the canonical sigma_xi trace is the root of unity; H side: the
    // same value appears as the scalar eigenvalue of the intertwining
    // operator, i.e. in the trace itself
    mic_g.set(0, xi2, RootOfUnity(m, 1), tr, "user-supplied");
    mic_h.set(0, xi2, tr, tr, "user-supplied");
    TwistedVirtualCharacter eg = eta_mic_twisted_G(0, g, mic_g);
    TwistedVirtualCharacter eh = eta_mic_twisted_H(0, h, mic_h);
    // the new term appears with the dimension sign (-1)^{2-0} = +1 times zeta
    REQUIRE(eg.terms.count(xi2) == 1);
    CHECK(eg.terms.at(xi2) == tr);
    OrbitRestriction rest;
    rest.h_to_g = {0, 1, 2};
    // matched tables still verify; removing the entry on one side is caught
    CHECK(lift_and_verify(eh, eg, g, h, rest).ok());
    TwistedVirtualCharacter eh_plain = eta_mic_twisted_H(0, h, microlocal_from_smooth_rule(h, m));
    CHECK_FALSE(lift_and_verify(eh_plain, eg, g, h, rest).ok());
}

TEST_CASE("standard endoscopy degeneration") {
    SUBCASE("GL2 table with trivial twisting") {
        OrbitTable t = gl2_table("GL2");
        MicrolocalTable mic = microlocal_from_smooth_rule(t, 2);
        DegenerationReport rep = standard_endoscopy_degenerate(t, mic);
        CHECK(rep.ok());
    }
    SUBCASE("chain fixtures") {
        for (int k = 1; k <= 4; ++k) {
            OrbitTable t = chain_table(k, 2);
            MicrolocalTable mic = microlocal_from_smooth_rule(t, 2);
            CHECK(standard_endoscopy_degenerate(t, mic).ok());
        }
    }
}
