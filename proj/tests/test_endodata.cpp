#include "endo/endodata.hpp"

#include <doctest.h>

using namespace endo;

TEST_CASE("tilde_J construction") {
    SUBCASE("N = 1") {
        TwistingAutomorphismGL t = make_tilde_J(1);
        CHECK(t.tilde_J(0, 0) == BigInt(1));
    }
    SUBCASE("N = 2: [[0,1],[-1,0]]") {
        TwistingAutomorphismGL t = make_tilde_J(2);
        CHECK(t.tilde_J == IntMat{{BigInt(0), BigInt(1)}, {BigInt(-1), BigInt(0)}});
    }
    SUBCASE("N = 3: D * antidiag with the middle sign") {
        TwistingAutomorphismGL t = make_tilde_J(3);
        IntMat expect{{BigInt(0), BigInt(0), BigInt(1)},
                      {BigInt(0), BigInt(-1), BigInt(0)},
                      {BigInt(1), BigInt(0), BigInt(0)}};
        CHECK(t.tilde_J == expect);
    }
    SUBCASE("theta is an involution on GL_N for N <= 12") {
        for (int n = 1; n <= 12; ++n) {
            TwistingAutomorphismGL t = make_tilde_J(n);
            // theta^2 = Int(tilde_J tilde_J^{-T}) with central conjugating element
            RatMat J = to_rational(t.tilde_J);
            RatMat c = J * inverse(J.transpose());
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) CHECK(c(i, j) == c(0, 0));
                    else CHECK(c(i, j).is_zero());
                }
        }
    }
}

TEST_CASE("endoscopic data for (GL_N, theta)") {
    SUBCASE("N = 2, (0,1): dual H = Sp2 = SL2, fixed dimension 3, s = 1") {
        TwistedEndoDatum d = make_endoscopic_datum(2, 0, 1);
        CHECK(d.H_dual.describe() == "Sp2");
        CHECK(d.expected_fixed_dim() == 3);
        CHECK(to_rational(d.s).is_identity());
        TwistingAutomorphismGL th{2, d.tilde_J};
        CHECK(fixed_point_subalgebra(d.s, th).dimension == 3);
        CHECK_FALSE(d.gamma_semidirect);
        CHECK(d.D_H.h_is_identity);
    }
    SUBCASE("N = 2, (2,0): dual H = SO2, dimension 1, semidirect possible") {
        TwistedEndoDatum d = make_endoscopic_datum(2, 2, 0);
        CHECK(d.H_dual.describe() == "SO2");
        TwistingAutomorphismGL th{2, d.tilde_J};
        CHECK(fixed_point_subalgebra(d.s, th).dimension == 1);
        CHECK(d.gamma_semidirect);
        CHECK_FALSE(d.D_H.h_is_identity);
    }
    SUBCASE("N = 3, (3,0): dual H = SO3, dimension 3") {
        TwistedEndoDatum d = make_endoscopic_datum(3, 3, 0);
        CHECK(d.H_dual.describe() == "SO3");
        TwistingAutomorphismGL th{3, d.tilde_J};
        CHECK(fixed_point_subalgebra(d.s, th).dimension == 3);
        CHECK_FALSE(d.gamma_semidirect); // N_O odd
    }
    SUBCASE("N = 4, (2,1): so_2 + sp_2 has dimension 4") {
        TwistedEndoDatum d = make_endoscopic_datum(4, 2, 1);
        TwistingAutomorphismGL th{4, d.tilde_J};
        FixedSubalgebra fa = fixed_point_subalgebra(d.s, th);
        CHECK(fa.dimension == 4);
        CHECK(fa.bracket_closed);
    }
    SUBCASE("N = 1 gives so_1 of dimension 0") {
        TwistedEndoDatum d = make_endoscopic_datum(1, 1, 0);
        TwistingAutomorphismGL th{1, d.tilde_J};
        CHECK(fixed_point_subalgebra(d.s, th).dimension == 0);
    }
    SUBCASE("size mismatch is rejected") {
        CHECK_THROWS_AS(make_endoscopic_datum(3, 2, 1), std::invalid_argument);
    }
}

TEST_CASE("enumeration of elliptic data") {
    CHECK(enumerate_elliptic_data(1).size() == 1);
    CHECK(enumerate_elliptic_data(2).size() == 2);
    CHECK(enumerate_elliptic_data(5).size() == 3);
    for (int n = 1; n <= 6; ++n) {
        auto data = enumerate_elliptic_data(n);
        CHECK(static_cast<int>(data.size()) == n / 2 + 1);
        for (const auto &d : data) {
            TwistingAutomorphismGL th{n, d.tilde_J};
            CHECK(check_semisimplicity(to_rational(d.s), th));
            FixedSubalgebra fa = fixed_point_subalgebra(d.s, th);
            CHECK(fa.dimension == d.expected_fixed_dim());
            CHECK(fa.bracket_closed);
            // Int(s) o theta is the identity on its fixed algebra
            RatMat P = to_rational(d.s) * to_rational(d.tilde_J);
            RatMat Pinv = inverse(P);
            for (const auto &B : fa.basis) {
                RatMat img = (P * B.transpose() * Pinv) * Rational(-1);
                CHECK(img == B);
            }
        }
    }
}

TEST_CASE("semisimplicity detection") {
    TwistingAutomorphismGL id2{2, IntMat::identity(2)};
    SUBCASE("identity is semisimple") {
        CHECK(check_semisimplicity(RatMat::identity(2), id2));
    }
    SUBCASE("unipotent upper-triangular s with trivial theta is not") {
        RatMat s = RatMat::identity(2);
        s(0, 1) = Rational(1);
        CHECK_FALSE(check_semisimplicity_untwisted(s));
        CHECK(check_semisimplicity_untwisted(RatMat::identity(2)));
    }
    SUBCASE("every datum for N <= 6 is semisimple") {
        for (int n = 1; n <= 6; ++n)
            for (const auto &d : enumerate_elliptic_data(n)) {
                TwistingAutomorphismGL th{n, d.tilde_J};
                CHECK(check_semisimplicity(to_rational(d.s), th));
            }
    }
}

TEST_CASE("finite order replacement") {
    SUBCASE("constructed data are already of finite order") {
        for (int n = 1; n <= 6; ++n)
            for (const auto &d : enumerate_elliptic_data(n)) {
                FiniteOrderCertificate c = finite_order_replacement(d);
                CHECK(c.was_finite);
                CHECK(c.order >= 1);
                // certificate: the order really is an automorphism order
                auto o = twisted_automorphism_order(c.s_prime, d.tilde_J);
                REQUIRE(o.has_value());
                CHECK(*o == c.order);
            }
    }
    SUBCASE("N = 2, (0,1): order 2 or 4 certified by matrix powers") {
        TwistedEndoDatum d = make_endoscopic_datum(2, 0, 1);
        FiniteOrderCertificate c = finite_order_replacement(d);
        CHECK((c.order == 2 || c.order == 4));
    }
    SUBCASE("centrally scaled s is rescaled back") {
        TwistedEndoDatum d = make_endoscopic_datum(2, 2, 0);
        // scale by the connected centre of SO2: diag(exp(2 pi i /8), exp(-2 pi i/8))
        CycMat z = CycMat::identity(2);
        z(0, 0) = Cyclo::from_exponent(Rational(1, 8));
        z(1, 1) = Cyclo::from_exponent(Rational(-1, 8));
        CycMat scaled = to_cyclotomic(d.s) * z;
        FiniteOrderCertificate c = finite_order_replacement_for(d, scaled);
        CHECK(c.order <= finite_order_replacement(d).order);
        // equivalence witnessed by the identity with a central shift
        EquivalenceResult eq = data_equivalent_elements(d, c.s_prime);
        CHECK(eq.status == EquivalenceStatus::Equivalent);
    }
}

TEST_CASE("equivalence of endoscopic data") {
    SUBCASE("reflexive with identity witness") {
        TwistedEndoDatum d = make_endoscopic_datum(2, 0, 1);
        EquivalenceResult r = data_equivalent(d, d);
        CHECK(r.status == EquivalenceStatus::Equivalent);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->is_identity());
    }
    SUBCASE("(0,1) and (2,0) at N = 2 are separated by the fixed dimension") {
        TwistedEndoDatum a = make_endoscopic_datum(2, 0, 1);
        TwistedEndoDatum b = make_endoscopic_datum(2, 2, 0);
        EquivalenceResult r = data_equivalent(a, b);
        CHECK(r.status == EquivalenceStatus::Inequivalent);
    }
    SUBCASE("finite-order replacement is equivalent to the original") {
        TwistedEndoDatum d = make_endoscopic_datum(4, 2, 1);
        FiniteOrderCertificate c = finite_order_replacement(d);
        EquivalenceResult r = data_equivalent_elements(d, c.s_prime);
        CHECK(r.status == EquivalenceStatus::Equivalent);
    }
    SUBCASE("symmetry on the decidable fragment") {
        TwistedEndoDatum a = make_endoscopic_datum(3, 1, 1);
        TwistedEndoDatum b = make_endoscopic_datum(3, 3, 0);
        EquivalenceResult r1 = data_equivalent(a, b);
        EquivalenceResult r2 = data_equivalent(b, a);
        CHECK(r1.status == r2.status);
    }
}

TEST_CASE("endoscopic groups H") {
    SUBCASE("(0,1) at N = 2: H = SO3") {
        EndoGroupDescriptor g = endoscopic_group(make_endoscopic_datum(2, 0, 1));
        CHECK(g.display == "SO3");
        CHECK(g.second_invariant_trivial);
    }
    SUBCASE("(1,1) at N = 3: H = SO3 (Sp0 factor dropped)") {
        EndoGroupDescriptor g = endoscopic_group(make_endoscopic_datum(3, 1, 1));
        CHECK(g.display == "SO3");
    }
    SUBCASE("(2,1) at N = 4: H = SO2 x SO3") {
        EndoGroupDescriptor g = endoscopic_group(make_endoscopic_datum(4, 2, 1));
        CHECK(g.display == "SO2 x SO3");
    }
    SUBCASE("(3,0) at N = 3: H = Sp2 x SO1") {
        EndoGroupDescriptor g = endoscopic_group(make_endoscopic_datum(3, 3, 0));
        CHECK(g.display == "Sp2 x SO1");
    }
}
