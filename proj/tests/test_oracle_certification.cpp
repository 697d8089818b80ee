#include "oracle.hpp"

#include <doctest.h>

TEST_CASE("flag counts over small fields") {
    CHECK(oracle::flag_count(1, 2) == 1);
    CHECK(oracle::flag_count(2, 2) == 3);
    CHECK(oracle::flag_count(3, 2) == 21);
    CHECK(oracle::flag_count(4, 2) == 315);
    CHECK(oracle::flag_count(2, 3) == 4);
    CHECK(oracle::flag_count(3, 3) == 52);
    CHECK(oracle::flag_count(4, 3) == 2080);
}

TEST_CASE("(1,1) certification: counts, dims, closure") {
    oracle::SignatureReport rep = oracle::certify_signature(1, 1);
    CHECK(rep.counts_q2.keys_match);
    CHECK(rep.counts_q2.totals_match);
    // orbits {0}, {infinity}, open: counts 1, 1, q-1 over F_q
    CHECK(rep.counts_q2.class_sizes == std::vector<long long>{1, 1, 1});
    CHECK(rep.counts_q3.class_sizes == std::vector<long long>{1, 1, 2});
    CHECK(rep.dims_ok);
    CHECK(rep.closure.coverings_certified);
    CHECK(rep.closure.no_extra_closure);
}

TEST_CASE("(2,1) certification") {
    oracle::SignatureReport rep = oracle::certify_signature(2, 1);
    CHECK(rep.ok());
    // six orbits, |Flag(F_q)| = 21 over F_2 and 52 over F_3
    long long total2 = 0, total3 = 0;
    for (auto c : rep.counts_q2.class_sizes) total2 += c;
    for (auto c : rep.counts_q3.class_sizes) total3 += c;
    CHECK(total2 == 21);
    CHECK(total3 == 52);
}

TEST_CASE("(2,2) certification") {
    oracle::SignatureReport rep = oracle::certify_signature(2, 2);
    for (const auto &p : rep.closure.problems) MESSAGE(p);
    CHECK(rep.ok());
}
