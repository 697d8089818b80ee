#pragma once

#include "endo/bigint.hpp"
#include "endo/matrix.hpp"
#include "endo/rational.hpp"

#include <vector>

namespace endo {

using IntMat = Mat<BigInt>;
using RatMat = Mat<Rational>;
using IntVec = std::vector<BigInt>;
using RatVec = std::vector<Rational>;

IntMat to_integer(const RatMat &m); // asserts integrality
RatMat to_rational(const IntMat &m);
RatVec to_rational(const IntVec &v);

struct SmithResult {
    IntMat U; // unimodular, rows x rows
    IntMat D; // diagonal with d1 | d2 | ..., same shape as input
    IntMat V; // unimodular, cols x cols
};

// U * M * V = D with the nonzero diagonal entries positive and forming a
// divisibility chain.
SmithResult smith_normal_form(const IntMat &M);

// Solve A x = b over the integers.  Returns false when no integral solution
// exists (kernel contribution is not included).
bool solve_integer(const IntMat &A, const IntVec &b, IntVec &x);

// Does v lie in the Z-span of the rows of `gens`?
bool in_lattice_span(const IntMat &gens, const IntVec &v);

// Membership of a rational vector in a finitely generated subgroup of Q^n
// given by rational generators (rows).  Clears denominators and reduces to an
// integral lattice question.
bool in_rational_span_subgroup(const RatMat &gens, const RatVec &v);

// Does there exist q in Q^a and n in Z^b with Rq + Gn = u?  R's columns span a
// Q-subspace, G's columns generate a group.
bool mixed_member(const RatMat &rational_cols, const RatMat &integral_cols, const RatVec &u);

// Saturation of the row span: basis (rows) of (span_Q(rows) intersect Z^n).
IntMat saturate_rows(const IntMat &rows);

// Scale rows by the common denominator, returning an integer matrix with the
// same rational row span.
IntMat clear_denominators(const RatMat &m);

// Common denominator of all entries.
BigInt common_denominator(const RatMat &m);
BigInt common_denominator(const RatVec &v);

} // namespace endo
