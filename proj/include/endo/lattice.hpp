#pragma once

#include "endo/smith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace endo {

// Full or partial lattice inside Z^ambient, basis vectors stored as rows.
struct Lattice {
    int ambient_dim = 0;
    IntMat basis; // rank x ambient_dim, rows independent over Q

    static Lattice standard(int n) {
        Lattice l;
        l.ambient_dim = n;
        l.basis = IntMat::identity(n);
        return l;
    }
    static Lattice from_rows(int ambient, const std::vector<IntVec> &rows);

    int rank() const { return basis.rows(); }
    bool contains(const IntVec &v) const { return in_lattice_span(basis, v); }
    bool contains_rational(const RatVec &v) const;
};

// Structure of a finitely generated (or divisible) abelian quotient:
// Z^free_rank  +  sum Z/d_i  +  (Q/Z)^divisible_rank.
struct AbelianQuotientDescriptor {
    std::vector<BigInt> invariant_factors; // each >= 2, divisibility chain
    int free_rank = 0;
    int divisible_rank = 0;

    bool is_trivial() const {
        return invariant_factors.empty() && free_rank == 0 && divisible_rank == 0;
    }
    BigInt torsion_order() const; // product of invariant factors (finite part)
    bool operator==(const AbelianQuotientDescriptor &o) const {
        return invariant_factors == o.invariant_factors && free_rank == o.free_rank &&
               divisible_rank == o.divisible_rank;
    }
    std::string to_string() const;
};

// Element of an ambient Q^n modulo a subgroup; the modulus is generated by
// Z-combinations of finitely many rational vectors together with an optional
// rational subspace (for quotients of Q-vector spaces).  Equality is decided
// through Smith reduction after clearing denominators.
struct CosetClass {
    RatVec representative;
    RatMat modulus_group;       // rows: Z-generators of the discrete part
    RatMat modulus_subspace;    // rows span a Q-subspace also quotiented out (may be 0 x n)

    int dim() const { return static_cast<int>(representative.size()); }
    bool modulus_same(const CosetClass &o) const;
    bool member_of_modulus(const RatVec &v) const;
};

// Quotient (L or L tensor Q) / <image vectors>.
enum class QuotientNumerator { LatticePart, RationalSpan };

AbelianQuotientDescriptor quotient_structure(const Lattice &L, const RatMat &image_rows,
                                             QuotientNumerator num = QuotientNumerator::LatticePart);

// Invariant factors etc. for a finitely generated abelian group presented as
// Z^n / <rows of rel>.
AbelianQuotientDescriptor cokernel_structure(int n, const IntMat &rel_rows);

struct FixedAntifixed {
    Lattice fixed;        // ker(1-a) intersected with L, saturated
    RatMat antifixed;     // rows spanning ker(1+a) in L tensor Q
};

// a must be an involution of L (checked).
FixedAntifixed fixed_and_antifixed(const IntMat &a, const Lattice &L);

// pre: same modulus; true iff x - y lies in the modulus.
bool coset_equal(const CosetClass &x, const CosetClass &y);

// Canonical representative: reduces v modulo the modulus lattice (entries into
// [0, d_i) along a Smith basis).  Two equal cosets reduce to the same vector
// when the modulus has no rational-subspace part.
RatVec coset_reduce(const CosetClass &c);

RatVec add(const RatVec &a, const RatVec &b);
RatVec sub(const RatVec &a, const RatVec &b);
RatVec scale(const RatVec &a, const Rational &s);
bool is_integral(const RatVec &v);
bool is_zero(const RatVec &v);

} // namespace endo
