#pragma once

#include "endo/smith.hpp"

#include <string>
#include <vector>

namespace endo {

// Clan of signature (p, q): a word over {+, -, paired index} labelling a
// GL_p x GL_q orbit on the complete flag variety of GL_{p+q}.  symbols[i] is
// +1, -1, or k >= 2 with each k occurring exactly twice (pair ids are
// normalized by first occurrence).
struct Clan {
    std::vector<int> symbols;
    int p = 0;
    int q = 0;

    int length() const { return static_cast<int>(symbols.size()); }
    int pairs() const;
    void validate() const;
    std::string to_string() const;
    bool operator==(const Clan &o) const { return symbols == o.symbols; }
    bool operator<(const Clan &o) const { return symbols < o.symbols; }
};

std::vector<Clan> enumerate_clans(int p, int q);

// Orbit dimension in the complete flag variety:
// dim Fl(p) + dim Fl(q) + sum over pairs (i<j) of (j - i - crossings to the right).
int clan_dimension(const Clan &c);

// Rank profile of the orbit: intersection invariants of a representative flag
// F against the splitting V = V+ + V-, the mixed subspaces
// (F_j cap V+-) + V-+, and the twisted flags theta(F_j).  Orbits are separated
// by their profiles and closure makes every entry weakly increase.  The
// dim_u/dim_v families are characteristic-free (the finite-field oracle keys
// on them), dim_theta needs 2 to be invertible.
struct ClanProfile {
    int n = 0;
    std::vector<int> dim_plus;               // dim(F_i cap V+), i = 1..n
    std::vector<int> dim_minus;              // dim(F_i cap V-)
    std::vector<std::vector<int>> dim_u;     // dim(F_i cap ((F_j cap V+) + V-))
    std::vector<std::vector<int>> dim_v;     // dim(F_i cap ((F_j cap V-) + V+))
    std::vector<std::vector<int>> dim_theta; // dim(F_i cap theta F_j)

    bool operator==(const ClanProfile &o) const {
        return dim_plus == o.dim_plus && dim_minus == o.dim_minus && dim_u == o.dim_u &&
               dim_v == o.dim_v && dim_theta == o.dim_theta;
    }
    // true when every intersection dimension of *this dominates o's (the
    // closure direction: bigger orbit has smaller intersections)
    bool dominates(const ClanProfile &o) const;
    // the characteristic-free part, flattened for keying
    std::vector<int> char_free_key() const;
};

// Representative flag of the clan orbit: columns i span F_i; V+ = first p
// coordinates, V- = last q.
RatMat clan_representative_flag(const Clan &c);

ClanProfile clan_profile(const Clan &c);
ClanProfile flag_profile(const RatMat &flag, int p, int q);

// Classify a complete flag by matching its profile against the clan list.
Clan classify_flag(const RatMat &flag, int p, int q);

// Closure order pairs (i_small <= i_big) on the given clan list, computed by
// profile domination; certified externally by the finite-field oracle.
std::vector<std::pair<int, int>> closure_order(const std::vector<Clan> &clans);

} // namespace endo
