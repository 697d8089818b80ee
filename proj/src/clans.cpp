#include "endo/clans.hpp"

#include "endo/flag_profile.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace endo {

int Clan::pairs() const {
    int k = 0;
    for (int s : symbols)
        if (s >= 2) ++k;
    return k / 2;
}

void Clan::validate() const {
    int plus = 0, minus = 0;
    std::map<int, int> seen;
    for (int s : symbols) {
        if (s == 1) ++plus;
        else if (s == -1) ++minus;
        else if (s >= 2) ++seen[s];
        else throw std::invalid_argument("clan: bad symbol");
    }
    int k = 0;
    for (auto &[id, cnt] : seen) {
        (void)id;
        if (cnt != 2) throw std::invalid_argument("clan: pair id not occurring twice");
        ++k;
    }
    if (plus + k != p || minus + k != q) throw std::invalid_argument("clan: signature mismatch");
    if (plus - minus != p - q) throw std::invalid_argument("clan: signature mismatch");
}

std::string Clan::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < symbols.size(); ++i) {
        if (i) os << " ";
        if (symbols[i] == 1) os << "+";
        else if (symbols[i] == -1) os << "-";
        else os << symbols[i] - 1; // pair ids printed 1,2,...
    }
    return os.str();
}

namespace {

void gen_clans(std::vector<int> &word, int pos, int plus_left, int minus_left,
               std::vector<int> &open, int next_id, std::vector<Clan> &out, int p, int q) {
    int n = static_cast<int>(word.size());
    if (pos == n) {
        if (plus_left == 0 && minus_left == 0 && open.empty()) {
            Clan c;
            c.symbols = word;
            c.p = p;
            c.q = q;
            out.push_back(c);
        }
        return;
    }
    int slots = n - pos;
    int need = plus_left + minus_left + static_cast<int>(open.size());
    if (need > slots) return;
    if (plus_left > 0) {
        word[pos] = 1;
        gen_clans(word, pos + 1, plus_left - 1, minus_left, open, next_id, out, p, q);
    }
    if (minus_left > 0) {
        word[pos] = -1;
        gen_clans(word, pos + 1, plus_left, minus_left - 1, open, next_id, out, p, q);
    }
    // close the earliest-open pair first would undercount; close any open pair
    for (size_t k = 0; k < open.size(); ++k) {
        int id = open[k];
        word[pos] = id;
        std::vector<int> rest;
        for (size_t j = 0; j < open.size(); ++j)
            if (j != k) rest.push_back(open[j]);
        gen_clans(word, pos + 1, plus_left, minus_left, rest, next_id, out, p, q);
    }
    // open a new pair
    if (plus_left > 0 && minus_left > 0) {
        word[pos] = next_id;
        open.push_back(next_id);
        gen_clans(word, pos + 1, plus_left - 1, minus_left - 1, open, next_id + 1, out, p, q);
        open.pop_back();
    }
    word[pos] = 0;
}

} // namespace

std::vector<Clan> enumerate_clans(int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("enumerate_clans: negative signature");
    std::vector<Clan> out;
    std::vector<int> word(p + q, 0);
    std::vector<int> open;
    gen_clans(word, 0, p, q, open, 2, out, p, q);
    // normalize pair ids by first occurrence and deduplicate
    for (auto &c : out) {
        std::map<int, int> relabel;
        int next = 2;
        for (auto &s : c.symbols) {
            if (s >= 2) {
                auto it = relabel.find(s);
                if (it == relabel.end()) it = relabel.emplace(s, next++).first;
                s = it->second;
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (auto &c : out) c.validate();
    return out;
}

int clan_dimension(const Clan &c) {
    int base = c.p * (c.p - 1) / 2 + c.q * (c.q - 1) / 2;
    int n = c.length();
    int extra = 0;
    // pair positions
    std::map<int, std::pair<int, int>> pos;
    for (int i = 0; i < n; ++i) {
        int s = c.symbols[i];
        if (s >= 2) {
            if (pos.count(s)) pos[s].second = i;
            else pos[s] = {i, -1};
        }
    }
    for (auto &[id, pr] : pos) {
        (void)id;
        int i = pr.first, j = pr.second;
        int crossings = 0;
        for (auto &[id2, pr2] : pos) {
            (void)id2;
            if (i < pr2.first && pr2.first < j && j < pr2.second) ++crossings;
        }
        extra += (j - i) - crossings;
    }
    return base + extra;
}

RatMat clan_representative_flag(const Clan &c) {
    int n = c.length();
    RatMat flag(n, n);
    int next_plus = 0, next_minus = 0;
    std::map<int, std::pair<int, int>> assigned; // pair id -> (plus index, minus index)
    std::map<int, bool> first_done;
    for (int i = 0; i < n; ++i) {
        int s = c.symbols[i];
        RatVec col(n, Rational(0));
        if (s == 1) {
            col[next_plus++] = Rational(1);
        } else if (s == -1) {
            col[c.p + next_minus++] = Rational(1);
        } else {
            if (!assigned.count(s)) {
                assigned[s] = {next_plus++, next_minus++};
                col[assigned[s].first] = Rational(1);
                col[c.p + assigned[s].second] = Rational(1); // e+ + e-
            } else {
                col[assigned[s].first] = Rational(1);
                col[c.p + assigned[s].second] = Rational(-1); // e+ - e-
            }
        }
        for (int r = 0; r < n; ++r) flag(r, i) = col[r];
    }
    return flag;
}

ClanProfile flag_profile(const RatMat &flag, int p, int q) {
    int n = p + q;
    assert(flag.rows() == n && flag.cols() == n);
    if (rank(flag) != n) throw std::invalid_argument("flag_profile: columns do not form a flag");
    std::vector<int> plus(p), minus(q);
    for (int i = 0; i < p; ++i) plus[i] = i;
    for (int i = 0; i < q; ++i) minus[i] = p + i;
    return flag_profile_on_coords(flag, plus, minus);
}

ClanProfile clan_profile(const Clan &c) { return flag_profile(clan_representative_flag(c), c.p, c.q); }

bool ClanProfile::dominates(const ClanProfile &o) const {
    assert(n == o.n);
    for (int i = 0; i < n; ++i) {
        if (dim_plus[i] < o.dim_plus[i]) return false;
        if (dim_minus[i] < o.dim_minus[i]) return false;
        for (int j = 0; j < n; ++j) {
            if (dim_u[i][j] < o.dim_u[i][j]) return false;
            if (dim_v[i][j] < o.dim_v[i][j]) return false;
            if (dim_theta[i][j] < o.dim_theta[i][j]) return false;
        }
    }
    return true;
}

std::vector<int> ClanProfile::char_free_key() const {
    std::vector<int> key;
    key.reserve(2 * n + 2 * n * n);
    for (int i = 0; i < n; ++i) {
        key.push_back(dim_plus[i]);
        key.push_back(dim_minus[i]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            key.push_back(dim_u[i][j]);
            key.push_back(dim_v[i][j]);
        }
    return key;
}

Clan classify_flag(const RatMat &flag, int p, int q) {
    ClanProfile pr = flag_profile(flag, p, q);
    for (const auto &c : enumerate_clans(p, q)) {
        if (clan_profile(c) == pr) return c;
    }
    throw std::logic_error("classify_flag: profile matches no clan");
}

std::vector<std::pair<int, int>> closure_order(const std::vector<Clan> &clans) {
    std::vector<ClanProfile> profiles;
    std::vector<int> dims;
    profiles.reserve(clans.size());
    for (const auto &c : clans) {
        profiles.push_back(clan_profile(c));
        dims.push_back(clan_dimension(c));
    }
    std::vector<std::pair<int, int>> pairs;
    for (size_t a = 0; a < clans.size(); ++a)
        for (size_t b = 0; b < clans.size(); ++b) {
            if (a == b) {
                pairs.emplace_back(a, b);
                continue;
            }
            // clans[a] <= clans[b]: a in the closure of b.  Intersections grow
            // on the boundary, so a's profile must dominate b's; dimensions
            // must strictly drop.
            if (dims[a] < dims[b] && profiles[a].dominates(profiles[b])) pairs.emplace_back(a, b);
        }
    return pairs;
}

} // namespace endo
