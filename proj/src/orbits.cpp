#include "endo/orbits.hpp"

#include "endo/flag_profile.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace endo {

bool InfinitesimalCharacter::regular() const {
    for (size_t i = 0; i < lambda.size(); ++i)
        for (size_t j = i + 1; j < lambda.size(); ++j)
            if (lambda[i] == lambda[j]) return false;
    return true;
}

CanonicalFlat canonical_flat(const RatVec &lambda) {
    int n = static_cast<int>(lambda.size());
    CanonicalFlat out;
    // integral-difference classes
    std::vector<int> cls(n, -1);
    int ncls = 0;
    for (int i = 0; i < n; ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = ncls;
        for (int j = i + 1; j < n; ++j)
            if (cls[j] < 0 && (lambda[i] - lambda[j]).is_integer()) cls[j] = ncls;
        ++ncls;
    }
    out.levi_blocks.assign(ncls, {});
    for (int i = 0; i < n; ++i) out.levi_blocks[cls[i]].push_back(i);
    // n(lambda): positive-integer eigenvalues of ad(lambda)
    int centralizer_dim = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Rational d = lambda[i] - lambda[j];
            if (d.is_integer() && d > Rational(0)) ++out.nilradical_dim;
            if (d.is_zero()) ++centralizer_dim;
        }
    centralizer_dim += n; // torus part
    int dim_p = centralizer_dim + out.nilradical_dim;
    out.parabolic_is_borel = (dim_p == n + n * (n - 1) / 2) && (centralizer_dim == n);
    out.parabolic_is_full_group = (dim_p == n * n);
    return out;
}

int AParameter::total_dim() const {
    int d = 0;
    for (const auto &s : summands) {
        int w = (s.wtype == AParameterSummand::WType::DiscreteSeries) ? 2 : 1;
        d += w * s.sl2_dim;
    }
    return d;
}

void AParameter::validate() const {
    if (summands.empty()) throw std::invalid_argument("AParameter: no summands");
    for (const auto &s : summands) {
        if (s.sl2_dim < 1) throw std::invalid_argument("AParameter: SL2 dimension < 1");
        // bounded W_R-restriction: quasicharacter exponents must be imaginary;
        // in this exact model only exponent 0 characters and discrete series
        // are bounded, |.|^s with s != 0 is not.
        if (s.wtype == AParameterSummand::WType::Quasicharacter && !s.exponent.is_zero())
            throw std::invalid_argument("AParameter: unbounded W_R-restriction");
    }
}

LParameter a_to_l_parameter(const AParameter &psi) {
    psi.validate();
    LParameter phi;
    phi.target = psi.target;
    std::vector<Cyclo> jdiag;
    std::vector<std::pair<int, int>> ds_blocks; // (start, k-sign data) for j antidiag blocks
    for (const auto &s : psi.summands) {
        int d = s.sl2_dim;
        for (int t = 0; t < d; ++t) {
            Rational shift = Rational(d - 1, 2) - Rational(t);
            switch (s.wtype) {
                case AParameterSummand::WType::TrivialChar:
                case AParameterSummand::WType::Quasicharacter: {
                    Rational a = s.exponent + shift;
                    phi.cx_exponents.emplace_back(a, a);
                    jdiag.push_back(Cyclo(1));
                    break;
                }
                case AParameterSummand::WType::SignChar: {
                    Rational a = s.exponent + shift;
                    phi.cx_exponents.emplace_back(a, a);
                    jdiag.push_back(Cyclo(-1));
                    break;
                }
                case AParameterSummand::WType::DiscreteSeries: {
                    Rational k2 = s.exponent; // k/2
                    phi.cx_exponents.emplace_back(k2 + shift, -k2 + shift);
                    phi.cx_exponents.emplace_back(-k2 + shift, k2 + shift);
                    ds_blocks.emplace_back(static_cast<int>(jdiag.size()), 0);
                    jdiag.push_back(Cyclo(0)); // placeholders, filled below
                    jdiag.push_back(Cyclo(0));
                    break;
                }
            }
        }
    }
    int N = static_cast<int>(phi.cx_exponents.size());
    phi.j_value = CycMat(N, N);
    for (int i = 0; i < N; ++i)
        if (!jdiag[i].is_zero()) phi.j_value(i, i) = jdiag[i];
    for (auto &[start, unused] : ds_blocks) {
        (void)unused;
        // phi(j) on a discrete-series pair: antidiagonal [[0, (-1)^k],[1, 0]]
        // with k read from the exponent difference; here entries of the pair
        // block were left zero above.
        phi.j_value(start, start) = Cyclo(0);
        phi.j_value(start, start + 1) = Cyclo(-1); // (-1)^k with k odd normalization
        phi.j_value(start + 1, start) = Cyclo(1);
    }
    return phi;
}

void GeometricParameterPoint::check_square_identity() const {
    int n = y_matrix.rows();
    CycMat y2 = y_matrix * y_matrix;
    CycMat e(n, n);
    for (int i = 0; i < n; ++i) e(i, i) = Cyclo::from_exponent(lambda[i]);
    if (!(y2 == e)) throw std::logic_error("geometric parameter: y^2 != exp(2 pi i lambda)");
}

GeometricParameterPoint parameter_point(const LParameter &phi) {
    int N = static_cast<int>(phi.cx_exponents.size());
    GeometricParameterPoint pt;
    pt.lambda.resize(N);
    for (int i = 0; i < N; ++i) pt.lambda[i] = phi.cx_exponents[i].first;
    // rho of the integral system: within each integral class, sorted
    // descending, weights (m-1)/2, ..., -(m-1)/2
    std::vector<int> cls(N, -1);
    int ncls = 0;
    for (int i = 0; i < N; ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = ncls;
        for (int j = i + 1; j < N; ++j)
            if (cls[j] < 0 && (pt.lambda[i] - pt.lambda[j]).is_integer()) cls[j] = ncls;
        ++ncls;
    }
    RatVec rho(N, Rational(0));
    for (int c = 0; c < ncls; ++c) {
        std::vector<int> idx;
        for (int i = 0; i < N; ++i)
            if (cls[i] == c) idx.push_back(i);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return pt.lambda[a] > pt.lambda[b]; });
        int m = static_cast<int>(idx.size());
        for (int r = 0; r < m; ++r) rho[idx[r]] = Rational(m - 1 - 2 * r, 2);
    }
    pt.y_exponent.resize(N);
    CycMat expo(N, N);
    for (int i = 0; i < N; ++i) {
        pt.y_exponent[i] = (pt.lambda[i] * Rational(1, 2) + rho[i]).frac();
        expo(i, i) = Cyclo::from_exponent(pt.y_exponent[i]);
    }
    pt.y_matrix = expo * phi.j_value;
    // y_exponent is only meaningful for diagonal y
    bool diag = true;
    for (int i = 0; i < N && diag; ++i)
        for (int j = 0; j < N && diag; ++j)
            if (i != j && !pt.y_matrix(i, j).is_zero()) diag = false;
    if (diag) {
        for (int i = 0; i < N; ++i) {
            auto q = pt.y_matrix(i, i).as_root_of_unity();
            if (!q) throw std::logic_error("parameter_point: non-root-of-unity y entry");
            pt.y_exponent[i] = *q;
        }
    } else {
        pt.y_exponent.clear();
    }
    pt.check_square_identity();
    return pt;
}

int OrbitTable::index_of(const Clan &c) const {
    for (size_t i = 0; i < orbits.size(); ++i)
        if (orbits[i].label == c) return static_cast<int>(i);
    return -1;
}

bool OrbitTable::closure_leq(int a, int b) const {
    for (auto &[x, y] : closure)
        if (x == a && y == b) return true;
    return false;
}

std::vector<int> OrbitTable::closure_of(int b) const {
    std::vector<int> out;
    for (auto &[x, y] : closure)
        if (y == b) out.push_back(x);
    return out;
}

int OrbitTable::open_orbit() const {
    int best = -1;
    for (size_t i = 0; i < orbits.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < orbits.size() && maximal; ++j)
            if (i != j && closure_leq(static_cast<int>(i), static_cast<int>(j))) maximal = false;
        if (maximal) {
            if (best >= 0) throw std::logic_error("orbit table: dense orbit not unique");
            best = static_cast<int>(i);
        }
    }
    return best;
}

namespace {

// representative flag of a clan placed on the given original coordinates
template <typename F>
Mat<F> clan_flag_on_coords(const Clan &c, const std::vector<int> &plus_coords,
                           const std::vector<int> &minus_coords) {
    int n = c.length();
    Mat<F> flag(n, n);
    size_t next_plus = 0, next_minus = 0;
    std::map<int, std::pair<int, int>> assigned;
    for (int i = 0; i < n; ++i) {
        int s = c.symbols[i];
        if (s == 1) {
            flag(plus_coords[next_plus++], i) = F(1);
        } else if (s == -1) {
            flag(minus_coords[next_minus++], i) = F(1);
        } else if (!assigned.count(s)) {
            assigned[s] = {plus_coords[next_plus++], minus_coords[next_minus++]};
            flag(assigned[s].first, i) = F(1);
            flag(assigned[s].second, i) = F(1);
        } else {
            flag(assigned[s].first, i) = F(1);
            flag(assigned[s].second, i) = F(-1);
        }
    }
    return flag;
}

// annihilator flag: column i spans of the output = ann(F_{n-i})
template <typename F>
Mat<F> annihilator_flag(const Mat<F> &flag) {
    int n = flag.rows();
    Mat<F> out(n, n);
    std::vector<std::vector<F>> accum;
    for (int i = 1; i <= n; ++i) {
        // ann of the first n-i columns
        int k = n - i;
        std::vector<std::vector<F>> rows;
        for (int c = 0; c < k; ++c) {
            std::vector<F> r(n);
            for (int a = 0; a < n; ++a) r[a] = flag(a, c);
            rows.push_back(r);
        }
        std::vector<std::vector<F>> kb;
        if (rows.empty()) {
            for (int a = 0; a < n; ++a) {
                std::vector<F> e(n, F(0));
                e[a] = F(1);
                kb.push_back(e);
            }
        } else {
            kb = kernel_basis(Mat<F>::from_rows(rows));
        }
        // extend accum to dimension i using vectors from kb
        for (const auto &v : kb) {
            if (static_cast<int>(accum.size()) >= i) break;
            std::vector<std::vector<F>> trial = accum;
            trial.push_back(v);
            if (rank(Mat<F>::from_rows(trial)) == static_cast<int>(trial.size())) accum = trial;
        }
        if (static_cast<int>(accum.size()) != i)
            throw std::logic_error("annihilator_flag: extension failed");
    }
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a) out(a, i) = accum[i][a];
    return out;
}

std::string orbit_display(int idx) { return "S" + std::to_string(idx + 1); }

} // namespace

OrbitTable build_orbit_table(const InfinitesimalCharacter &ic, const GeometricParameterPoint &pt,
                             const std::string &ambient) {
    if (!ic.regular())
        throw std::invalid_argument("build_orbit_table: non-regular infinitesimal character "
                                    "(load such tables from files instead)");
    if (pt.y_exponent.empty())
        throw std::invalid_argument("build_orbit_table: y is not diagonal in this model");
    int n = ic.n();
    // group coordinates by the eigenvalue of y
    std::vector<Rational> vals;
    std::vector<std::vector<int>> groups;
    for (int i = 0; i < n; ++i) {
        Rational e = pt.y_exponent[i].frac();
        bool found = false;
        for (size_t g = 0; g < vals.size(); ++g)
            if (vals[g] == e) {
                groups[g].push_back(i);
                found = true;
            }
        if (!found) {
            vals.push_back(e);
            groups.push_back({i});
        }
    }
    if (groups.size() > 2)
        throw std::invalid_argument("build_orbit_table: y does not induce an involution "
                                    "(more than two eigenvalues)");
    OrbitTable t;
    t.ambient = ambient;
    t.lambda = ic.lambda;
    t.y_exponent = pt.y_exponent;
    // sort the (at most two) eigenvalue groups by exponent for determinism
    std::vector<size_t> order(groups.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return vals[a] < vals[b]; });
    std::vector<int> plus = groups[order[0]];
    std::vector<int> minus = order.size() > 1 ? groups[order[1]] : std::vector<int>{};
    t.p = static_cast<int>(plus.size());
    t.q = static_cast<int>(minus.size());

    std::vector<Clan> clans = enumerate_clans(t.p, t.q);
    std::sort(clans.begin(), clans.end(), [](const Clan &a, const Clan &b) {
        int da = clan_dimension(a), db = clan_dimension(b);
        if (da != db) return da < db;
        return a < b;
    });
    std::vector<std::pair<int, int>> closure_pairs = closure_order(clans);
    t.closure = closure_pairs;
    t.orbits.resize(clans.size());
    for (size_t i = 0; i < clans.size(); ++i) {
        OrbitEntry &e = t.orbits[i];
        e.label = clans[i];
        e.dimension = clan_dimension(clans[i]);
        e.component_group = "trivial"; // GL blocks
        e.sigma_image = static_cast<int>(i);
        e.display = orbit_display(static_cast<int>(i));
    }
    // smoothness of closures: points and the full flag variety are smooth
    int total_dim = t.p * (t.p - 1) / 2 + t.q * (t.q - 1) / 2 + t.p * t.q;
    for (size_t i = 0; i < clans.size(); ++i) {
        OrbitEntry &e = t.orbits[i];
        if (t.closure_of(static_cast<int>(i)).size() == 1) {
            e.smooth_closure = true; // closed orbit: a homogeneous space
        } else if (e.dimension == total_dim &&
                   t.closure_of(static_cast<int>(i)).size() == clans.size()) {
            e.smooth_closure = true; // dense orbit with closure the whole flag variety
        }
    }
    t.plus_coords = plus;
    t.minus_coords = minus;
    return t;
}

int classify_in_table(const OrbitTable &table, const RatMat &flag) {
    ClanProfile pr = flag_profile_on_coords(flag, table.plus_coords, table.minus_coords);
    for (size_t j = 0; j < table.orbits.size(); ++j) {
        RatMat repj = clan_flag_on_coords<Rational>(table.orbits[j].label, table.plus_coords,
                                                    table.minus_coords);
        if (flag_profile_on_coords(repj, table.plus_coords, table.minus_coords) == pr)
            return static_cast<int>(j);
    }
    throw std::logic_error("classify_in_table: no matching orbit");
}

int orbit_of_standard_flag(const OrbitTable &table) {
    int n = static_cast<int>(table.lambda.size());
    return classify_in_table(table, RatMat::identity(n));
}

std::vector<int> sigma_action(OrbitTable &table, const CycMat &s, const IntMat &tilde_J) {
    int n = static_cast<int>(table.lambda.size());
    CycMat M = s * to_cyclotomic(tilde_J);
    // sigma must preserve the (lambda, y) block: sigma(y) = M (y^T)^{-1} M^{-1} = y
    CycMat y(n, n);
    for (int i = 0; i < n; ++i) y(i, i) = Cyclo::from_exponent(table.y_exponent[i]);
    CycMat sy = M * inverse(y.transpose()) * inverse(M);
    if (!(sy == y))
        throw std::invalid_argument("sigma_action: sigma does not preserve the (lambda, y) block");
    std::vector<int> perm(table.orbits.size());
    for (size_t i = 0; i < table.orbits.size(); ++i) {
        CycMat rep = clan_flag_on_coords<Cyclo>(table.orbits[i].label, table.plus_coords,
                                                table.minus_coords);
        CycMat moved = M * annihilator_flag(rep);
        ClanProfile pr = flag_profile_on_coords(moved, table.plus_coords, table.minus_coords);
        int img = -1;
        for (size_t j = 0; j < table.orbits.size(); ++j) {
            CycMat repj = clan_flag_on_coords<Cyclo>(table.orbits[j].label, table.plus_coords,
                                                     table.minus_coords);
            if (flag_profile_on_coords(repj, table.plus_coords, table.minus_coords) == pr) {
                img = static_cast<int>(j);
                break;
            }
        }
        if (img < 0) throw std::logic_error("sigma_action: image orbit not found");
        perm[i] = img;
        table.orbits[i].sigma_image = img;
    }
    table.sigma_order = 2;
    return perm;
}

std::vector<int> sigma_action_trivial(OrbitTable &table) {
    std::vector<int> perm(table.orbits.size());
    for (size_t i = 0; i < table.orbits.size(); ++i) {
        perm[i] = static_cast<int>(i);
        table.orbits[i].sigma_image = static_cast<int>(i);
    }
    return perm;
}

OrbitRestriction restriction_orbit_map(const OrbitTable &h_table, const OrbitTable &g_table) {
    if (h_table.lambda.size() != g_table.lambda.size())
        throw std::invalid_argument("restriction_orbit_map: mismatched ambient spaces "
                                    "(only same-space embeddings are supported here)");
    if (h_table.p != g_table.p || h_table.q != g_table.q)
        throw std::invalid_argument("restriction_orbit_map: incompatible signatures");
    OrbitRestriction res;
    res.h_to_g.resize(h_table.orbits.size());
    for (size_t i = 0; i < h_table.orbits.size(); ++i) {
        RatMat rep = clan_flag_on_coords<Rational>(h_table.orbits[i].label, h_table.plus_coords,
                                                   h_table.minus_coords);
        ClanProfile pr = flag_profile_on_coords(rep, g_table.plus_coords, g_table.minus_coords);
        int img = -1;
        for (size_t j = 0; j < g_table.orbits.size(); ++j) {
            RatMat repj = clan_flag_on_coords<Rational>(g_table.orbits[j].label, g_table.plus_coords,
                                                        g_table.minus_coords);
            if (flag_profile_on_coords(repj, g_table.plus_coords, g_table.minus_coords) == pr) {
                img = static_cast<int>(j);
                break;
            }
        }
        if (img < 0) throw std::logic_error("restriction_orbit_map: image not found");
        res.h_to_g[i] = img;
    }
    return res;
}


long long ProductOrbitTable::size() const {
    long long s = 1;
    for (const auto &b : blocks) s *= static_cast<long long>(b.orbits.size());
    return s;
}

std::vector<int> ProductOrbitTable::unflatten(long long idx) const {
    std::vector<int> t(blocks.size());
    for (size_t k = blocks.size(); k-- > 0;) {
        long long m = static_cast<long long>(blocks[k].orbits.size());
        t[k] = static_cast<int>(idx % m);
        idx /= m;
    }
    return t;
}

long long ProductOrbitTable::flatten(const std::vector<int> &tuple) const {
    long long idx = 0;
    for (size_t k = 0; k < blocks.size(); ++k)
        idx = idx * static_cast<long long>(blocks[k].orbits.size()) + tuple[k];
    return idx;
}

int ProductOrbitTable::dimension(long long idx) const {
    auto t = unflatten(idx);
    int d = 0;
    for (size_t k = 0; k < blocks.size(); ++k) d += blocks[k].orbits[t[k]].dimension;
    return d;
}

bool ProductOrbitTable::closure_leq(long long a, long long b) const {
    auto ta = unflatten(a), tb = unflatten(b);
    for (size_t k = 0; k < blocks.size(); ++k)
        if (!blocks[k].closure_leq(ta[k], tb[k])) return false;
    return true;
}

std::vector<long long> restriction_product_map(const ProductOrbitTable &h,
                                               const ProductOrbitTable &g,
                                               const std::vector<OrbitRestriction> &block_maps) {
    if (h.blocks.size() != g.blocks.size() || block_maps.size() != h.blocks.size())
        throw std::invalid_argument("restriction_product_map: block count mismatch");
    std::vector<long long> out(static_cast<size_t>(h.size()));
    for (long long idx = 0; idx < h.size(); ++idx) {
        auto t = h.unflatten(idx);
        std::vector<int> img(t.size());
        for (size_t k = 0; k < t.size(); ++k) img[k] = block_maps[k].h_to_g[t[k]];
        out[static_cast<size_t>(idx)] = g.flatten(img);
    }
    return out;
}

} // namespace endo
