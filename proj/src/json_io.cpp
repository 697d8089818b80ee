#include "endo/json_io.hpp"

#include <map>
#include <stdexcept>

namespace endo {

Json document_header() {
    Json h;
    h["schema_version"] = 1;
    Json conv;
    conv["pairing_sign"] = "e(xi) * (-1)^dim(S_xi) * delta";
    conv["tilde_j"] = "diag(1,-1,...) * antidiag(1,...,1)";
    conv["y_exponent"] = "lambda/2 + rho_check + j-part";
    conv["nu_modulus"] = "2 * X^*(T)";
    conv["sigma_normalization"] = "1 on the mu(xi) constituent";
    h["conventions"] = conv;
    return h;
}

Json to_json(const BigInt &v) {
    if (v.fits_longlong()) return Json(v.to_longlong());
    return Json(v.to_string());
}

Json to_json(const Rational &v) {
    if (v.is_integer()) return to_json(v.num());
    return Json(v.to_string());
}

Json to_json(const RatVec &v) {
    Json a = Json::array();
    for (const auto &x : v) a.push_back(to_json(x));
    return a;
}

Json to_json(const IntMat &m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (int j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

Json to_json(const RatMat &m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (int j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

Json to_json(const AbelianQuotientDescriptor &d) {
    Json j;
    Json f = Json::array();
    for (const auto &x : d.invariant_factors) f.push_back(to_json(x));
    j["invariant_factors"] = f;
    j["free_rank"] = d.free_rank;
    j["divisible_rank"] = d.divisible_rank;
    j["display"] = d.to_string();
    return j;
}

Json to_json(const Clan &c) {
    Json j;
    j["symbols"] = c.to_string();
    j["p"] = c.p;
    j["q"] = c.q;
    return j;
}

Json to_json(const OrbitTable &t) {
    Json j;
    j["ambient"] = t.ambient;
    j["lambda"] = to_json(t.lambda);
    j["y_exponent"] = to_json(t.y_exponent);
    j["signature"] = Json::array({t.p, t.q});
    Json orbits = Json::array();
    for (const auto &o : t.orbits) {
        Json e;
        e["label"] = to_json(o.label);
        e["display"] = o.display;
        e["dim"] = o.dimension;
        e["component_group"] = o.component_group;
        e["sigma_image"] = o.sigma_image;
        e["smooth_closure"] = o.smooth_closure;
        orbits.push_back(e);
    }
    j["orbits"] = orbits;
    j["plus_coords"] = t.plus_coords;
    j["minus_coords"] = t.minus_coords;
    j["sigma_order"] = t.sigma_order;
    Json cl = Json::array();
    for (auto &[a, b] : t.closure)
        if (a != b) cl.push_back(Json::array({a, b}));
    j["closure_pairs"] = cl;
    return j;
}

namespace {
Clan clan_from_display(const std::string &symbols, int p, int q) {
    Clan c;
    c.p = p;
    c.q = q;
    std::map<int, int> ids;
    size_t i = 0;
    while (i < symbols.size()) {
        if (symbols[i] == ' ') {
            ++i;
            continue;
        }
        if (symbols[i] == '+') {
            c.symbols.push_back(1);
            ++i;
        } else if (symbols[i] == '-') {
            c.symbols.push_back(-1);
            ++i;
        } else {
            size_t j = i;
            while (j < symbols.size() && symbols[j] != ' ') ++j;
            int printed = std::stoi(symbols.substr(i, j - i));
            c.symbols.push_back(printed + 1); // printed ids start at 1
            i = j;
        }
    }
    c.validate();
    return c;
}
} // namespace

OrbitTable orbit_table_from_json(const Json &j) {
    OrbitTable t;
    t.ambient = j.at("ambient").get<std::string>();
    t.lambda = rat_vec_from_json(j.at("lambda"));
    t.y_exponent = rat_vec_from_json(j.at("y_exponent"));
    t.p = j.at("signature")[0].get<int>();
    t.q = j.at("signature")[1].get<int>();
    if (j.contains("plus_coords")) {
        t.plus_coords = j.at("plus_coords").get<std::vector<int>>();
        t.minus_coords = j.at("minus_coords").get<std::vector<int>>();
    }
    if (j.contains("sigma_order")) t.sigma_order = j.at("sigma_order").get<int>();
    for (const auto &o : j.at("orbits")) {
        OrbitEntry e;
        e.label = clan_from_display(o.at("label").at("symbols").get<std::string>(), t.p, t.q);
        e.display = o.at("display").get<std::string>();
        e.dimension = o.at("dim").get<int>();
        e.component_group = o.at("component_group").get<std::string>();
        e.sigma_image = o.at("sigma_image").get<int>();
        e.smooth_closure = o.at("smooth_closure").get<bool>();
        t.orbits.push_back(e);
    }
    for (size_t i = 0; i < t.orbits.size(); ++i)
        t.closure.emplace_back(static_cast<int>(i), static_cast<int>(i));
    for (const auto &p : j.at("closure_pairs"))
        t.closure.emplace_back(p[0].get<int>(), p[1].get<int>());
    return t;
}

Json to_json(const TwistedEndoDatum &d) {
    Json j;
    j["N"] = d.N;
    j["N_O"] = d.N_O;
    j["N_S_prime"] = d.N_S_prime;
    j["s"] = to_json(d.s);
    j["J_OS"] = to_json(d.J_OS);
    j["tilde_J"] = to_json(d.tilde_J);
    j["H_dual"] = d.H_dual.describe();
    j["gamma_form"] = d.gamma_semidirect ? "semidirect" : "direct";
    j["fixed_dim"] = d.expected_fixed_dim();
    Json dh;
    dh["order"] = d.D_H.order;
    dh["fixes_splitting"] = d.D_H.fixes_splitting;
    dh["h_is_identity"] = d.D_H.h_is_identity;
    j["D_H"] = dh;
    return j;
}

Json to_json(const RootOfUnity &z) { return Json(z.to_string()); }

Json to_json(const TwistedVirtualCharacter &c, const OrbitTable &table) {
    Json terms = Json::array();
    for (const auto &[label, coef] : c.terms) {
        Json t;
        t["orbit"] = table.orbits[label.orbit].display;
        t["tau"] = label.tau;
        t["coeff"] = to_json(coef);
        terms.push_back(t);
    }
    Json j;
    j["m"] = c.m;
    j["terms"] = terms;
    return j;
}

Json to_json(const LiftReport &r) {
    Json lines = Json::array();
    for (const auto &l : r.lines) {
        Json e;
        e["orbit"] = l.basis_label.orbit;
        e["lhs"] = to_json(l.lhs);
        e["rhs"] = to_json(l.rhs);
        e["match"] = l.match;
        lines.push_back(e);
    }
    Json j;
    j["lines"] = lines;
    j["ok"] = r.ok();
    return j;
}

Json to_json(const EquivarianceReport &r) {
    Json j;
    j["cases_checked"] = r.cases_checked;
    Json f = Json::array();
    for (const auto &fail : r.failures) {
        Json e;
        e["d_pi"] = to_json(fail.input.d_pi);
        e["nu"] = to_json(fail.input.nu);
        e["what"] = fail.what;
        f.push_back(e);
    }
    j["failures"] = f;
    return j;
}

namespace {
Json rou_coeffs_json(const RootOfUnity &z) {
    Json coeffs = Json::array();
    for (int k = 0; k < z.order(); ++k) coeffs.push_back(to_json(z.coeff(k)));
    Json j;
    j["coeffs"] = coeffs;
    return j;
}
} // namespace

Json to_json(const MicrolocalTable &mic) {
    Json j;
    j["m"] = mic.m;
    Json entries = Json::array();
    for (const auto &[key, e] : mic.entries) {
        Json x;
        x["S"] = key.first;
        x["orbit"] = key.second.orbit;
        x["tau"] = key.second.tau;
        x["at_identity"] = rou_coeffs_json(e.at_identity);
        x["at_sigma"] = rou_coeffs_json(e.at_sigma);
        x["provenance"] = e.provenance;
        entries.push_back(x);
    }
    j["entries"] = entries;
    return j;
}

Json to_json(const ChiMatrix &chi) {
    Json j;
    Json labels = Json::array();
    for (const auto &l : chi.labels) labels.push_back(Json::array({l.orbit, l.tau}));
    j["labels"] = labels;
    j["entries"] = to_json(chi.entries);
    j["row_provenance"] = chi.row_provenance;
    j["det"] = to_json(chi.determinant());
    return j;
}

namespace {
Rational rational_from_json(const Json &j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    throw std::invalid_argument("json: expected integer or rational string");
}
} // namespace

IntMat int_mat_from_json(const Json &j) {
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j[0].size()) : 0;
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) {
            Rational r = rational_from_json(j[i][c]);
            if (!r.is_integer()) throw std::invalid_argument("json: expected integer matrix");
            m(i, c) = r.num();
        }
    return m;
}

RatMat rat_mat_from_json(const Json &j) {
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j[0].size()) : 0;
    RatMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) m(i, c) = rational_from_json(j[i][c]);
    return m;
}

RatVec rat_vec_from_json(const Json &j) {
    RatVec v;
    for (const auto &x : j) v.push_back(rational_from_json(x));
    return v;
}

Json to_json(const BasedRootDatum &d) {
    Json j;
    j["rank"] = d.rank;
    j["name"] = d.name;
    Json roots = Json::array(), coroots = Json::array();
    for (const auto &r : d.simple_roots) {
        Json a = Json::array();
        for (const auto &x : r) a.push_back(to_json(x));
        roots.push_back(a);
    }
    for (const auto &r : d.simple_coroots) {
        Json a = Json::array();
        for (const auto &x : r) a.push_back(to_json(x));
        coroots.push_back(a);
    }
    j["simple_roots"] = roots;
    j["simple_coroots"] = coroots;
    return j;
}

Json to_json(const DatumAutomorphism &a) {
    Json j;
    j["matrix_on_characters"] = to_json(a.on_characters);
    j["root_permutation"] = a.root_perm;
    return j;
}

BasedRootDatum based_root_datum_from_json(const Json &j) {
    BasedRootDatum d;
    d.rank = j.at("rank").get<int>();
    if (j.contains("name")) d.name = j.at("name").get<std::string>();
    for (const auto &r : j.at("simple_roots")) {
        IntVec v;
        for (const auto &x : r) {
            Rational q = rational_from_json(x);
            v.push_back(q.num());
        }
        d.simple_roots.push_back(v);
    }
    for (const auto &r : j.at("simple_coroots")) {
        IntVec v;
        for (const auto &x : r) {
            Rational q = rational_from_json(x);
            v.push_back(q.num());
        }
        d.simple_coroots.push_back(v);
    }
    d.validate();
    return d;
}

DatumAutomorphism datum_automorphism_from_json(const Json &j) {
    DatumAutomorphism a;
    a.on_characters = int_mat_from_json(j.at("matrix_on_characters"));
    a.root_perm = j.at("root_permutation").get<std::vector<int>>();
    return a;
}

Json to_json(const RealTorusDatum &t) {
    Json j;
    j["rank"] = t.rank;
    j["a_char"] = to_json(t.a_char);
    j["z_exponent"] = to_json(t.z_exponent);
    if (t.j_lattice) j["j_lattice"] = to_json(*t.j_lattice);
    return j;
}

RealTorusDatum torus_from_json(const Json &j) {
    RealTorusDatum t;
    t.rank = j.at("rank").get<int>();
    t.a_char = int_mat_from_json(j.at("a_char"));
    t.z_exponent = rat_vec_from_json(j.at("z_exponent"));
    if (j.contains("j_lattice")) t.j_lattice = rat_mat_from_json(j.at("j_lattice"));
    t.validate();
    return t;
}

MicrolocalTable microlocal_from_json(const Json &j) {
    MicrolocalTable mic;
    mic.m = j.at("m").get<int>();
    for (const auto &e : j.at("entries")) {
        CompleteParamLabel xi;
        xi.orbit = e.at("orbit").get<int>();
        xi.tau = e.contains("tau") ? e.at("tau").get<std::string>() : "1";
        auto parse_rou = [&](const Json &x) {
            // accepted forms: a plain integer, {"zeta_power": k, "coeff": c},
            // or {"coeffs": [c_0, ..., c_{m-1}]}
            RootOfUnity r(mic.m);
            if (x.is_number_integer()) {
                r = RootOfUnity(mic.m, x.get<long long>());
            } else if (x.is_object() && x.contains("coeffs")) {
                const Json &cs = x.at("coeffs");
                if (static_cast<int>(cs.size()) != mic.m)
                    throw std::invalid_argument("microlocal json: coefficient count mismatch");
                for (int k = 0; k < mic.m; ++k) {
                    Rational c = cs[k].is_string() ? Rational::from_string(cs[k].get<std::string>())
                                                   : Rational(cs[k].get<long long>());
                    if (!c.is_integer())
                        throw std::invalid_argument("microlocal json: non-integer coefficient");
                    r += RootOfUnity::zeta_power(mic.m, k).scaled(c.num());
                }
            } else if (x.is_object()) {
                r = RootOfUnity::zeta_power(mic.m, x.at("zeta_power").get<int>())
                        .scaled(BigInt(x.at("coeff").get<long long>()));
            } else {
                throw std::invalid_argument("microlocal json: bad trace value");
            }
            return r;
        };
        mic.set(e.at("S").get<int>(), xi, parse_rou(e.at("at_identity")), parse_rou(e.at("at_sigma")),
                e.contains("provenance") ? e.at("provenance").get<std::string>()
                                         : std::string("user-supplied"));
    }
    return mic;
}

ChiMatrix chi_from_json(const Json &j) {
    ChiMatrix chi;
    for (const auto &l : j.at("labels")) {
        CompleteParamLabel lab;
        lab.orbit = l[0].get<int>();
        lab.tau = l[1].get<std::string>();
        chi.labels.push_back(lab);
    }
    chi.entries = int_mat_from_json(j.at("entries"));
    chi.row_provenance = j.at("row_provenance").get<std::vector<std::string>>();
    if (chi.entries.rows() != static_cast<int>(chi.labels.size()) ||
        chi.entries.cols() != static_cast<int>(chi.labels.size()))
        throw std::invalid_argument("chi json: shape mismatch");
    return chi;
}

} // namespace endo
