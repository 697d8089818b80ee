// endolift: twisted endoscopic data, orbit tables and lifting identities for
// GL_N over the reals, in exact arithmetic.
//
// Subcommands: endo-data, orbits, closure, lift, verify-gl2,
// equivariance-check.  Exit codes: 0 pass, 1 verification mismatch, 2 invalid
// input.

#include "endo/json_io.hpp"
#include "endo/verify_gl2.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

namespace {

using endo::Json;

int g_exit = 0;

std::string format_mode = "json";

void emit(const Json &doc) {
    if (format_mode == "json") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    // plain table: flatten one level
    for (auto &[k, v] : doc.items()) {
        if (v.is_primitive()) {
            std::cout << k << ": " << v.dump() << "\n";
        } else {
            std::cout << k << ": " << v.dump() << "\n";
        }
    }
}

Json load_json(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

std::string cache_dir_override(const std::string &flag_value) {
    if (!flag_value.empty()) return flag_value;
    const char *env = std::getenv("ENDOLIFT_CACHE_DIR");
    return env ? env : "";
}

endo::AParameter a_parameter_from_json(const Json &j) {
    endo::AParameter psi;
    psi.target = j.value("target", "GL2");
    for (const auto &s : j.at("summands")) {
        endo::AParameterSummand sum;
        std::string w = s.value("wtype", "trivial");
        if (w == "trivial") sum.wtype = endo::AParameterSummand::WType::TrivialChar;
        else if (w == "sign") sum.wtype = endo::AParameterSummand::WType::SignChar;
        else if (w == "quasicharacter") sum.wtype = endo::AParameterSummand::WType::Quasicharacter;
        else if (w == "discrete-series") sum.wtype = endo::AParameterSummand::WType::DiscreteSeries;
        else throw std::invalid_argument("unknown wtype " + w);
        if (s.contains("exponent")) sum.exponent = endo::Rational::from_string(
            s.at("exponent").is_string() ? s.at("exponent").get<std::string>()
                                         : std::to_string(s.at("exponent").get<long long>()));
        sum.sl2_dim = s.value("sl2_dim", 1);
        psi.summands.push_back(sum);
    }
    return psi;
}

struct TablePipeline {
    endo::OrbitTable table;
    endo::TwistedEndoDatum datum;
    endo::AParameter psi;
};

TablePipeline build_table_from_config(const Json &cfg) {
    TablePipeline out;
    int N = cfg.value("N", 2);
    int N_O = cfg.value("N_O", 0);
    int N_S = cfg.value("N_S_prime", (N - N_O) / 2);
    out.datum = endo::make_endoscopic_datum(N, N_O, N_S);
    out.psi = a_parameter_from_json(cfg.at("a_parameter"));
    endo::LParameter phi = endo::a_to_l_parameter(out.psi);
    endo::GeometricParameterPoint pt = endo::parameter_point(phi);
    endo::InfinitesimalCharacter ic{pt.lambda};
    out.table = endo::build_orbit_table(ic, pt, cfg.value("ambient", "GL" + std::to_string(N)));
    if (cfg.value("sigma", "twisted") == "twisted") {
        endo::sigma_action(out.table, endo::to_cyclotomic(out.datum.s), out.datum.tilde_J);
        out.table.sigma_order = 2;
    } else {
        endo::sigma_action_trivial(out.table);
    }
    return out;
}

Json orbits_doc(const Json &cfg) {
    TablePipeline p = build_table_from_config(cfg);
    Json doc = endo::document_header();
    doc["table"] = endo::to_json(p.table);
    return doc;
}

int cmd_endo_data(int N) {
    Json doc = endo::document_header();
    Json list = Json::array();
    for (const auto &d : endo::enumerate_elliptic_data(N)) {
        Json e = endo::to_json(d);
        endo::FiniteOrderCertificate cert = endo::finite_order_replacement(d);
        e["sigma_order"] = cert.order;
        e["H"] = endo::endoscopic_group(d).display;
        endo::TwistingAutomorphismGL th{d.N, d.tilde_J};
        e["semisimple"] = endo::check_semisimplicity(endo::to_rational(d.s), th);
        list.push_back(e);
    }
    doc["N"] = N;
    doc["data"] = list;
    emit(doc);
    return 0;
}

int cmd_orbits(const std::string &config_path, const std::string &cache_dir, bool closure_only) {
    Json cfg = load_json(config_path);
    std::string cache_file;
    if (!cache_dir.empty()) {
        size_t h = std::hash<std::string>{}(cfg.dump());
        char buf[32];
        std::snprintf(buf, sizeof buf, "%016zx", h);
        cache_file = cache_dir + "/orbits-" + buf + ".json";
        std::ifstream in(cache_file);
        if (in) {
            Json cached;
            in >> cached;
            if (closure_only) {
                Json doc = endo::document_header();
                doc["closure_pairs"] = cached["table"]["closure_pairs"];
                emit(doc);
            } else {
                emit(cached);
            }
            return 0;
        }
    }
    Json doc = orbits_doc(cfg);
    if (!cache_file.empty()) {
        std::filesystem::create_directories(cache_dir);
        std::ofstream out(cache_file);
        out << doc.dump(2) << "\n";
    }
    if (closure_only) {
        Json cl = endo::document_header();
        cl["closure_pairs"] = doc["table"]["closure_pairs"];
        emit(cl);
    } else {
        emit(doc);
    }
    return 0;
}

int cmd_lift(const std::string &config_path) {
    Json cfg = load_json(config_path);
    TablePipeline g, h;
    if (cfg.contains("table_path")) {
        g.table = endo::orbit_table_from_json(load_json(cfg["table_path"]));
        g.psi = a_parameter_from_json(cfg.at("a_parameter"));
    } else {
        g = build_table_from_config(cfg);
    }
    if (cfg.contains("table_path_H")) {
        h.table = endo::orbit_table_from_json(load_json(cfg["table_path_H"]));
    } else {
        Json hcfg = cfg;
        hcfg["ambient"] = cfg.value("ambient_H", "H-dual");
        hcfg["sigma"] = "trivial";
        if (cfg.contains("a_parameter_H")) hcfg["a_parameter"] = cfg["a_parameter_H"];
        h = build_table_from_config(hcfg);
    }
    int m = 2;
    endo::MicrolocalTable mic_G = cfg.contains("microlocal_path")
                                      ? endo::microlocal_from_json(load_json(cfg["microlocal_path"]))
                                      : endo::microlocal_from_smooth_rule(g.table, m);
    endo::MicrolocalTable mic_H =
        cfg.contains("microlocal_path_H")
            ? endo::microlocal_from_json(load_json(cfg["microlocal_path_H"]))
            : endo::microlocal_from_smooth_rule(h.table, m);
    int S_G = endo::orbit_of_standard_flag(g.table);
    int S_H = endo::orbit_of_standard_flag(h.table);
    endo::TwistedVirtualCharacter eta_G = endo::eta_mic_twisted_G(S_G, g.table, mic_G);
    endo::TwistedVirtualCharacter eta_H = endo::eta_mic_twisted_H(S_H, h.table, mic_H);
    endo::OrbitRestriction rest = endo::restriction_orbit_map(h.table, g.table);
    endo::LiftReport lift = endo::lift_and_verify(eta_H, eta_G, g.table, h.table, rest);
    Json doc = endo::document_header();
    doc["eta_G"] = endo::to_json(eta_G, g.table);
    doc["eta_H"] = endo::to_json(eta_H, h.table);
    doc["report"] = endo::to_json(lift);
    emit(doc);
    return lift.ok() ? 0 : 1;
}

int cmd_verify_gl2() {
    endo::Gl2Report rep = endo::run_gl2_verification();
    Json doc = endo::document_header();
    doc["checkpoints"] = Json{{"orbits", rep.orbits_ok},
                              {"pairing_vectors", rep.pairing_ok},
                              {"eta_psi_H", rep.eta_H_ok},
                              {"a_packets", rep.packets_ok}};
    doc["log"] = rep.log;
    doc["table_G"] = endo::to_json(rep.table_G);
    doc["table_H"] = endo::to_json(rep.table_H);
    doc["lift"] = endo::to_json(rep.lift);
    if (format_mode == "table") {
        std::cout << "verify-gl2:\n";
        std::cout << "  orbits (3 + 3, dims 0,0,1): " << (rep.orbits_ok ? "PASS" : "FAIL") << "\n";
        std::cout << "  pairing vectors (1,0,0):    " << (rep.pairing_ok ? "PASS" : "FAIL") << "\n";
        std::cout << "  eta_psi_H = (1_PGL2R, 1):   " << (rep.eta_H_ok ? "PASS" : "FAIL") << "\n";
        std::cout << "  A-packets singletons:       " << (rep.packets_ok ? "PASS" : "FAIL") << "\n";
    } else {
        emit(doc);
    }
    return rep.ok() ? 0 : 1;
}

int cmd_equivariance(const std::string &config_path) {
    Json cfg = load_json(config_path);
    endo::RealTorusDatum t = endo::torus_from_json(cfg.at("torus"));
    endo::TorusAutomorphismPair pair;
    pair.theta.on_characters = endo::int_mat_from_json(cfg.at("theta").at("matrix_on_characters"));
    pair.theta.root_perm = {};
    pair.delta_shift = cfg.contains("delta_shift") ? endo::rat_vec_from_json(cfg["delta_shift"])
                                                   : endo::RatVec(t.rank, endo::Rational(0));
    int bound = cfg.value("bound", 2);
    endo::EquivarianceReport rep = endo::verify_equivariance(t, pair, bound);
    Json doc = endo::document_header();
    doc["report"] = endo::to_json(rep);
    emit(doc);
    return rep.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"twisted endoscopy for real groups: exact geometric-parameter computations"};
    app.require_subcommand(1);

    std::string cache_dir_flag;
    app.add_option("--cache-dir", cache_dir_flag, "cache directory (env ENDOLIFT_CACHE_DIR)");
    app.add_option("--format", format_mode, "output format: json|table")
        ->check(CLI::IsMember({"json", "table"}));

    auto *endo_data = app.add_subcommand("endo-data", "enumerate twisted endoscopic data for GL_N");
    int N = 0;
    endo_data->add_option("--N", N, "ambient GL_N size")->required();

    std::string orbits_config, closure_config, lift_config, equi_config;
    auto *orbits = app.add_subcommand("orbits", "orbit table of a geometric-parameter block");
    orbits->add_option("--config", orbits_config, "JSON config")->required();
    auto *closure = app.add_subcommand("closure", "closure order of an orbit table");
    closure->add_option("--config", closure_config, "JSON config")->required();
    auto *lift = app.add_subcommand("lift", "twisted endoscopic lifting identity on a block");
    lift->add_option("--config", lift_config, "JSON config")->required();
    auto *verify = app.add_subcommand("verify-gl2", "run the packaged GL_2 worked example");
    (void)verify;
    auto *equi = app.add_subcommand("equivariance-check", "torus correspondence equivariance");
    equi->add_option("--config", equi_config, "JSON config")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (endo_data->parsed()) {
            if (N < 1) {
                std::cerr << "endo-data: N must be >= 1\n";
                return 2;
            }
            return cmd_endo_data(N);
        }
        if (orbits->parsed()) return cmd_orbits(orbits_config, cache_dir_override(cache_dir_flag), false);
        if (closure->parsed()) return cmd_orbits(closure_config, cache_dir_override(cache_dir_flag), true);
        if (lift->parsed()) return cmd_lift(lift_config);
        if (verify->parsed()) return cmd_verify_gl2();
        if (equi->parsed()) return cmd_equivariance(equi_config);
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return g_exit;
}
