#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hqm/bounds.hpp"
#include "hqm/elliptic.hpp"
#include "hqm/map_json.hpp"
#include "hqm/mappings.hpp"
#include "hqm/radii.hpp"
#include "hqm/svg.hpp"
#include "hqm/verify.hpp"

using nlohmann::json;

namespace {

std::string full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string sig12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

hqm::Complex parse_complex(const std::string& s) {
    double re = 0.0, im = 0.0;
    if (std::sscanf(s.c_str(), "%lf,%lf", &re, &im) < 1) {
        throw hqm::DomainError("expected complex value as 're,im': " + s);
    }
    return {re, im};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return json::parse(in);
}

int run_elliptic(const std::optional<double>& k, const std::optional<double>& kprime,
                 const std::optional<double>& phi_arg, const std::optional<double>& phi_inv_arg,
                 bool as_json) {
    double value = 0.0;
    std::string op;
    if (k) {
        op = "ellip_k";
        value = hqm::elliptic::ellip_k(*k);
    } else if (kprime) {
        op = "ellip_k_comp";
        value = hqm::elliptic::ellip_k_comp(*kprime);
    } else if (phi_arg) {
        op = "phi";
        value = hqm::elliptic::phi(*phi_arg);
    } else if (phi_inv_arg) {
        op = "phi_inv";
        value = hqm::elliptic::phi_inv(*phi_inv_arg);
    } else {
        std::cerr << "elliptic: one of --k/--kprime/--phi/--phi-inv is required\n";
        return 2;
    }
    if (as_json) {
        json j{{"op", op}, {"value", value}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << full(value) << "\n";
    }
    return 0;
}

json bounds_row(double x, double Q) {
    const double k = hqm::bounds::k_from_q(Q);
    const auto m = hqm::bounds::lower_bound_m_quad(x, Q);
    json row;
    row["x"] = x;
    row["Q"] = Q;
    row["k"] = k;
    row["m"] = m.value;
    row["M"] = hqm::bounds::upper_bound_M(x, k);
    row["one_minus_k"] = 1.0 - k;
    row["one_plus_k"] = 1.0 + k;
    row["mori_upper_on_dh_over_df"] =
        std::isinf(Q) ? json() : json(hqm::bounds::mori_upper_bound_on_ratio(x, Q));
    row["quad_error"] = m.error;
    return row;
}

int run_bounds(double x, double Q, const std::string& grid, const std::string& format) {
    std::vector<json> rows;
    if (grid.empty()) {
        rows.push_back(bounds_row(x, Q));
    } else {
        int nx = 0, nq = 0;
        if (std::sscanf(grid.c_str(), "%d:%d", &nx, &nq) != 2 || nx < 2 || nq < 1) {
            std::cerr << "bounds: --grid expects NX:NQ with NX >= 2, NQ >= 1\n";
            return 2;
        }
        for (int j = 0; j < nq; ++j) {
            const double q = nq == 1 ? Q : 1.0 + (Q - 1.0) * j / (nq - 1);
            for (int i = 0; i < nx; ++i) {
                rows.push_back(bounds_row(double(i) / (nx - 1), q));
            }
        }
    }
    if (format == "csv") {
        std::cout << "x,Q,k,m,M,one_minus_k,one_plus_k,mori,quad_error\n";
        for (const auto& r : rows) {
            const auto col = [&](const char* key) { return sig12(r[key].get<double>()); };
            std::cout << col("x") << "," << col("Q") << "," << col("k") << "," << col("m")
                      << "," << col("M") << "," << col("one_minus_k") << ","
                      << col("one_plus_k") << ","
                      << (r["mori_upper_on_dh_over_df"].is_null() ? "inf"
                                                                  : col("mori_upper_on_dh_over_df"))
                      << "," << col("quad_error") << "\n";
        }
    } else {
        json out;
        out["rows"] = rows;
        out["quad_tolerance"] = hqm::bounds::quad_tolerance();
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int run_radius(const std::string& map_file, const std::string& z0_str, int directions,
               bool refine, bool analytic, const std::string& path_csv) {
    const hqm::HarmonicMap map = hqm::map_from_json(load_json_file(map_file));
    const hqm::Complex z0 = parse_complex(z0_str);

    hqm::radii::RadiusEstimate est;
    if (analytic) {
        if (std::abs(z0) > 0.0) {
            std::cerr << "radius: --analytic supports z0 = 0 only\n";
            return 2;
        }
        const auto a = hqm::radii::analytic_radius(map);
        if (!a) {
            std::cerr << "radius: no closed form for this variant; drop --analytic\n";
            return 1;
        }
        est = *a;
    } else if (std::abs(z0) < 1e-15) {
        est = hqm::radii::univalent_disk_radius(map, 0.0, directions, refine, {});
    } else {
        est = hqm::radii::radius_at(map, z0, directions, {}, false);
    }

    if (!path_csv.empty()) {
        hqm::radii::RaySettings s;
        s.path_stride = 16;
        const auto lift = hqm::radii::ray_lift(map, z0, 0.0, s);
        std::ofstream out(path_csv);
        if (!out) {
            std::cerr << "radius: cannot write " << path_csv << "\n";
            return 1;
        }
        out << "re,im\n";
        for (auto p : lift.path_samples) out << sig12(p.real()) << "," << sig12(p.imag()) << "\n";
    }

    json j;
    j["value"] = est.value;
    j["method"] = est.method == hqm::radii::RadiusMethod::Analytic ? "analytic" : "ray-lift";
    j["error"] = est.error;
    j["directions_used"] = est.directions_used;
    j["lower_bound_only"] = est.lower_bound_only;
    std::cout << j.dump() << "\n";
    return 0;
}

int run_verify(const std::string& suite, const std::string& params_file) {
    double k = 0.25, alpha = 2.0;
    int n = 2, directions = 240;
    if (!params_file.empty()) {
        json p;
        try {
            p = load_json_file(params_file);
            if (!p.is_object()) throw std::runtime_error("params file must hold a JSON object");
        } catch (const std::exception& e) {
            std::cerr << "verify: bad params file: " << e.what() << "\n";
            return 2;
        }
        k = p.value("k", k);
        alpha = p.value("alpha", alpha);
        n = p.value("n", n);
        directions = p.value("directions", directions);
    }
    if (k < 0.0 || k >= 1.0 || !(alpha >= 1.0) || n < 1) {
        std::cerr << "verify: params out of range (need k in [0,1), alpha >= 1, n >= 1)\n";
        return 2;
    }

    const double Q = hqm::bounds::q_from_k(k);
    hqm::verify::CheckSettings cs;
    cs.n_directions = directions;

    const hqm::HarmonicMap fn = hqm::HarmonicMap::pommerenke_kn(n).scaled_combo(k, -1);
    const hqm::HarmonicMap p_low = hqm::HarmonicMap::h_alpha(alpha).scaled_combo(k, 1);

    std::vector<hqm::verify::VerificationReport> reports;
    const bool all = suite == "all";
    if (all || suite == "theorem1") {
        reports.push_back(hqm::verify::check_theorem1(fn, 0.0, n, Q, cs));
        reports.push_back(hqm::verify::check_theorem1(p_low, 0.0, alpha, Q, cs));
        reports.push_back(
            hqm::verify::check_theorem1(hqm::HarmonicMap::h_alpha(alpha), 0.0, alpha, 1.0, cs));
    }
    if (all || suite == "theorem2") {
        reports.push_back(hqm::verify::check_theorem2(
            hqm::HarmonicMap::h_alpha(alpha).affine_transform(k, false), 0.0, alpha, cs));
        reports.push_back(hqm::verify::check_theorem2(
            hqm::HarmonicMap::harmonic_koebe().affine_transform(-k, false), 0.0, 3.0, cs));
        reports.push_back(
            hqm::verify::check_theorem2(hqm::HarmonicMap::identity(), 0.0, 1.0, cs));
    }
    if (all || suite == "theorem3") {
        reports.push_back(hqm::verify::check_theorem3_convexity(
            hqm::HarmonicMap::h_alpha(alpha), 0.0, alpha, 1.0));
        for (const hqm::Complex z0 : {hqm::Complex(0.0), hqm::Complex(0.3)}) {
            reports.push_back(hqm::verify::check_theorem3_convexity(fn, z0, n, Q));
            reports.push_back(hqm::verify::check_theorem3_convexity(p_low, z0, alpha, Q));
        }
    }
    if (all || suite == "sharpness") {
        for (auto& r : hqm::verify::run_sharpness_suite(k, alpha, n, cs)) {
            reports.push_back(std::move(r));
        }
    }
    if (reports.empty()) {
        std::cerr << "verify: unknown suite '" << suite << "'\n";
        return 2;
    }

    std::sort(reports.begin(), reports.end(),
              [](const auto& a, const auto& b) { return a.check_name < b.check_name; });
    json out = json::array();
    bool any_fail = false;
    for (const auto& r : reports) {
        out.push_back(hqm::verify::report_to_json(r));
        any_fail = any_fail || r.status == hqm::verify::CheckStatus::Fail;
    }
    std::cout << out.dump(2) << "\n";
    return any_fail ? 1 : 0;
}

struct Preset {
    hqm::HarmonicMap map;
    double disk_radius;
};

Preset make_preset(const std::string& name) {
    const double k = 0.25;
    const double alpha = 2.0;
    const auto f2 = hqm::HarmonicMap::pommerenke_kn(2).scaled_combo(k, -1);
    const auto p = hqm::HarmonicMap::h_alpha(alpha).scaled_combo(k, 1);
    const auto radius = [](const hqm::HarmonicMap& m) {
        return hqm::radii::analytic_radius(m)->value;
    };
    if (name == "fig1a") return {f2.analytic_part(), radius(f2.analytic_part())};
    if (name == "fig1b") return {f2, radius(f2)};
    if (name == "fig4a") return {p.analytic_part(), radius(p.analytic_part())};
    if (name == "fig4b") return {p, radius(p)};
    throw hqm::DomainError("unknown preset: " + name);
}

int run_plot(const std::string& preset, const std::string& spec_file, std::string out_file) {
    hqm::plot::PlotSpec spec;
    std::optional<hqm::HarmonicMap> map;
    if (!preset.empty()) {
        const Preset p = make_preset(preset);
        map = p.map;
        spec.overlays.push_back({hqm::Complex(0.0), p.disk_radius});
    } else if (!spec_file.empty()) {
        const json j = load_json_file(spec_file);
        map = hqm::map_from_json(j.at("map"));
        if (j.contains("grid")) {
            spec.grid.n_radii = j["grid"].value("n_radii", spec.grid.n_radii);
            spec.grid.n_rays = j["grid"].value("n_rays", spec.grid.n_rays);
            spec.grid.r_max = j["grid"].value("r_max", spec.grid.r_max);
        }
        for (const auto& o : j.value("overlays", json::array())) {
            spec.overlays.push_back(
                {{o.at("center")[0].get<double>(), o.at("center")[1].get<double>()},
                 o.at("radius").get<double>()});
        }
        spec.size = j.value("size", spec.size);
        if (out_file.empty()) out_file = j.value("output", "");
    } else {
        std::cerr << "plot: either --preset or --spec is required\n";
        return 2;
    }
    if (out_file.empty()) {
        std::cerr << "plot: output path required (--out)\n";
        return 2;
    }
    const std::string svg = hqm::plot::render_svg(*map, spec);
    std::ofstream out(out_file, std::ios::binary);
    if (!out) {
        std::cerr << "plot: cannot write " << out_file << "\n";
        return 1;
    }
    out << svg;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"covering radii and convexity bounds for quasiconformal harmonic mappings"};
    app.require_subcommand(1);

    // elliptic
    auto* sc_ell = app.add_subcommand("elliptic", "complete elliptic integral kernel");
    std::optional<double> e_k, e_kp, e_phi, e_phiinv;
    bool e_json = false;
    sc_ell->add_option("--k", e_k, "K(t)");
    sc_ell->add_option("--kprime", e_kp, "K'(t)");
    sc_ell->add_option("--phi", e_phi, "phi(t) = (pi/2) K'(t)/K(t)");
    sc_ell->add_option("--phi-inv", e_phiinv, "inverse of phi");
    sc_ell->add_flag("--json", e_json, "emit JSON instead of a bare number");

    // bounds
    auto* sc_b = app.add_subcommand("bounds", "ratio bounds m(x,Q), M(x,k) and the Mori bound");
    double b_x = 0.0, b_q = 1.0;
    std::string b_grid, b_format = "json";
    sc_b->add_option("--x", b_x, "normalized dilatation |omega|/k in [0,1]")->required();
    sc_b->add_option("--q", b_q, "quasiconformality constant Q >= 1")->required();
    sc_b->add_option("--grid", b_grid, "grid NX:NQ over x in [0,1], Q in [1, --q]");
    sc_b->add_option("--format", b_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    // radius
    auto* sc_r = app.add_subcommand("radius", "univalent-disk radius estimate");
    std::string r_map, r_z0 = "0,0", r_path_csv;
    int r_dirs = 720;
    bool r_refine = true, r_analytic = false;
    sc_r->add_option("--map", r_map, "map descriptor JSON file")->required();
    sc_r->add_option("--z0", r_z0, "evaluation point 're,im'");
    sc_r->add_option("--directions", r_dirs, "ray directions in the sweep");
    sc_r->add_flag("--refine,!--no-refine", r_refine, "golden-section refinement");
    sc_r->add_flag("--analytic", r_analytic, "closed-form value for recognized variants");
    sc_r->add_option("--path-csv", r_path_csv, "write the psi=0 lifted path as CSV");

    // verify
    auto* sc_v = app.add_subcommand("verify", "theorem verification harness");
    std::string v_suite = "all", v_params;
    sc_v->add_option("--suite", v_suite, "all|theorem1|theorem2|theorem3|sharpness");
    sc_v->add_option("--params", v_params, "JSON parameter file ({k, alpha, n, directions})");

    // plot
    auto* sc_p = app.add_subcommand("plot", "polar-grid image + covering disks as SVG");
    std::string p_preset, p_spec, p_out;
    sc_p->add_option("--preset", p_preset, "fig1a|fig1b|fig4a|fig4b");
    sc_p->add_option("--spec", p_spec, "PlotSpec JSON file");
    sc_p->add_option("--out", p_out, "output SVG path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sc_ell->parsed()) return run_elliptic(e_k, e_kp, e_phi, e_phiinv, e_json);
        if (sc_b->parsed()) return run_bounds(b_x, b_q, b_grid, b_format);
        if (sc_r->parsed()) return run_radius(r_map, r_z0, r_dirs, r_refine, r_analytic, r_path_csv);
        if (sc_v->parsed()) return run_verify(v_suite, v_params);
        if (sc_p->parsed()) return run_plot(p_preset, p_spec, p_out);
    } catch (const hqm::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const hqm::DivergenceError& e) {
        std::cerr << "divergence: " << e.what() << "\n";
        return 1;
    } catch (const hqm::DegeneracyError& e) {
        std::cerr << "degeneracy: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
