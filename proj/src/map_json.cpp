#include "hqm/map_json.hpp"

namespace hqm {

namespace {

using nlohmann::json;

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw DomainError("map json: complex value must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json coeffs_to_json(const std::vector<Complex>& c) {
    json out = json::array();
    for (Complex v : c) out.push_back(complex_to_json(v));
    return out;
}

std::vector<Complex> coeffs_from_json(const json& j) {
    std::vector<Complex> out;
    for (const auto& v : j) out.push_back(complex_from_json(v));
    return out;
}

json descriptor_to_json(const MapDescriptor& d) {
    json j;
    json params = json::object();
    switch (d.kind) {
        case MapKind::PommerenkeKn:
            j["variant"] = "pommerenke_kn";
            params["n"] = d.n;
            break;
        case MapKind::HAlpha:
            j["variant"] = "h_alpha";
            params["alpha"] = d.alpha;
            break;
        case MapKind::HarmonicKoebe:
            j["variant"] = "harmonic_koebe";
            break;
        case MapKind::Series:
            j["variant"] = "series";
            params["rho"] = d.rho;
            j["h_coeffs"] = coeffs_to_json(d.h_coeffs);
            j["g_coeffs"] = coeffs_to_json(d.g_coeffs);
            break;
        case MapKind::Affine:
            j["variant"] = "affine";
            params["eps"] = complex_to_json(d.eps);
            params["normalize"] = d.normalize;
            params["base"] = descriptor_to_json(*d.base);
            break;
        case MapKind::ScaledCombo:
            j["variant"] = "scaled_combo";
            params["k"] = d.k;
            params["sign"] = d.sign;
            params["base"] = descriptor_to_json(*d.base);
            break;
        case MapKind::Koebe:
            j["variant"] = "koebe";
            params["a"] = complex_to_json(d.a);
            params["theta"] = d.theta;
            params["normalization"] = d.koebe_norm == KoebeNormalization::AnalyticDeriv
                                          ? "analytic-deriv"
                                          : "directional-deriv";
            params["base"] = descriptor_to_json(*d.base);
            break;
        case MapKind::AnalyticPart:
            j["variant"] = "analytic_part";
            params["base"] = descriptor_to_json(*d.base);
            break;
    }
    j["params"] = params;
    return j;
}

HarmonicMap parse(const json& j) {
    if (!j.contains("variant")) throw DomainError("map json: missing 'variant'");
    const std::string variant = j.at("variant").get<std::string>();
    const json params = j.value("params", json::object());
    auto base = [&]() { return parse(params.at("base")); };
    if (variant == "pommerenke_kn") return HarmonicMap::pommerenke_kn(params.at("n").get<int>());
    if (variant == "h_alpha") return HarmonicMap::h_alpha(params.at("alpha").get<double>());
    if (variant == "harmonic_koebe") return HarmonicMap::harmonic_koebe();
    if (variant == "series") {
        return HarmonicMap::series(coeffs_from_json(j.value("h_coeffs", json::array())),
                                   coeffs_from_json(j.value("g_coeffs", json::array())),
                                   params.value("rho", 0.95));
    }
    if (variant == "affine") {
        return base().affine_transform(complex_from_json(params.at("eps")),
                                       params.value("normalize", true));
    }
    if (variant == "scaled_combo") {
        return base().scaled_combo(params.at("k").get<double>(), params.at("sign").get<int>());
    }
    if (variant == "koebe") {
        const std::string norm = params.value("normalization", "directional-deriv");
        return base().koebe_transform(complex_from_json(params.at("a")),
                                      params.value("theta", 0.0),
                                      norm == "analytic-deriv"
                                          ? KoebeNormalization::AnalyticDeriv
                                          : KoebeNormalization::DirectionalDeriv);
    }
    if (variant == "analytic_part") return base().analytic_part();
    throw DomainError("map json: unknown variant '" + variant + "'");
}

}  // namespace

nlohmann::json map_to_json(const HarmonicMap& map) { return descriptor_to_json(map.descriptor()); }

HarmonicMap map_from_json(const nlohmann::json& j) { return parse(j); }

}  // namespace hqm
