#include "aqfock/measure_io.hpp"

#include <cstdio>
#include <ostream>

#include <nlohmann/json.hpp>

namespace aqfock {

nlohmann::json measure_to_json(const QParams& params, const DiscreteRadialMeasure& mu) {
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& a : mu.atoms()) atoms.push_back({{"r", a.r}, {"w", a.w}});
    const auto& t = mu.truncation();
    return nlohmann::json{
        {"alpha", params.alpha},
        {"q", params.q},
        {"atoms", std::move(atoms)},
        {"truncation", {{"tol", t.tol}, {"terms", t.terms}, {"residual", t.residual}}},
    };
}

DiscreteRadialMeasure measure_from_json(const nlohmann::json& j, QParams* params_out) {
    if (params_out) *params_out = QParams(j.at("alpha").get<double>(), j.at("q").get<double>());
    std::vector<RadialAtom> atoms;
    for (const auto& a : j.at("atoms")) atoms.push_back({a.at("r").get<double>(), a.at("w").get<double>()});
    TruncationMeta meta;
    if (j.contains("truncation")) {
        const auto& t = j.at("truncation");
        meta.tol = t.value("tol", 0.0);
        meta.terms = t.value("terms", 0);
        meta.residual = t.value("residual", 0.0);
    }
    return DiscreteRadialMeasure::from_atoms(std::move(atoms), meta);
}

void write_csv(std::ostream& os, const DiscreteRadialMeasure& mu) {
    os << "r,w\n";
    char buf[64];
    for (const auto& a : mu.atoms()) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", a.r, a.w);
        os << buf;
    }
}

}  // namespace aqfock
