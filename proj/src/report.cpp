#include "carlab/report.hpp"

#include <cmath>
#include <sstream>

namespace carlab {

nlohmann::json real_json(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

nlohmann::json to_json(const EmpiricalConstant& c) {
    nlohmann::json series = nlohmann::json::array();
    for (const SweepPoint& p : c.series) {
        series.push_back({{"axis", real_json(p.axis)}, {"ratio", real_json(p.ratio)}, {"witness", p.witness}});
    }
    return {{"name", c.name},
            {"value", real_json(c.value)},
            {"witness", c.witness},
            {"sweep_axis", to_string(c.axis)},
            {"series", std::move(series)}};
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json bounds = nlohmann::json::array();
    for (const Bound& b : r.bounds) {
        nlohmann::json j = to_json(b.constant);
        j["cap"] = real_json(b.cap);
        j["cap_provenance"] = to_string(b.provenance);
        j["holds"] = b.holds();
        bounds.push_back(std::move(j));
    }
    nlohmann::json obs = nlohmann::json::array();
    for (const EmpiricalConstant& c : r.observations) obs.push_back(to_json(c));
    nlohmann::json metrics = nlohmann::json::object();
    for (const auto& [k, v] : r.metrics) metrics[k] = real_json(v);
    return {{"check", r.check},   {"parameters", r.parameters}, {"constants", std::move(bounds)},
            {"observations", std::move(obs)}, {"metrics", std::move(metrics)},
            {"notes", r.notes},   {"pass", r.pass}};
}

nlohmann::json to_json(const DbarSolution& s) {
    return {{"potential", s.potential_label},
            {"iterations", s.iterations},
            {"residual", real_json(s.residual)},
            {"equation_residual", real_json(s.equation_residual)},
            {"seed_defect", real_json(s.seed_defect)},
            {"interior_margin", s.interior_margin},
            {"contraction_estimate", real_json(s.contraction_estimate)},
            {"update_norms", s.update_norms},
            {"monotone_updates", s.monotone_updates}};
}

nlohmann::json to_json(const WitnessReport& w) {
    return {{"pass", w.pass},
            {"slack", real_json(w.slack)},
            {"max_violation", real_json(w.max_violation)},
            {"worst_point", {w.worst_point.real(), w.worst_point.imag()}},
            {"worst_abs_dbar_u", real_json(w.worst_lhs)},
            {"worst_abs_Vu", real_json(w.worst_rhs)}};
}

nlohmann::json to_json(const BootstrapTrace& t) {
    nlohmann::json series = nlohmann::json::array();
    for (const auto& [tt, a] : t.a_series) series.push_back({{"t", tt}, {"A", real_json(a)}});
    return {{"r", t.r},
            {"exclusion_radius", t.exclusion_radius},
            {"c_hat", real_json(t.c_hat)},
            {"c_hat_provenance", t.c_hat_provenance},
            {"V_l2_ball", real_json(t.v_ball_norm)},
            {"absorption_margin", real_json(t.absorption_margin)},
            {"r_too_large", t.r_too_large},
            {"A_series", std::move(series)},
            {"rhs_bound", real_json(t.rhs_bound)},
            {"bounded", t.bounded},
            {"growth_ratios", t.growth_ratios},
            {"geometric_divergence", t.geometric_divergence}};
}

nlohmann::json to_json(const SupBound& b) {
    nlohmann::json per = nlohmann::json::array();
    for (const auto& [t, v] : b.per_t) per.push_back({{"t", t}, {"bound", real_json(v)}});
    return {{"value", real_json(b.value)}, {"t_at_min", b.t_at_min}, {"per_t", std::move(per)}};
}

std::string csv_header() { return "check,constant,axis,axis_value,ratio,cap,witness\n"; }

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void rows(std::ostringstream& os, const std::string& check, const EmpiricalConstant& c,
          const std::string& cap) {
    for (const SweepPoint& p : c.series) {
        os << csv_field(check) << ',' << csv_field(c.name) << ',' << to_string(c.axis) << ','
           << num(p.axis) << ',' << num(p.ratio) << ',' << cap << ',' << csv_field(p.witness)
           << '\n';
    }
}

}  // namespace

std::string to_csv(const VerificationReport& r) {
    std::ostringstream os;
    for (const Bound& b : r.bounds) rows(os, r.check, b.constant, num(b.cap));
    for (const EmpiricalConstant& c : r.observations) rows(os, r.check, c, "");
    return os.str();
}

}  // namespace carlab
