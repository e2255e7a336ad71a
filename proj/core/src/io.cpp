#include "ttd/io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ttd {

namespace {

using nlohmann::json;

json quaternion_to_json(const Quaternion& q) {
    return json::array({q.w, q.x, q.y, q.z});
}

Quaternion quaternion_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) {
        throw std::invalid_argument("config: scalar must be a 4-array [w,x,y,z]");
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

json spectrum_to_json(const AngleSpectrum& s) {
    json clusters = json::array();
    for (const auto& c : s.clusters) {
        clusters.push_back({{"angle", c.angle}, {"multiplicity", c.multiplicity}});
    }
    return {{"tolerance", s.tolerance}, {"clusters", clusters}};
}

} // namespace

Configuration config_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");

    Configuration cfg;
    cfg.field = parse_field(j.at("field").get<std::string>());
    cfg.dim = j.at("dim").get<int>();
    if (!j.at("vectors").is_array()) {
        throw std::invalid_argument("config: 'vectors' must be an array");
    }
    for (const json& jv : j.at("vectors")) {
        Vector v;
        for (const json& jq : jv) v.push_back(quaternion_from_json(jq));
        cfg.vectors.push_back(std::move(v));
    }
    if (j.contains("weights")) {
        for (const json& jw : j.at("weights")) cfg.weights.push_back(jw.get<double>());
    }
    cfg.validate();
    return cfg;
}

std::string config_to_json(const Configuration& cfg, int indent) {
    json vectors = json::array();
    for (const Vector& v : cfg.vectors) {
        json jv = json::array();
        for (const Quaternion& q : v) jv.push_back(quaternion_to_json(q));
        vectors.push_back(std::move(jv));
    }
    json j = {{"field", field_name(cfg.field)}, {"dim", cfg.dim}, {"vectors", vectors}};
    if (cfg.weighted()) j["weights"] = cfg.weights;
    return j.dump(indent);
}

Configuration load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return config_from_json(buffer.str());
}

void save_config(const Configuration& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write config file: " + path);
    out << config_to_json(cfg) << "\n";
}

std::string report_to_json(const DesignReport& report, int indent) {
    json per_r = json::array();
    for (const auto& check : report.per_r) {
        per_r.push_back({{"r", check.r},
                         {"potential", check.potential},
                         {"bound", check.bound},
                         {"gap", check.gap}});
    }
    json j = {{"t", report.t},
              {"potential", report.potential},
              {"bound", report.bound},
              {"gap", report.gap},
              {"relative_gap", report.relative_gap},
              {"is_design", report.is_design},
              {"tolerance", report.tolerance},
              {"per_r", per_r},
              {"spectrum", spectrum_to_json(report.spectrum)},
              {"bessel_max_residual", report.bessel_max_residual},
              {"hoggar_residuals", report.hoggar_residuals},
              {"weights_normalized", report.weights_normalized},
              {"vectors_normalized", report.vectors_normalized}};
    if (std::isnan(report.cubature_max_residual)) {
        j["cubature_max_residual"] = nullptr; // outside the symbolic envelope
    } else {
        j["cubature_max_residual"] = report.cubature_max_residual;
    }
    return j.dump(indent);
}

std::string report_table(const DesignReport& report) {
    std::ostringstream out;
    out << std::setprecision(15);
    out << "order t            : " << report.t << "\n";
    out << "potential          : " << report.potential << "\n";
    out << "bound              : " << report.bound << "\n";
    out << "gap                : " << report.gap << "\n";
    out << "relative gap       : " << report.relative_gap << "\n";
    out << "is design          : " << (report.is_design ? "yes" : "no")
        << "  (tol " << report.tolerance << ")\n";
    out << "per order r        :\n";
    for (const auto& check : report.per_r) {
        out << "  r=" << check.r << "  potential " << check.potential << "  bound "
            << check.bound << "  gap " << check.gap << "\n";
    }
    out << "angle spectrum     :";
    for (const auto& cluster : report.spectrum.clusters) {
        out << "  " << cluster.angle << " x" << cluster.multiplicity;
    }
    out << "\n";
    out << "bessel residual    : " << report.bessel_max_residual << "\n";
    if (!std::isnan(report.cubature_max_residual)) {
        out << "cubature residual  : " << report.cubature_max_residual << "\n";
    }
    out << "hoggar residuals   :";
    for (double r : report.hoggar_residuals) out << " " << r;
    out << "\n";
    return out.str();
}

std::string search_result_to_json(const SearchResult& result, int indent) {
    json j = {{"configuration", json::parse(config_to_json(result.best, -1))},
              {"report", json::parse(report_to_json(result.report, -1))},
              {"restart_index", result.restart_index},
              {"converged", result.converged},
              {"iterations", result.trajectory.empty()
                                 ? 0
                                 : result.trajectory.back().iteration}};
    return j.dump(indent);
}

void save_trajectory_csv(const SearchResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write trajectory file: " + path);
    out << "iteration,potential\n";
    out << std::setprecision(17);
    for (const auto& point : result.trajectory) {
        out << point.iteration << "," << point.potential << "\n";
    }
}

} // namespace ttd
