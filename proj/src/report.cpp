/// @file report.cpp

#include "hjlab/report.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hjlab {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

}  // namespace

nlohmann::json to_json(const RateReport& r) {
    nlohmann::json j;
    j["experiment"] = r.experiment;
    j["theorem"] = r.theorem;
    j["norm_p"] = std::isinf(r.norm_p) ? "inf" : fmt(r.norm_p);
    j["one_side_part"] = r.one_side_part;
    j["gradient"] = r.gradient;
    j["fitted_order"] = r.fitted_order;
    j["expected_order"] = r.expected_order;
    j["tolerance"] = r.tolerance;
    j["one_side_rule"] = r.one_side_rule;
    j["pass"] = r.pass;
    j["pairs"] = nlohmann::json::array();
    for (const auto& p : r.pairs)
        j["pairs"].push_back({{"param", p.param}, {"error", p.error}, {"included", p.included}});
    return j;
}

nlohmann::json to_json(const EstimateReport& r) {
    return {{"quantity", r.quantity},   {"time", r.time},
            {"measured", r.measured},   {"theoretical_bound", r.theoretical_bound},
            {"margin", r.margin},       {"slack", r.slack},
            {"theorem", r.theorem},     {"pass", r.pass}};
}

nlohmann::json to_json(const std::vector<EstimateReport>& rs) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rs) j.push_back(to_json(r));
    return j;
}

std::string rate_csv(const RateReport& r) {
    std::ostringstream os;
    os << "param,error,included\n";
    for (const auto& p : r.pairs)
        os << fmt(p.param) << ',' << fmt(p.error) << ',' << (p.included ? 1 : 0) << '\n';
    os << "# fitted_order," << fmt(r.fitted_order) << ",expected," << fmt(r.expected_order)
       << ",pass," << (r.pass ? 1 : 0) << '\n';
    return os.str();
}

std::string estimates_csv(const std::vector<EstimateReport>& rs) {
    std::ostringstream os;
    os << "time,measured,bound,margin,pass\n";
    for (const auto& r : rs)
        os << fmt(r.time) << ',' << fmt(r.measured) << ',' << fmt(r.theoretical_bound)
           << ',' << fmt(r.margin) << ',' << (r.pass ? 1 : 0) << '\n';
    return os.str();
}

std::string plot_data(const RateReport& r) {
    std::ostringstream os;
    os << "# gnuplot: plot '" << r.experiment << ".dat' using 1:2 with linespoints\n"
       << "# columns: log10(param) log10(error); fitted order " << fmt(r.fitted_order) << '\n';
    for (const auto& p : r.pairs)
        if (p.included && p.error > 0.0)
            os << fmt(std::log10(p.param)) << ' ' << fmt(std::log10(p.error)) << '\n';
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p);
    if (!out) throw std::runtime_error("write_file: cannot open " + path);
    out << content;
}

}  // namespace hjlab
