#include "foliadeg/reports.hpp"

#include "json.hpp"

#include <sstream>

namespace foliadeg {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const DegreeReport& r) {
    ordered_json j;
    j["family"] = r.family;
    j["d"] = r.degree;
    j["weights"] = r.weights.values();
    if (!r.method.empty()) j["method"] = r.method;
    j["contributions"] = ordered_json::array();
    for (const auto& c : r.contributions) {
        ordered_json e;
        e["pair"] = {c.pair.i + 1, c.pair.j + 1};
        e["num"] = to_string(c.numerator);
        e["den"] = to_string(c.denominator);
        e["value"] = to_string(c.value);
        j["contributions"].push_back(std::move(e));
    }
    j["degree"] = to_string(r.total);
    return j.dump();
}

DegreeReport degree_report_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    DegreeReport r;
    r.family = j.value("family", std::string("legendrian"));
    r.degree = j.at("d").get<int>();
    r.weights = WeightSystem(j.at("weights").get<std::array<long, 4>>());
    r.method = j.value("method", std::string());
    for (const auto& e : j.at("contributions")) {
        const auto p = e.at("pair").get<std::array<int, 2>>();
        FixedPointContribution c;
        c.pair = make_pair_of(p[0] - 1, p[1] - 1);
        c.numerator = parse_scalar(e.at("num").get<std::string>());
        c.denominator = parse_scalar(e.at("den").get<std::string>());
        c.value = parse_scalar(e.at("value").get<std::string>());
        r.contributions.push_back(std::move(c));
    }
    r.total = parse_scalar(j.at("degree").get<std::string>());
    return r;
}

std::string to_text(const DegreeReport& r) {
    std::ostringstream os;
    os << r.family << " d=" << r.degree << " weights=" << to_string(r.weights);
    if (!r.method.empty()) os << " method=" << r.method;
    os << '\n';
    for (const auto& c : r.contributions)
        os << "  " << to_string(c.pair) << "  " << to_string(c.numerator) << " / " << to_string(c.denominator)
           << " = " << to_string(c.value) << '\n';
    os << "degree " << to_string(r.total) << '\n';
    return os.str();
}

std::string to_json(const InterpolationResult& r) {
    ordered_json j;
    j["family"] = to_string(r.family);
    j["min"] = r.d_min;
    j["max"] = r.d_max;
    j["samples"] = ordered_json::array();
    for (const auto& [d, v] : r.samples) j["samples"].push_back({{"d", d}, {"degree", to_string(v)}});
    j["coefficients"] = ordered_json::parse(foliadeg::to_json(r.polynomial));
    j["polynomial"] = render(r.polynomial);
    j["matches_closed_form"] = r.matches_closed_form;
    return j.dump();
}

std::string to_text(const InterpolationResult& r) {
    std::ostringstream os;
    os << to_string(r.family) << " interpolation over d=" << r.d_min << ".." << r.d_max << '\n';
    for (const auto& [d, v] : r.samples) os << "  d=" << d << "  " << to_string(v) << '\n';
    os << "degree " << r.polynomial.degree() << " polynomial: " << render(r.polynomial) << '\n';
    os << "coefficients " << foliadeg::to_json(r.polynomial) << '\n';
    os << (r.matches_closed_form ? "matches" : "DOES NOT MATCH") << " the closed form\n";
    return os.str();
}

}  // namespace foliadeg
