#include "foliadeg/verify.hpp"

#include "foliadeg/bott.hpp"
#include "foliadeg/contact_limit.hpp"
#include "foliadeg/reference_values.hpp"
#include "foliadeg/sections.hpp"

#include "json.hpp"

#include <sstream>

namespace foliadeg {

namespace {

IndexPair one_based_pair(int a, int b) { return make_pair_of(a - 1, b - 1); }

std::string join(const WeightMultiset& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    return os.str();
}

}  // namespace

ReferenceValues embedded_reference_values() {
    namespace ref = reference;
    ReferenceValues r;
    r.degree = ref::kDegree;
    r.weights = WeightSystem(ref::kWeights);
    r.fiber_pair = one_based_pair(ref::kFiberPair[0], ref::kFiberPair[1]);
    r.fiber_weights.assign(ref::kFiberWeights.begin(), ref::kFiberWeights.end());
    r.fiber_e5 = Integer(std::string(ref::kFiberE5));
    for (const auto& [p, v] : ref::kContributions) r.contributions.emplace_back(one_based_pair(p[0], p[1]), parse_scalar(v));
    r.total = parse_scalar(ref::kTotal);
    return r;
}

ReferenceValues reference_values_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    ReferenceValues r = embedded_reference_values();
    if (j.contains("degree")) r.degree = j.at("degree").get<int>();
    if (j.contains("weights")) r.weights = WeightSystem(j.at("weights").get<std::array<long, 4>>());
    if (j.contains("fiber_pair")) {
        const auto p = j.at("fiber_pair").get<std::array<int, 2>>();
        r.fiber_pair = one_based_pair(p[0], p[1]);
    }
    if (j.contains("fiber_weights")) r.fiber_weights = j.at("fiber_weights").get<WeightMultiset>();
    if (j.contains("fiber_e5")) r.fiber_e5 = Integer(j.at("fiber_e5").get<std::string>());
    if (j.contains("contributions")) {
        r.contributions.clear();
        for (const auto& c : j.at("contributions")) {
            const auto p = c.at("pair").get<std::array<int, 2>>();
            r.contributions.emplace_back(one_based_pair(p[0], p[1]), parse_scalar(c.at("value").get<std::string>()));
        }
    }
    if (j.contains("total")) r.total = parse_scalar(j.at("total").get<std::string>());
    return r;
}

std::vector<Check> verify(const ReferenceValues& ref, unsigned jobs) {
    std::vector<Check> checks;
    const SectionBasis basis = build_phi_basis(ref.degree, ref.weights);

    const FixedPointP5 fp{ref.fiber_pair};
    const auto image = limit_fiber_weights(fp, basis, FiberMethod::ImageFiber, {jobs});
    const auto kernel = limit_fiber_weights(fp, basis, FiberMethod::KernelLimit, {jobs});
    const WeightMultiset expected = sorted(ref.fiber_weights);
    checks.push_back({"fiber-weights " + to_string(ref.fiber_pair), image.quotient_weights == expected,
                      "computed {" + join(image.quotient_weights) + "}, expected {" + join(expected) + "}"});
    checks.push_back({"fiber-methods-agree " + to_string(ref.fiber_pair),
                      image.quotient_weights == kernel.quotient_weights,
                      "kernel-limit {" + join(kernel.quotient_weights) + "}"});
    const Integer e5 = elementary_symmetric(5, image.quotient_weights);
    checks.push_back({"fiber-e5 " + to_string(ref.fiber_pair), e5 == ref.fiber_e5,
                      "computed " + to_string(e5) + ", expected " + to_string(ref.fiber_e5)});

    const DegreeReport report = legendrian_degree(ref.degree, ref.weights, {MethodChoice::Both, jobs});
    for (const auto& [pair, value] : ref.contributions) {
        const FixedPointContribution& c = report.contributions.at(pair.index());
        checks.push_back({"contribution " + to_string(pair), c.value == value,
                          "computed " + to_string(c.numerator) + "/" + to_string(c.denominator) + " = " +
                              to_string(c.value) + ", expected " + to_string(value)});
    }
    checks.push_back({"total", report.total == ref.total,
                      "computed " + to_string(report.total) + ", expected " + to_string(ref.total)});
    return checks;
}

Check verify_tangency_example() {
    AntisymmetricForm form;
    form.alpha[IndexPair{0, 1}.index()] = 1;  // x2 dx1 - x1 dx2
    form.alpha[IndexPair{2, 3}.index()] = 1;  // x4 dx3 - x3 dx4
    const std::vector<MonomialField> field{
        {1, Monomial{{2, 0, 0, 0}}, 0},
        {1, Monomial{{1, 1, 0, 0}}, 1},
        {1, Monomial{{0, 0, 1, 1}}, 2},
        {1, Monomial{{0, 0, 0, 2}}, 3},
    };
    const Polynomial image = contract(form, field);
    std::string detail = "contraction has " + std::to_string(image.size()) + " nonzero terms";
    return {"tangency-example", image.empty() && form.pfaffian() != 0, detail};
}

}  // namespace foliadeg
