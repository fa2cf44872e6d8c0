#include "foliadeg/bott.hpp"

#include "foliadeg/parallel.hpp"
#include "foliadeg/sections.hpp"

#include <array>

namespace foliadeg {

WeightMultiset tangent_weights_p5(IndexPair fp, const WeightSystem& w) {
    w.require_admissible();
    const auto pair_sum = [&](IndexPair p) {
        return w[static_cast<std::size_t>(p.i)] + w[static_cast<std::size_t>(p.j)];
    };
    WeightMultiset out;
    for (const auto& other : kCanonicalPairs)
        if (!(other == fp)) out.push_back(pair_sum(other) - pair_sum(fp));
    return out;
}

MethodChoice resolve(MethodChoice m, int d) {
    if (m != MethodChoice::Auto) return m;
    return d <= 4 ? MethodChoice::Both : MethodChoice::Image;
}

std::string to_string(MethodChoice m) {
    switch (m) {
        case MethodChoice::Image: return "image-fiber";
        case MethodChoice::Kernel: return "kernel-limit";
        case MethodChoice::Both: return "image-fiber+kernel-limit";
        case MethodChoice::Auto: return "auto";
    }
    return "auto";
}

Scalar bott_total(const std::vector<FixedPointContribution>& contributions, const std::string& what) {
    Scalar total = 0;
    for (const auto& c : contributions) total += c.value;
    if (!is_integer(total)) throw NonIntegralTotal(what + ": localization sum " + to_string(total) + " is not an integer");
    return total;
}

DegreeReport legendrian_degree(int d, const WeightSystem& w, DegreeOptions opts) {
    if (d < 2) throw std::invalid_argument("legendrian_degree: degree must be at least 2");
    w.require_admissible();
    const MethodChoice method = resolve(opts.method, d);
    const SectionBasis basis = build_phi_basis(d, w);
    const auto points = fixed_points_p5();

    std::vector<FixedPointContribution> contributions(points.size());
    // fixed points run in parallel; blocks inside each run serially
    parallel_for(points.size(), opts.jobs, [&](std::size_t k) {
        const FixedPointP5& fp = points[k];
        WeightMultiset quotient;
        if (method == MethodChoice::Kernel) {
            quotient = limit_fiber_weights(fp, basis, FiberMethod::KernelLimit).quotient_weights;
        } else {
            quotient = limit_fiber_weights(fp, basis, FiberMethod::ImageFiber).quotient_weights;
            if (method == MethodChoice::Both) {
                const auto other = limit_fiber_weights(fp, basis, FiberMethod::KernelLimit).quotient_weights;
                if (other != quotient)
                    throw MethodDisagreement("image-fiber and kernel-limit weights differ at " + to_string(fp.pair) +
                                             ", d=" + std::to_string(d));
            }
        }
        FixedPointContribution c;
        c.pair = fp.pair;
        c.numerator = Scalar(elementary_symmetric(5, quotient));
        c.denominator = Scalar(elementary_symmetric(5, tangent_weights_p5(fp.pair, w)));
        c.value = c.numerator / c.denominator;
        contributions[k] = std::move(c);
    });

    DegreeReport report;
    report.family = "legendrian";
    report.degree = d;
    report.weights = w;
    report.method = to_string(method);
    report.contributions = std::move(contributions);
    report.total = bott_total(report.contributions, "legendrian d=" + std::to_string(d));
    return report;
}

}  // namespace foliadeg
