// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.

#include "foliadeg/bott.hpp"
#include "foliadeg/contact_limit.hpp"
#include "foliadeg/pencil.hpp"
#include "foliadeg/polynomial_lab.hpp"
#include "foliadeg/sections.hpp"
#include "foliadeg/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace foliadeg;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

class Criterion {
public:
    explicit Criterion(Outcome& o) : o_(o) {}
    void require(bool ok, const std::string& what) {
        if (!ok) {
            o_.passed = false;
            if (!o_.detail.empty()) o_.detail += "; ";
            o_.detail += what;
        }
    }

private:
    Outcome& o_;
};

int failures = 0;

void run(const std::string& id, const std::string& title, double budget_seconds, const std::function<void(Criterion&)>& body) {
    Outcome o;
    Criterion c(o);
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0) {
        std::ostringstream os;
        os << "runtime " << elapsed << " s exceeds " << budget_seconds << " s";
        c.require(elapsed < budget_seconds, os.str());
    }
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << id << "  " << title << "  (" << elapsed << " s)";
    if (!o.detail.empty()) std::cout << "  -- " << o.detail;
    std::cout << std::endl;
    failures += o.passed ? 0 : 1;
}

AntisymmetricForm random_contact(std::mt19937& rng) {
    std::uniform_int_distribution<long> v(-9, 9);
    while (true) {
        AntisymmetricForm f;
        for (auto& a : f.alpha) a = v(rng);
        if (f.pfaffian() != 0) return f;
    }
}

}  // namespace

int main() {
    const WeightSystem w0 = WeightSystem::standard();

    run("AC1", "Legendrian degree d=2 is 2224 with the six published contributions", 10, [&](Criterion& c) {
        const auto r = legendrian_degree(2, w0);
        c.require(r.total == 2224, "total " + to_string(r.total));
        // published fractions, matched to fixed points by pair
        const std::vector<std::pair<IndexPair, const char*>> expected{
            {{0, 1}, "833800359/42000"}, {{0, 2}, "-38740434/1500"}, {{1, 2}, "-4199874/336"},
            {{0, 3}, "7716777/336"},     {{1, 3}, "-3398841/1500"},  {{2, 3}, "-105534/42000"}};
        for (const auto& [pair, value] : expected) {
            const Scalar& got = r.contributions.at(pair.index()).value;
            c.require(got == parse_scalar(value), to_string(pair) + " gave " + to_string(got));
        }
    });

    run("AC2", "fiber weights at {3,4}, d=2, w=(0,2,7,10); e5 = 105534", 5, [&](Criterion& c) {
        const auto r = limit_fiber_weights({IndexPair{2, 3}}, 2, w0, FiberMethod::ImageFiber);
        c.require(r.quotient_weights == sorted({-2, 0, 2, 4, 13, 10, 7, 4, 5, 2, -1, -3, -6, 3, 0, -3, -5, -8, -7, -10}),
                  "weight multiset differs");
        c.require(elementary_symmetric(5, r.quotient_weights) == 105534, "e5 differs");
    });

    run("AC3", "basis dimension (d+4)(d+2)(d+1)/2 for d=1..8 (36 at d=2)", 0, [&](Criterion& c) {
        for (int d = 1; d <= 8; ++d) {
            const std::size_t n = build_phi_basis(d, w0).size();
            c.require(n == static_cast<std::size_t>((d + 4) * (d + 2) * (d + 1) / 2), "d=" + std::to_string(d));
        }
        c.require(build_phi_basis(2, w0).size() == 36, "d=2 size");
    });

    run("AC4", "tangent kernel of 5 random contact forms is (d+4)(d+2)d/3 for d=2..5", 0, [&](Criterion& c) {
        std::mt19937 rng(20240519);
        for (int d = 2; d <= 5; ++d)
            for (int k = 0; k < 5; ++k) {
                const auto f = random_contact(rng);
                const std::size_t dim = tangent_kernel_dimension(f, d);
                c.require(dim == static_cast<std::size_t>((d + 4) * (d + 2) * d / 3),
                          "d=" + std::to_string(d) + " got " + std::to_string(dim));
            }
    });

    run("AC5", "image-fiber and kernel-limit weights agree at all fixed points, d=2,3,4", 0, [&](Criterion& c) {
        for (int d = 2; d <= 4; ++d) {
            const auto basis = build_phi_basis(d, w0);
            for (const auto& fp : fixed_points_p5()) {
                const auto a = limit_fiber_weights(fp, basis, FiberMethod::ImageFiber);
                const auto b = limit_fiber_weights(fp, basis, FiberMethod::KernelLimit);
                c.require(a.quotient_weights == b.quotient_weights && a.kernel_weights == b.kernel_weights,
                          "d=" + std::to_string(d) + " at " + to_string(fp.pair));
            }
        }
    });

    run("AC6", "Legendrian totals identical for three weight systems, d=2,3", 0, [&](Criterion& c) {
        const std::vector<WeightSystem> systems{w0, WeightSystem({0, 1, 5, 13}), WeightSystem({1, 3, 9, 20})};
        for (int d : {2, 3}) {
            const Scalar t = legendrian_degree(d, systems[0]).total;
            for (const auto& w : systems)
                c.require(legendrian_degree(d, w).total == t, "d=" + std::to_string(d) + " " + to_string(w));
        }
    });

    run("AC7a", "Legendrian degrees match the closed form pointwise for d=2..8", 0, [&](Criterion& c) {
        for (const auto& m : pointwise_matches(Family::Legendrian, 2, 8, w0))
            c.require(m.matches(), "d=" + std::to_string(m.d) + " computed " + to_string(m.computed));
        c.require(athusbis_closed_form(2) == 2224 && athusbis_closed_form(3) == 83520, "closed form values");
    });

    run("AC7b", "16-point interpolation over d=2..17 reproduces the degree-15 closed form", 30 * 60, [&](Criterion& c) {
        const auto r = interpolate_family(Family::Legendrian, 2, 17, w0, {MethodChoice::Image});
        c.require(r.polynomial.degree() == 15, "degree " + std::to_string(r.polynomial.degree()));
        c.require(r.matches_closed_form, "polynomial differs from the closed form");
    });

    run("AC8", "pencil Bott totals equal the closed form for d=2..14 (825, 13300)", 60, [&](Criterion& c) {
        c.require(pencil_degree(2, w0).total == 825, "d=2");
        c.require(pencil_degree(3, w0).total == 13300, "d=3");
        for (int d = 2; d <= 14; ++d)
            c.require(pencil_degree(d, w0).total == pencil_degree_closed_form(d), "d=" + std::to_string(d));
    });

    run("AC9", "contact form annihilates x1^2 ∂1 + x1x2 ∂2 + x3x4 ∂3 + x4^2 ∂4", 0, [&](Criterion& c) {
        const auto check = verify_tangency_example();
        c.require(check.passed, check.detail);
    });

    run("AC10", "S4-equivariance: permuting weights permutes the contributions (d=2,3)", 0, [&](Criterion& c) {
        for (int d : {2, 3}) {
            const auto base = legendrian_degree(d, w0, {MethodChoice::Image});
            std::array<int, 4> sigma{0, 1, 2, 3};
            while (std::next_permutation(sigma.begin(), sigma.end())) {
                const auto r = legendrian_degree(d, w0.permuted(sigma), {MethodChoice::Image});
                c.require(r.total == base.total, "total changed");
                for (const auto& contribution : base.contributions) {
                    const IndexPair image = make_pair_of(sigma[contribution.pair.i], sigma[contribution.pair.j]);
                    c.require(r.contributions.at(image.index()).value == contribution.value,
                              "d=" + std::to_string(d) + " " + to_string(contribution.pair) + " -> " + to_string(image));
                }
            }
        }
    });

    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
