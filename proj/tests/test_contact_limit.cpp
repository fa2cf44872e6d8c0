#include "doctest.h"

#include "foliadeg/contact_limit.hpp"

#include "json.hpp"

#include <algorithm>
#include <numeric>

using namespace foliadeg;

namespace {

// Fiber of M_2 at {3,4}: 2w1-w2, w1, w2, 2w2-w1, 2w4-w3, w4, w3, 2w3-w4, w2-w3+w4, w2, w2+w3-w4, 2w2-w3,
// 2w2-w4, w1-w3+w4, w1, w1+w3-w4, w1+w2-w3, w1+w2-w4, 2w1-w3, 2w1-w4.
WeightMultiset symbolic_fiber_34(const WeightSystem& w) {
    const long w1 = w[0], w2 = w[1], w3 = w[2], w4 = w[3];
    return sorted({2 * w1 - w2, w1, w2, 2 * w2 - w1, 2 * w4 - w3, w4, w3, 2 * w3 - w4, w2 - w3 + w4, w2,
                   w2 + w3 - w4, 2 * w2 - w3, 2 * w2 - w4, w1 - w3 + w4, w1, w1 + w3 - w4, w1 + w2 - w3,
                   w1 + w2 - w4, 2 * w1 - w3, 2 * w1 - w4});
}

WeightMultiset basis_weights(const SectionBasis& b) {
    WeightMultiset out;
    for (const auto& f : b.fields) out.push_back(f.weight);
    return sorted(out);
}

}  // namespace

TEST_CASE("fixed points of P^5") {
    const auto fps = fixed_points_p5();
    REQUIRE(fps.size() == 6);
    CHECK(fps.back().pair == IndexPair{2, 3});
    CHECK(fps.back().pair.complement() == IndexPair{0, 1});
    CHECK(fps.front().pair == IndexPair{0, 1});
    for (std::size_t k = 0; k < fps.size(); ++k) CHECK(fps[k].pair.index() == k);
}

TEST_CASE("contraction matrix at {3,4}, d = 2") {
    const auto basis = build_phi_basis(2, WeightSystem::standard());
    const auto m = build_contraction_matrix({IndexPair{2, 3}}, 2, basis);
    CHECK(m.rows == 20);
    CHECK(m.cols == 36);
    for (const auto& col : m.columns) CHECK(col.size() <= 4);

    const TPoly t = TPoly::monomial(1, 1);
    const std::size_t x2_cubed = grlex_rank(Monomial{{0, 3, 0, 0}});
    bool found = false;
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const auto& terms = basis.fields[c].terms;
        if (terms.size() == 1 && terms[0].monomial == Monomial{{0, 2, 0, 0}} && terms[0].direction == 0) {
            found = true;
            REQUIRE(m.columns[c].size() == 1);
            CHECK(m.columns[c][0].first == x2_cubed);
            CHECK(m.columns[c][0].second == t);  // -t with the opposite sign of t
            const auto neg = build_contraction_matrix({IndexPair{2, 3}}, 2, basis, -1);
            CHECK(neg.columns[c][0].second == -t);
        }
    }
    CHECK(found);
    CHECK_THROWS_AS(build_contraction_matrix({IndexPair{2, 3}}, 3, basis), std::invalid_argument);
}

TEST_CASE("limit fiber at {3,4}, d = 2") {
    const auto r = limit_fiber_weights({IndexPair{2, 3}}, 2, WeightSystem::standard(), FiberMethod::ImageFiber);
    CHECK(r.quotient_weights ==
          sorted({-2, 0, 2, 4, 13, 10, 7, 4, 5, 2, -1, -3, -6, 3, 0, -3, -5, -8, -7, -10}));
    CHECK(r.kernel_weights.size() == 16);
    CHECK(elementary_symmetric(5, r.quotient_weights) == 105534);

    // the symbolic list holds for other weight systems too
    for (const WeightSystem& w : {WeightSystem({0, 1, 5, 13}), WeightSystem({1, 3, 9, 20}), WeightSystem({-4, 0, 3, 11})}) {
        const auto q = limit_fiber_weights({IndexPair{2, 3}}, 2, w, FiberMethod::ImageFiber).quotient_weights;
        CHECK(q == symbolic_fiber_34(w));
        CHECK(std::count(q.begin(), q.end(), 2 * w[1] - w[0]) >= 1);
    }
}

TEST_CASE("limit fiber sizes at d = 3") {
    const auto r = limit_fiber_weights({IndexPair{2, 3}}, 3, WeightSystem::standard(), FiberMethod::ImageFiber);
    CHECK(r.quotient_weights.size() == 35);
    CHECK(r.kernel_weights.size() == 35);
}

TEST_CASE("quotient and kernel weights partition the basis weights; both methods agree") {
    for (int d = 1; d <= 4; ++d) {
        const auto basis = build_phi_basis(d, WeightSystem::standard());
        const auto all = basis_weights(basis);
        for (const auto& fp : fixed_points_p5()) {
            const auto img = limit_fiber_weights(fp, basis, FiberMethod::ImageFiber);
            const auto ker = limit_fiber_weights(fp, basis, FiberMethod::KernelLimit);
            CHECK(img.quotient_weights == ker.quotient_weights);
            CHECK(img.kernel_weights == ker.kernel_weights);
            WeightMultiset u = img.quotient_weights;
            u.insert(u.end(), img.kernel_weights.begin(), img.kernel_weights.end());
            CHECK(sorted(u) == all);
            CHECK(img.kernel_weights.size() == static_cast<std::size_t>((d + 4) * (d + 2) * d / 3));
        }
    }
}

TEST_CASE("limit weights do not depend on the sign of t") {
    const auto basis = build_phi_basis(3, WeightSystem({0, 1, 5, 13}));
    for (const auto& fp : fixed_points_p5()) {
        const auto a = limit_fiber_weights(fp, basis, FiberMethod::ImageFiber, {1, 1});
        const auto b = limit_fiber_weights(fp, basis, FiberMethod::ImageFiber, {1, -1});
        CHECK(a.quotient_weights == b.quotient_weights);
    }
}

TEST_CASE("S4-equivariance of the limit fibers") {
    std::array<int, 4> sigma{0, 1, 2, 3};
    const WeightSystem w = WeightSystem::standard();
    for (int d : {2, 3}) {
        const auto base = build_phi_basis(d, w);
        std::vector<WeightMultiset> reference;
        for (const auto& fp : fixed_points_p5())
            reference.push_back(limit_fiber_weights(fp, base, FiberMethod::ImageFiber).quotient_weights);
        int perms = 0;
        do {
            if (d == 3 && perms % 5 != 0) {
                ++perms;
                continue;
            }
            ++perms;
            const WeightSystem ws = w.permuted(sigma);
            const auto basis = build_phi_basis(d, ws);
            for (const auto& fp : fixed_points_p5()) {
                const IndexPair image = make_pair_of(sigma[fp.pair.i], sigma[fp.pair.j]);
                const auto q = limit_fiber_weights({image}, basis, FiberMethod::ImageFiber).quotient_weights;
                CHECK(q == reference[fp.pair.index()]);
            }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        std::iota(sigma.begin(), sigma.end(), 0);
    }
}

TEST_CASE("parallel blocks give identical output") {
    const auto basis = build_phi_basis(5, WeightSystem::standard());
    const auto a = limit_fiber_weights({IndexPair{1, 3}}, basis, FiberMethod::ImageFiber, {1});
    const auto b = limit_fiber_weights({IndexPair{1, 3}}, basis, FiberMethod::ImageFiber, {4});
    CHECK(to_json(a) == to_json(b));
}

TEST_CASE("limit fiber JSON") {
    const auto r = limit_fiber_weights({IndexPair{2, 3}}, 2, WeightSystem::standard(), FiberMethod::ImageFiber);
    const std::string s = to_json(r);
    CHECK(s.rfind(R"({"pair":[3,4],"d":2,"weights":[)", 0) == 0);
    const auto j = nlohmann::json::parse(s);
    CHECK(j["method"] == "image-fiber");
    CHECK(j["weights"].get<WeightMultiset>() == r.quotient_weights);
    CHECK(j["kernel_weights"].get<WeightMultiset>() == r.kernel_weights);
    CHECK(to_string(FiberMethod::KernelLimit) == "kernel-limit");
}
