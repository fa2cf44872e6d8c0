#include "doctest.h"

#include "foliadeg/pencil.hpp"
#include "foliadeg/reports.hpp"

#include <algorithm>

using namespace foliadeg;

namespace {

// Closed form evaluated with plain 128-bit integer arithmetic.
__int128 pencil_oracle(__int128 d) {
    const __int128 c5 = (d + 4) * (d + 3) * (d + 2) * (d + 1) * d / 120;
    const __int128 c3 = (d + 3) * (d + 2) * (d + 1) / 6;
    const __int128 num = 5 * c5 * c3 * (d * d + 2 * d + 3) * (d * d + 6 * d + 11);
    REQUIRE(num % 108 == 0);
    return num / 108;
}

Scalar to_scalar(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    std::string s;
    do {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    } while (u != 0);
    return parse_scalar((neg ? "-" : "") + s);
}

}  // namespace

TEST_CASE("fixed points of G(2,4)") {
    const auto fps = fixed_points_g24();
    REQUIRE(fps.size() == 6);
    CHECK(fps.back().quotient() == IndexPair{0, 1});
    CHECK(fps.front().sub == IndexPair{0, 1});
}

TEST_CASE("tangent weights of G(2,4)") {
    const WeightSystem w = WeightSystem::standard();
    CHECK(tangent_weights_g24({{0, 1}}, w) == WeightMultiset{7, 5, 10, 8});
    CHECK(tangent_weights_g24({{2, 3}}, w) == WeightMultiset{-7, -10, -5, -8});
    for (const auto& fp : fixed_points_g24()) {
        const auto t = tangent_weights_g24(fp, w);
        CHECK(std::find(t.begin(), t.end(), 0) == t.end());
    }
    CHECK_THROWS_AS(tangent_weights_g24({{0, 1}}, WeightSystem({0, 1, 2, 3})), InadmissibleWeights);
}

TEST_CASE("twisted P_d weights") {
    const WeightSystem w = WeightSystem::standard();
    for (const auto& fp : fixed_points_g24()) CHECK(pd_twisted_weights(fp, 2, w).size() == 16);
    for (int d = 1; d <= 6; ++d) {
        const std::size_t expected = static_cast<std::size_t>((d + 4) * (d + 3) * (d + 2) / 6 - (d + 2));
        for (const auto& fp : fixed_points_g24()) CHECK(pd_twisted_weights(fp, d, w).size() == expected);
    }
    // at {1,2}: the removed weights are 21,24,27,30, and every survivor is a monomial weight plus 17
    WeightMultiset untwisted;
    for (long x : pd_twisted_weights({{0, 1}}, 2, w)) untwisted.push_back(x - 17);
    WeightMultiset all;
    for (const auto& m : monomials_of_degree(3)) all.push_back(monomial_weight(m, w));
    all = sorted(all);
    untwisted = sorted(untwisted);
    WeightMultiset removed;
    std::set_difference(all.begin(), all.end(), untwisted.begin(), untwisted.end(), std::back_inserter(removed));
    CHECK(removed == WeightMultiset{21, 24, 27, 30});
}

TEST_CASE("pencil degree") {
    CHECK(pencil_degree(2, WeightSystem::standard()).total == 825);
    CHECK(pencil_degree(3, WeightSystem::standard()).total == 13300);
    CHECK(pencil_degree(2, WeightSystem({0, 1, 5, 13})).total == 825);
    CHECK(pencil_degree_closed_form(2) == 825);
    CHECK(pencil_degree_closed_form(3) == 13300);
    for (int d = 2; d <= 14; ++d) {
        const Scalar expected = to_scalar(pencil_oracle(d));
        CHECK(pencil_degree_closed_form(d) == expected);
        CHECK(pencil_degree(d, WeightSystem::standard()).total == expected);
        CHECK(pencil_degree(d, WeightSystem({1, 3, 9, 20})).total == expected);
    }
    CHECK_THROWS_AS(pencil_degree(1, WeightSystem::standard()), std::invalid_argument);
    CHECK_THROWS_AS(pencil_degree(2, WeightSystem({0, 1, 2, 3})), InadmissibleWeights);
    const auto r = pencil_degree(2, WeightSystem::standard());
    CHECK(to_json(r).rfind(R"({"family":"pencil","d":2,"weights":[0,2,7,10],"contributions":)", 0) == 0);
}

TEST_CASE("pencil closed form as a polynomial") {
    const auto p = pencil_closed_form_polynomial();
    CHECK(p.degree() == 12);
    for (long d = 0; d <= 20; ++d) CHECK(p(Scalar(d)) == to_scalar(pencil_oracle(d)));
}

TEST_CASE("pencil rank bookkeeping") {
    const auto r1 = pencil_rank_checks(1);
    CHECK(r1.rank_Pd == 7);
    CHECK(r1.rank_Pi_d == 8);
    CHECK(r1.dim_phi == 15);
    const auto r2 = pencil_rank_checks(2);
    CHECK(r2.rank_Pd == 16);
    CHECK(r2.rank_Pi_d == 20);
    CHECK(r2.dim_phi == 36);
    const auto r3 = pencil_rank_checks(3);
    CHECK(r3.rank_Pd == 30);
    CHECK(r3.rank_Pi_d == 40);
    CHECK(r3.dim_phi == 70);
    for (int d = 1; d <= 5; ++d) {
        const auto r = pencil_rank_checks(d);
        CHECK(r.rank_Pi_d == tangent_kernel_dimension(AntisymmetricForm::coordinate({0, 1}), d));
        CHECK(r.rank_Pi_d == static_cast<std::size_t>((d + 3) * (d + 2) * (d + 1) / 3));
    }
}
