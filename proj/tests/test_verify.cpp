#include "doctest.h"

#include "foliadeg/verify.hpp"

#include <algorithm>

using namespace foliadeg;

namespace {

const Check* find(const std::vector<Check>& checks, const std::string& name) {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
}

}  // namespace

TEST_CASE("embedded reference values verify") {
    const auto checks = verify(embedded_reference_values());
    CHECK(checks.size() == 10);
    for (const auto& c : checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.passed);
    }
    CHECK(verify_tangency_example().passed);
}

TEST_CASE("a tampered constant fails its named check only") {
    ReferenceValues ref = embedded_reference_values();
    ref.contributions[2].second += 1;  // pair {2,3}
    ref.fiber_e5 = 105535;
    const auto checks = verify(ref);
    REQUIRE(find(checks, "contribution {2,3}") != nullptr);
    CHECK_FALSE(find(checks, "contribution {2,3}")->passed);
    CHECK_FALSE(find(checks, "fiber-e5 {3,4}")->passed);
    CHECK(find(checks, "contribution {1,4}")->passed);
    CHECK(find(checks, "total")->passed);
    CHECK(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }) == 2);
}

TEST_CASE("reference values from JSON") {
    const auto ref = reference_values_from_json(R"({"total":"2225","fiber_weights":[1,2,3]})");
    CHECK(ref.total == 2225);
    CHECK(ref.fiber_weights == WeightMultiset{1, 2, 3});
    CHECK(ref.contributions.size() == 6);
    const auto checks = verify(ref);
    CHECK_FALSE(find(checks, "total")->passed);
    CHECK_FALSE(find(checks, "fiber-weights {3,4}")->passed);

    const auto c = reference_values_from_json(R"({"contributions":[{"pair":[4,1],"value":"7716777/336"}]})");
    REQUIRE(c.contributions.size() == 1);
    CHECK(c.contributions[0].first == IndexPair{0, 3});
}
