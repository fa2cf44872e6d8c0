#pragma once

#include "foliadeg/monomial.hpp"
#include "foliadeg/pairs.hpp"
#include "foliadeg/scalar.hpp"
#include "foliadeg/symmetric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace foliadeg {

/// Values the worked example is checked against; defaults come from reference_values.hpp.
struct ReferenceValues {
    int degree = 2;
    WeightSystem weights;
    IndexPair fiber_pair;
    WeightMultiset fiber_weights;
    Integer fiber_e5;
    std::vector<std::pair<IndexPair, Scalar>> contributions;
    Scalar total;
};

ReferenceValues embedded_reference_values();

/// Same fields as JSON: {"degree":2,"weights":[..],"fiber_pair":[3,4],"fiber_weights":[..],
/// "fiber_e5":"105534","contributions":[{"pair":[1,2],"value":"833800359/42000"},..],"total":"2224"}.
/// Missing keys keep the embedded value.
ReferenceValues reference_values_from_json(const std::string& text);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Recomputes the example (both fiber methods) and compares every item.
std::vector<Check> verify(const ReferenceValues& ref, unsigned jobs = 1);

/// The contact form x2dx1 - x1dx2 + x4dx3 - x3dx4 annihilates x1^2 ∂1 + x1x2 ∂2 + x3x4 ∂3 + x4^2 ∂4.
Check verify_tangency_example();

}  // namespace foliadeg
