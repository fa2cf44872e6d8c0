#pragma once

#include "foliadeg/contact_limit.hpp"
#include "foliadeg/monomial.hpp"
#include "foliadeg/pairs.hpp"
#include "foliadeg/scalar.hpp"
#include "foliadeg/symmetric.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace foliadeg {

/// One fixed-point term of a localization sum: numerator / denominator, both equivariant Euler-type
/// classes evaluated on weights.
struct FixedPointContribution {
    IndexPair pair;
    Scalar numerator;
    Scalar denominator;
    Scalar value;  // numerator / denominator, canonical
};

/// A Bott localization sum over six coordinate fixed points. family is "legendrian" or "pencil".
struct DegreeReport {
    std::string family;
    int degree = 0;
    WeightSystem weights;
    std::vector<FixedPointContribution> contributions;
    Scalar total;
    std::string method;  // fiber method(s) used; empty for the pencil family
};

/// The localization sum did not reduce to an integer.
class NonIntegralTotal : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The two limit-fiber routes returned different weights.
class MethodDisagreement : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// { (w_k + w_l) - (w_i + w_j) : {k,l} != {i,j} }, in canonical pair order.
WeightMultiset tangent_weights_p5(IndexPair fp, const WeightSystem& w);

enum class MethodChoice { Image, Kernel, Both, Auto };

/// Auto resolves to Both for d <= 4 and Image above.
MethodChoice resolve(MethodChoice m, int d);
std::string to_string(MethodChoice m);

struct DegreeOptions {
    MethodChoice method = MethodChoice::Auto;
    unsigned jobs = 1;
};

/// Degree of the variety of Legendrian foliations of degree d: sum over the six fixed points of
/// e5(limit fiber weights of M_d) / e5(tangent weights of P^5).
DegreeReport legendrian_degree(int d, const WeightSystem& w, DegreeOptions opts = {});

/// Sums contributions and enforces integrality.
Scalar bott_total(const std::vector<FixedPointContribution>& contributions, const std::string& what);

}  // namespace foliadeg
