#pragma once

#include "foliadeg/bott.hpp"
#include "foliadeg/rational_polynomial.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace foliadeg {

enum class Family { Legendrian, Pencil };

std::string to_string(Family f);
/// "legendrian" or "pencil"; throws std::invalid_argument otherwise.
Family parse_family(const std::string& name);

/// Configured bound on the degree in d of the family's degree formula (15 and 12).
int degree_bound(Family f);

/// binom(d+2,4) (d^3+9d^2+14d+24) (d^8+34d^7+475d^6+3430d^5+13480d^4+29872d^3+45444d^2+44856d+29808) / (2^5 3^5 5)
Scalar athusbis_closed_form(long d);
RationalPolynomial athusbis_polynomial();

RationalPolynomial closed_form_polynomial(Family f);
Scalar closed_form(Family f, long d);

/// Degree of one family member, via the matching Bott engine.
Scalar family_degree(Family f, int d, const WeightSystem& w, DegreeOptions opts = {});

struct InterpolationResult {
    Family family = Family::Legendrian;
    int d_min = 0;
    int d_max = 0;
    std::vector<std::pair<long, Scalar>> samples;
    RationalPolynomial polynomial;
    bool matches_closed_form = false;
};

/// Interpolates the computed degrees for d in [d_min, d_max]. Throws std::invalid_argument when fewer than
/// degree_bound + 1 points are given, and std::logic_error if the result takes a non-integer value at one
/// of the three integers past d_max.
InterpolationResult interpolate_family(Family f, int d_min, int d_max, const WeightSystem& w, DegreeOptions opts = {});

struct PointwiseMatch {
    long d = 0;
    Scalar computed;
    Scalar expected;
    bool matches() const { return computed == expected; }
};

/// Computed degrees compared one by one with the closed form (no interpolation).
std::vector<PointwiseMatch> pointwise_matches(Family f, int d_min, int d_max, const WeightSystem& w,
                                              DegreeOptions opts = {});

}  // namespace foliadeg
