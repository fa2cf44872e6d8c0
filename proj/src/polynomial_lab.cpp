#include "foliadeg/polynomial_lab.hpp"

#include "foliadeg/pencil.hpp"

namespace foliadeg {

std::string to_string(Family f) { return f == Family::Legendrian ? "legendrian" : "pencil"; }

Family parse_family(const std::string& name) {
    if (name == "legendrian") return Family::Legendrian;
    if (name == "pencil") return Family::Pencil;
    throw std::invalid_argument("unknown family '" + name + "' (expected legendrian or pencil)");
}

int degree_bound(Family f) { return f == Family::Legendrian ? 15 : 12; }

namespace {

const std::vector<long> kCubicFactor{24, 14, 9, 1};
const std::vector<long> kOcticFactor{29808, 44856, 45444, 29872, 13480, 3430, 475, 34, 1};
constexpr long kDenominator = 32L * 243L * 5L;

RationalPolynomial from_longs(const std::vector<long>& c) {
    std::vector<Scalar> s;
    for (long x : c) s.emplace_back(x);
    return RationalPolynomial(std::move(s));
}

}  // namespace

RationalPolynomial athusbis_polynomial() {
    // binom(d+2,4) = (d+2)(d+1)d(d-1)/24
    RationalPolynomial p = RationalPolynomial::linear(-2) * RationalPolynomial::linear(-1) *
                           RationalPolynomial::linear(0) * RationalPolynomial::linear(1);
    p *= from_longs(kCubicFactor);
    p *= from_longs(kOcticFactor);
    return p * Scalar(Integer(1), Integer(24 * kDenominator));
}

Scalar athusbis_closed_form(long d) {
    const Scalar x(d);
    return from_longs(kCubicFactor)(x) * from_longs(kOcticFactor)(x) * (x + 2) * (x + 1) * x * (x - 1) /
           Scalar(24 * kDenominator);
}

RationalPolynomial closed_form_polynomial(Family f) {
    return f == Family::Legendrian ? athusbis_polynomial() : pencil_closed_form_polynomial();
}

Scalar closed_form(Family f, long d) {
    return f == Family::Legendrian ? athusbis_closed_form(d) : pencil_degree_closed_form(d);
}

Scalar family_degree(Family f, int d, const WeightSystem& w, DegreeOptions opts) {
    return f == Family::Legendrian ? legendrian_degree(d, w, opts).total : pencil_degree(d, w).total;
}

InterpolationResult interpolate_family(Family f, int d_min, int d_max, const WeightSystem& w, DegreeOptions opts) {
    const int needed = degree_bound(f) + 1;
    if (d_max - d_min + 1 < needed)
        throw std::invalid_argument("interpolate_family: " + to_string(f) + " needs at least " +
                                    std::to_string(needed) + " points, got " +
                                    std::to_string(std::max(0, d_max - d_min + 1)));
    InterpolationResult r;
    r.family = f;
    r.d_min = d_min;
    r.d_max = d_max;
    for (int d = d_min; d <= d_max; ++d) r.samples.emplace_back(d, family_degree(f, d, w, opts));
    r.polynomial = lagrange_interpolate(r.samples);
    for (long d = d_max + 1; d <= d_max + 3; ++d)
        if (!is_integer(r.polynomial(Scalar(d))))
            throw std::logic_error("interpolated " + to_string(f) + " polynomial is not integral at d=" +
                                   std::to_string(d));
    r.matches_closed_form = r.polynomial == closed_form_polynomial(f);
    return r;
}

std::vector<PointwiseMatch> pointwise_matches(Family f, int d_min, int d_max, const WeightSystem& w,
                                              DegreeOptions opts) {
    std::vector<PointwiseMatch> out;
    for (int d = d_min; d <= d_max; ++d) out.push_back({d, family_degree(f, d, w, opts), closed_form(f, d)});
    return out;
}

}  // namespace foliadeg
