#include "foliadeg/pencil.hpp"

#include "foliadeg/monomial.hpp"
#include "foliadeg/sections.hpp"

#include <algorithm>
#include <stdexcept>

namespace foliadeg {

namespace {

Integer binomial(long n, long k) {
    if (k < 0 || n < k) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// C(d+a, k) as a polynomial in d: prod_{m=0}^{k-1} (d + a - m) / k!
RationalPolynomial binomial_polynomial(long a, long k) {
    RationalPolynomial p = RationalPolynomial::constant(1);
    Integer factorial = 1;
    for (long m = 0; m < k; ++m) {
        p *= RationalPolynomial::linear(Scalar(m - a));
        factorial *= m + 1;
    }
    return p * Scalar(Integer(1), factorial);
}

}  // namespace

std::vector<FixedPointG24> fixed_points_g24() {
    std::vector<FixedPointG24> out;
    for (const auto& p : kCanonicalPairs) out.push_back({p});
    return out;
}

WeightMultiset tangent_weights_g24(const FixedPointG24& fp, const WeightSystem& w) {
    w.require_admissible();
    const auto W = [&](int k) { return w[static_cast<std::size_t>(k)]; };
    const IndexPair q = fp.quotient();
    return {W(q.i) - W(fp.sub.i), W(q.i) - W(fp.sub.j), W(q.j) - W(fp.sub.i), W(q.j) - W(fp.sub.j)};
}

WeightMultiset pd_twisted_weights(const FixedPointG24& fp, int d, const WeightSystem& w) {
    if (d < 0) throw std::invalid_argument("pd_twisted_weights: negative degree");
    w.require_admissible();
    const auto W = [&](int k) { return w[static_cast<std::size_t>(k)]; };
    const IndexPair q = fp.quotient();

    WeightMultiset all;
    for (const auto& m : monomials_of_degree(d + 1)) all.push_back(monomial_weight(m, w));
    WeightMultiset sym_q;
    for (int a = 0; a <= d + 1; ++a) sym_q.push_back(a * W(q.i) + (d + 1 - a) * W(q.j));

    std::sort(all.begin(), all.end());
    std::sort(sym_q.begin(), sym_q.end());
    WeightMultiset out;
    std::set_difference(all.begin(), all.end(), sym_q.begin(), sym_q.end(), std::back_inserter(out));
    const long twist = W(q.i) + W(q.j);
    for (auto& x : out) x += twist;
    return out;
}

DegreeReport pencil_degree(int d, const WeightSystem& w) {
    if (d < 2) throw std::invalid_argument("pencil_degree: degree must be at least 2");
    w.require_admissible();
    DegreeReport report;
    report.family = "pencil";
    report.degree = d;
    report.weights = w;
    for (const auto& fp : fixed_points_g24()) {
        FixedPointContribution c;
        c.pair = fp.sub;
        c.numerator = Scalar(elementary_symmetric(4, pd_twisted_weights(fp, d, w)));
        c.denominator = Scalar(elementary_symmetric(4, tangent_weights_g24(fp, w)));
        c.value = c.numerator / c.denominator;
        report.contributions.push_back(std::move(c));
    }
    report.total = bott_total(report.contributions, "pencil d=" + std::to_string(d));
    return report;
}

Scalar pencil_degree_closed_form(long d) {
    Scalar v = Scalar(5 * binomial(d + 4, 5) * binomial(d + 3, 3));
    v *= Scalar(d * d + 2 * d + 3) * Scalar(d * d + 6 * d + 11);
    v /= 108;
    return v;
}

RationalPolynomial pencil_closed_form_polynomial() {
    RationalPolynomial p = binomial_polynomial(4, 5) * binomial_polynomial(3, 3);
    p *= RationalPolynomial({Scalar(3), Scalar(2), Scalar(1)});
    p *= RationalPolynomial({Scalar(11), Scalar(6), Scalar(1)});
    return p * Scalar(5, 108);
}

PencilRanks pencil_rank_checks(int d) {
    if (d < 1) throw std::invalid_argument("pencil_rank_checks: degree must be at least 1");
    const auto n = static_cast<std::size_t>(d);
    PencilRanks r;
    r.dim_phi = (n + 4) * (n + 2) * (n + 1) / 2;
    r.rank_Pd = (n + 4) * (n + 3) * (n + 2) / 6 - (n + 2);
    r.rank_Pi_d = r.dim_phi - r.rank_Pd;
    const std::size_t two_binomial = (n + 3) * (n + 2) * (n + 1) / 3;
    const std::size_t kernel = tangent_kernel_dimension(AntisymmetricForm::coordinate({0, 1}), d);
    if (r.rank_Pi_d != two_binomial || kernel != r.rank_Pi_d)
        throw std::logic_error("pencil ranks at d=" + std::to_string(d) + ": dim_phi - rank_Pd = " +
                               std::to_string(r.rank_Pi_d) + ", 2*C(d+3,3) = " + std::to_string(two_binomial) +
                               ", rank-2 tangent kernel = " + std::to_string(kernel));
    return r;
}

}  // namespace foliadeg
