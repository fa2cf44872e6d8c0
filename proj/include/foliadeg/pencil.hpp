#pragma once

#include "foliadeg/bott.hpp"
#include "foliadeg/pairs.hpp"
#include "foliadeg/rational_polynomial.hpp"
#include "foliadeg/symmetric.hpp"

#include <vector>

namespace foliadeg {

/// Coordinate plane R = <x_i, x_j> of G(2,4); the quotient Q is spanned by the complementary pair.
struct FixedPointG24 {
    IndexPair sub;

    IndexPair quotient() const { return sub.complement(); }
};

std::vector<FixedPointG24> fixed_points_g24();

/// Hom(R,Q) weights {w_k - w_i, w_k - w_j, w_l - w_i, w_l - w_j}.
WeightMultiset tangent_weights_g24(const FixedPointG24& fp, const WeightSystem& w);

/// Fiber weights of P_d tensor wedge^2 Q: weights of S_{d+1} minus those of Sym_{d+1} Q, each shifted by
/// w_k + w_l. Size C(d+4,3) - (d+2).
WeightMultiset pd_twisted_weights(const FixedPointG24& fp, int d, const WeightSystem& w);

/// Degree of the variety of foliations tangent to a pencil of planes, as the localization sum
/// of e4(pd_twisted_weights) / e4(tangent_weights_g24).
DegreeReport pencil_degree(int d, const WeightSystem& w);

/// 5 C(d+4,5) C(d+3,3) (d^2+2d+3)(d^2+6d+11) / 108.
Scalar pencil_degree_closed_form(long d);
RationalPolynomial pencil_closed_form_polynomial();

struct PencilRanks {
    std::size_t rank_Pd = 0;    // C(d+4,3) - (d+2)
    std::size_t rank_Pi_d = 0;  // dim_phi - rank_Pd = 2 C(d+3,3)
    std::size_t dim_phi = 0;    // (d+4)(d+2)(d+1)/2
};

/// Rank bookkeeping for the pencil construction. Throws std::logic_error if the kernel of a rank-2
/// form (computed by exact rank) disagrees with rank_Pi_d.
PencilRanks pencil_rank_checks(int d);

}  // namespace foliadeg
