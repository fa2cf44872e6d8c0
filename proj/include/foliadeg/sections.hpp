#pragma once

#include "foliadeg/monomial.hpp"
#include "foliadeg/pairs.hpp"
#include "foliadeg/scalar.hpp"
#include "foliadeg/tpoly.hpp"

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace foliadeg {

/// coefficient * monomial * d/dx_{direction+1}; direction is 0-based.
struct MonomialField {
    Scalar coefficient;
    Monomial monomial;
    int direction = 0;
};

long field_weight(const Monomial& m, int direction, const WeightSystem& w);

/// A weight-homogeneous, divergence-free vector field.
struct BasisField {
    std::vector<MonomialField> terms;
    long weight = 0;
};

/// Eigenbasis of the divergence-free fields of degree d, modelling H^0(P^3, TP^3(d-1)).
struct SectionBasis {
    int degree = 0;
    WeightSystem weights;
    std::vector<BasisField> fields;

    std::size_t size() const { return fields.size(); }
};

using Polynomial = std::map<Monomial, Scalar>;
using TPolynomial = std::map<Monomial, TPoly>;

/// Degree-0 distribution sum alpha_ij (x_j dx_i - x_i dx_j), coefficients in canonical pair order.
struct AntisymmetricForm {
    std::array<Scalar, 6> alpha{};

    /// Form with alpha = 1 at the given pair and 0 elsewhere.
    static AntisymmetricForm coordinate(IndexPair p);
    /// alpha12*alpha34 - alpha13*alpha24 + alpha14*alpha23; nonzero exactly for contact forms.
    Scalar pfaffian() const;
    bool is_zero() const;
};

/// The curve kappa_base + t_sign * t * kappa_perturb through a coordinate point, with the two pairs
/// complementary so that the Pfaffian is proportional to t.
struct PerturbedForm {
    IndexPair base;
    IndexPair perturb;
    int t_sign = 1;

    static PerturbedForm around(IndexPair base, int t_sign = 1);
    /// Torus weight carried by t: (w_i + w_j) - (w_k + w_l) for base {i,j}, perturb {k,l}.
    long t_weight(const WeightSystem& w) const;
};

/// Sum of d/dx_j (c * mu) over the terms. Throws std::invalid_argument if monomial degrees differ.
Polynomial divergence(std::span<const MonomialField> terms);

/// Throws InadmissibleWeights for inadmissible w and std::invalid_argument for d < 1.
SectionBasis build_phi_basis(int d, const WeightSystem& w);

/// sum a_i p_i, where (a_1..a_4) = sum alpha_ij kappa_ij and kappa_ij has x_j in slot i, -x_i in slot j.
Polynomial contract(const AntisymmetricForm& form, std::span<const MonomialField> terms);
TPolynomial contract(const PerturbedForm& form, std::span<const MonomialField> terms);

/// Dimension of {phi in Phi_d : contract(form, phi) = 0}, by exact rank.
std::size_t tangent_kernel_dimension(const AntisymmetricForm& form, int d);

/// e.g. "-x1*x3 ∂1 + x3*x4 ∂4".
std::string render(std::span<const MonomialField> terms);
inline std::string render(const BasisField& f) { return render(f.terms); }

}  // namespace foliadeg
