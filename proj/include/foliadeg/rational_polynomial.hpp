#pragma once

#include "foliadeg/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace foliadeg {

/// Univariate polynomial in d with exact coefficients, constant term first.
/// The coefficient list never ends in a zero; the zero polynomial is empty.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Scalar> coefficients);
    static RationalPolynomial constant(const Scalar& c);
    /// The polynomial d - root.
    static RationalPolynomial linear(const Scalar& root);

    const std::vector<Scalar>& coefficients() const { return c_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    Scalar operator()(const Scalar& d) const;

    RationalPolynomial& operator+=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const Scalar& s);
    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const Scalar& s) { return a *= s; }

    bool operator==(const RationalPolynomial&) const = default;

private:
    void trim();
    std::vector<Scalar> c_;
};

/// Unique polynomial of degree < points.size() through the given points.
/// Throws std::invalid_argument on an empty list or repeated abscissae.
RationalPolynomial lagrange_interpolate(const std::vector<std::pair<long, Scalar>>& points);

/// JSON array of coefficient strings, constant term first, e.g. ["1","1","1"].
std::string to_json(const RationalPolynomial& p);
RationalPolynomial polynomial_from_json(const std::string& text);

/// e.g. "d^2 + d + 1", highest degree first.
std::string render(const RationalPolynomial& p, const std::string& var = "d");

}  // namespace foliadeg
