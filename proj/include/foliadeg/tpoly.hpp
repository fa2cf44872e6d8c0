#pragma once

#include "foliadeg/scalar.hpp"

#include <string>
#include <vector>

namespace foliadeg {

/// Polynomial in the deformation parameter t with exact coefficients.
/// Coefficients are stored lowest degree first with no trailing zeros.
class TPoly {
public:
    TPoly() = default;
    TPoly(const Scalar& c);  // NOLINT: constants convert implicitly
    TPoly(long c) : TPoly(Scalar(c)) {}  // NOLINT
    explicit TPoly(std::vector<Scalar> coefficients);
    /// c * t^k
    static TPoly monomial(const Scalar& c, int k);

    bool is_zero() const { return c_.empty(); }
    /// Nonzero and free of t.
    bool is_unit() const { return c_.size() == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Largest k with t^k dividing this; -1 for zero.
    int valuation() const;
    Scalar at_zero() const { return c_.empty() ? Scalar(0) : c_[0]; }
    const Scalar& leading() const { return c_.back(); }
    const std::vector<Scalar>& coefficients() const { return c_; }

    /// Exact division by t^k; the caller guarantees k <= valuation().
    TPoly shifted_down(int k) const;

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    TPoly& operator*=(const Scalar& s);
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    friend TPoly operator*(TPoly a, const Scalar& s) { return a *= s; }
    TPoly operator-() const;

    bool operator==(const TPoly&) const = default;

private:
    void trim();
    std::vector<Scalar> c_;
};

/// Quotient and remainder of Euclidean division; divisor must be nonzero.
std::pair<TPoly, TPoly> divmod(const TPoly& a, const TPoly& b);
/// Monic gcd; gcd(0,0) = 0.
TPoly gcd(const TPoly& a, const TPoly& b);
/// Exact quotient; throws std::logic_error if b does not divide a.
TPoly exact_div(const TPoly& a, const TPoly& b);

std::string to_string(const TPoly& p);

}  // namespace foliadeg
