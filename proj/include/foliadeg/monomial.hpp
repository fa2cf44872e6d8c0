#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace foliadeg {

inline constexpr int kVariables = 4;

/// Exponent vector of a monomial in x1..x4.
struct Monomial {
    std::array<int, kVariables> exponents{};

    int degree() const;
    auto operator<=>(const Monomial&) const = default;
};

/// Graded lexicographic order with x1 > x2 > x3 > x4; true when a comes first.
bool grlex_before(const Monomial& a, const Monomial& b);

/// All C(k+3,3) monomials of degree k, in grlex order (x1^k first).
std::vector<Monomial> monomials_of_degree(int k);

/// Human-readable form, e.g. "x1^2*x3" or "1".
std::string to_string(const Monomial& m);

class InadmissibleWeights : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Integer characters of the torus acting by x_i -> t^{w_i} x_i.
class WeightSystem {
public:
    constexpr WeightSystem() = default;
    constexpr explicit WeightSystem(std::array<long, kVariables> w) : w_(w) {}

    /// The default choice (0,2,7,10).
    static constexpr WeightSystem standard() { return WeightSystem({0, 2, 7, 10}); }

    long operator[](std::size_t i) const { return w_[i]; }
    const std::array<long, kVariables>& values() const { return w_; }

    /// Coordinates pairwise distinct and all six pair sums pairwise distinct.
    bool admissible() const;
    /// Throws InadmissibleWeights naming the first collision.
    void require_admissible() const;

    /// Weight system with w'_{sigma(i)} = w_i.
    WeightSystem permuted(const std::array<int, kVariables>& sigma) const;

    bool operator==(const WeightSystem&) const = default;

private:
    std::array<long, kVariables> w_{0, 2, 7, 10};
};

/// Parses "a,b,c,d". Throws std::invalid_argument on malformed text (admissibility is not checked).
WeightSystem parse_weights(const std::string& text);
std::string to_string(const WeightSystem& w);

long monomial_weight(const Monomial& m, const WeightSystem& w);

/// Index of a monomial of degree k within monomials_of_degree(k).
std::size_t grlex_rank(const Monomial& m);

}  // namespace foliadeg
