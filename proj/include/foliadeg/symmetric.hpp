#pragma once

#include "foliadeg/scalar.hpp"

#include <span>
#include <vector>

namespace foliadeg {

/// Weights of an equivariant vector space, one entry per eigenline.
using WeightMultiset = std::vector<long>;

/// Coefficient of t^k in prod_i (1 + s_i t). Throws std::invalid_argument if k > |s|.
Integer elementary_symmetric(int k, std::span<const long> s);
Integer elementary_symmetric(int k, std::span<const Integer> s);

/// Sorted copy; multiset equality is equality of the sorted forms.
WeightMultiset sorted(WeightMultiset s);

}  // namespace foliadeg
