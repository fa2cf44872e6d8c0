#include "foliadeg/symmetric.hpp"

#include <algorithm>
#include <stdexcept>

namespace foliadeg {

namespace {

template <class T>
Integer elementary_symmetric_impl(int k, std::span<const T> s) {
    if (k < 0 || static_cast<std::size_t>(k) > s.size())
        throw std::invalid_argument("elementary_symmetric: k=" + std::to_string(k) + " outside [0, " +
                                    std::to_string(s.size()) + "]");
    // e[j] holds the degree-j coefficient of the partial product
    std::vector<Integer> e(static_cast<std::size_t>(k) + 1, 0);
    e[0] = 1;
    for (const auto& x : s) {
        const Integer v(x);
        for (int j = k; j >= 1; --j) e[j] += v * e[j - 1];
    }
    return e[static_cast<std::size_t>(k)];
}

}  // namespace

Integer elementary_symmetric(int k, std::span<const long> s) { return elementary_symmetric_impl(k, s); }

Integer elementary_symmetric(int k, std::span<const Integer> s) { return elementary_symmetric_impl(k, s); }

WeightMultiset sorted(WeightMultiset s) {
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace foliadeg
