#include "foliadeg/pairs.hpp"

#include <stdexcept>

namespace foliadeg {

IndexPair IndexPair::complement() const {
    IndexPair c{-1, -1};
    for (int k = 0; k < 4; ++k) {
        if (k == i || k == j) continue;
        if (c.i < 0) c.i = k;
        else c.j = k;
    }
    return c;
}

std::size_t IndexPair::index() const {
    for (std::size_t k = 0; k < kCanonicalPairs.size(); ++k)
        if (kCanonicalPairs[k] == *this) return k;
    throw std::invalid_argument("not a coordinate pair: " + to_string(*this));
}

IndexPair make_pair_of(int a, int b) {
    if (a == b || a < 0 || b < 0 || a > 3 || b > 3)
        throw std::invalid_argument("pair indices must be distinct and in 1..4");
    return a < b ? IndexPair{a, b} : IndexPair{b, a};
}

std::string to_string(const IndexPair& p) {
    return "{" + std::to_string(p.i + 1) + "," + std::to_string(p.j + 1) + "}";
}

}  // namespace foliadeg
