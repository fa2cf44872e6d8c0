#include "foliadeg/monomial.hpp"

#include <numeric>
#include <sstream>

namespace foliadeg {

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

bool grlex_before(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exponents > b.exponents;
}

std::vector<Monomial> monomials_of_degree(int k) {
    if (k < 0) throw std::invalid_argument("monomial degree must be non-negative");
    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>((k + 1) * (k + 2) * (k + 3) / 6));
    for (int a = k; a >= 0; --a)
        for (int b = k - a; b >= 0; --b)
            for (int c = k - a - b; c >= 0; --c) out.push_back(Monomial{{a, b, c, k - a - b - c}});
    return out;
}

std::size_t grlex_rank(const Monomial& m) {
    const int k = m.degree();
    const auto& e = m.exponents;
    std::size_t rank = 0;
    // monomials whose x1-exponent exceeds e[0]: for each such a, C(k-a+2,2) completions
    for (int a = e[0] + 1; a <= k; ++a) rank += static_cast<std::size_t>((k - a + 1) * (k - a + 2) / 2);
    const int r1 = k - e[0];
    for (int b = e[1] + 1; b <= r1; ++b) rank += static_cast<std::size_t>(r1 - b + 1);
    const int r2 = r1 - e[1];
    rank += static_cast<std::size_t>(r2 - e[2]);
    return rank;
}

std::string to_string(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < kVariables; ++i) {
        if (m.exponents[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << 'x' << (i + 1);
        if (m.exponents[i] > 1) os << '^' << m.exponents[i];
    }
    if (first) os << '1';
    return os.str();
}

bool WeightSystem::admissible() const {
    for (int i = 0; i < kVariables; ++i)
        for (int j = i + 1; j < kVariables; ++j)
            if (w_[i] == w_[j]) return false;
    std::vector<long> sums;
    for (int i = 0; i < kVariables; ++i)
        for (int j = i + 1; j < kVariables; ++j) sums.push_back(w_[i] + w_[j]);
    for (std::size_t a = 0; a < sums.size(); ++a)
        for (std::size_t b = a + 1; b < sums.size(); ++b)
            if (sums[a] == sums[b]) return false;
    return true;
}

void WeightSystem::require_admissible() const {
    for (int i = 0; i < kVariables; ++i)
        for (int j = i + 1; j < kVariables; ++j)
            if (w_[i] == w_[j])
                throw InadmissibleWeights("weights " + to_string(*this) + ": w" + std::to_string(i + 1) + " = w" +
                                          std::to_string(j + 1));
    for (int i = 0; i < kVariables; ++i)
        for (int j = i + 1; j < kVariables; ++j)
            for (int k = 0; k < kVariables; ++k)
                for (int l = k + 1; l < kVariables; ++l) {
                    if (std::pair(k, l) <= std::pair(i, j)) continue;
                    if (w_[i] + w_[j] == w_[k] + w_[l])
                        throw InadmissibleWeights("weights " + to_string(*this) + ": pair sums w" +
                                                  std::to_string(i + 1) + "+w" + std::to_string(j + 1) + " and w" +
                                                  std::to_string(k + 1) + "+w" + std::to_string(l + 1) + " coincide");
                }
}

WeightSystem WeightSystem::permuted(const std::array<int, kVariables>& sigma) const {
    std::array<long, kVariables> out{};
    for (int i = 0; i < kVariables; ++i) out[static_cast<std::size_t>(sigma[i])] = w_[i];
    return WeightSystem(out);
}

WeightSystem parse_weights(const std::string& text) {
    std::array<long, kVariables> w{};
    std::istringstream is(text);
    std::string item;
    int n = 0;
    while (std::getline(is, item, ',')) {
        if (n == kVariables) throw std::invalid_argument("expected 4 comma-separated weights: '" + text + "'");
        std::size_t used = 0;
        try {
            w[static_cast<std::size_t>(n)] = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw std::invalid_argument("malformed weight '" + item + "' in '" + text + "'");
        ++n;
    }
    if (n != kVariables) throw std::invalid_argument("expected 4 comma-separated weights: '" + text + "'");
    return WeightSystem(w);
}

std::string to_string(const WeightSystem& w) {
    std::ostringstream os;
    os << '(' << w[0] << ',' << w[1] << ',' << w[2] << ',' << w[3] << ')';
    return os.str();
}

long monomial_weight(const Monomial& m, const WeightSystem& w) {
    long s = 0;
    for (std::size_t i = 0; i < kVariables; ++i) s += m.exponents[i] * w[i];
    return s;
}

}  // namespace foliadeg
