#include "foliadeg/tpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace foliadeg {

TPoly::TPoly(const Scalar& c) {
    if (c != 0) c_.push_back(c);
}

TPoly::TPoly(std::vector<Scalar> coefficients) : c_(std::move(coefficients)) { trim(); }

TPoly TPoly::monomial(const Scalar& c, int k) {
    if (c == 0) return {};
    TPoly p;
    p.c_.assign(static_cast<std::size_t>(k) + 1, 0);
    p.c_.back() = c;
    return p;
}

void TPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int TPoly::valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) return static_cast<int>(k);
    return -1;
}

TPoly TPoly::shifted_down(int k) const {
    if (k == 0 || is_zero()) return *this;
    TPoly p;
    p.c_.assign(c_.begin() + k, c_.end());
    return p;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

TPoly& TPoly::operator*=(const Scalar& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return TPoly(std::move(r));
}

TPoly TPoly::operator-() const {
    TPoly p = *this;
    for (auto& x : p.c_) x = -x;
    return p;
}

std::pair<TPoly, TPoly> divmod(const TPoly& a, const TPoly& b) {
    if (b.is_zero()) throw std::domain_error("TPoly division by zero");
    std::vector<Scalar> rem = a.coefficients();
    const int db = b.degree();
    if (a.degree() < db) return {TPoly{}, a};
    std::vector<Scalar> quo(static_cast<std::size_t>(a.degree() - db) + 1, 0);
    for (int k = a.degree(); k >= db; --k) {
        const Scalar q = rem[static_cast<std::size_t>(k)] / b.leading();
        if (q == 0) continue;
        quo[static_cast<std::size_t>(k - db)] = q;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * b.coefficients()[static_cast<std::size_t>(j)];
    }
    return {TPoly(std::move(quo)), TPoly(std::move(rem))};
}

TPoly gcd(const TPoly& a, const TPoly& b) {
    TPoly x = a, y = b;
    while (!y.is_zero()) {
        TPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x * Scalar(1 / x.leading());
}

TPoly exact_div(const TPoly& a, const TPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_div: " + to_string(b) + " does not divide " + to_string(a));
    return q;
}

std::string to_string(const TPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        const Scalar& c = p.coefficients()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << '-';
        first = false;
        const Scalar a = abs(c);
        if (k == 0 || a != 1) os << to_string(a) << (k > 0 ? "*" : "");
        if (k > 0) os << 't';
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

}  // namespace foliadeg
