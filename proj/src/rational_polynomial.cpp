#include "foliadeg/rational_polynomial.hpp"

#include "json.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace foliadeg {

RationalPolynomial::RationalPolynomial(std::vector<Scalar> coefficients) : c_(std::move(coefficients)) { trim(); }

RationalPolynomial RationalPolynomial::constant(const Scalar& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::linear(const Scalar& root) { return RationalPolynomial({-root, 1}); }

void RationalPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Scalar RationalPolynomial::operator()(const Scalar& d) const {
    Scalar acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * d + *it;
    return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Scalar> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Scalar& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
}

RationalPolynomial lagrange_interpolate(const std::vector<std::pair<long, Scalar>>& points) {
    if (points.empty()) throw std::invalid_argument("lagrange_interpolate: no points");
    std::set<long> seen;
    for (const auto& [x, _] : points)
        if (!seen.insert(x).second)
            throw std::invalid_argument("lagrange_interpolate: repeated abscissa " + std::to_string(x));

    // Newton divided differences, then expansion of the Newton form.
    const std::size_t n = points.size();
    std::vector<Scalar> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Scalar(points[i].first - points[i - level].first);

    RationalPolynomial result = RationalPolynomial::constant(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        result *= RationalPolynomial::linear(Scalar(points[i].first));
        result += RationalPolynomial::constant(dd[i]);
    }
    return result;
}

std::string to_json(const RationalPolynomial& p) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : p.coefficients()) j.push_back(to_string(c));
    return j.dump();
}

RationalPolynomial polynomial_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<Scalar> c;
    for (const auto& e : j) c.push_back(parse_scalar(e.get<std::string>()));
    return RationalPolynomial(std::move(c));
}

std::string render(const RationalPolynomial& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Scalar c = p.coefficients()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const Scalar a = abs(c);
        if (a != 1 || k == 0) {
            os << to_string(a);
            if (k > 0) os << '*';
        }
        if (k > 0) os << var;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

}  // namespace foliadeg
