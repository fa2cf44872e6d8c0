#include "foliadeg/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace foliadeg {

std::string to_string(const Scalar& x) { return x.get_str(10); }

std::string to_string(const Integer& x) { return x.get_str(10); }

namespace {

bool is_decimal_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Integer n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    Integer m(std::string(den), 10);
    if (m == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Scalar q(n, m);
    q.canonicalize();
    return q;
}

bool is_integer(const Scalar& x) { return x.get_den() == 1; }

}  // namespace foliadeg
