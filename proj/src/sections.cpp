#include "foliadeg/sections.hpp"

#include "foliadeg/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace foliadeg {

long field_weight(const Monomial& m, int direction, const WeightSystem& w) {
    return monomial_weight(m, w) - w[static_cast<std::size_t>(direction)];
}

AntisymmetricForm AntisymmetricForm::coordinate(IndexPair p) {
    AntisymmetricForm f;
    f.alpha[p.index()] = 1;
    return f;
}

Scalar AntisymmetricForm::pfaffian() const { return alpha[0] * alpha[5] - alpha[1] * alpha[4] + alpha[2] * alpha[3]; }

bool AntisymmetricForm::is_zero() const {
    return std::all_of(alpha.begin(), alpha.end(), [](const Scalar& a) { return a == 0; });
}

PerturbedForm PerturbedForm::around(IndexPair base, int t_sign) {
    if (t_sign != 1 && t_sign != -1) throw std::invalid_argument("t_sign must be +1 or -1");
    return PerturbedForm{base, base.complement(), t_sign};
}

long PerturbedForm::t_weight(const WeightSystem& w) const {
    const auto W = [&](int k) { return w[static_cast<std::size_t>(k)]; };
    return (W(base.i) + W(base.j)) - (W(perturb.i) + W(perturb.j));
}

Polynomial divergence(std::span<const MonomialField> terms) {
    Polynomial out;
    if (terms.empty()) return out;
    const int d = terms.front().monomial.degree();
    for (const auto& f : terms) {
        if (f.monomial.degree() != d) throw std::invalid_argument("divergence: terms of mixed degree");
        const int e = f.monomial.exponents[static_cast<std::size_t>(f.direction)];
        if (e == 0 || f.coefficient == 0) continue;
        Monomial m = f.monomial;
        --m.exponents[static_cast<std::size_t>(f.direction)];
        out[m] += f.coefficient * e;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

namespace {

// Image of mu * d/dx_dir under kappa_p: x_j*mu if dir == i, -x_i*mu if dir == j, else nothing.
bool koszul_image(IndexPair p, const Monomial& mu, int dir, Monomial& out, int& sign) {
    out = mu;
    if (dir == p.i) {
        ++out.exponents[static_cast<std::size_t>(p.j)];
        sign = 1;
        return true;
    }
    if (dir == p.j) {
        ++out.exponents[static_cast<std::size_t>(p.i)];
        sign = -1;
        return true;
    }
    return false;
}

// Fields mu * d/dx_j of degree d in the fixed order: direction first, then grlex.
std::vector<MonomialField> all_monomial_fields(int d) {
    const auto mons = monomials_of_degree(d);
    std::vector<MonomialField> out;
    out.reserve(4 * mons.size());
    for (int dir = 0; dir < kVariables; ++dir)
        for (const auto& m : mons) out.push_back({Scalar(1), m, dir});
    return out;
}

}  // namespace

SectionBasis build_phi_basis(int d, const WeightSystem& w) {
    if (d < 1) throw std::invalid_argument("build_phi_basis: degree must be at least 1");
    w.require_admissible();

    const auto fields = all_monomial_fields(d);
    std::map<long, std::vector<std::size_t>> blocks;
    for (std::size_t k = 0; k < fields.size(); ++k)
        blocks[field_weight(fields[k].monomial, fields[k].direction, w)].push_back(k);

    // (index of the free field, basis element) so the final order does not depend on the blocking
    std::vector<std::pair<std::size_t, BasisField>> found;
    for (const auto& [weight, members] : blocks) {
        std::map<Monomial, std::size_t> row_of;
        for (auto k : members) {
            const auto div = divergence(std::span(&fields[k], 1));
            for (const auto& [m, c] : div) row_of.emplace(m, 0);
        }
        std::size_t r = 0;
        for (auto& [m, idx] : row_of) idx = r++;
        QMatrix mat(row_of.size(), QVector(members.size(), 0));
        for (std::size_t col = 0; col < members.size(); ++col) {
            const auto div = divergence(std::span(&fields[members[col]], 1));
            for (const auto& [m, c] : div) mat[row_of.at(m)][col] = c;
        }
        const Echelon e = rref(std::move(mat));
        std::vector<bool> is_pivot(members.size(), false);
        for (auto p : e.pivots) is_pivot[p] = true;
        for (std::size_t free = 0; free < members.size(); ++free) {
            if (is_pivot[free]) continue;
            QVector v(members.size(), 0);
            v[free] = 1;
            for (std::size_t k = 0; k < e.rows.size(); ++k) v[e.pivots[k]] = -e.rows[k][free];
            BasisField bf;
            bf.weight = weight;
            for (std::size_t col = 0; col < members.size(); ++col) {
                if (v[col] == 0) continue;
                const auto& f = fields[members[col]];
                bf.terms.push_back({v[col], f.monomial, f.direction});
            }
            found.push_back({members[free], std::move(bf)});
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    SectionBasis basis{d, w, {}};
    basis.fields.reserve(found.size());
    for (auto& [_, bf] : found) basis.fields.push_back(std::move(bf));
    return basis;
}

Polynomial contract(const AntisymmetricForm& form, std::span<const MonomialField> terms) {
    Polynomial out;
    Monomial image;
    int sign = 0;
    for (const auto& f : terms)
        for (std::size_t p = 0; p < kCanonicalPairs.size(); ++p) {
            if (form.alpha[p] == 0) continue;
            if (!koszul_image(kCanonicalPairs[p], f.monomial, f.direction, image, sign)) continue;
            out[image] += form.alpha[p] * f.coefficient * sign;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

TPolynomial contract(const PerturbedForm& form, std::span<const MonomialField> terms) {
    TPolynomial out;
    Monomial image;
    int sign = 0;
    for (const auto& f : terms) {
        if (koszul_image(form.base, f.monomial, f.direction, image, sign))
            out[image] += TPoly(f.coefficient * sign);
        if (koszul_image(form.perturb, f.monomial, f.direction, image, sign))
            out[image] += TPoly::monomial(f.coefficient * sign * form.t_sign, 1);
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

std::size_t tangent_kernel_dimension(const AntisymmetricForm& form, int d) {
    if (form.is_zero()) throw std::invalid_argument("tangent_kernel_dimension: zero form");
    const SectionBasis basis = build_phi_basis(d, WeightSystem::standard());
    const auto rows = monomials_of_degree(d + 1);
    QMatrix mat(rows.size(), QVector(basis.size(), 0));
    for (std::size_t col = 0; col < basis.size(); ++col)
        for (const auto& [m, c] : contract(form, basis.fields[col].terms)) mat[grlex_rank(m)][col] = c;
    return basis.size() - rank(std::move(mat));
}

std::string render(std::span<const MonomialField> terms) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& f : terms) {
        const Scalar& c = f.coefficient;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const Scalar a = abs(c);
        const bool constant = f.monomial.degree() == 0;
        if (a != 1 || constant) os << to_string(a) << (constant ? "" : "*");
        if (!constant) os << to_string(f.monomial);
        os << " ∂" << (f.direction + 1);
    }
    return os.str();
}

}  // namespace foliadeg
