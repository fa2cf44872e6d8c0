#include "foliadeg/linalg.hpp"

#include <stdexcept>

namespace foliadeg {

Echelon rref(QMatrix m) {
    Echelon out;
    if (m.empty()) return out;
    const std::size_t ncols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const Scalar inv = 1 / m[r][c];
        for (std::size_t j = c; j < ncols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Scalar f = m[i][c];
            for (std::size_t j = c; j < ncols; ++j)
                if (m[r][j] != 0) m[i][j] -= f * m[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

std::size_t rank(QMatrix m) { return rref(std::move(m)).pivots.size(); }

QMatrix nullspace(const QMatrix& m, std::size_t ncols) {
    const Echelon e = rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    QMatrix basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        QVector v(ncols, 0);
        v[f] = 1;
        for (std::size_t k = 0; k < e.rows.size(); ++k) v[e.pivots[k]] = -e.rows[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> row_dependency(const QMatrix& rows) {
    const std::size_t n = rows.size();
    if (n == 0) return std::nullopt;
    const std::size_t ncols = rows.front().size();
    // reduced rows with their combination coefficients in terms of the input rows
    std::vector<QVector> basis, combos;
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < n; ++i) {
        QVector v = rows[i];
        QVector c(n, 0);
        c[i] = 1;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const Scalar f = v[pivots[k]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < ncols; ++j)
                if (basis[k][j] != 0) v[j] -= f * basis[k][j];
            for (std::size_t j = 0; j < n; ++j)
                if (combos[k][j] != 0) c[j] -= f * combos[k][j];
        }
        std::size_t p = 0;
        while (p < ncols && v[p] == 0) ++p;
        if (p == ncols) return c;
        const Scalar inv = 1 / v[p];
        for (auto& x : v) x *= inv;
        for (auto& x : c) x *= inv;
        // keep earlier basis rows reduced at the new pivot
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const Scalar f = basis[k][p];
            if (f == 0) continue;
            for (std::size_t j = 0; j < ncols; ++j) basis[k][j] -= f * v[j];
            for (std::size_t j = 0; j < n; ++j) combos[k][j] -= f * c[j];
        }
        basis.push_back(std::move(v));
        combos.push_back(std::move(c));
        pivots.push_back(p);
    }
    return std::nullopt;
}

QMatrix at_zero(const TMatrix& m) {
    QMatrix out;
    out.reserve(m.size());
    for (const auto& row : m) {
        QVector r;
        r.reserve(row.size());
        for (const auto& x : row) r.push_back(x.at_zero());
        out.push_back(std::move(r));
    }
    return out;
}

void divide_by_content(TVector& v) {
    TPoly g;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        g = gcd(g, x);
        if (g.is_unit()) break;
    }
    if (g.is_zero()) return;
    if (g.is_unit()) {
        // monic constant gcd is 1; nothing to remove
        return;
    }
    const int k = g.valuation();
    if (g.degree() == k) {
        for (auto& x : v) x = x.shifted_down(k);
    } else {
        for (auto& x : v)
            if (!x.is_zero()) x = exact_div(x, g);
    }
}

namespace {

bool row_is_zero(const TVector& r) {
    for (const auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

// target <- p*target - a*source, or target - (a/p)*source when p is a constant
void eliminate(TVector& target, const TVector& source, const TPoly& p, std::size_t col) {
    const TPoly a = target[col];
    if (a.is_zero()) return;
    if (p.is_unit()) {
        const TPoly f = a * Scalar(1 / p.at_zero());
        for (std::size_t j = 0; j < target.size(); ++j)
            if (!source[j].is_zero()) target[j] -= f * source[j];
    } else {
        for (std::size_t j = 0; j < target.size(); ++j) {
            TPoly v = p * target[j];
            if (!source[j].is_zero()) v -= a * source[j];
            target[j] = std::move(v);
        }
    }
    divide_by_content(target);
}

}  // namespace

TEchelon t_echelon(TMatrix m, std::size_t ncols, TEliminationOptions opts) {
    for (auto& r : m) divide_by_content(r);
    TEchelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t best = m.size();
        for (std::size_t i = r; i < m.size(); ++i) {
            if (m[i][c].is_zero()) continue;
            if (m[i][c].is_unit()) {
                best = i;
                break;
            }
            if (best == m.size() || m[i][c].degree() < m[best][c].degree()) best = i;
        }
        if (best == m.size()) continue;
        std::swap(m[best], m[r]);
        const TPoly p = m[r][c];
        for (std::size_t i = opts.reduce_above ? 0 : r + 1; i < m.size(); ++i) {
            if (i == r) continue;
            eliminate(m[i], m[r], p, c);
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    for (const auto& row : m)
        if (row_is_zero(row)) throw std::logic_error("t_echelon: zero pivot row");
    out.rows = std::move(m);
    return out;
}

TMatrix t_kernel_basis(const TMatrix& m, std::size_t ncols) {
    const TEchelon e = t_echelon(m, ncols, {.reduce_above = true});
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    TMatrix basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        // p_k x_{c_k} + a_{k,f} x_f = 0 for every pivot row k; take x_f = lcm of the relevant p_k
        TPoly lcm = Scalar(1);
        for (std::size_t k = 0; k < e.rows.size(); ++k) {
            if (e.rows[k][f].is_zero()) continue;
            const TPoly& p = e.rows[k][e.pivots[k]];
            lcm = exact_div(lcm * p, gcd(lcm, p));
        }
        TVector v(ncols);
        v[f] = lcm;
        for (std::size_t k = 0; k < e.rows.size(); ++k) {
            if (e.rows[k][f].is_zero()) continue;
            v[e.pivots[k]] = -exact_div(lcm * e.rows[k][f], e.rows[k][e.pivots[k]]);
        }
        divide_by_content(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t saturate_at_zero(TMatrix& vectors) {
    for (auto& v : vectors) divide_by_content(v);
    std::size_t steps = 0;
    // each step lowers the t-adic valuation of the maximal minors; this bound is never reached
    // for a Q(t)-independent family of the sizes used here
    constexpr std::size_t kMaxSteps = 1u << 20;
    while (true) {
        const auto dep = row_dependency(at_zero(vectors));
        if (!dep) return steps;
        if (++steps > kMaxSteps) throw std::logic_error("saturate_at_zero: no progress; family is dependent over Q(t)");
        std::size_t target = vectors.size();
        for (std::size_t i = vectors.size(); i-- > 0;)
            if ((*dep)[i] != 0) {
                target = i;
                break;
            }
        const std::size_t len = vectors[target].size();
        TVector w(len);
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            const Scalar& c = (*dep)[i];
            if (c == 0) continue;
            for (std::size_t j = 0; j < len; ++j)
                if (!vectors[i][j].is_zero()) w[j] += vectors[i][j] * c;
        }
        if (row_is_zero(w)) throw std::logic_error("saturate_at_zero: family is dependent over Q(t)");
        divide_by_content(w);
        vectors[target] = std::move(w);
    }
}

}  // namespace foliadeg
