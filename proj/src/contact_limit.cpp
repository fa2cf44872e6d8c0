#include "foliadeg/contact_limit.hpp"

#include "foliadeg/linalg.hpp"
#include "foliadeg/parallel.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace foliadeg {

std::vector<FixedPointP5> fixed_points_p5() {
    std::vector<FixedPointP5> out;
    for (const auto& p : kCanonicalPairs) out.push_back({p});
    return out;
}

std::string to_string(FiberMethod m) { return m == FiberMethod::ImageFiber ? "image-fiber" : "kernel-limit"; }

SparseTMatrix build_contraction_matrix(const FixedPointP5& fp, int d, const SectionBasis& basis, int t_sign) {
    if (basis.degree != d)
        throw std::invalid_argument("build_contraction_matrix: basis has degree " + std::to_string(basis.degree) +
                                    ", expected " + std::to_string(d));
    const PerturbedForm form = PerturbedForm::around(fp.pair, t_sign);
    SparseTMatrix m;
    m.rows = static_cast<std::size_t>((d + 2) * (d + 3) * (d + 4) / 6);
    m.cols = basis.size();
    m.columns.resize(m.cols);
    for (std::size_t c = 0; c < m.cols; ++c)
        for (auto& [mon, entry] : contract(form, basis.fields[c].terms))
            m.columns[c].emplace_back(grlex_rank(mon), std::move(entry));
    for (auto& col : m.columns)
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return m;
}

namespace {

struct Block {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
};

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

// Connected components of the bipartite row/column incidence graph, ordered by first column.
std::vector<Block> connected_blocks(const SparseTMatrix& m) {
    DisjointSets sets(m.rows + m.cols);
    for (std::size_t c = 0; c < m.cols; ++c)
        for (const auto& [r, _] : m.columns[c]) sets.unite(m.rows + c, r);
    std::map<std::size_t, Block> by_root;
    for (std::size_t c = 0; c < m.cols; ++c) by_root[sets.find(m.rows + c)].cols.push_back(c);
    for (std::size_t r = 0; r < m.rows; ++r) {
        auto it = by_root.find(sets.find(r));
        if (it != by_root.end()) it->second.rows.push_back(r);
    }
    std::vector<Block> out;
    out.reserve(by_root.size());
    for (auto& [_, b] : by_root) out.push_back(std::move(b));
    std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) { return a.cols.front() < b.cols.front(); });
    return out;
}

TMatrix dense_block(const SparseTMatrix& m, const Block& b) {
    std::map<std::size_t, std::size_t> local_row;
    for (std::size_t i = 0; i < b.rows.size(); ++i) local_row[b.rows[i]] = i;
    TMatrix out(b.rows.size(), TVector(b.cols.size()));
    for (std::size_t j = 0; j < b.cols.size(); ++j)
        for (const auto& [r, e] : m.columns[b.cols[j]]) out[local_row.at(r)][j] = e;
    return out;
}

// Multiset of weights of a subspace assumed graded: for each weight g, the rank of the projection
// onto the coordinates of weight g. Throws if the ranks do not add up (subspace not graded).
WeightMultiset graded_weights(const QMatrix& spanning, const std::vector<long>& col_weights) {
    std::map<long, std::vector<std::size_t>> coords;
    for (std::size_t j = 0; j < col_weights.size(); ++j) coords[col_weights[j]].push_back(j);
    WeightMultiset out;
    for (const auto& [g, idx] : coords) {
        QMatrix proj;
        proj.reserve(spanning.size());
        for (const auto& v : spanning) {
            QVector p;
            p.reserve(idx.size());
            for (auto j : idx) p.push_back(v[j]);
            proj.push_back(std::move(p));
        }
        const std::size_t r = rank(std::move(proj));
        out.insert(out.end(), r, g);
    }
    if (out.size() != spanning.size())
        throw RankDeficiency("limit subspace is not torus-graded (" + std::to_string(out.size()) + " vs " +
                             std::to_string(spanning.size()) + ")");
    return out;
}

WeightMultiset multiset_difference(WeightMultiset all, WeightMultiset part) {
    std::sort(all.begin(), all.end());
    std::sort(part.begin(), part.end());
    WeightMultiset out;
    std::set_difference(all.begin(), all.end(), part.begin(), part.end(), std::back_inserter(out));
    if (out.size() + part.size() != all.size()) throw RankDeficiency("weight multiset is not a sub-multiset");
    return out;
}

struct BlockOutcome {
    WeightMultiset quotient;
    WeightMultiset kernel;
    std::size_t steps = 0;
};

// Image route: eliminate over Q[t], strip row contents, saturate, set t = 0 and read the
// pivot columns of the limit row space.
BlockOutcome image_fiber_block(const TMatrix& a, const std::vector<long>& col_weights) {
    BlockOutcome out;
    const std::size_t ncols = col_weights.size();
    TMatrix rows = t_echelon(a, ncols).rows;
    const std::size_t generic_rank = rows.size();
    out.steps = saturate_at_zero(rows);
    const QMatrix limit = at_zero(rows);
    const Echelon e = rref(limit);
    if (e.pivots.size() != generic_rank)
        throw RankDeficiency("image-fiber: rank " + std::to_string(e.pivots.size()) + " at t=0, expected " +
                             std::to_string(generic_rank));
    // gradedness check of the limit row space
    (void)graded_weights(limit, col_weights);
    for (auto p : e.pivots) out.quotient.push_back(col_weights[p]);
    out.kernel = multiset_difference(col_weights, out.quotient);
    return out;
}

// Independent route: saturate a kernel basis over Q(t) and read the weights of its limit.
BlockOutcome kernel_limit_block(const TMatrix& a, const std::vector<long>& col_weights) {
    BlockOutcome out;
    const std::size_t ncols = col_weights.size();
    TMatrix kernel = t_kernel_basis(a, ncols);
    out.steps = saturate_at_zero(kernel);
    const QMatrix limit = at_zero(kernel);
    if (rank(limit) != kernel.size())
        throw RankDeficiency("kernel-limit: limit vectors dependent at t=0");
    out.kernel = graded_weights(limit, col_weights);
    out.quotient = multiset_difference(col_weights, out.kernel);
    return out;
}

}  // namespace

LimitFiberResult limit_fiber_weights(const FixedPointP5& fp, const SectionBasis& basis, FiberMethod method,
                                     LimitOptions opts) {
    basis.weights.require_admissible();
    const int d = basis.degree;
    const SparseTMatrix m = build_contraction_matrix(fp, d, basis, opts.t_sign);
    const std::vector<Block> blocks = connected_blocks(m);

    std::vector<BlockOutcome> outcomes(blocks.size());
    parallel_for(blocks.size(), opts.jobs, [&](std::size_t k) {
        const Block& b = blocks[k];
        std::vector<long> weights;
        weights.reserve(b.cols.size());
        for (auto c : b.cols) weights.push_back(basis.fields[c].weight);
        const TMatrix a = dense_block(m, b);
        outcomes[k] = method == FiberMethod::ImageFiber ? image_fiber_block(a, weights) : kernel_limit_block(a, weights);
    });

    LimitFiberResult r;
    r.pair = fp.pair;
    r.degree = d;
    r.method = method;
    r.blocks = blocks.size();
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        r.largest_block = std::max(r.largest_block, blocks[k].cols.size());
        r.saturation_steps += outcomes[k].steps;
        r.quotient_weights.insert(r.quotient_weights.end(), outcomes[k].quotient.begin(), outcomes[k].quotient.end());
        r.kernel_weights.insert(r.kernel_weights.end(), outcomes[k].kernel.begin(), outcomes[k].kernel.end());
    }
    std::sort(r.quotient_weights.begin(), r.quotient_weights.end());
    std::sort(r.kernel_weights.begin(), r.kernel_weights.end());

    const auto expected_quotient = static_cast<std::size_t>((d + 4) * (d + 3) * (d + 2) / 6);
    const auto expected_kernel = static_cast<std::size_t>((d + 4) * (d + 2) * d / 3);
    if (r.quotient_weights.size() != expected_quotient || r.kernel_weights.size() != expected_kernel)
        throw RankDeficiency("limit fiber at " + to_string(fp.pair) + ", d=" + std::to_string(d) + ": quotient rank " +
                             std::to_string(r.quotient_weights.size()) + " (expected " +
                             std::to_string(expected_quotient) + "), kernel rank " +
                             std::to_string(r.kernel_weights.size()) + " (expected " +
                             std::to_string(expected_kernel) + ")");
    return r;
}

LimitFiberResult limit_fiber_weights(const FixedPointP5& fp, int d, const WeightSystem& w, FiberMethod method,
                                     LimitOptions opts) {
    return limit_fiber_weights(fp, build_phi_basis(d, w), method, opts);
}

std::string to_json(const LimitFiberResult& r) {
    nlohmann::ordered_json j;
    j["pair"] = {r.pair.i + 1, r.pair.j + 1};
    j["d"] = r.degree;
    j["weights"] = r.quotient_weights;
    j["kernel_weights"] = r.kernel_weights;
    j["method"] = to_string(r.method);
    return j.dump();
}

}  // namespace foliadeg
