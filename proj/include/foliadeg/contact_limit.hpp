#pragma once

#include "foliadeg/pairs.hpp"
#include "foliadeg/sections.hpp"
#include "foliadeg/symmetric.hpp"
#include "foliadeg/tpoly.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace foliadeg {

/// Torus-fixed point of P(wedge^2 S_1): the rank-2 form with alpha = 1 at one coordinate pair.
struct FixedPointP5 {
    IndexPair pair;
};

/// The six fixed points, {1,2},{1,3},{1,4},{2,3},{2,4},{3,4}.
std::vector<FixedPointP5> fixed_points_p5();

/// Column-major sparse matrix over Q[t].
struct SparseTMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::pair<std::size_t, TPoly>>> columns;  // (row, entry), rows increasing
};

/// Matrix of phi -> contract(omega_t, phi) from the basis to S_{d+1}, rows in grlex order.
/// Throws std::invalid_argument if the basis was built for another degree.
SparseTMatrix build_contraction_matrix(const FixedPointP5& fp, int d, const SectionBasis& basis, int t_sign = 1);

enum class FiberMethod { ImageFiber, KernelLimit };

std::string to_string(FiberMethod m);

/// Saturation failed to produce the expected rank: an internal inconsistency, never a user error.
class RankDeficiency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct LimitFiberResult {
    IndexPair pair;
    int degree = 0;
    WeightMultiset quotient_weights;  // fiber of M_d, sorted
    WeightMultiset kernel_weights;    // fiber of L_d, sorted
    FiberMethod method = FiberMethod::ImageFiber;
    std::size_t blocks = 0;
    std::size_t largest_block = 0;    // columns in the largest block
    std::size_t saturation_steps = 0;
};

struct LimitOptions {
    unsigned jobs = 1;
    int t_sign = 1;
};

/// Weights of the limits at t -> 0 of the kernel and cokernel of the contraction by omega_t,
/// computed block by block on the connected components of the contraction matrix.
LimitFiberResult limit_fiber_weights(const FixedPointP5& fp, const SectionBasis& basis, FiberMethod method,
                                     LimitOptions opts = {});
LimitFiberResult limit_fiber_weights(const FixedPointP5& fp, int d, const WeightSystem& w, FiberMethod method,
                                     LimitOptions opts = {});

/// {"pair":[i,j],"d":d,"weights":[...],"kernel_weights":[...],"method":"image-fiber"}
std::string to_json(const LimitFiberResult& r);

}  // namespace foliadeg
