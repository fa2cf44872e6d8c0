#pragma once

#include "foliadeg/scalar.hpp"
#include "foliadeg/tpoly.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace foliadeg {

using QVector = std::vector<Scalar>;
using QMatrix = std::vector<QVector>;  // row-major, every row of equal length
using TVector = std::vector<TPoly>;
using TMatrix = std::vector<TVector>;

struct Echelon {
    QMatrix rows;                     // nonzero rows of the reduced row-echelon form
    std::vector<std::size_t> pivots;  // pivot column of each row, increasing
};

/// Reduced row-echelon form with pivot entries equal to 1.
Echelon rref(QMatrix m);
std::size_t rank(QMatrix m);
/// Kernel basis read off the RREF: one vector per free column, that coordinate set to 1.
QMatrix nullspace(const QMatrix& m, std::size_t ncols);
/// Coefficients c, not all zero, with sum c_i rows_i = 0; nullopt when the rows are independent.
std::optional<QVector> row_dependency(const QMatrix& rows);

QMatrix at_zero(const TMatrix& m);
/// Divides a vector by the monic gcd of its entries (which carries its full power of t).
void divide_by_content(TVector& v);

struct TEliminationOptions {
    /// Also clear entries above each pivot (Gauss-Jordan); otherwise forward elimination only.
    bool reduce_above = false;
};

struct TEchelon {
    TMatrix rows;                     // nonzero rows, content-free
    std::vector<std::size_t> pivots;  // pivot column per row
};

/// Fraction-free elimination over Q[t]. Within a column the pivot is the first row whose entry is a
/// nonzero constant; failing that, the entry of least t-degree (ties to the lowest row). Rows are
/// divided by their content after every pass.
TEchelon t_echelon(TMatrix m, std::size_t ncols, TEliminationOptions opts = {});

/// Q[t]-vectors spanning the kernel over Q(t), one per free column, each content-free.
TMatrix t_kernel_basis(const TMatrix& m, std::size_t ncols);

/// Replaces a Q(t)-independent family by a basis of its saturation at t = 0: repeatedly finds a
/// relation among the values at t = 0, replaces one member by the relation divided by its power of t,
/// until the values at t = 0 are independent. Returns the number of replacement steps.
std::size_t saturate_at_zero(TMatrix& vectors);

}  // namespace foliadeg
