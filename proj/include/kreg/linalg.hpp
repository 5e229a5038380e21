#ifndef KREG_LINALG_HPP
#define KREG_LINALG_HPP

#include "kreg/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace kreg {

/*
 * Exact linear algebra over Q(i).
 *
 * Rank, nullspace and column-span queries go through a fraction-free
 * (Bareiss) row-echelon reduction over the Gaussian integers: each row is
 * first scaled by the lcm of its denominators, then eliminated with exact
 * divisions by the previous pivot. Pivot rows are chosen to minimise the
 * total bit length of the pivot entry.
 */

std::size_t rankOf(const MatrixQ& m);

/// Basis of the right nullspace. One vector per free column f, with a 1 in
/// slot f and 0 in every other free slot.
std::vector<Vec> nullspaceOf(const MatrixQ& m);

/// Indices of a maximal linearly independent set of columns (greedy, left to right).
std::vector<std::size_t> pivotColumns(const MatrixQ& m);

/// True iff v lies in the column span of `basis`.
bool spanContains(const MatrixQ& basis, const Vec& v);

/// Coordinates c with basis * c = v, if any (free coordinates set to zero).
std::optional<Vec> solveIn(const MatrixQ& basis, const Vec& v);

/// m^dim == 0, by repeated squaring.
bool isNilpotentMatrix(const MatrixQ& m, std::size_t dim);

/// Least k >= 1 with m^k == 0, or nullopt if m is not nilpotent.
std::optional<std::size_t> nilpotencyIndex(const MatrixQ& m);

/// Incrementally maintained subspace of Q(i)^n in reduced row-echelon form.
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t ambientDim) : dim_(ambientDim) {}

    std::size_t ambientDim() const { return dim_; }
    std::size_t dim() const { return rows_.size(); }

    /// Adds v if it is not already in the span. Returns true when the span grew.
    bool add(const Vec& v);
    bool contains(const Vec& v) const;
    /// Reduced basis (rows of the RREF).
    const std::vector<Vec>& basis() const { return rows_; }

private:
    Vec reduce(Vec v) const;

    std::size_t dim_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace kreg

#endif
