#ifndef KREG_CATALOG_HPP
#define KREG_CATALOG_HPP

#include "kreg/lie_algebra.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace kreg {

/// A Lie algebra together with its Cartan involution.
struct SymmetricPair {
    LieAlgebra algebra;
    CartanDecomposition cartan;
};

/// Coordinates for sl(n, C) in the catalog basis order:
///
///   H_1, ..., H_{n-1}                 H_k = E_kk - E_{k+1,k+1}
///   E_ij for i < j, lexicographic     (upper triangle)
///   E_ji for i < j, same order        (lower triangle)
///
/// so sl(2) is (h, e, f). Indices passed to h() and e() are 0-based.
class SplitSlLayout {
public:
    explicit SplitSlLayout(std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t dim() const { return n_ * n_ - 1; }
    std::size_t h(std::size_t k) const;
    std::size_t e(std::size_t i, std::size_t j) const;
    std::vector<std::string> labels() const;

    /// n x n traceless matrix -> coordinate vector. Throws if not traceless.
    Vec coordinates(const MatrixQ& x) const;
    /// coordinate vector -> n x n matrix.
    MatrixQ matrix(const Vec& v) const;

private:
    std::size_t n_;
    std::vector<std::size_t> eIndex_;  // n*n, diagonal unused
};

/// family "split-sl", 2 <= size <= 5: sl(size, C) with theta(X) = -X^T.
/// Throws std::invalid_argument for an unknown family or size.
SymmetricPair catalogBuild(const std::string& family, std::size_t size);

/// Short names "sl2".."sl5" or "split-sl:<size>".
SymmetricPair catalogByName(const std::string& name);

/// sl(n) structure constants with an arbitrary theta given on n x n matrices.
/// Used for catalog entries and for building non-split fixtures.
LieAlgebra slAlgebra(std::size_t n, std::string name);

}  // namespace kreg

#endif
