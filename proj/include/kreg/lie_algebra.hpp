#ifndef KREG_LIE_ALGEBRA_HPP
#define KREG_LIE_ALGEBRA_HPP

#include "kreg/linalg.hpp"
#include "kreg/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace kreg {

/// One nonzero coordinate of a bracket [b_i, b_j].
struct StructureTerm {
    std::size_t index;
    Scalar coeff;
};

/// Which catalog constructor produced an algebra, if any.
struct CatalogTag {
    std::string family;
    std::size_t size = 0;
};

/// Finite-dimensional Lie algebra over Q(i) given by structure constants in
/// a fixed basis b_1..b_n.
///
/// Construction does not check any axiom; run validate() for that. The
/// Killing matrix B_ij = tr(ad b_i ad b_j) is computed once here unless an
/// explicit override is supplied (used by fault-injection fixtures).
class LieAlgebra {
public:
    /// table[i * dim + j] lists the nonzero coordinates of [b_i, b_j].
    LieAlgebra(std::string name, std::vector<std::string> labels,
               std::vector<std::vector<StructureTerm>> table,
               std::optional<MatrixQ> killingOverride = std::nullopt);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<StructureTerm>& structure(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    const MatrixQ& killingMatrix() const { return killing_; }

    const std::optional<CatalogTag>& catalogTag() const { return tag_; }
    void setCatalogTag(CatalogTag tag) { tag_ = std::move(tag); }

    Vec basisVector(std::size_t i) const { return unitVec(dim_, i); }

    Vec bracket(const Vec& u, const Vec& v) const;
    /// Column j is [u, b_j].
    MatrixQ adMatrix(const Vec& u) const;
    /// (u, v) through the cached Killing matrix.
    Scalar killingPair(const Vec& u, const Vec& v) const;

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::size_t dim_;
    std::vector<std::vector<StructureTerm>> table_;
    MatrixQ killing_;
    std::optional<CatalogTag> tag_;
};

/// z = x + y with x in k, y in p.
struct ElementZ {
    Vec z;
    Vec x;
    Vec y;
};

/// Complexified Cartan decomposition g = k + p induced by an involution theta.
class CartanDecomposition {
public:
    /// theta acts on coordinate vectors: column j is theta(b_j).
    explicit CartanDecomposition(MatrixQ theta);

    const MatrixQ& theta() const { return theta_; }
    const std::vector<Vec>& kBasis() const { return kBasis_; }
    const std::vector<Vec>& pBasis() const { return pBasis_; }
    const MatrixQ& projK() const { return projK_; }
    const MatrixQ& projP() const { return projP_; }

    ElementZ decompose(const Vec& z) const;
    bool inK(const Vec& v) const { return isZeroVec(projP_.apply(v)); }
    bool inP(const Vec& v) const { return isZeroVec(projK_.apply(v)); }

private:
    MatrixQ theta_;
    std::vector<Vec> kBasis_;
    std::vector<Vec> pBasis_;
    MatrixQ projK_;
    MatrixQ projP_;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;  // first violation, empty on success
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool ok() const;
    /// Null when every check passed.
    const CheckResult* firstFailure() const;
    void add(std::string name, bool passed, std::string detail = {});
};

/// Checks antisymmetry, Jacobi, Killing nondegeneracy, the involution and
/// automorphism properties of theta, the bracket grading, Killing
/// orthogonality of k and p, and properness k = [p, p]. Basis positions in
/// failure details are 1-based, e.g. "jacobi(1,2,3)".
ValidationReport validate(const LieAlgebra& alg, const CartanDecomposition& cd);

}  // namespace kreg

#endif
