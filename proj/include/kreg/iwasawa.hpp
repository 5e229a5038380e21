#ifndef KREG_IWASAWA_HPP
#define KREG_IWASAWA_HPP

#include "kreg/catalog.hpp"
#include "kreg/regularity.hpp"

#include <json.hpp>

#include <cstddef>
#include <filesystem>
#include <optional>
#include <vector>

namespace kreg {

struct RestrictedRoot {
    Vec values;               // nu(a_k) for each vector a_k of the Cartan subspace basis
    std::vector<Vec> space;   // basis of the root space g_nu
};

/// Restricted-root data for a Cartan subspace a of p. Vectors are in the
/// algebra's basis; a root is stored by its values on aBasis.
struct RestrictedRootDatum {
    std::vector<Vec> aBasis;
    std::vector<Vec> hmBasis;  // Cartan subalgebra of m = centralizer of a in k
    std::vector<RestrictedRoot> roots;
    std::vector<std::size_t> positive;  // indices into roots

    /// Positive roots with one-dimensional root spaces.
    std::vector<std::size_t> multOne() const;
    /// Positive roots with root spaces of dimension >= 2.
    std::vector<std::size_t> multHigh() const;
    /// Index of the root -nu, if present.
    std::optional<std::size_t> negativeOf(std::size_t root) const;
};

/// Closed-form datum for split sl(n): a = diagonal, roots e_i - e_j with
/// root space C E_ij, positive iff i < j, m = 0. Throws std::invalid_argument
/// for algebras not built by catalogBuild.
RestrictedRootDatum catalogDatum(const LieAlgebra& alg, const CartanDecomposition& cd);

/// Checks: a in p and abelian, eigenvector equations, theta(g_nu) = g_{-nu},
/// a consistent positive system, h_m in k commuting with a, dimension
/// completeness, and multiplicity-one h_m-weights on higher root spaces.
ValidationReport validateDatum(const LieAlgebra& alg, const CartanDecomposition& cd, const RestrictedRootDatum& datum);

/// nu(y) for y = sum_k coords[k] a_k.
Scalar rootValue(const RestrictedRoot& root, const Vec& coords);
/// Product of (nu - nu')(y) over ordered pairs of distinct roots.
Scalar zetaValue(const RestrictedRootDatum& datum, const Vec& coords);

struct ChosenY {
    Vec coords;   // in aBasis
    Vec element;  // in the algebra basis
};

/// First integer point of the expanding boxes [-B, B]^{dim a} (coordinates
/// ordered 0, 1, -1, 2, -2, ..., first coordinate most significant) at which
/// all root values are pairwise distinct and nonzero.
ChosenY chooseY(const RestrictedRootDatum& datum);

/// 0 when every positive root space is a line; otherwise the first point of
/// the same box search over h_m making each higher root space a cyclic
/// ad x0-module.
Vec chooseX0(const LieAlgebra& alg, const RestrictedRootDatum& datum);

/// Killing dual h_nu in a: (h, h_nu) = nu(h) for every h in a.
Vec killingDual(const LieAlgebra& alg, const RestrictedRootDatum& datum, std::size_t root);

struct RegularConstruction {
    ElementZ element;
    Vec yCoords;
    Vec x0;
    std::vector<Vec> rootVectors;  // x_nu, aligned with datum.positive
    GramCertificate certificate;
};

/// z = x + y with y = chooseY, x = x0 + sum over positive nu of (x_nu + theta x_nu).
/// Throws SoundnessError if the result is not certified K-regular.
RegularConstruction constructRegular(const LieAlgebra& alg, const CartanDecomposition& cd,
                                     const RestrictedRootDatum& datum, const GramOptions& options = GramOptions{0, GramMode::Auto});

/// {"a_basis", "hm_basis", "roots": [{"values_on_a_basis", "space"}], "positive"}
nlohmann::json datumToJson(const RestrictedRootDatum& datum);
/// Throws ParseError on schema violations (not validated algebraically).
RestrictedRootDatum datumFromJson(const nlohmann::json& j, std::size_t dim);
RestrictedRootDatum loadDatum(const std::filesystem::path& file, std::size_t dim);

}  // namespace kreg

#endif
