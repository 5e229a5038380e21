#ifndef KREG_REGULARITY_HPP
#define KREG_REGULARITY_HPP

#include "kreg/errors.hpp"
#include "kreg/free_lie.hpp"
#include "kreg/lie_algebra.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kreg {

/// Subalgebra g(z) generated by the k- and p-parts of z, built through the
/// filtration g_1 = span{x, y}, g_{m+1} = g_m + [x, g_m] + [y, g_m].
struct SubalgebraReport {
    std::vector<Vec> basis;               // filtration vectors, in order of appearance
    std::vector<std::size_t> basisDegree;  // filtration degree at which each vector entered
    std::size_t dim = 0;
    std::size_t stabilizationDegree = 0;   // least m >= 1 with g_m = g_{m+1}
    std::vector<std::size_t> perDegreeDims;  // dim g_m for m = 1..stabilizationDegree
};

/// Throws SoundnessError if stabilization happens later than degree dim g - 1.
SubalgebraReport generatedSubalgebra(const LieAlgebra& alg, const CartanDecomposition& cd, const Vec& z);

/// Basis of the centralizer of g(z) in k.
std::vector<Vec> centralizerInK(const LieAlgebra& alg, const CartanDecomposition& cd, const SubalgebraReport& report);

enum class GramMode { Full, Reduced, Auto };
enum class Verdict { Unset, KRegular, NilK, Neither };

std::string modeName(GramMode mode);
std::string verdictName(Verdict verdict);

inline constexpr std::uint64_t kDefaultGramLimit = 1500;

struct GramOptions {
    std::size_t degreeCap = 0;  // 0 means dim g
    GramMode mode = GramMode::Full;
    std::uint64_t sizeLimit = kDefaultGramLimit;
    unsigned jobs = 1;
};

/// Gram matrix of Killing pairings of evaluated free-Lie words (full mode) or
/// of the filtration vectors of g(z) (reduced mode), plus what was concluded
/// from it.
struct GramCertificate {
    std::size_t degreeCap = 0;
    GramMode mode = GramMode::Full;  // always Full or Reduced once built
    MatrixQ gram;
    std::vector<std::string> labels;  // word letters, or "g<degree>" for filtration vectors
    std::vector<Vec> vectors;         // the evaluated vectors behind each row
    std::size_t rank = 0;
    std::size_t dimG = 0;
    std::optional<std::size_t> subalgebraDim;

    Verdict verdict = Verdict::Unset;
    std::vector<std::size_t> minorIndices;  // KRegular: rows/cols of a nonsingular dim g x dim g minor
    std::optional<std::size_t> adXExponent;  // NilK: nilpotency index of ad x
    std::optional<std::size_t> adYExponent;

    /// "sha256:<hex>" of the row-major entries rendered as exact strings, comma separated.
    std::string gramHash() const;
    nlohmann::json toJson(bool includeGram = false) const;
};

/// Throws SizeLimitError when full mode would need more than sizeLimit rows.
GramCertificate gramMatrix(const LieAlgebra& alg, const CartanDecomposition& cd, const Vec& z,
                           const GramOptions& options = {});

/// Verdict KRegular iff rank(gram) = dim g. The rank is cross-checked against
/// dim g(z); disagreement raises SoundnessError.
GramCertificate isKRegular(const LieAlgebra& alg, const CartanDecomposition& cd, const Vec& z,
                           const GramOptions& options = {});

/// Verdict NilK iff the Gram matrix vanishes and ad x, ad y are nilpotent.
GramCertificate nilconeTest(const LieAlgebra& alg, const CartanDecomposition& cd, const Vec& z,
                            const GramOptions& options = {});

/// Dimensions of the derived series D^0 = span(basis), D^{k+1} = [D^k, D^k],
/// stopping when it stabilises. Throws std::invalid_argument if the span is
/// not closed under the bracket.
std::vector<std::size_t> derivedSeries(const LieAlgebra& alg, const std::vector<Vec>& basis);

struct InvariantValue {
    Scalar value;
    std::size_t degree = 0;  // polynomial degree deg T + deg T'
};

/// f_{T,T'}(z) = (xi_z(T), xi_z(T')). Requires deg T + deg T' <= 2 dim g.
InvariantValue invariantValue(const LieAlgebra& alg, const CartanDecomposition& cd, const LyndonWord& t,
                              const LyndonWord& tPrime, const Vec& z);

/// t-coefficient of f_{T,T'} along x -> x + t[u, x], y -> y + t[u, y].
/// u must lie in k.
Scalar lieDerivativeResidual(const LieAlgebra& alg, const CartanDecomposition& cd, const LyndonWord& t,
                             const LyndonWord& tPrime, const Vec& z, const Vec& u);

/// tr((ad z)^m), 1 <= m <= 2 dim g.
Scalar powerTrace(const LieAlgebra& alg, const Vec& z, std::size_t m);

struct DegreeBounds {
    std::size_t n = 0;
    std::size_t twoN = 0;
    std::size_t dimP = 0;
    mpz_class r;  // C(2n, 2) * dim p
};

DegreeBounds degreeBounds(const LieAlgebra& alg, const CartanDecomposition& cd);

struct Separator {
    enum class Kind { WordPair, PowerTrace } kind = Kind::WordPair;
    std::optional<LyndonWord> t;
    std::optional<LyndonWord> tPrime;
    std::size_t power = 0;
    std::size_t degree = 0;
    Scalar valueZ;
    Scalar valueZPrime;

    nlohmann::json toJson() const;
};

/// Searches word pairs with both degrees <= degreeCap and power traces up to
/// degree 2 * degreeCap (never beyond 2 dim g), in increasing polynomial
/// degree. nullopt means no separator at this cap, which is inconclusive.
std::optional<Separator> separationProbe(const LieAlgebra& alg, const CartanDecomposition& cd, const Vec& z,
                                         const Vec& zPrime, std::size_t degreeCap);

}  // namespace kreg

#endif
