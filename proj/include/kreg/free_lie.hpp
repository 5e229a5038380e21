#ifndef KREG_FREE_LIE_HPP
#define KREG_FREE_LIE_HPP

#include "kreg/lie_algebra.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kreg {

/// Lyndon word over {X < Y}, bracketed by its standard factorization
/// w = uv (v the longest proper Lyndon suffix), giving a Hall basis element
/// of the free Lie algebra on X, Y.
class LyndonWord {
public:
    /// Throws std::invalid_argument unless `letters` is a nonempty Lyndon word over {X, Y}.
    explicit LyndonWord(std::string letters);

    const std::string& letters() const { return letters_; }
    std::size_t degree() const { return letters_.size(); }
    bool isGenerator() const { return letters_.size() == 1; }
    /// Length of the left factor u; 0 for a generator.
    std::size_t split() const { return split_; }
    LyndonWord left() const;
    LyndonWord right() const;

    /// Nested bracket notation, e.g. "[X,[X,Y]]".
    std::string bracketing() const;

    friend bool operator==(const LyndonWord& a, const LyndonWord& b) { return a.letters_ == b.letters_; }

private:
    std::string letters_;
    std::size_t split_ = 0;
};

bool isLyndon(std::string_view w);

/// Words of degree 1..maxDegree; result[d - 1] holds degree d in
/// lexicographic order. Generated with Duval's algorithm.
std::vector<std::vector<LyndonWord>> lyndonBasis(std::size_t maxDegree);
/// All words of degree <= maxDegree, degree-major.
std::vector<LyndonWord> lyndonBasisFlat(std::size_t maxDegree);

/// dim of the degree-j component: (1/j) sum_{d | j} mu(d) 2^{j/d}. j in [1, 62].
std::uint64_t wittDimension(std::size_t j);
/// Sum of wittDimension(j) for j <= cap.
std::uint64_t cumulativeWittDimension(std::size_t cap);

/// Evaluates words under X -> x, Y -> y, memoising every subword.
class WordEvaluator {
public:
    WordEvaluator(const LieAlgebra& alg, Vec x, Vec y);
    const Vec& operator()(const LyndonWord& w);

private:
    const Vec& eval(const std::string& letters, std::size_t split);

    const LieAlgebra& alg_;
    Vec x_;
    Vec y_;
    std::unordered_map<std::string, Vec> memo_;
};

/// Value plus first-order coefficient in t (t^2 = 0).
struct DualVector {
    Vec value;
    Vec deriv;
};

/// Same recursion over dual numbers: X -> x + t dx, Y -> y + t dy.
class DualWordEvaluator {
public:
    DualWordEvaluator(const LieAlgebra& alg, Vec x, Vec y, Vec dx, Vec dy);
    const DualVector& operator()(const LyndonWord& w);

private:
    const DualVector& eval(const std::string& letters, std::size_t split);

    const LieAlgebra& alg_;
    DualVector gx_;
    DualVector gy_;
    std::unordered_map<std::string, DualVector> memo_;
};

Vec evaluateWord(const LieAlgebra& alg, const LyndonWord& w, const Vec& x, const Vec& y);
DualVector evaluateWordDual(const LieAlgebra& alg, const LyndonWord& w, const Vec& x, const Vec& y,
                            const Vec& dx, const Vec& dy);

}  // namespace kreg

#endif
