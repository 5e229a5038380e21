#include "kreg/catalog.hpp"
#include "kreg/free_lie.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace kreg;

namespace {

// Evaluates a bracket string such as "[X,[X,Y]]" in the matrix model. Leaf number `hot`
// (counted left to right) takes its derivative value; hot < 0 evaluates plainly.
struct BracketParser {
    const oracle::SlModel& model;
    const Vec &x, &y, &dx, &dy;
    int hot;
    std::size_t pos = 0;
    int leaf = 0;
    const std::string& s;

    Vec parse() {
        if (s[pos] == '[') {
            ++pos;
            const Vec a = parse();
            ++pos;  // ','
            const Vec b = parse();
            ++pos;  // ']'
            return model.bracket(a, b);
        }
        const char c = s[pos++];
        const bool d = leaf++ == hot;
        if (c == 'X') return d ? dx : x;
        return d ? dy : y;
    }
};

Vec parseEval(const oracle::SlModel& m, const std::string& br, const Vec& x, const Vec& y, const Vec& dx,
              const Vec& dy, int hot) {
    BracketParser p{m, x, y, dx, dy, hot, 0, 0, br};
    return p.parse();
}

Vec scaled(long c, const Vec& v) { return Scalar(c) * v; }

}  // namespace

TEST_CASE("Lyndon basis in low degree") {
    const auto basis = lyndonBasis(3);
    REQUIRE(basis.size() == 3);
    CHECK(basis[0].size() == 2);
    CHECK(basis[0][0].letters() == "X");
    CHECK(basis[0][1].letters() == "Y");
    REQUIRE(basis[1].size() == 1);
    CHECK(basis[1][0].letters() == "XY");
    REQUIRE(basis[2].size() == 2);
    CHECK(basis[2][0].letters() == "XXY");
    CHECK(basis[2][1].letters() == "XYY");
    CHECK(cumulativeWittDimension(3) == 5);
    CHECK(lyndonBasisFlat(3).size() == 5);
}

TEST_CASE("Witt dimensions") {
    CHECK(wittDimension(1) == 2);
    CHECK(wittDimension(4) == 3);
    CHECK(wittDimension(6) == 9);
    CHECK(cumulativeWittDimension(8) == 71);
    CHECK(cumulativeWittDimension(15) == 4720);
    CHECK_THROWS(wittDimension(0));
    // necklace identity: sum over d | j of d * L(d) = 2^j
    for (std::size_t j = 1; j <= 40; ++j) {
        std::uint64_t total = 0;
        for (std::size_t d = 1; d <= j; ++d) {
            if (j % d == 0) total += d * wittDimension(d);
        }
        CHECK(total == (std::uint64_t{1} << j));
    }
}

TEST_CASE("property: Lyndon words match rotation enumeration") {
    const auto basis = lyndonBasis(12);
    for (std::size_t j = 1; j <= 12; ++j) {
        const auto expected = oracle::lyndonByRotation(j);
        std::vector<std::string> got;
        for (const auto& w : basis[j - 1]) got.push_back(w.letters());
        CHECK(got == expected);
        CHECK(got.size() == wittDimension(j));
    }
}

TEST_CASE("standard factorization") {
    CHECK(LyndonWord("XXY").bracketing() == "[X,[X,Y]]");
    CHECK(LyndonWord("XYY").bracketing() == "[[X,Y],Y]");
    CHECK(LyndonWord("XY").bracketing() == "[X,Y]");
    CHECK(LyndonWord("X").bracketing() == "X");
    CHECK(LyndonWord("XXYXY").left().letters() == "XXY");
    CHECK(LyndonWord("XXYXY").right().letters() == "XY");
    CHECK_THROWS_AS(LyndonWord("YX"), std::invalid_argument);
    CHECK_THROWS_AS(LyndonWord("XYXY"), std::invalid_argument);
    CHECK_THROWS_AS(LyndonWord(""), std::invalid_argument);
    CHECK_THROWS_AS(LyndonWord("XZ"), std::invalid_argument);
    CHECK_FALSE(isLyndon("XX"));

    // the right factor is the longest proper suffix that is Lyndon
    for (const auto& w : lyndonBasisFlat(10)) {
        if (w.isGenerator()) continue;
        const std::string& s = w.letters();
        std::size_t longest = 0;
        for (std::size_t k = 1; k < s.size(); ++k) {
            if (isLyndon(s.substr(k))) {
                longest = s.size() - k;
                break;
            }
        }
        CHECK(w.right().letters().size() == longest);
        CHECK(w.left().letters() + w.right().letters() == s);
        CHECK(isLyndon(w.left().letters()));
    }
}

TEST_CASE("word evaluation in sl(2)") {
    const auto sl2 = catalogBuild("split-sl", 2);
    const Vec h = unitVec(3, 0), e = unitVec(3, 1), f = unitVec(3, 2);
    const Vec x = e - f;
    CHECK(evaluateWord(sl2.algebra, LyndonWord("X"), x, h) == x);
    CHECK(evaluateWord(sl2.algebra, LyndonWord("XY"), x, h) == scaled(-2, e) - scaled(2, f));
    for (const auto& w : lyndonBasisFlat(5)) CHECK(isZeroVec(evaluateWord(sl2.algebra, w, zeroVec(3), zeroVec(3))));
}

TEST_CASE("dual evaluation") {
    const auto sl3 = catalogBuild("split-sl", 3);
    const auto& g = sl3.algebra;
    std::mt19937_64 rng(29);
    const Vec x = oracle::randomVec(rng, 8, 3), y = oracle::randomVec(rng, 8, 3);
    const Vec dx = oracle::randomVec(rng, 8, 3), dy = oracle::randomVec(rng, 8, 3);
    CHECK(isZeroVec(evaluateWordDual(g, LyndonWord("XXY"), x, y, zeroVec(8), zeroVec(8)).deriv));
    CHECK(evaluateWordDual(g, LyndonWord("X"), x, y, dx, dy).deriv == dx);
    const DualVector xy = evaluateWordDual(g, LyndonWord("XY"), x, y, dx, dy);
    CHECK(xy.value == g.bracket(x, y));
    CHECK(xy.deriv == g.bracket(dx, y) + g.bracket(x, dy));
}

TEST_CASE("property: evaluation matches bracket parsing in the matrix model") {
    std::mt19937_64 rng(31);
    for (std::size_t n = 2; n <= 3; ++n) {
        const auto pair = catalogBuild("split-sl", n);
        const oracle::SlModel model(n);
        const std::size_t dim = pair.algebra.dim();
        const auto words = lyndonBasisFlat(6);
        for (int s = 0; s < 4; ++s) {
            const Vec x = oracle::randomVec(rng, dim, 2), y = oracle::randomVec(rng, dim, 2);
            const Vec dx = oracle::randomVec(rng, dim, 2), dy = oracle::randomVec(rng, dim, 2);
            WordEvaluator eval(pair.algebra, x, y);
            DualWordEvaluator dual(pair.algebra, x, y, dx, dy);
            for (const auto& w : words) {
                const std::string br = w.bracketing();
                CHECK(eval(w) == parseEval(model, br, x, y, dx, dy, -1));
                // multilinear: the derivative sums over every leaf
                Vec deriv = zeroVec(dim);
                for (int leaf = 0; leaf < static_cast<int>(w.degree()); ++leaf) {
                    deriv = deriv + parseEval(model, br, x, y, dx, dy, leaf);
                }
                const DualVector& d = dual(w);
                CHECK(d.value == eval(w));
                CHECK(d.deriv == deriv);
            }
        }
    }
}

TEST_CASE("property: homogeneity in x and y") {
    const auto sl3 = catalogBuild("split-sl", 3);
    std::mt19937_64 rng(37);
    for (int s = 0; s < 10; ++s) {
        const Vec x = oracle::randomVec(rng, 8, 3), y = oracle::randomVec(rng, 8, 3);
        const Scalar a = oracle::randomGaussian(rng, 3), b = oracle::randomGaussian(rng, 3);
        for (const auto& w : lyndonBasisFlat(5)) {
            Scalar factor = 1;
            for (char c : w.letters()) factor = factor * (c == 'X' ? a : b);
            CHECK(evaluateWord(sl3.algebra, w, a * x, b * y) == factor * evaluateWord(sl3.algebra, w, x, y));
        }
    }
}
