#include "kreg/algebra_io.hpp"
#include "kreg/catalog.hpp"
#include "kreg/errors.hpp"
#include "kreg/iwasawa.hpp"
#include "kreg/linalg.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace kreg;

namespace {

const std::string kData = KREG_TEST_DATA;

bool distinctNonzeroRootValues(const RestrictedRootDatum& d, const Vec& coords) {
    std::set<std::string> seen;
    for (const auto& r : d.roots) {
        const Scalar v = rootValue(r, coords);
        if (v.isZero() || !seen.insert(v.str()).second) return false;
    }
    return true;
}

RestrictedRootDatum withoutRootPair(RestrictedRootDatum d, std::size_t positiveSlot) {
    const std::size_t r = d.positive[positiveSlot];
    const std::size_t neg = *d.negativeOf(r);
    RestrictedRootDatum out;
    out.aBasis = d.aBasis;
    out.hmBasis = d.hmBasis;
    std::vector<std::size_t> remap(d.roots.size(), SIZE_MAX);
    for (std::size_t k = 0; k < d.roots.size(); ++k) {
        if (k == r || k == neg) continue;
        remap[k] = out.roots.size();
        out.roots.push_back(d.roots[k]);
    }
    for (std::size_t p : d.positive) {
        if (remap[p] != SIZE_MAX) out.positive.push_back(remap[p]);
    }
    return out;
}

}  // namespace

TEST_CASE("catalog restricted-root data") {
    const auto sl2 = catalogBuild("split-sl", 2);
    const auto d2 = catalogDatum(sl2.algebra, sl2.cartan);
    REQUIRE(d2.positive.size() == 1);
    const auto& nu = d2.roots[d2.positive[0]];
    CHECK(nu.values == Vec{Scalar(2)});
    REQUIRE(nu.space.size() == 1);
    CHECK(nu.space[0] == unitVec(3, 1));

    for (std::size_t n = 3; n <= 4; ++n) {
        const auto pair = catalogBuild("split-sl", n);
        const auto d = catalogDatum(pair.algebra, pair.cartan);
        CHECK(d.positive.size() == n * (n - 1) / 2);
        CHECK(d.multHigh().empty());
        CHECK(validateDatum(pair.algebra, pair.cartan, d).ok());
        // every root vector is an eigenvector of ad a with the stated value
        for (const auto& r : d.roots) {
            for (std::size_t k = 0; k < d.aBasis.size(); ++k) {
                for (const auto& v : r.space) CHECK(pair.algebra.bracket(d.aBasis[k], v) == r.values[k] * v);
            }
        }
    }
    const auto su21 = loadAlgebra(kData + "/su21.json");
    CHECK_THROWS(catalogDatum(su21.algebra, su21.cartan));
}

TEST_CASE("datum validation catches planted defects") {
    const auto sl3 = catalogBuild("split-sl", 3);
    const auto good = catalogDatum(sl3.algebra, sl3.cartan);

    SUBCASE("not an eigenvector") {
        auto bad = good;
        bad.roots[0].space[0] = unitVec(8, 0);
        const auto report = validateDatum(sl3.algebra, sl3.cartan, bad);
        REQUIRE(report.firstFailure());
        CHECK(report.firstFailure()->name == "eigenvector");
        CHECK(report.firstFailure()->detail == "eigenvector(1,1)");
    }
    SUBCASE("missing root space") {
        const auto report = validateDatum(sl3.algebra, sl3.cartan, withoutRootPair(good, 0));
        REQUIRE(report.firstFailure());
        CHECK(report.firstFailure()->name == "completeness");
    }
    SUBCASE("file with a missing root space") {
        const auto d = loadDatum(kData + "/sl3_datum_short.json", 8);
        CHECK(validateDatum(sl3.algebra, sl3.cartan, d).firstFailure()->name == "completeness");
    }
    SUBCASE("h_m empty although a root space has dimension two") {
        const auto su21 = loadAlgebra(kData + "/su21.json");
        auto d = loadDatum(kData + "/su21_datum.json", 8);
        CHECK(validateDatum(su21.algebra, su21.cartan, d).ok());
        d.hmBasis.clear();
        const auto report = validateDatum(su21.algebra, su21.cartan, d);
        REQUIRE(report.firstFailure());
        CHECK(report.firstFailure()->name == "hm-weights");
    }
}

TEST_CASE("choice of y") {
    const auto sl2 = catalogBuild("split-sl", 2);
    const auto y2 = chooseY(catalogDatum(sl2.algebra, sl2.cartan));
    CHECK(y2.element == unitVec(3, 0));

    const auto sl3 = catalogBuild("split-sl", 3);
    const auto d3 = catalogDatum(sl3.algebra, sl3.cartan);
    const auto y3 = chooseY(d3);
    CHECK(distinctNonzeroRootValues(d3, y3.coords));
    // documented first hit of the box search: y = H1 - 2 H2 = diag(1, -3, 2)
    CHECK(y3.coords == Vec{Scalar(1), Scalar(-2)});
    CHECK(!zetaValue(d3, y3.coords).isZero());
    // every point of the box that precedes it fails
    for (long a : {0L, 1L, -1L}) {
        for (long b : {0L, 1L, -1L}) CHECK_FALSE(distinctNonzeroRootValues(d3, Vec{Scalar(a), Scalar(b)}));
    }

    RestrictedRootDatum empty;
    empty.aBasis = {unitVec(3, 0)};
    CHECK(chooseY(empty).element == unitVec(3, 0));
}

TEST_CASE("choice of x0") {
    const auto sl3 = catalogBuild("split-sl", 3);
    CHECK(isZeroVec(chooseX0(sl3.algebra, catalogDatum(sl3.algebra, sl3.cartan))));

    const auto su21 = loadAlgebra(kData + "/su21.json");
    const auto d = loadDatum(kData + "/su21_datum.json", 8);
    REQUIRE(d.multHigh().size() == 1);
    const Vec x0 = chooseX0(su21.algebra, d);
    CHECK_FALSE(isZeroVec(x0));
    CHECK(su21.cartan.inK(x0));
    // ad x0 separates the two weight vectors of the plane root space
    const auto& space = d.roots[d.multHigh()[0]].space;
    const Vec w0 = su21.algebra.bracket(x0, space[0]);
    const Vec w1 = su21.algebra.bracket(x0, space[1]);
    const auto c0 = solveIn(MatrixQ::fromColumns({space[0]}, 8), w0);
    const auto c1 = solveIn(MatrixQ::fromColumns({space[1]}, 8), w1);
    REQUIRE(c0);
    REQUIRE(c1);
    CHECK((*c0)[0] != (*c1)[0]);
}

TEST_CASE("constructing K-regular elements") {
    SUBCASE("sl(2)") {
        const auto sl2 = catalogBuild("split-sl", 2);
        const auto c = constructRegular(sl2.algebra, sl2.cartan, catalogDatum(sl2.algebra, sl2.cartan));
        CHECK(c.element.z == (Vec{Scalar(1), Scalar(1), Scalar(-1)}));
        CHECK(c.certificate.verdict == Verdict::KRegular);
    }
    SUBCASE("sl(3)") {
        const auto sl3 = catalogBuild("split-sl", 3);
        const oracle::SlModel model(3);
        const auto c = constructRegular(sl3.algebra, sl3.cartan, catalogDatum(sl3.algebra, sl3.cartan));
        MatrixQ x(3, 3);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = i + 1; j < 3; ++j) {
                x(i, j) = 1;
                x(j, i) = -1;
            }
        }
        CHECK(c.element.x == model.coords(x));
        CHECK(generatedSubalgebra(sl3.algebra, sl3.cartan, c.element.z).dim == 8);
    }
    SUBCASE("sl(4)") {
        const auto sl4 = catalogBuild("split-sl", 4);
        const auto d = catalogDatum(sl4.algebra, sl4.cartan);
        const auto c = constructRegular(sl4.algebra, sl4.cartan, d, GramOptions{0, GramMode::Auto});
        CHECK(c.certificate.verdict == Verdict::KRegular);
        const auto sub = generatedSubalgebra(sl4.algebra, sl4.cartan, c.element.z);
        CHECK(sub.stabilizationDegree <= 14);
        CHECK(centralizerInK(sl4.algebra, sl4.cartan, sub).empty());
        const auto again = constructRegular(sl4.algebra, sl4.cartan, d, GramOptions{0, GramMode::Auto});
        CHECK(again.element.z == c.element.z);
    }
    SUBCASE("non-split real rank one") {
        const auto su21 = loadAlgebra(kData + "/su21.json");
        const auto d = loadDatum(kData + "/su21_datum.json", 8);
        const auto c = constructRegular(su21.algebra, su21.cartan, d, GramOptions{0, GramMode::Auto});
        CHECK(c.certificate.verdict == Verdict::KRegular);
        CHECK(generatedSubalgebra(su21.algebra, su21.cartan, c.element.z).dim == 8);
    }
}

TEST_CASE("datum serialization") {
    const auto sl3 = catalogBuild("split-sl", 3);
    const auto d = catalogDatum(sl3.algebra, sl3.cartan);
    const auto back = datumFromJson(datumToJson(d), 8);
    CHECK(back.positive == d.positive);
    REQUIRE(back.roots.size() == d.roots.size());
    for (std::size_t r = 0; r < d.roots.size(); ++r) {
        CHECK(back.roots[r].values == d.roots[r].values);
        CHECK(back.roots[r].space == d.roots[r].space);
    }
    auto j = datumToJson(d);
    j["positive"].push_back(99);
    CHECK_THROWS_AS(datumFromJson(j, 8), ParseError);
    CHECK_THROWS_AS(datumFromJson(nlohmann::json::object(), 8), ParseError);
}
