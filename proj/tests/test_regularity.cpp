#include "kreg/catalog.hpp"
#include "kreg/errors.hpp"
#include "kreg/free_lie.hpp"
#include "kreg/linalg.hpp"
#include "kreg/regularity.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace kreg;

namespace {

struct Sl2 {
    SymmetricPair pair = catalogBuild("split-sl", 2);
    Vec h = unitVec(3, 0), e = unitVec(3, 1), f = unitVec(3, 2);
    const LieAlgebra& g() const { return pair.algebra; }
    const CartanDecomposition& cd() const { return pair.cartan; }
};

GramOptions withCap(std::size_t cap, GramMode mode = GramMode::Full) {
    GramOptions o;
    o.degreeCap = cap;
    o.mode = mode;
    return o;
}

}  // namespace

TEST_CASE("generated subalgebra") {
    const Sl2 s;
    const auto r = generatedSubalgebra(s.g(), s.cd(), (s.e - s.f) + s.h);
    CHECK(r.dim == 3);
    CHECK(r.stabilizationDegree == 2);
    CHECK(generatedSubalgebra(s.g(), s.cd(), zeroVec(3)).dim == 0);
    const auto hOnly = generatedSubalgebra(s.g(), s.cd(), s.h);
    CHECK(hOnly.dim == 1);
    REQUIRE(hOnly.basis.size() == 1);
    CHECK(rankOf(MatrixQ::fromColumns({hOnly.basis[0], s.h}, 3)) == 1);
}

TEST_CASE("centralizer in k") {
    const Sl2 s;
    const auto zero = generatedSubalgebra(s.g(), s.cd(), zeroVec(3));
    CHECK(centralizerInK(s.g(), s.cd(), zero).size() == s.cd().kBasis().size());
    CHECK(centralizerInK(s.g(), s.cd(), generatedSubalgebra(s.g(), s.cd(), s.h)).empty());
    CHECK(centralizerInK(s.g(), s.cd(), generatedSubalgebra(s.g(), s.cd(), (s.e - s.f) + s.h)).empty());
}

TEST_CASE("Gram matrix against Killing pairings computed in the matrix model") {
    const Sl2 s;
    const oracle::SlModel model(2);
    const Vec z = (s.e - s.f) + s.h;
    const auto cert = gramMatrix(s.g(), s.cd(), z, withCap(3));
    REQUIRE(cert.gram.rows() == 5);
    CHECK(cert.rank == 3);
    CHECK(cert.labels == std::vector<std::string>{"X", "Y", "XY", "XXY", "XYY"});
    const auto words = lyndonBasisFlat(3);
    const ElementZ xy = s.cd().decompose(z);
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            const Vec a = evaluateWord(s.g(), words[i], xy.x, xy.y);
            const Vec b = evaluateWord(s.g(), words[j], xy.x, xy.y);
            CHECK(cert.gram(i, j) == model.killing(a, b));
        }
    }
    CHECK(cert.gram(0, 0) == Scalar(-8));
    CHECK(oracle::rankByMinors(cert.gram) == 3);

    CHECK(gramMatrix(s.g(), s.cd(), zeroVec(3), withCap(3)).gram.isZero());
    CHECK(gramMatrix(s.g(), s.cd(), s.h + Scalar::i() * (s.e + s.f), withCap(3)).gram.isZero());
}

TEST_CASE("Gram modes and limits") {
    const auto sl4 = catalogBuild("split-sl", 4);
    std::mt19937_64 rng(41);
    const Vec z = oracle::randomVec(rng, 15, 2);
    GramOptions o;
    o.mode = GramMode::Auto;
    const auto cert = gramMatrix(sl4.algebra, sl4.cartan, z, o);
    CHECK(cert.mode == GramMode::Reduced);
    o.mode = GramMode::Full;
    CHECK_THROWS_AS(gramMatrix(sl4.algebra, sl4.cartan, z, o), SizeLimitError);

    const Sl2 s;
    o.sizeLimit = 2;
    o.mode = GramMode::Auto;
    CHECK(gramMatrix(s.g(), s.cd(), s.e, o).mode == GramMode::Reduced);
}

TEST_CASE("K-regularity verdicts") {
    const Sl2 s;
    const auto reg = isKRegular(s.g(), s.cd(), (s.e - s.f) + s.h);
    CHECK(reg.verdict == Verdict::KRegular);
    CHECK(reg.minorIndices.size() == 3);
    CHECK(isKRegular(s.g(), s.cd(), zeroVec(3)).verdict != Verdict::KRegular);
    CHECK(isKRegular(s.g(), s.cd(), zeroVec(3)).rank == 0);
    CHECK(isKRegular(s.g(), s.cd(), s.e).verdict == Verdict::KRegular);
    CHECK(isKRegular(s.g(), s.cd(), s.h).verdict != Verdict::KRegular);

    const auto json = reg.toJson();
    CHECK(json["verdict"] == "KRegular");
    CHECK(json["gram_hash"].get<std::string>().rfind("sha256:", 0) == 0);
    CHECK(json["gram_hash"].get<std::string>().size() == 7 + 64);
}

TEST_CASE("nilcone verdicts") {
    const Sl2 s;
    CHECK(nilconeTest(s.g(), s.cd(), zeroVec(3)).verdict == Verdict::NilK);
    const auto nil = nilconeTest(s.g(), s.cd(), s.h + Scalar::i() * (s.e + s.f));
    CHECK(nil.verdict == Verdict::NilK);
    REQUIRE(nil.adYExponent);
    CHECK(*nil.adYExponent == 3);
    CHECK(nilconeTest(s.g(), s.cd(), s.e).verdict != Verdict::NilK);
    CHECK(nilconeTest(s.g(), s.cd(), s.h).verdict != Verdict::NilK);
}

TEST_CASE("derived series") {
    const Sl2 s;
    const auto full = derivedSeries(s.g(), {s.h, s.e, s.f});
    REQUIRE(full.size() >= 2);
    CHECK(full[0] == 3);
    CHECK(full.back() == 3);
    CHECK(derivedSeries(s.g(), {s.h}) == std::vector<std::size_t>{1, 0});
    CHECK(derivedSeries(s.g(), {s.e, s.h}) == std::vector<std::size_t>{2, 1, 0});
    CHECK_THROWS_AS(derivedSeries(s.g(), {s.e, s.f}), std::invalid_argument);
}

TEST_CASE("invariants and their derivatives") {
    const Sl2 s;
    const Vec z = (s.e - s.f) + s.h;
    const LyndonWord X("X"), Y("Y"), XY("XY");
    CHECK(invariantValue(s.g(), s.cd(), X, X, z).value == s.g().killingPair(s.e - s.f, s.e - s.f));
    CHECK(invariantValue(s.g(), s.cd(), X, XY, z).value == Scalar(0));
    CHECK(invariantValue(s.g(), s.cd(), X, XY, z).degree == 3);
    CHECK(invariantValue(s.g(), s.cd(), XY, XY, zeroVec(3)).value == Scalar(0));

    CHECK(lieDerivativeResidual(s.g(), s.cd(), Y, Y, z, zeroVec(3)) == Scalar(0));
    CHECK(lieDerivativeResidual(s.g(), s.cd(), Y, Y, z, s.e - s.f) == Scalar(0));
    CHECK_THROWS_AS(lieDerivativeResidual(s.g(), s.cd(), Y, Y, z, s.h), std::invalid_argument);

    const auto sl3 = catalogBuild("split-sl", 3);
    std::mt19937_64 rng(43);
    const Vec w = oracle::randomVec(rng, 8, 3);
    for (const auto& u : sl3.cartan.kBasis()) {
        CHECK(lieDerivativeResidual(sl3.algebra, sl3.cartan, LyndonWord("XXY"), XY, w, u) == Scalar(0));
    }
    CHECK_THROWS_AS(lieDerivativeResidual(sl3.algebra, sl3.cartan, X, X, w, sl3.cartan.pBasis().front()),
                    std::invalid_argument);
}

TEST_CASE("power traces") {
    const Sl2 s;
    std::mt19937_64 rng(47);
    for (int k = 0; k < 5; ++k) CHECK(powerTrace(s.g(), oracle::randomVec(rng, 3, 4), 1) == Scalar(0));
    CHECK(powerTrace(s.g(), s.h, 2) == Scalar(8));
    CHECK_THROWS(powerTrace(s.g(), s.h, 0));
    CHECK_THROWS(powerTrace(s.g(), s.h, 7));
    const auto sl3 = catalogBuild("split-sl", 3);
    const oracle::SlModel model(3);
    for (int k = 0; k < 5; ++k) {
        const Vec z = oracle::randomVec(rng, 8, 3);
        CHECK(powerTrace(sl3.algebra, z, 2) == model.killing(z, z));
        const MatrixQ ad = sl3.algebra.adMatrix(z);
        CHECK(powerTrace(sl3.algebra, z, 3) == (ad * ad * ad).trace());
    }
}

TEST_CASE("degree bounds") {
    const std::size_t expect[][3] = {{3, 6, 30}, {8, 16, 600}, {15, 30, 3915}};
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto pair = catalogBuild("split-sl", n);
        const auto b = degreeBounds(pair.algebra, pair.cartan);
        CHECK(b.n == expect[n - 2][0]);
        CHECK(b.twoN == expect[n - 2][1]);
        CHECK(b.r == expect[n - 2][2]);
    }
}

TEST_CASE("separation probe") {
    const Sl2 s;
    const Vec z = (s.e - s.f) + s.h;
    const Vec z2 = Scalar(2) * (s.e - s.f) + s.h;
    CHECK_FALSE(separationProbe(s.g(), s.cd(), z, z, 3));
    const auto sep = separationProbe(s.g(), s.cd(), z, z2, 3);
    REQUIRE(sep);
    CHECK(sep->degree <= 6);
    CHECK(sep->valueZ != sep->valueZPrime);
    REQUIRE(sep->t);
    CHECK(sep->t->letters() == "X");
    CHECK(sep->valueZ == Scalar(-8));
    CHECK(sep->valueZPrime == Scalar(-32));
}

TEST_CASE("property: certificate soundness on random samples") {
    std::mt19937_64 rng(53);
    for (std::size_t n = 2; n <= 3; ++n) {
        const auto pair = catalogBuild("split-sl", n);
        const std::size_t dim = pair.algebra.dim();
        for (int s = 0; s < 12; ++s) {
            Vec z = oracle::randomVec(rng, dim, 2);
            if (s % 3 == 1) z = pair.cartan.projP().apply(z);
            if (s % 3 == 2) z = pair.cartan.projK().apply(z);
            const auto sub = generatedSubalgebra(pair.algebra, pair.cartan, z);
            CHECK(sub.stabilizationDegree + 1 <= dim);
            GramOptions o;
            o.mode = GramMode::Auto;
            const auto cert = gramMatrix(pair.algebra, pair.cartan, z, o);
            CHECK(cert.gram.isSymmetric());
            CHECK(cert.rank <= sub.dim);
            CHECK((cert.rank == dim) == (sub.dim == dim));
            o.mode = GramMode::Reduced;
            CHECK(gramMatrix(pair.algebra, pair.cartan, z, o).rank == cert.rank);
            o.mode = GramMode::Auto;
            o.jobs = 3;
            CHECK(gramMatrix(pair.algebra, pair.cartan, z, o).gramHash() == cert.gramHash());
        }
    }
}
