#include "kreg/regularity.hpp"

#include "kreg/parallel.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <stdexcept>

namespace kreg {
namespace {

std::size_t resolveCap(const LieAlgebra& alg, const GramOptions& options) {
    return options.degreeCap == 0 ? alg.dim() : options.degreeCap;
}

std::string sha256Hex(const std::string& data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 digest failed");
    }
    std::string hex;
    hex.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        char buf[3];
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

MatrixQ pairings(const LieAlgebra& alg, const std::vector<Vec>& vectors, unsigned jobs) {
    const std::size_t count = vectors.size();
    std::vector<Vec> bv(count);
    parallelFor(count, jobs, [&](std::size_t j) { bv[j] = alg.killingMatrix().apply(vectors[j]); });
    MatrixQ gram(count, count);
    parallelFor(count, jobs, [&](std::size_t i) {
        const Vec& vi = vectors[i];
        for (std::size_t j = i; j < count; ++j) {
            Scalar s;
            for (std::size_t k = 0; k < vi.size(); ++k) {
                if (!vi[k].isZero() && !bv[j][k].isZero()) s += vi[k] * bv[j][k];
            }
            gram(i, j) = s;
        }
    });
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < i; ++j) gram(i, j) = gram(j, i);
    }
    return gram;
}

}  // namespace

SubalgebraReport generatedSubalgebra(const LieAlgebra& alg, const CartanDecomposition& cd, const Vec& z) {
    const std::size_t n = alg.dim();
    const ElementZ e = cd.decompose(z);
    SubalgebraReport report;
    SpanBuilder span(n);
    std::vector<Vec> frontier;
    for (const Vec* g : {&e.x, &e.y}) {
        if (span.add(*g)) {
            report.basis.push_back(*g);
            report.basisDegree.push_back(1);
            frontier.push_back(*g);
        }
    }
    report.perDegreeDims.push_back(span.dim());
    std::size_t m = 1;
    for (;;) {
        std::vector<Vec> added;
        for (const Vec& w : frontier) {
            for (const Vec* g : {&e.x, &e.y}) {
                Vec b = alg.bracket(*g, w);
                if (span.add(b)) {
                    report.basis.push_back(b);
                    report.basisDegree.push_back(m + 1);
                    added.push_back(std::move(b));
                }
            }
        }
        if (added.empty()) break;
        ++m;
        report.perDegreeDims.push_back(span.dim());
        frontier = std::move(added);
    }
    report.dim = span.dim();
    report.stabilizationDegree = m;
    if (m > std::max<std::size_t>(n, 2) - 1) {
        throw SoundnessError("filtration stabilized at degree " + std::to_string(m) + " > dim g - 1 = " +
                             std::to_string(n - 1));
    }
    return report;
}

std::vector<Vec> centralizerInK(const LieAlgebra& alg, const CartanDecomposition& cd, const SubalgebraReport& report) {
    const auto& kb = cd.kBasis();
    const std::size_t n = alg.dim();
    if (report.basis.empty() || kb.empty()) return kb;
    // Row block b holds the coordinates of [k_a, w_b] in column a.
    MatrixQ stacked(n * report.basis.size(), kb.size());
    for (std::size_t a = 0; a < kb.size(); ++a) {
        for (std::size_t b = 0; b < report.basis.size(); ++b) {
            const Vec c = alg.bracket(kb[a], report.basis[b]);
            for (std::size_t r = 0; r < n; ++r) stacked(b * n + r, a) = c[r];
        }
    }
    std::vector<Vec> out;
    for (const Vec& coeffs : nullspaceOf(stacked)) {
        Vec u(n);
        for (std::size_t a = 0; a < kb.size(); ++a) axpy(u, coeffs[a], kb[a]);
        out.push_back(std::move(u));
    }
    return out;
}

std::string modeName(GramMode mode) {
    switch (mode) {
        case GramMode::Full: return "full";
        case GramMode::Reduced: return "reduced";
        case GramMode::Auto: return "auto";
    }
    return "unknown";
}

std::string verdictName(Verdict verdict) {
    switch (verdict) {
        case Verdict::Unset: return "unset";
        case Verdict::KRegular: return "KRegular";
        case Verdict::NilK: return "NilK";
        case Verdict::Neither: return "Neither";
    }
    return "unknown";
}

std::string GramCertificate::gramHash() const {
    std::string rendering;
    for (std::size_t i = 0; i < gram.entries().size(); ++i) {
        if (i) rendering += ',';
        rendering += gram.entries()[i].str();
    }
    return "sha256:" + sha256Hex(rendering);
}

nlohmann::json GramCertificate::toJson(bool includeGram) const {
    nlohmann::json witnesses = nullptr;
    if (verdict == Verdict::KRegular) {
        witnesses = {{"minor", minorIndices}};
    } else if (verdict == Verdict::NilK) {
        witnesses = {{"ad_x_exponent", adXExponent.value_or(0)}, {"ad_y_exponent", adYExponent.value_or(0)}};
    }
    nlohmann::json j = {{"degree_cap", degreeCap}, {"mode", modeName(mode)},  {"rank", rank},
                        {"dim_g", dimG},           {"verdict", verdictName(verdict)}, {"witnesses", witnesses},
                        {"gram_hash", gramHash()}};
    if (subalgebraDim) j["dim_subalgebra"] = *subalgebraDim;
    if (includeGram) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t r = 0; r < gram.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < gram.cols(); ++c) row.push_back(gram(r, c).str());
            rows.push_back(std::move(row));
        }
        j["labels"] = labels;
        j["gram"] = std::move(rows);
    }
    return j;
}

GramCertificate gramMatrix(const LieAlgebra& alg, const CartanDecomposition& cd, const Vec& z,
                           const GramOptions& options) {
    const std::size_t cap = resolveCap(alg, options);
    GramMode mode = options.mode;
    const bool capTooBig = cap > 62;
    const std::uint64_t words = capTooBig ? 0 : cumulativeWittDimension(cap);
    if (mode == GramMode::Auto) {
        mode = (!capTooBig && words <= options.sizeLimit) ? GramMode::Full : GramMode::Reduced;
    }

    GramCertificate cert;
    cert.degreeCap = cap;
    cert.mode = mode;
    cert.dimG = alg.dim();

    if (mode == GramMode::Full) {
        if (capTooBig || words > options.sizeLimit) {
            throw SizeLimitError("full Gram matrix at degree cap " + std::to_string(cap) + " needs " +
                                 (capTooBig ? std::string("more than 2^62") : std::to_string(words)) +
                                 " rows, above the limit of " + std::to_string(options.sizeLimit));
        }
        const ElementZ e = cd.decompose(z);
        WordEvaluator eval(alg, e.x, e.y);
        for (const LyndonWord& w : lyndonBasisFlat(cap)) {
            cert.labels.push_back(w.letters());
            cert.vectors.push_back(eval(w));
        }
    } else {
        const SubalgebraReport sub = generatedSubalgebra(alg, cd, z);
        for (std::size_t i = 0; i < sub.basis.size(); ++i) {
            if (sub.basisDegree[i] > cap) continue;
            cert.labels.push_back("g" + std::to_string(sub.basisDegree[i]));
            cert.vectors.push_back(sub.basis[i]);
        }
    }
    cert.gram = pairings(alg, cert.vectors, options.jobs);
    cert.rank = rankOf(cert.gram);
    return cert;
}

GramCertificate isKRegular(const LieAlgebra& alg, const CartanDecomposition& cd, const Vec& z,
                           const GramOptions& options) {
    GramCertificate cert = gramMatrix(alg, cd, z, options);
    const SubalgebraReport sub = generatedSubalgebra(alg, cd, z);
    cert.subalgebraDim = sub.dim;
    const std::size_t n = alg.dim();
    if (cert.rank > sub.dim) {
        throw SoundnessError("Gram rank " + std::to_string(cert.rank) + " exceeds dim g(z) = " +
                             std::to_string(sub.dim));
    }
    const bool gramRegular = cert.rank == n;
    if (cert.degreeCap >= sub.stabilizationDegree && gramRegular != (sub.dim == n)) {
        throw SoundnessError("Gram rank " + std::to_string(cert.rank) + " and dim g(z) = " + std::to_string(sub.dim) +
                             " disagree on regularity");
    }
    cert.verdict = gramRegular ? Verdict::KRegular : Verdict::Neither;
    if (gramRegular) cert.minorIndices = pivotColumns(MatrixQ::fromColumns(cert.vectors, n));
    return cert;
}

GramCertificate nilconeTest(const LieAlgebra& alg, const CartanDecomposition& cd, const Vec& z,
                            const GramOptions& options) {
    GramCertificate cert = gramMatrix(alg, cd, z, options);
    const ElementZ e = cd.decompose(z);
    const std::size_t n = alg.dim();
    const MatrixQ adX = alg.adMatrix(e.x);
    const MatrixQ adY = alg.adMatrix(e.y);
    const bool nilpotent = isNilpotentMatrix(adX, n) && isNilpotentMatrix(adY, n);
    if (cert.gram.isZero() && nilpotent) {
        cert.verdict = Verdict::NilK;
        cert.adXExponent = nilpotencyIndex(adX);
        cert.adYExponent = nilpotencyIndex(adY);
    } else {
        cert.verdict = Verdict::Neither;
    }
    return cert;
}

std::vector<std::size_t> derivedSeries(const LieAlgebra& alg, const std::vector<Vec>& basis) {
    const std::size_t n = alg.dim();
    SpanBuilder current(n);
    for (const Vec& v : basis) current.add(v);
    for (std::size_t a = 0; a < current.basis().size(); ++a) {
        for (std::size_t b = a + 1; b < current.basis().size(); ++b) {
            if (!current.contains(alg.bracket(current.basis()[a], current.basis()[b]))) {
                throw std::invalid_argument("derivedSeries: basis is not closed under the bracket");
            }
        }
    }
    std::vector<std::size_t> dims{current.dim()};
    while (current.dim() > 0) {
        SpanBuilder next(n);
        const auto& b = current.basis();
        for (std::size_t i = 0; i < b.size(); ++i) {
            for (std::size_t j = i + 1; j < b.size(); ++j) next.add(alg.bracket(b[i], b[j]));
        }
        dims.push_back(next.dim());
        if (next.dim() == current.dim()) break;
        current = std::move(next);
    }
    return dims;
}

InvariantValue invariantValue(const LieAlgebra& alg, const CartanDecomposition& cd, const LyndonWord& t,
                              const LyndonWord& tPrime, const Vec& z) {
    const std::size_t degree = t.degree() + tPrime.degree();
    if (degree > 2 * alg.dim()) {
        throw std::invalid_argument("invariantValue: deg T + deg T' = " + std::to_string(degree) + " exceeds 2 dim g");
    }
    const ElementZ e = cd.decompose(z);
    WordEvaluator eval(alg, e.x, e.y);
    const Vec a = eval(t);
    return InvariantValue{alg.killingPair(a, eval(tPrime)), degree};
}

Scalar lieDerivativeResidual(const LieAlgebra& alg, const CartanDecomposition& cd, const LyndonWord& t,
                             const LyndonWord& tPrime, const Vec& z, const Vec& u) {
    if (u.size() != alg.dim() || !cd.inK(u)) throw std::invalid_argument("lieDerivativeResidual: u is not in k");
    const ElementZ e = cd.decompose(z);
    DualWordEvaluator eval(alg, e.x, e.y, alg.bracket(u, e.x), alg.bracket(u, e.y));
    const DualVector a = eval(t);
    const DualVector& b = eval(tPrime);
    return alg.killingPair(a.deriv, b.value) + alg.killingPair(a.value, b.deriv);
}

Scalar powerTrace(const LieAlgebra& alg, const Vec& z, std::size_t m) {
    if (m < 1 || m > 2 * alg.dim()) throw std::invalid_argument("powerTrace: m must be in [1, 2 dim g]");
    const MatrixQ ad = alg.adMatrix(z);
    MatrixQ p = ad;
    for (std::size_t k = 1; k < m; ++k) p = p * ad;
    return p.trace();
}

DegreeBounds degreeBounds(const LieAlgebra& alg, const CartanDecomposition& cd) {
    DegreeBounds b;
    b.n = alg.dim();
    b.twoN = 2 * b.n;
    b.dimP = cd.pBasis().size();
    const mpz_class twoN = static_cast<unsigned long>(b.twoN);
    b.r = twoN * (twoN - 1) / 2 * static_cast<unsigned long>(b.dimP);
    return b;
}

nlohmann::json Separator::toJson() const {
    nlohmann::json j = {{"kind", kind == Kind::WordPair ? "word-pair" : "power-trace"},
                        {"degree", degree},
                        {"value_z", valueZ.str()},
                        {"value_z_prime", valueZPrime.str()}};
    if (kind == Kind::WordPair) {
        j["T"] = t->letters();
        j["T_prime"] = tPrime->letters();
    } else {
        j["power"] = power;
    }
    return j;
}

std::optional<Separator> separationProbe(const LieAlgebra& alg, const CartanDecomposition& cd, const Vec& z,
                                         const Vec& zPrime, std::size_t degreeCap) {
    if (degreeCap == 0) throw std::invalid_argument("separationProbe: degreeCap must be >= 1");
    const std::size_t n = alg.dim();
    const std::size_t wordCap = std::min(degreeCap, 2 * n);
    const std::vector<LyndonWord> words = lyndonBasisFlat(wordCap);
    const ElementZ e = cd.decompose(z);
    const ElementZ ep = cd.decompose(zPrime);
    WordEvaluator evalZ(alg, e.x, e.y);
    WordEvaluator evalZp(alg, ep.x, ep.y);
    const MatrixQ adZ = alg.adMatrix(z);
    const MatrixQ adZp = alg.adMatrix(zPrime);
    MatrixQ powZ = MatrixQ::identity(n);
    MatrixQ powZp = MatrixQ::identity(n);

    const std::size_t maxDegree = std::min(2 * degreeCap, 2 * n);
    for (std::size_t s = 1; s <= maxDegree; ++s) {
        for (std::size_t i = 0; i < words.size(); ++i) {
            for (std::size_t j = i; j < words.size(); ++j) {
                if (words[i].degree() + words[j].degree() != s) continue;
                const Scalar a = alg.killingPair(evalZ(words[i]), evalZ(words[j]));
                const Scalar b = alg.killingPair(evalZp(words[i]), evalZp(words[j]));
                if (a != b) {
                    Separator sep;
                    sep.kind = Separator::Kind::WordPair;
                    sep.t = words[i];
                    sep.tPrime = words[j];
                    sep.degree = s;
                    sep.valueZ = a;
                    sep.valueZPrime = b;
                    return sep;
                }
            }
        }
        powZ = powZ * adZ;
        powZp = powZp * adZp;
        if (powZ.trace() != powZp.trace()) {
            Separator sep;
            sep.kind = Separator::Kind::PowerTrace;
            sep.power = s;
            sep.degree = s;
            sep.valueZ = powZ.trace();
            sep.valueZPrime = powZp.trace();
            return sep;
        }
    }
    return std::nullopt;
}

}  // namespace kreg
