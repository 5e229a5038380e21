#include "kreg/verify.hpp"

#include "kreg/parallel.hpp"
#include "kreg/sampling.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace kreg {
namespace {

struct Outcome {
    std::size_t property;
    bool ok;
    std::string detail;
};
using SampleChecks = std::vector<Outcome>;

class Tally {
public:
    std::size_t declare(std::string name, std::string statement) {
        records_.push_back(PropertyRecord{std::move(name), std::move(statement), 0, 0, std::nullopt});
        return records_.size() - 1;
    }

    void record(std::size_t prop, bool ok, const std::string& detail) {
        PropertyRecord& r = records_.at(prop);
        ++r.checksRun;
        if (!ok) {
            ++r.failures;
            if (!r.firstCounterexample) r.firstCounterexample = detail;
        }
    }

    // Per-sample results are produced in parallel and merged in sample order.
    void run(std::size_t count, unsigned jobs, const std::function<SampleChecks(std::size_t)>& fn) {
        std::vector<SampleChecks> slots(count);
        parallelFor(count, jobs, [&](std::size_t i) { slots[i] = fn(i); });
        for (const auto& checks : slots) {
            for (const auto& c : checks) record(c.property, c.ok, c.detail);
        }
    }

    std::vector<PropertyRecord> take() { return std::move(records_); }

private:
    std::vector<PropertyRecord> records_;
};

std::string describe(const std::string& what, const Vec& z) { return what + ": z = " + formatVec(z); }

bool isSl2(const SymmetricPair& pair) {
    const auto& tag = pair.algebra.catalogTag();
    return tag && tag->family == "split-sl" && tag->size == 2;
}

std::optional<std::size_t> slSize(const SymmetricPair& pair) {
    const auto& tag = pair.algebra.catalogTag();
    if (tag && tag->family == "split-sl") return tag->size;
    return std::nullopt;
}

GramOptions autoOptions(const VerifyOptions& o) {
    GramOptions g;
    g.mode = GramMode::Auto;
    g.sizeLimit = o.gramLimit;
    return g;
}

std::optional<RestrictedRootDatum> datumFor(const SymmetricPair& pair, const VerifyOptions& o) {
    if (o.datum) return o.datum;
    if (slSize(pair)) return catalogDatum(pair.algebra, pair.cartan);
    return std::nullopt;
}

// ---------------------------------------------------------------- stabilization

void stabilizationSuite(const SymmetricPair& pair, const VerifyOptions& o, Tally& tally) {
    const auto& alg = pair.algebra;
    const std::size_t n = alg.dim();
    const std::size_t bound = tally.declare("filtration-stabilizes", "g_m(z) stabilizes at some m <= dim g - 1");
    const std::size_t closed =
        tally.declare("filtration-closed", "the stabilized span is closed under ad x and ad y");

    std::vector<Vec> points{zeroVec(n)};
    for (std::size_t i = 0; i < o.samples; ++i) {
        auto rng = sampleRng(o.seed, i);
        points.push_back(randomElement(rng, n, o.box));
    }
    tally.run(points.size(), o.jobs, [&](std::size_t i) {
        SampleChecks out;
        const Vec& z = points[i];
        try {
            const SubalgebraReport sub = generatedSubalgebra(alg, pair.cartan, z);
            out.push_back({bound, sub.stabilizationDegree + 1 <= std::max<std::size_t>(n, 2),
                           describe("stabilized at " + std::to_string(sub.stabilizationDegree), z)});
            const ElementZ e = pair.cartan.decompose(z);
            SpanBuilder span(n);
            for (const auto& v : sub.basis) span.add(v);
            bool ok = true;
            for (const auto& v : sub.basis) {
                ok = ok && span.contains(alg.bracket(e.x, v)) && span.contains(alg.bracket(e.y, v));
            }
            out.push_back({closed, ok, describe("not closed", z)});
        } catch (const SoundnessError& err) {
            out.push_back({bound, false, describe(err.what(), z)});
        }
        return out;
    });
}

// ---------------------------------------------------------------- regularity

void regularitySuite(const SymmetricPair& pair, const VerifyOptions& o, Tally& tally, nlohmann::json& sections) {
    const auto& alg = pair.algebra;
    const auto& cd = pair.cartan;
    const std::size_t n = alg.dim();
    const std::size_t rankBound = tally.declare("rank-bound", "rank M(z) <= dim g(z)");
    const std::size_t agree =
        tally.declare("certificate-agreement", "rank M(z) = dim g exactly when g(z) = g");
    const std::size_t centralizer =
        tally.declare("regular-centralizer-trivial", "the centralizer of g(z) in k vanishes for regular z");
    const std::size_t minor =
        tally.declare("regular-minor-nonsingular", "the witnessed dim g x dim g principal minor is nonsingular");

    std::vector<Vec> points{zeroVec(n)};
    if (!cd.kBasis().empty()) points.push_back(cd.kBasis().front());
    if (!cd.pBasis().empty()) points.push_back(cd.pBasis().front());
    if (auto datum = datumFor(pair, o)) {
        points.push_back(constructRegular(alg, cd, *datum, autoOptions(o)).element.z);
    }
    for (std::size_t i = 0; i < o.samples; ++i) {
        auto rng = sampleRng(o.seed, i);
        points.push_back(randomElement(rng, n, o.box));
    }

    const GramOptions gopts = autoOptions(o);
    std::vector<std::string> modes(points.size());
    tally.run(points.size(), o.jobs, [&](std::size_t i) {
        SampleChecks out;
        const Vec& z = points[i];
        try {
            const GramCertificate cert = gramMatrix(alg, cd, z, gopts);
            modes[i] = modeName(cert.mode);
            const SubalgebraReport sub = generatedSubalgebra(alg, cd, z);
            out.push_back({rankBound, cert.rank <= sub.dim,
                           describe("rank " + std::to_string(cert.rank) + " > dim g(z) " + std::to_string(sub.dim), z)});
            const bool gramRegular = cert.rank == n;
            out.push_back({agree, gramRegular == (sub.dim == n),
                           describe("rank " + std::to_string(cert.rank) + ", dim g(z) " + std::to_string(sub.dim), z)});
            if (sub.dim == n) {
                out.push_back({centralizer, centralizerInK(alg, cd, sub).empty(), describe("k_z != 0", z)});
                const auto idx = pivotColumns(MatrixQ::fromColumns(cert.vectors, n));
                MatrixQ m(idx.size(), idx.size());
                for (std::size_t a = 0; a < idx.size(); ++a) {
                    for (std::size_t b = 0; b < idx.size(); ++b) m(a, b) = cert.gram(idx[a], idx[b]);
                }
                out.push_back({minor, idx.size() == n && rankOf(m) == n, describe("singular minor", z)});
            }
        } catch (const SoundnessError& err) {
            out.push_back({agree, false, describe(err.what(), z)});
        }
        return out;
    });
    std::size_t full = 0;
    for (const auto& m : modes) full += m == "full";
    sections["regularity"] = {{"points", points.size()},
                              {"full_mode_points", full},
                              {"reduced_mode_points", points.size() - full},
                              {"full_mode_rows", n <= 62 ? cumulativeWittDimension(n) : 0}};
}

// ---------------------------------------------------------------- nilcone

Vec nilpotentInP(const SplitSlLayout& layout, std::size_t a, std::size_t b, const Scalar& c, bool flip) {
    // c ((E_aa - E_bb) + i s (E_ab + E_ba)) squares to zero.
    MatrixQ m(layout.n(), layout.n());
    const Scalar s = flip ? -Scalar::i() : Scalar::i();
    m(a, a) = c;
    m(b, b) = -c;
    m(a, b) = s * c;
    m(b, a) = s * c;
    return layout.coordinates(m);
}

std::vector<Vec> nilconeSamples(const SymmetricPair& pair, const VerifyOptions& o) {
    const auto& cd = pair.cartan;
    const std::size_t n = pair.algebra.dim();
    std::vector<Vec> points{zeroVec(n)};
    const auto size = slSize(pair);
    std::optional<SplitSlLayout> layout;
    if (size) {
        layout.emplace(*size);
        if (*size == 2) {
            const Vec h = unitVec(n, layout->h(0));
            const Vec e = unitVec(n, layout->e(0, 1));
            const Vec f = unitVec(n, layout->e(1, 0));
            points.push_back(h + Scalar::i() * (e + f));
            points.push_back(e);
            points.push_back(e - f);
            points.push_back(h);
        } else {
            points.push_back(nilpotentInP(*layout, 0, *size - 1, 1, false));
        }
    }
    for (std::size_t i = 0; i < o.samples; ++i) {
        auto rng = sampleRng(o.seed, i);
        const std::size_t kind = layout ? i % 4 : (i % 2) * 2;
        if (kind == 0) {
            points.push_back(randomElement(rng, n, o.box));
            continue;
        }
        if (kind == 2) {
            points.push_back(cd.projP().apply(randomElement(rng, n, o.box)));
            continue;
        }
        std::uniform_int_distribution<std::size_t> pick(0, layout->n() - 1);
        std::size_t a = pick(rng);
        std::size_t b = pick(rng);
        while (b == a) b = pick(rng);
        Scalar c;
        while (c.isZero()) c = randomScalar(rng, o.box);
        const bool flip = (rng() & 1) != 0;
        Vec z = nilpotentInP(*layout, std::min(a, b), std::max(a, b), c, flip);
        if (kind == 3) {
            Vec x;
            do {
                x = cd.projK().apply(randomElement(rng, n, o.box));
            } while (isZeroVec(x));
            z = z + x;
        }
        points.push_back(std::move(z));
    }
    return points;
}

void nilconeSuite(const SymmetricPair& pair, const VerifyOptions& o, Tally& tally) {
    const auto& alg = pair.algebra;
    const std::size_t n = alg.dim();
    const std::size_t agreement = tally.declare(
        "nilcone-agreement",
        "Gram criterion, solvable-plus-nilpotent criterion and (on sl2) the hand oracle agree");
    const std::size_t cartan =
        tally.declare("cartan-criterion", "a vanishing Gram matrix forces g(z) to be solvable");
    const std::size_t traces =
        tally.declare("power-trace-vanishing", "tr (ad z)^m = 0 for m <= 2 dim g on certified Nil_K elements");

    const std::vector<Vec> points = nilconeSamples(pair, o);
    const GramOptions gopts = autoOptions(o);
    tally.run(points.size(), o.jobs, [&](std::size_t i) {
        SampleChecks out;
        const Vec& z = points[i];
        try {
            const NilconePredicates p = nilconePredicates(pair, z, o.seed ^ (0x5bd1e995ULL * (i + 1)), o.box, gopts);
            bool agree = p.gramCriterion == p.solvableNilpotent;
            std::string detail = "gram=" + std::to_string(p.gramCriterion) +
                                 " solvable-nilpotent=" + std::to_string(p.solvableNilpotent);
            if (p.handOracle) {
                agree = agree && *p.handOracle == p.gramCriterion;
                detail += " hand=" + std::to_string(*p.handOracle);
            }
            out.push_back({agreement, agree, describe(detail, z)});
            out.push_back({cartan, !p.gramZero || p.solvable, describe("Gram matrix zero but g(z) not solvable", z)});
            if (p.gramCriterion) {
                bool zero = true;
                for (std::size_t m = 1; m <= 2 * n && zero; ++m) zero = powerTrace(alg, z, m).isZero();
                out.push_back({traces, zero, describe("nonzero power trace", z)});
            }
        } catch (const SoundnessError& err) {
            out.push_back({agreement, false, describe(err.what(), z)});
        }
        return out;
    });
}

// ---------------------------------------------------------------- invariance

void invarianceSuite(const SymmetricPair& pair, const VerifyOptions& o, Tally& tally) {
    const auto& alg = pair.algebra;
    const auto& cd = pair.cartan;
    const std::size_t n = alg.dim();
    const std::size_t equivariance =
        tally.declare("equivariance", "the t-coefficient of xi(W) along [u, .] equals [u, xi(W)]");
    const std::size_t residual =
        tally.declare("lie-derivative-zero", "f_{T,T'} has zero derivative along every direction of k");

    const std::vector<LyndonWord> words = lyndonBasisFlat(std::min<std::size_t>(4, 2 * n));
    tally.run(o.samples, o.jobs, [&](std::size_t i) {
        SampleChecks out;
        auto rng = sampleRng(o.seed, i);
        const Vec z = randomElement(rng, n, o.box);
        const ElementZ e = cd.decompose(z);
        for (std::size_t ui = 0; ui < cd.kBasis().size(); ++ui) {
            const Vec& u = cd.kBasis()[ui];
            DualWordEvaluator eval(alg, e.x, e.y, alg.bracket(u, e.x), alg.bracket(u, e.y));
            std::vector<Vec> value(words.size());
            std::vector<Vec> deriv(words.size());
            std::vector<Vec> bValue(words.size());
            std::vector<Vec> bDeriv(words.size());
            for (std::size_t w = 0; w < words.size(); ++w) {
                const DualVector& d = eval(words[w]);
                value[w] = d.value;
                deriv[w] = d.deriv;
                bValue[w] = alg.killingMatrix().apply(d.value);
                bDeriv[w] = alg.killingMatrix().apply(d.deriv);
                out.push_back({equivariance, d.deriv == alg.bracket(u, d.value),
                               describe("word " + words[w].letters() + ", k-direction " + std::to_string(ui + 1), z)});
            }
            auto dot = [](const Vec& a, const Vec& b) {
                Scalar s;
                for (std::size_t k = 0; k < a.size(); ++k) {
                    if (!a[k].isZero() && !b[k].isZero()) s += a[k] * b[k];
                }
                return s;
            };
            for (std::size_t a = 0; a < words.size(); ++a) {
                for (std::size_t b = a; b < words.size(); ++b) {
                    const Scalar r = dot(deriv[a], bValue[b]) + dot(value[a], bDeriv[b]);
                    out.push_back({residual, r.isZero(),
                                   describe("pair (" + words[a].letters() + ", " + words[b].letters() +
                                                "), k-direction " + std::to_string(ui + 1) + ", residual " + r.str(),
                                            z)});
                }
            }
        }
        return out;
    });
}

// ---------------------------------------------------------------- appendix

void appendixSuite(const SymmetricPair& pair, const RestrictedRootDatum& datum, const VerifyOptions& o, Tally& tally,
                   nlohmann::json& sections) {
    const auto& alg = pair.algebra;
    const auto& cd = pair.cartan;
    const std::size_t n = alg.dim();
    const std::size_t valid = tally.declare("datum-valid", "the restricted-root datum passes validation");
    const std::size_t regular = tally.declare("construction-regular", "the constructed z satisfies g(z) = g");
    const std::size_t centralizer = tally.declare("centralizer-trivial", "the centralizer of g(z) in k vanishes");
    const std::size_t nilradical =
        tally.declare("nilradical-contained", "every positive restricted root space lies in g(z)");
    const std::size_t zeta = tally.declare("zeta-nonvanishing", "the product of root differences is nonzero at y");
    const std::size_t dual =
        tally.declare("root-pairing-dual", "P[e_nu, e_-nu] is a nonzero multiple of h_nu for line root spaces");
    const std::size_t determinism = tally.declare("deterministic", "two constructions give the same z");

    const ValidationReport vr = validateDatum(alg, cd, datum);
    tally.record(valid, vr.ok(), vr.ok() ? "" : vr.firstFailure()->name + ": " + vr.firstFailure()->detail);
    if (!vr.ok()) return;

    try {
        const RegularConstruction c = constructRegular(alg, cd, datum, autoOptions(o));
        tally.record(regular, true, "");
        const SubalgebraReport sub = generatedSubalgebra(alg, cd, c.element.z);
        tally.record(centralizer, centralizerInK(alg, cd, sub).empty(), describe("k_z != 0", c.element.z));
        const MatrixQ gz = MatrixQ::fromColumns(sub.basis, n);
        for (std::size_t r : datum.positive) {
            for (const auto& v : datum.roots[r].space) {
                tally.record(nilradical, spanContains(gz, v), "root " + std::to_string(r + 1));
            }
        }
        tally.record(zeta, !zetaValue(datum, c.yCoords).isZero(), "zeta(y) = 0 at " + formatVec(c.yCoords));
        for (std::size_t r : datum.positive) {
            const auto neg = datum.negativeOf(r);
            if (!neg || datum.roots[r].space.size() != 1) continue;
            const Vec w = cd.projP().apply(alg.bracket(datum.roots[r].space[0], datum.roots[*neg].space[0]));
            const Vec h = killingDual(alg, datum, r);
            const auto coeff = solveIn(MatrixQ::fromColumns({h}, n), w);
            tally.record(dual, coeff && !(*coeff)[0].isZero(), "root " + std::to_string(r + 1));
        }
        const RegularConstruction again = constructRegular(alg, cd, datum, autoOptions(o));
        tally.record(determinism, again.element.z == c.element.z, "second run differs");

        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& s : c.element.z) coeffs.push_back(s.str());
        nlohmann::json y = nlohmann::json::array();
        for (const auto& s : c.yCoords) y.push_back(s.str());
        sections["appendix"] = {{"z", coeffs},
                                {"y_coords", y},
                                {"stabilization_degree", sub.stabilizationDegree},
                                {"gram_mode", modeName(c.certificate.mode)},
                                {"gram_rank", c.certificate.rank}};
    } catch (const SoundnessError& err) {
        tally.record(regular, false, err.what());
    }
}

// ---------------------------------------------------------------- witt

std::uint64_t bruteForceLyndonCount(std::size_t j) {
    std::uint64_t count = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << j); ++bits) {
        std::string w(j, 'X');
        for (std::size_t k = 0; k < j; ++k) {
            if (bits >> (j - 1 - k) & 1) w[k] = 'Y';
        }
        bool minimal = true;
        for (std::size_t r = 1; r < j && minimal; ++r) minimal = w < w.substr(r) + w.substr(0, r);
        count += minimal;
    }
    return count;
}

void wittSuite(Tally& tally, nlohmann::json& sections) {
    const std::size_t formula = tally.declare("witt-formula", "Lyndon counts per degree match the Witt formula");
    const std::size_t brute =
        tally.declare("brute-force-enumeration", "Lyndon counts match a rotation-filter enumeration");
    const std::size_t factor =
        tally.declare("standard-factorization", "bracketing leaves spell the word and both factors are Lyndon with u < v");

    const auto basis = lyndonBasis(12);
    nlohmann::json counts = nlohmann::json::array();
    for (std::size_t j = 1; j <= 12; ++j) {
        const auto& words = basis[j - 1];
        if (j <= 8) counts.push_back(words.size());
        tally.record(formula, words.size() == wittDimension(j), "degree " + std::to_string(j));
        if (j <= 6) tally.record(brute, words.size() == bruteForceLyndonCount(j), "degree " + std::to_string(j));
        for (const auto& w : words) {
            if (w.isGenerator()) continue;
            std::string leaves;
            for (char ch : w.bracketing()) {
                if (ch == 'X' || ch == 'Y') leaves += ch;
            }
            const auto u = w.left();
            const auto v = w.right();
            tally.record(factor, leaves == w.letters() && u.letters() < v.letters(), w.letters());
        }
    }
    sections["lyndon_counts"] = counts;
}

// ---------------------------------------------------------------- bounds

void boundsSuite(const SymmetricPair& pair, Tally& tally, nlohmann::json& sections) {
    const std::size_t formula = tally.declare("bound-formula", "r = C(2n, 2) dim p");
    const DegreeBounds b = degreeBounds(pair.algebra, pair.cartan);
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), b.twoN, 2);
    tally.record(formula, b.r == binom * static_cast<unsigned long>(b.dimP) && b.twoN == 2 * b.n, "r mismatch");
    sections["bounds"] = {{"n", b.n}, {"two_n", b.twoN}, {"dim_p", b.dimP}, {"r", b.r.get_str()}};
}

}  // namespace

std::uint64_t VerifyReport::totalFailures() const {
    std::uint64_t f = 0;
    for (const auto& p : properties) f += p.failures;
    return f;
}

const PropertyRecord* VerifyReport::find(const std::string& name) const {
    for (const auto& p : properties) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

nlohmann::json VerifyReport::toJson(bool includeTiming) const {
    nlohmann::json props = nlohmann::json::array();
    for (const auto& p : properties) {
        nlohmann::json j = {{"name", p.name}, {"statement", p.statement}, {"checks_run", p.checksRun},
                            {"failures", p.failures}};
        j["first_counterexample"] = p.firstCounterexample ? nlohmann::json(*p.firstCounterexample) : nlohmann::json();
        props.push_back(std::move(j));
    }
    nlohmann::json j = {{"suite", suite},           {"algebra", algebra},   {"seed", seed},
                        {"samples", samples},       {"properties", props},  {"sections", sections},
                        {"failures", totalFailures()}};
    if (includeTiming) j["wall_time_ms"] = wallTimeMs;
    return j;
}

std::string VerifyReport::toCsv() const {
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + "\"";
    };
    std::ostringstream os;
    os << "suite,algebra,seed,samples,property,checks_run,failures,first_counterexample\n";
    for (const auto& p : properties) {
        os << suite << ',' << algebra << ',' << seed << ',' << samples << ',' << p.name << ',' << p.checksRun << ','
           << p.failures << ',' << quote(p.firstCounterexample.value_or("")) << '\n';
    }
    return os.str();
}

const std::vector<std::string>& suiteNames() {
    static const std::vector<std::string> names{"stabilization", "invariance", "regularity", "nilcone",
                                                "appendix",      "witt",       "bounds",     "all"};
    return names;
}

NilconePredicates nilconePredicates(const SymmetricPair& pair, const Vec& z, std::uint64_t seed, long box,
                                    const GramOptions& options) {
    const auto& alg = pair.algebra;
    const auto& cd = pair.cartan;
    const std::size_t n = alg.dim();
    NilconePredicates p;
    const GramCertificate cert = nilconeTest(alg, cd, z, options);
    p.gramZero = cert.gram.isZero();
    p.gramCriterion = cert.verdict == Verdict::NilK;

    const SubalgebraReport sub = generatedSubalgebra(alg, cd, z);
    p.solvable = derivedSeries(alg, sub.basis).back() == 0;
    bool nilpotent = true;
    for (const auto& w : sub.basis) nilpotent = nilpotent && isNilpotentMatrix(alg.adMatrix(w), n);
    auto rng = sampleRng(seed, 0);
    for (int k = 0; k < 20 && nilpotent && !sub.basis.empty(); ++k) {
        Vec w(n);
        for (const auto& b : sub.basis) axpy(w, randomScalar(rng, box), b);
        nilpotent = isNilpotentMatrix(alg.adMatrix(w), n);
    }
    p.solvableNilpotent = p.solvable && nilpotent;

    if (isSl2(pair)) {
        const ElementZ e = cd.decompose(z);
        p.handOracle = isZeroVec(e.x) && alg.killingPair(e.y, e.y).isZero();
    }
    return p;
}

VerifyReport verifySuite(const SymmetricPair& pair, const VerifyOptions& options) {
    const auto& names = suiteNames();
    if (std::find(names.begin(), names.end(), options.suite) == names.end()) {
        throw std::invalid_argument("unknown suite '" + options.suite + "'");
    }
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.suite = options.suite;
    report.algebra = pair.algebra.name();
    report.seed = options.seed;
    report.samples = options.samples;

    Tally tally;
    const bool all = options.suite == "all";
    auto wants = [&](const char* s) { return all || options.suite == s; };

    if (wants("witt")) wittSuite(tally, report.sections);
    if (wants("bounds")) boundsSuite(pair, tally, report.sections);
    if (wants("stabilization")) stabilizationSuite(pair, options, tally);
    if (wants("invariance")) invarianceSuite(pair, options, tally);
    if (wants("regularity")) regularitySuite(pair, options, tally, report.sections);
    if (wants("nilcone")) nilconeSuite(pair, options, tally);
    if (wants("appendix")) {
        const auto datum = datumFor(pair, options);
        if (datum) {
            appendixSuite(pair, *datum, options, tally, report.sections);
        } else if (!all) {
            throw std::invalid_argument("appendix suite needs a restricted-root datum for '" + pair.algebra.name() + "'");
        } else {
            report.sections["appendix"] = "skipped: no restricted-root datum";
        }
    }

    report.properties = tally.take();
    report.wallTimeMs =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace kreg
