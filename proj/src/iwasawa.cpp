#include "kreg/iwasawa.hpp"

#include "kreg/algebra_io.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace kreg {
namespace {

// Search bound for the box enumerations. The polynomials involved are
// nonzero, so a valid datum is always resolved long before this.
constexpr long kMaxBox = 64;

long orderedValue(long k) { return k == 0 ? 0 : (k % 2 ? (k + 1) / 2 : -(k / 2)); }

// Visits the integer points with max |c_i| == box in the order 0, 1, -1, ...,
// first coordinate most significant. Stops when fn returns true.
bool forEachBoxShell(std::size_t dim, long box, const std::function<bool(const Vec&)>& fn) {
    if (dim == 0) return false;
    std::vector<long> digit(dim, 0);
    const long base = 2 * box + 1;
    for (;;) {
        Vec coords(dim);
        long maxAbs = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            const long c = orderedValue(digit[i]);
            coords[i] = c;
            maxAbs = std::max(maxAbs, c < 0 ? -c : c);
        }
        if (maxAbs == box && fn(coords)) return true;
        std::size_t pos = dim;
        while (pos > 0) {
            --pos;
            if (++digit[pos] < base) break;
            digit[pos] = 0;
            if (pos == 0) return false;
        }
    }
}

bool boxSearch(std::size_t dim, const std::function<bool(const Vec&)>& fn) {
    for (long box = 1; box <= kMaxBox; ++box) {
        if (forEachBoxShell(dim, box, fn)) return true;
    }
    return false;
}

Vec combine(const std::vector<Vec>& basis, const Vec& coords, std::size_t n) {
    Vec out(n);
    for (std::size_t k = 0; k < basis.size(); ++k) axpy(out, coords[k], basis[k]);
    return out;
}

// ad(h) restricted to span(space), in the coordinates of `space`.
std::optional<MatrixQ> restrictedAction(const LieAlgebra& alg, const Vec& h, const std::vector<Vec>& space) {
    const MatrixQ basis = MatrixQ::fromColumns(space, alg.dim());
    MatrixQ out(space.size(), space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
        auto c = solveIn(basis, alg.bracket(h, space[i]));
        if (!c) return std::nullopt;
        out.setColumn(i, *c);
    }
    return out;
}

Vec flatten(const MatrixQ& m) { return Vec(m.entries().begin(), m.entries().end()); }

// dim span{I, A, A^2, ...} equals the degree of the minimal polynomial.
std::size_t minimalPolynomialDegree(const MatrixQ& a) {
    const std::size_t d = a.rows();
    SpanBuilder span(d * d);
    MatrixQ p = MatrixQ::identity(d);
    while (span.add(flatten(p))) p = p * a;
    return span.dim();
}

std::size_t krylovRank(const MatrixQ& a, const Vec& v) {
    SpanBuilder span(a.rows());
    Vec w = v;
    while (span.add(w)) w = a.apply(w);
    return span.dim();
}

// Dimension of the unital associative algebra generated by commuting matrices.
std::size_t generatedAlgebraDim(const std::vector<MatrixQ>& gens, std::size_t d) {
    SpanBuilder span(d * d);
    std::vector<MatrixQ> queue{MatrixQ::identity(d)};
    span.add(flatten(queue.front()));
    for (std::size_t q = 0; q < queue.size(); ++q) {
        for (const auto& g : gens) {
            MatrixQ p = queue[q] * g;
            if (span.add(flatten(p))) queue.push_back(std::move(p));
        }
    }
    return span.dim();
}

std::string pairTag(std::size_t a, std::size_t b) {
    return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
}

}  // namespace

std::vector<std::size_t> RestrictedRootDatum::multOne() const {
    std::vector<std::size_t> out;
    for (std::size_t i : positive) {
        if (roots.at(i).space.size() == 1) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> RestrictedRootDatum::multHigh() const {
    std::vector<std::size_t> out;
    for (std::size_t i : positive) {
        if (roots.at(i).space.size() > 1) out.push_back(i);
    }
    return out;
}

std::optional<std::size_t> RestrictedRootDatum::negativeOf(std::size_t root) const {
    const Vec neg = -roots.at(root).values;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].values == neg) return i;
    }
    return std::nullopt;
}

RestrictedRootDatum catalogDatum(const LieAlgebra& alg, const CartanDecomposition&) {
    const auto& tag = alg.catalogTag();
    if (!tag || tag->family != "split-sl") {
        throw std::invalid_argument("no built-in restricted-root datum for '" + alg.name() +
                                    "'; supply a datum file");
    }
    const SplitSlLayout layout(tag->size);
    const std::size_t n = layout.n();
    RestrictedRootDatum datum;
    for (std::size_t k = 0; k + 1 < n; ++k) datum.aBasis.push_back(alg.basisVector(layout.h(k)));
    // (e_i - e_j)(H_k) = d_ik - d_{i,k+1} - d_jk + d_{j,k+1}
    auto value = [](std::size_t i, std::size_t j, std::size_t k) {
        long v = 0;
        v += (i == k) - (i == k + 1);
        v -= (j == k) - (j == k + 1);
        return Scalar(v);
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            RestrictedRoot root;
            for (std::size_t k = 0; k + 1 < n; ++k) root.values.push_back(value(i, j, k));
            root.space.push_back(alg.basisVector(layout.e(i, j)));
            if (i < j) datum.positive.push_back(datum.roots.size());
            datum.roots.push_back(std::move(root));
        }
    }
    return datum;
}

ValidationReport validateDatum(const LieAlgebra& alg, const CartanDecomposition& cd, const RestrictedRootDatum& datum) {
    ValidationReport report;
    const std::size_t n = alg.dim();
    const std::size_t dimA = datum.aBasis.size();

    auto lengthsOk = [&] {
        auto ok = [&](const Vec& v) { return v.size() == n; };
        for (const auto& v : datum.aBasis) {
            if (!ok(v)) return false;
        }
        for (const auto& v : datum.hmBasis) {
            if (!ok(v)) return false;
        }
        for (const auto& r : datum.roots) {
            if (r.values.size() != dimA || r.space.empty()) return false;
            for (const auto& v : r.space) {
                if (!ok(v)) return false;
            }
        }
        return true;
    };
    if (!lengthsOk()) {
        report.add("shape", false, "vector lengths, root value counts or empty root spaces are inconsistent");
        return report;
    }
    report.add("shape", true);

    {
        std::string detail;
        for (std::size_t k = 0; k < dimA && detail.empty(); ++k) {
            if (!cd.inP(datum.aBasis[k])) detail = "a" + std::to_string(k + 1) + " not in p";
            for (std::size_t l = k + 1; l < dimA && detail.empty(); ++l) {
                if (!isZeroVec(alg.bracket(datum.aBasis[k], datum.aBasis[l]))) detail = "[a,a] != 0 at " + pairTag(k, l);
            }
        }
        if (detail.empty() && rankOf(MatrixQ::fromColumns(datum.aBasis, n)) != dimA) detail = "a basis is dependent";
        report.add("cartan-subspace", detail.empty(), detail);
    }

    {
        std::string detail;
        for (std::size_t r = 0; r < datum.roots.size() && detail.empty(); ++r) {
            const auto& root = datum.roots[r];
            for (std::size_t i = 0; i < root.space.size() && detail.empty(); ++i) {
                for (std::size_t k = 0; k < dimA; ++k) {
                    if (alg.bracket(datum.aBasis[k], root.space[i]) != root.values[k] * root.space[i]) {
                        detail = "eigenvector" + pairTag(r, i);
                        break;
                    }
                }
            }
        }
        report.add("eigenvector", detail.empty(), detail);
    }

    {
        std::string detail;
        std::set<std::vector<std::string>> seen;
        for (std::size_t r = 0; r < datum.roots.size() && detail.empty(); ++r) {
            std::vector<std::string> key;
            bool zero = true;
            for (const auto& s : datum.roots[r].values) {
                key.push_back(s.str());
                zero = zero && s.isZero();
            }
            if (zero) detail = "root " + std::to_string(r + 1) + " is zero";
            else if (!seen.insert(key).second) detail = "root " + std::to_string(r + 1) + " is repeated";
        }
        std::vector<int> sign(datum.roots.size(), 0);
        for (std::size_t p : datum.positive) {
            if (!detail.empty()) break;
            if (p >= datum.roots.size() || sign[p] != 0) {
                detail = "invalid positive index " + std::to_string(p);
                break;
            }
            sign[p] = 1;
        }
        for (std::size_t r = 0; r < datum.roots.size() && detail.empty(); ++r) {
            const auto neg = datum.negativeOf(r);
            if (!neg) {
                detail = "root " + std::to_string(r + 1) + " has no negative";
            } else if ((sign[r] == 1) == (sign[*neg] == 1)) {
                detail = "exactly one of roots " + pairTag(r, *neg) + " must be positive";
            }
        }
        report.add("root-system", detail.empty(), detail);
    }

    {
        std::string detail;
        for (std::size_t r = 0; r < datum.roots.size() && detail.empty(); ++r) {
            const auto neg = datum.negativeOf(r);
            if (!neg) continue;
            const auto& target = datum.roots[*neg].space;
            if (target.size() != datum.roots[r].space.size()) {
                detail = "dim g_nu != dim g_-nu for root " + std::to_string(r + 1);
                break;
            }
            const MatrixQ basis = MatrixQ::fromColumns(target, n);
            for (const auto& v : datum.roots[r].space) {
                if (!spanContains(basis, cd.theta().apply(v))) {
                    detail = "theta(g_nu) not in g_-nu for root " + std::to_string(r + 1);
                    break;
                }
            }
        }
        report.add("theta-pairing", detail.empty(), detail);
    }

    {
        std::string detail;
        for (std::size_t i = 0; i < datum.hmBasis.size() && detail.empty(); ++i) {
            const Vec& h = datum.hmBasis[i];
            if (!cd.inK(h)) detail = "h_m vector " + std::to_string(i + 1) + " not in k";
            for (std::size_t k = 0; k < dimA && detail.empty(); ++k) {
                if (!isZeroVec(alg.bracket(h, datum.aBasis[k]))) detail = "[h_m, a] != 0 at " + pairTag(i, k);
            }
            for (std::size_t j = i + 1; j < datum.hmBasis.size() && detail.empty(); ++j) {
                if (!isZeroVec(alg.bracket(h, datum.hmBasis[j]))) detail = "h_m not abelian at " + pairTag(i, j);
            }
        }
        report.add("hm-centralizes-a", detail.empty(), detail);
    }

    {
        // m = centralizer of a in k
        std::size_t dimM = cd.kBasis().size();
        if (dimA > 0 && !cd.kBasis().empty()) {
            const auto& kb = cd.kBasis();
            MatrixQ stacked(n * dimA, kb.size());
            for (std::size_t c = 0; c < kb.size(); ++c) {
                for (std::size_t k = 0; k < dimA; ++k) {
                    const Vec b = alg.bracket(kb[c], datum.aBasis[k]);
                    for (std::size_t r = 0; r < n; ++r) stacked(k * n + r, c) = b[r];
                }
            }
            dimM = nullspaceOf(stacked).size();
        }
        std::size_t total = dimA + dimM;
        std::vector<Vec> all = datum.aBasis;
        for (const auto& root : datum.roots) {
            total += root.space.size();
            all.insert(all.end(), root.space.begin(), root.space.end());
        }
        const std::size_t rank = all.empty() ? 0 : rankOf(MatrixQ::fromColumns(all, n));
        const bool ok = total == n && rank == dimA + (total - dimA - dimM);
        report.add("completeness", ok,
                   ok ? "" : "sum dim g_nu + dim m + dim a = " + std::to_string(total) + ", dim g = " + std::to_string(n));
    }

    {
        std::string detail;
        for (std::size_t r : datum.multHigh()) {
            if (r >= datum.roots.size()) continue;
            const auto& space = datum.roots[r].space;
            std::vector<MatrixQ> gens;
            for (const auto& h : datum.hmBasis) {
                auto a = restrictedAction(alg, h, space);
                if (!a) {
                    detail = "hm-weights(" + std::to_string(r + 1) + "): root space not stable under h_m";
                    break;
                }
                gens.push_back(std::move(*a));
            }
            if (!detail.empty()) break;
            if (generatedAlgebraDim(gens, space.size()) != space.size()) {
                detail = "hm-weights(" + std::to_string(r + 1) + "): h_m weights are not multiplicity one";
                break;
            }
        }
        report.add("hm-weights", detail.empty(), detail);
    }
    return report;
}

Scalar rootValue(const RestrictedRoot& root, const Vec& coords) {
    Scalar s;
    for (std::size_t k = 0; k < coords.size(); ++k) s += root.values.at(k) * coords[k];
    return s;
}

Scalar zetaValue(const RestrictedRootDatum& datum, const Vec& coords) {
    Scalar prod = 1;
    for (std::size_t i = 0; i < datum.roots.size(); ++i) {
        for (std::size_t j = 0; j < datum.roots.size(); ++j) {
            if (i != j) prod *= rootValue(datum.roots[i], coords) - rootValue(datum.roots[j], coords);
        }
    }
    return prod;
}

ChosenY chooseY(const RestrictedRootDatum& datum) {
    const std::size_t dimA = datum.aBasis.size();
    const std::size_t n = dimA ? datum.aBasis.front().size() : 0;
    if (dimA == 0) return ChosenY{};
    if (datum.roots.empty()) return ChosenY{unitVec(dimA, 0), datum.aBasis.front()};
    ChosenY chosen;
    const bool found = boxSearch(dimA, [&](const Vec& c) {
        std::set<std::pair<mpq_class, mpq_class>> values;
        for (const auto& root : datum.roots) {
            const Scalar v = rootValue(root, c);
            if (v.isZero() || !values.emplace(v.re(), v.im()).second) return false;
        }
        chosen.coords = c;
        return true;
    });
    if (!found) throw SoundnessError("chooseY: no point with distinct root values found");
    chosen.element = combine(datum.aBasis, chosen.coords, n);
    return chosen;
}

Vec chooseX0(const LieAlgebra& alg, const RestrictedRootDatum& datum) {
    const auto high = datum.multHigh();
    if (high.empty()) return zeroVec(alg.dim());
    if (datum.hmBasis.empty()) throw std::invalid_argument("chooseX0: higher root spaces need a nonzero h_m");
    Vec x0;
    const bool found = boxSearch(datum.hmBasis.size(), [&](const Vec& c) {
        const Vec cand = combine(datum.hmBasis, c, alg.dim());
        for (std::size_t r : high) {
            const auto a = restrictedAction(alg, cand, datum.roots[r].space);
            if (!a || minimalPolynomialDegree(*a) != datum.roots[r].space.size()) return false;
        }
        x0 = cand;
        return true;
    });
    if (!found) throw SoundnessError("chooseX0: no element with cyclic action on the higher root spaces");
    return x0;
}

Vec killingDual(const LieAlgebra& alg, const RestrictedRootDatum& datum, std::size_t root) {
    const std::size_t dimA = datum.aBasis.size();
    MatrixQ g(dimA, dimA);
    for (std::size_t i = 0; i < dimA; ++i) {
        for (std::size_t j = 0; j < dimA; ++j) g(i, j) = alg.killingPair(datum.aBasis[i], datum.aBasis[j]);
    }
    const auto c = solveIn(g, datum.roots.at(root).values);
    if (!c) throw std::invalid_argument("killingDual: Killing form is degenerate on a");
    return combine(datum.aBasis, *c, alg.dim());
}

RegularConstruction constructRegular(const LieAlgebra& alg, const CartanDecomposition& cd,
                                     const RestrictedRootDatum& datum, const GramOptions& options) {
    const std::size_t n = alg.dim();
    const ChosenY y = chooseY(datum);
    const Vec x0 = chooseX0(alg, datum);
    RegularConstruction out;
    out.yCoords = y.coords;
    out.x0 = x0;
    Vec x = x0;
    for (std::size_t r : datum.positive) {
        const auto& space = datum.roots[r].space;
        Vec xnu;
        if (space.size() == 1) {
            xnu = space.front();
        } else {
            const MatrixQ a = *restrictedAction(alg, x0, space);
            for (std::size_t i = 0; i < space.size() && xnu.empty(); ++i) {
                if (krylovRank(a, unitVec(space.size(), i)) == space.size()) xnu = space[i];
            }
            if (xnu.empty()) {
                boxSearch(space.size(), [&](const Vec& c) {
                    if (krylovRank(a, c) != space.size()) return false;
                    xnu = combine(space, c, n);
                    return true;
                });
            }
            if (xnu.empty()) throw SoundnessError("constructRegular: no cyclic generator in a higher root space");
        }
        x = x + xnu + cd.theta().apply(xnu);
        out.rootVectors.push_back(std::move(xnu));
    }
    const Vec z = x + (y.element.empty() ? zeroVec(n) : y.element);
    out.element = cd.decompose(z);
    out.certificate = isKRegular(alg, cd, z, options);
    if (out.certificate.verdict != Verdict::KRegular) {
        throw SoundnessError("constructed element is not K-regular (Gram rank " + std::to_string(out.certificate.rank) +
                             " of " + std::to_string(n) + ")");
    }
    return out;
}

nlohmann::json datumToJson(const RestrictedRootDatum& datum) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& v : datum.aBasis) a.push_back(vectorToJson(v));
    nlohmann::json hm = nlohmann::json::array();
    for (const auto& v : datum.hmBasis) hm.push_back(vectorToJson(v));
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& r : datum.roots) {
        nlohmann::json space = nlohmann::json::array();
        for (const auto& v : r.space) space.push_back(vectorToJson(v));
        roots.push_back({{"values_on_a_basis", vectorToJson(r.values)}, {"space", space}});
    }
    return {{"a_basis", a}, {"hm_basis", hm}, {"roots", roots}, {"positive", datum.positive}};
}

RestrictedRootDatum datumFromJson(const nlohmann::json& j, std::size_t dim) {
    if (!j.is_object()) throw ParseError("datum must be a JSON object");
    for (const char* key : {"a_basis", "hm_basis", "roots", "positive"}) {
        if (!j.contains(key) || !j[key].is_array()) throw ParseError(std::string("datum needs an array '") + key + "'");
    }
    RestrictedRootDatum datum;
    for (const auto& v : j["a_basis"]) datum.aBasis.push_back(vectorFromJson(v, dim));
    for (const auto& v : j["hm_basis"]) datum.hmBasis.push_back(vectorFromJson(v, dim));
    for (const auto& r : j["roots"]) {
        if (!r.is_object() || !r.contains("values_on_a_basis") || !r.contains("space") || !r["space"].is_array()) {
            throw ParseError("each root needs 'values_on_a_basis' and 'space'");
        }
        RestrictedRoot root;
        root.values = vectorFromJson(r["values_on_a_basis"], datum.aBasis.size());
        for (const auto& v : r["space"]) root.space.push_back(vectorFromJson(v, dim));
        datum.roots.push_back(std::move(root));
    }
    for (const auto& p : j["positive"]) {
        if (!p.is_number_unsigned()) throw ParseError("positive indices must be non-negative integers");
        const std::size_t idx = p.get<std::size_t>();
        if (idx >= datum.roots.size()) throw ParseError("positive index out of range");
        datum.positive.push_back(idx);
    }
    return datum;
}

RestrictedRootDatum loadDatum(const std::filesystem::path& file, std::size_t dim) {
    return datumFromJson(readJsonFile(file.string()), dim);
}

}  // namespace kreg
