#include "kreg/algebra_io.hpp"

#include <fstream>
#include <iostream>
#include <limits>

namespace kreg {
namespace {

using nlohmann::json;

mpz_class integerFromJson(const json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
        return mpz_class(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
            throw ParseError("invalid integer string '" + s + "'");
        }
        return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
    }
    throw ParseError("expected an integer, got " + j.dump());
}

json integerToJson(const mpz_class& z) {
    if (mpz_fits_slong_p(z.get_mpz_t()) && sizeof(long) >= 8) return json(z.get_si());
    return json(z.get_str());
}

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error("validation failed: " +
                         (report.firstFailure() ? (report.firstFailure()->detail.empty()
                                                       ? report.firstFailure()->name
                                                       : report.firstFailure()->detail)
                                                : std::string("unknown"))),
      report_(std::move(report)) {}

Scalar scalarFromJson(const json& j) {
    if (!j.is_array() || j.size() != 4) throw ParseError("scalar must be a 4-element array, got " + j.dump());
    try {
        return Scalar::fromParts(integerFromJson(j[0]), integerFromJson(j[1]), integerFromJson(j[2]),
                                 integerFromJson(j[3]));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

json scalarToJson(const Scalar& s) {
    return json::array({integerToJson(s.re().get_num()), integerToJson(s.re().get_den()),
                        integerToJson(s.im().get_num()), integerToJson(s.im().get_den())});
}

Vec vectorFromJson(const json& j, std::size_t dim) {
    if (!j.is_array() || j.size() != dim) {
        throw ParseError("expected a vector of " + std::to_string(dim) + " scalars");
    }
    Vec v;
    v.reserve(dim);
    for (const auto& s : j) v.push_back(scalarFromJson(s));
    return v;
}

json vectorToJson(const Vec& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(scalarToJson(s));
    return out;
}

json algebraToJson(const LieAlgebra& alg, const CartanDecomposition& cd) {
    const std::size_t n = alg.dim();
    json structure = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec b = alg.bracket(alg.basisVector(i), alg.basisVector(j));
            if (isZeroVec(b)) continue;
            structure.push_back(json::array({i, j, vectorToJson(b)}));
        }
    }
    json theta = json::array();
    for (std::size_t r = 0; r < n; ++r) theta.push_back(vectorToJson(cd.theta().row(r)));
    return json{{"name", alg.name()},
                {"dim", n},
                {"basis_labels", alg.labels()},
                {"structure", structure},
                {"theta", theta}};
}

SymmetricPair algebraFromJson(const json& j) {
    if (!j.is_object()) throw ParseError("algebra must be a JSON object");
    for (const char* key : {"name", "dim", "basis_labels", "structure", "theta"}) {
        if (!j.contains(key)) throw ParseError(std::string("algebra is missing '") + key + "'");
    }
    if (!j["name"].is_string()) throw ParseError("'name' must be a string");
    if (!j["dim"].is_number_unsigned()) throw ParseError("'dim' must be a non-negative integer");
    const std::size_t n = j["dim"].get<std::size_t>();
    const json& labelsJson = j["basis_labels"];
    if (!labelsJson.is_array() || labelsJson.size() != n) throw ParseError("'basis_labels' must list dim labels");
    std::vector<std::string> labels;
    for (const auto& l : labelsJson) {
        if (!l.is_string()) throw ParseError("basis labels must be strings");
        labels.push_back(l.get<std::string>());
    }

    std::vector<std::vector<StructureTerm>> table(n * n);
    std::vector<bool> seen(n * n, false);
    const json& structure = j["structure"];
    if (!structure.is_array()) throw ParseError("'structure' must be an array");
    for (const auto& entry : structure) {
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_unsigned() ||
            !entry[1].is_number_unsigned()) {
            throw ParseError("structure entries must be [i, j, [scalars]]");
        }
        const std::size_t i = entry[0].get<std::size_t>();
        const std::size_t k = entry[1].get<std::size_t>();
        if (i >= n || k >= n || i >= k) throw ParseError("structure entry needs 0 <= i < j < dim");
        if (seen[i * n + k]) throw ParseError("duplicate structure entry");
        seen[i * n + k] = true;
        const Vec b = vectorFromJson(entry[2], n);
        for (std::size_t t = 0; t < n; ++t) {
            if (b[t].isZero()) continue;
            table[i * n + k].push_back(StructureTerm{t, b[t]});
            table[k * n + i].push_back(StructureTerm{t, -b[t]});
        }
    }

    const json& thetaJson = j["theta"];
    if (!thetaJson.is_array() || thetaJson.size() != n) throw ParseError("'theta' must be a dim x dim array");
    MatrixQ theta(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const Vec row = vectorFromJson(thetaJson[r], n);
        for (std::size_t c = 0; c < n; ++c) theta(r, c) = row[c];
    }

    SymmetricPair pair{LieAlgebra(j["name"].get<std::string>(), std::move(labels), std::move(table)),
                       CartanDecomposition(std::move(theta))};
    ValidationReport report = validate(pair.algebra, pair.cartan);
    if (!report.ok()) throw ValidationError(std::move(report));
    return pair;
}

json readJsonFile(const std::string& path) {
    try {
        if (path == "-") return json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open '" + path + "'");
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON in '") + path + "': " + e.what());
    }
}

SymmetricPair loadAlgebra(const std::filesystem::path& file) { return algebraFromJson(readJsonFile(file.string())); }

Vec elementFromJson(const json& j, std::size_t dim) {
    if (!j.is_object() || !j.contains("coeffs")) throw ParseError("element must be an object with 'coeffs'");
    return vectorFromJson(j["coeffs"], dim);
}

json elementToJson(const Vec& v) { return json{{"coeffs", vectorToJson(v)}}; }

}  // namespace kreg
