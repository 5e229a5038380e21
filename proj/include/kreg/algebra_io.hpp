#ifndef KREG_ALGEBRA_IO_HPP
#define KREG_ALGEBRA_IO_HPP

#include "kreg/catalog.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace kreg {

/// Malformed JSON or a schema violation.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input that fails an algebraic invariant.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

// Scalars travel as [re_num, re_den, im_num, im_den]; each integer is a JSON
// integer or a base-10 string. Integers that do not fit in 64 bits are
// written as strings.
Scalar scalarFromJson(const nlohmann::json& j);
nlohmann::json scalarToJson(const Scalar& s);
Vec vectorFromJson(const nlohmann::json& j, std::size_t dim);
nlohmann::json vectorToJson(const Vec& v);

/// {"name", "dim", "basis_labels", "structure": [[i, j, [scalar x dim]]] (i < j,
/// 0-based), "theta": dim x dim scalars, theta[r][c] = row r, column c}.
nlohmann::json algebraToJson(const LieAlgebra& alg, const CartanDecomposition& cd);

/// Parses and fully validates. Throws ParseError or ValidationError.
SymmetricPair algebraFromJson(const nlohmann::json& j);
SymmetricPair loadAlgebra(const std::filesystem::path& file);

/// {"coeffs": [scalar x dim]}
Vec elementFromJson(const nlohmann::json& j, std::size_t dim);
nlohmann::json elementToJson(const Vec& v);

/// Reads a JSON document; "-" means stdin. Throws ParseError.
nlohmann::json readJsonFile(const std::string& path);

}  // namespace kreg

#endif
