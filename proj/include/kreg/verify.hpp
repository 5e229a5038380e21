#ifndef KREG_VERIFY_HPP
#define KREG_VERIFY_HPP

#include "kreg/catalog.hpp"
#include "kreg/iwasawa.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kreg {

struct PropertyRecord {
    std::string name;
    std::string statement;
    std::uint64_t checksRun = 0;
    std::uint64_t failures = 0;
    std::optional<std::string> firstCounterexample;
};

struct VerifyReport {
    std::string suite;
    std::string algebra;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::vector<PropertyRecord> properties;
    nlohmann::json sections = nlohmann::json::object();  // suite-specific tables
    double wallTimeMs = 0;

    std::uint64_t totalFailures() const;
    const PropertyRecord* find(const std::string& name) const;
    /// Timing is left out unless asked for, so equal inputs give equal bytes.
    nlohmann::json toJson(bool includeTiming = false) const;
    std::string toCsv() const;
};

struct VerifyOptions {
    std::string suite = "all";
    std::uint64_t seed = 42;
    std::size_t samples = 100;
    unsigned jobs = 1;
    long box = 3;
    std::uint64_t gramLimit = kDefaultGramLimit;
    std::optional<RestrictedRootDatum> datum;  // required for the appendix suite on non-catalog algebras
};

/// stabilization, invariance, regularity, nilcone, appendix, witt, bounds, all
const std::vector<std::string>& suiteNames();

/// Runs the property suites on one algebra. Throws std::invalid_argument for
/// an unknown suite or when the appendix suite has no datum.
VerifyReport verifySuite(const SymmetricPair& pair, const VerifyOptions& options);

/// Three independent Nil_K predicates on one element, as used by the nilcone suite.
struct NilconePredicates {
    bool gramCriterion = false;    // Gram matrix zero and ad x, ad y nilpotent
    bool solvableNilpotent = false;  // derived series of g(z) reaches 0 and sampled members are ad-nilpotent
    std::optional<bool> handOracle;  // sl(2) only: x = 0 and (y, y) = 0
    bool gramZero = false;
    bool solvable = false;
};

NilconePredicates nilconePredicates(const SymmetricPair& pair, const Vec& z, std::uint64_t seed, long box,
                                    const GramOptions& options);

}  // namespace kreg

#endif
