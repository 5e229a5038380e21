#include "kreg/algebra_io.hpp"
#include "kreg/catalog.hpp"
#include "kreg/errors.hpp"
#include "kreg/free_lie.hpp"
#include "kreg/iwasawa.hpp"
#include "kreg/regularity.hpp"
#include "kreg/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace kreg;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

struct AlgebraArgs {
    std::string name;
    std::string file;
};

SymmetricPair loadPair(const AlgebraArgs& a) {
    if (!a.file.empty() && !a.name.empty()) throw std::invalid_argument("give --algebra or --algebra-file, not both");
    if (!a.file.empty()) return algebraFromJson(readJsonFile(a.file));
    if (!a.name.empty()) return catalogByName(a.name);
    throw std::invalid_argument("an algebra is required (--algebra sl2 or --algebra-file PATH)");
}

// A path, "-" for stdin, or an inline JSON document.
json readJsonArg(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
        try {
            return json::parse(arg);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("inline JSON: ") + e.what());
        }
    }
    return readJsonFile(arg);
}

Vec loadElement(const std::string& arg, const LieAlgebra& alg) {
    if (arg.empty()) throw std::invalid_argument("an element is required (--element PATH, - or inline JSON)");
    return elementFromJson(readJsonArg(arg), alg.dim());
}

std::uint64_t gramLimit() {
    const char* env = std::getenv("KREG_GRAM_LIMIT");
    if (!env || !*env) return kDefaultGramLimit;
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) throw std::invalid_argument("KREG_GRAM_LIMIT must be a positive integer");
    return v;
}

json stringVector(const Vec& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(s.str());
    return out;
}

json validationJson(const ValidationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"ok", r.ok()}, {"checks", checks}};
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string csvField(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certificates for K-regular elements and the K-nilcone of symmetric pairs"};
    app.require_subcommand(1);
    app.fallthrough();

    AlgebraArgs algebraArgs;
    app.add_option("--algebra", algebraArgs.name, "catalog algebra: sl2..sl5 or split-sl:N");
    app.add_option("--algebra-file", algebraArgs.file, "algebra JSON file, or - for stdin");

    std::string element;
    std::string datumFile;
    std::size_t degree = 0;
    bool reduced = false;
    bool dump = false;
    std::string word;
    unsigned jobs = 1;
    std::string format = "json";

    // algebra info / validate
    auto* algebraCmd = app.add_subcommand("algebra", "inspect an algebra");
    algebraCmd->require_subcommand(1);
    auto* infoCmd = algebraCmd->add_subcommand("info", "dimensions, labels and k/p bases");
    infoCmd->add_flag("--dump", dump, "print the algebra in the interchange schema");
    auto* validateCmd = algebraCmd->add_subcommand("validate", "run every structural check");

    auto* hallCmd = app.add_subcommand("hall", "Lyndon basis of the free Lie algebra on X, Y");
    hallCmd->add_option("--degree", degree, "maximum degree")->required()->check(CLI::Range(1, 62));

    auto* evalCmd = app.add_subcommand("eval", "evaluate a Lyndon word at z = x + y");
    evalCmd->add_option("--word", word, "Lyndon word over X < Y")->required();
    evalCmd->add_option("--element", element, "element JSON file, - or inline JSON")->required();

    auto* subalgCmd = app.add_subcommand("subalg", "the filtration g_m(z) and the subalgebra g(z)");
    subalgCmd->add_option("--element", element, "element JSON")->required();

    auto* gramCmd = app.add_subcommand("gram", "Gram matrix of Killing pairings");
    gramCmd->add_option("--element", element, "element JSON")->required();
    gramCmd->add_flag("--reduced", reduced, "pair filtration vectors instead of all Lyndon words");
    gramCmd->add_option("--degree", degree, "word degree cap (default dim g)");
    gramCmd->add_flag("--dump", dump, "include the matrix entries");

    auto* regularCmd = app.add_subcommand("regular", "K-regularity");
    regularCmd->require_subcommand(1);
    auto* regularTestCmd = regularCmd->add_subcommand("test", "certify whether g(z) = g");
    regularTestCmd->add_option("--element", element, "element JSON")->required();
    regularTestCmd->add_option("--degree", degree, "word degree cap (default dim g)");
    auto* constructCmd = regularCmd->add_subcommand("construct", "build a K-regular element from restricted roots");
    constructCmd->add_option("--datum", datumFile, "restricted-root datum JSON (catalog algebras have one built in)");
    constructCmd->add_flag("--dump", dump, "print the datum used");

    auto* nilconeCmd = app.add_subcommand("nilcone", "K-nilcone membership");
    nilconeCmd->require_subcommand(1);
    auto* nilconeTestCmd = nilconeCmd->add_subcommand("test", "certify whether z lies in Nil_K");
    nilconeTestCmd->add_option("--element", element, "element JSON")->required();

    app.add_subcommand("bounds", "degree bound r = C(2n, 2) dim p");

    auto* separateCmd = app.add_subcommand("separate", "search for an invariant separating two elements");
    std::vector<std::string> others;
    separateCmd->add_option("--element", element, "element JSON")->required();
    separateCmd->add_option("--other", others, "elements to compare against (repeatable)")->required();
    separateCmd->add_option("--degree", degree, "word degree cap (default dim g)");
    separateCmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* verifyCmd = app.add_subcommand("verify", "seeded property suites");
    VerifyOptions vopts;
    bool timing = false;
    verifyCmd->add_option("--suite", vopts.suite, "suite name")->check(CLI::IsMember(suiteNames()));
    verifyCmd->add_option("--seed", vopts.seed, "64-bit seed");
    verifyCmd->add_option("--samples", vopts.samples, "samples per suite");
    verifyCmd->add_option("--box", vopts.box, "sampling box half-width")->check(CLI::Range(1L, 1000000L));
    verifyCmd->add_option("--datum", datumFile, "restricted-root datum for the appendix suite");
    verifyCmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    verifyCmd->add_flag("--timing", timing, "include wall time in the JSON report");

    for (auto* cmd : {gramCmd, regularTestCmd, nilconeTestCmd, constructCmd, verifyCmd, separateCmd}) {
        cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*hallCmd) {
            const auto basis = lyndonBasis(degree);
            json out = json::array();
            for (std::size_t d = 1; d <= degree; ++d) {
                json words = json::array();
                for (const auto& w : basis[d - 1]) words.push_back({{"word", w.letters()}, {"bracket", w.bracketing()}});
                out.push_back({{"degree", d}, {"count", basis[d - 1].size()}, {"witt", wittDimension(d)}, {"words", words}});
            }
            emit({{"max_degree", degree}, {"cumulative", cumulativeWittDimension(degree)}, {"degrees", out}});
            return 0;
        }

        if (*algebraCmd && *validateCmd) {
            // A file is parsed without validation here so that every failing check is listed.
            SymmetricPair pair = algebraArgs.file.empty() ? loadPair(algebraArgs) : [&] {
                try {
                    return algebraFromJson(readJsonFile(algebraArgs.file));
                } catch (const ValidationError& e) {
                    emit(validationJson(e.report()));
                    throw;
                }
            }();
            const ValidationReport r = validate(pair.algebra, pair.cartan);
            emit(validationJson(r));
            return r.ok() ? 0 : kExitInput;
        }

        const SymmetricPair pair = loadPair(algebraArgs);
        const LieAlgebra& alg = pair.algebra;
        const CartanDecomposition& cd = pair.cartan;
        GramOptions gopts;
        gopts.degreeCap = degree;
        gopts.sizeLimit = gramLimit();
        gopts.jobs = jobs;

        if (*infoCmd) {
            if (dump) {
                emit(algebraToJson(alg, cd));
                return 0;
            }
            json k = json::array();
            for (const auto& v : cd.kBasis()) k.push_back(stringVector(v));
            json p = json::array();
            for (const auto& v : cd.pBasis()) p.push_back(stringVector(v));
            emit({{"name", alg.name()},
                  {"dim", alg.dim()},
                  {"dim_k", cd.kBasis().size()},
                  {"dim_p", cd.pBasis().size()},
                  {"basis_labels", alg.labels()},
                  {"k_basis", k},
                  {"p_basis", p}});
            return 0;
        }

        if (*evalCmd) {
            const Vec z = loadElement(element, alg);
            const ElementZ e = cd.decompose(z);
            const LyndonWord w(word);
            const Vec v = evaluateWord(alg, w, e.x, e.y);
            emit({{"word", w.letters()}, {"bracket", w.bracketing()}, {"value", vectorToJson(v)}, {"display", formatVec(v)}});
            return 0;
        }

        if (*subalgCmd) {
            const Vec z = loadElement(element, alg);
            const SubalgebraReport r = generatedSubalgebra(alg, cd, z);
            json basis = json::array();
            for (const auto& v : r.basis) basis.push_back(vectorToJson(v));
            emit({{"dim", r.dim},
                  {"stabilization_degree", r.stabilizationDegree},
                  {"per_degree_dims", r.perDegreeDims},
                  {"basis_degree", r.basisDegree},
                  {"basis", basis},
                  {"centralizer_in_k_dim", centralizerInK(alg, cd, r).size()}});
            return 0;
        }

        if (*gramCmd) {
            gopts.mode = reduced ? GramMode::Reduced : GramMode::Full;
            emit(gramMatrix(alg, cd, loadElement(element, alg), gopts).toJson(dump));
            return 0;
        }

        if (*regularTestCmd) {
            gopts.mode = GramMode::Auto;
            emit(isKRegular(alg, cd, loadElement(element, alg), gopts).toJson());
            return 0;
        }

        if (*nilconeTestCmd) {
            gopts.mode = GramMode::Auto;
            emit(nilconeTest(alg, cd, loadElement(element, alg), gopts).toJson());
            return 0;
        }

        if (*constructCmd) {
            const RestrictedRootDatum datum =
                datumFile.empty() ? catalogDatum(alg, cd) : datumFromJson(readJsonArg(datumFile), alg.dim());
            const ValidationReport vr = validateDatum(alg, cd, datum);
            if (!vr.ok()) throw ValidationError(vr);
            gopts.mode = GramMode::Auto;
            const RegularConstruction c = constructRegular(alg, cd, datum, gopts);
            json roots = json::array();
            for (const auto& v : c.rootVectors) roots.push_back(vectorToJson(v));
            json out = {{"element", elementToJson(c.element.z)},
                        {"display", formatVec(c.element.z)},
                        {"y_coords", stringVector(c.yCoords)},
                        {"x0", vectorToJson(c.x0)},
                        {"root_vectors", roots},
                        {"certificate", c.certificate.toJson()}};
            if (dump) out["datum"] = datumToJson(datum);
            emit(out);
            return 0;
        }

        if (app.got_subcommand("bounds")) {
            const DegreeBounds b = degreeBounds(alg, cd);
            emit({{"n", b.n}, {"two_n", b.twoN}, {"dim_p", b.dimP}, {"r", b.r.get_str()}});
            return 0;
        }

        if (*separateCmd) {
            const Vec z = loadElement(element, alg);
            const std::size_t cap = degree == 0 ? alg.dim() : degree;
            std::ostringstream csv;
            csv << "index,separated,kind,t,t_prime,power,degree,value_z,value_other\n";
            json rows = json::array();
            for (std::size_t i = 0; i < others.size(); ++i) {
                const auto sep = separationProbe(alg, cd, z, loadElement(others[i], alg), cap);
                rows.push_back(sep ? sep->toJson() : json());
                csv << i << ',' << (sep ? "true" : "false");
                if (sep) {
                    const bool pair = sep->kind == Separator::Kind::WordPair;
                    csv << ',' << (pair ? "word-pair" : "power-trace") << ',' << (pair ? sep->t->letters() : "") << ','
                        << (pair ? sep->tPrime->letters() : "") << ',' << (pair ? 0 : sep->power) << ',' << sep->degree
                        << ',' << csvField(sep->valueZ.str()) << ',' << csvField(sep->valueZPrime.str());
                } else {
                    csv << ",,,,,,,";
                }
                csv << '\n';
            }
            if (format == "csv") {
                std::cout << csv.str();
            } else {
                emit({{"degree_cap", cap}, {"results", rows}});
            }
            return 0;
        }

        if (*verifyCmd) {
            vopts.jobs = jobs;
            vopts.gramLimit = gopts.sizeLimit;
            if (!datumFile.empty()) vopts.datum = datumFromJson(readJsonArg(datumFile), alg.dim());
            const VerifyReport report = verifySuite(pair, vopts);
            if (format == "csv") {
                std::cout << report.toCsv();
            } else {
                emit(report.toJson(timing));
            }
            return report.totalFailures() == 0 ? 0 : kExitFailure;
        }
    } catch (const SoundnessError& e) {
        std::cerr << "kreg: soundness failure: " << e.what() << '\n';
        return kExitFailure;
    } catch (const ValidationError& e) {
        std::cerr << "kreg: " << e.what() << '\n';
        return kExitInput;
    } catch (const ParseError& e) {
        std::cerr << "kreg: parse error: " << e.what() << '\n';
        return kExitInput;
    } catch (const SizeLimitError& e) {
        std::cerr << "kreg: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "kreg: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "kreg: " << e.what() << '\n';
        return kExitInput;
    }
    return 0;
}
