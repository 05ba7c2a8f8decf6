// Command-line front end: exact point sums, randomized property suites, and
// the symbolic identity prover. All reports are machine-readable with --json;
// identical argv + seed give byte-identical output (the prover's elapsed_ms
// field is the one documented exception).
//
// Exit codes: 0 success / all checks passed, 1 a property check failed,
// 2 usage or input error (including non-generic inputs to sum3/sumn).

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ecsum/identity.hpp"
#include "ecsum/io.hpp"
#include "ecsum/multisum.hpp"
#include "ecsum/suites.hpp"
#include "ecsum/symsum3.hpp"

namespace {

using ecsum::Json;

struct Options {
    std::string curve_text = "Fp:10007";
    uint64_t seed = 0;
    uint64_t trials = 0;  // 0 = subcommand default
    bool json = false;

    std::string points_text;
    std::string input_path;
    std::string method = "closed-form";
    int n_min = 2;
    int n_max = 8;
    std::string suite;
    std::string identity;
    std::string prime_text = "2305843009213693951";  // 2^61 - 1
    uint64_t timeout_ms = 50000;
};

void add_common_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--curve", opt.curve_text,
                    "Curve descriptor: (\"Q\"|\"Fp:<prime>\")[,a=<val>,b=<val>]");
    cmd->add_option("--seed", opt.seed, "Random seed for the trial streams");
    cmd->add_option("--trials", opt.trials, "Number of randomized trials");
    cmd->add_flag("--json", opt.json, "Machine-readable JSON output");
}

void emit(const Options& opt, const Json& j, const std::string& human) {
    if (opt.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << human << "\n";
    }
}

const char* error_kind(const std::exception& e) {
    if (dynamic_cast<const ecsum::NonGenericError*>(&e)) return "non_generic";
    if (dynamic_cast<const ecsum::PointNotOnCurveError*>(&e)) return "point_not_on_curve";
    if (dynamic_cast<const ecsum::ParseError*>(&e)) return "parse";
    if (dynamic_cast<const ecsum::FieldMismatchError*>(&e)) return "field_mismatch";
    if (dynamic_cast<const ecsum::DivisionByZeroError*>(&e)) return "division_by_zero";
    if (dynamic_cast<const ecsum::BadPrimeError*>(&e)) return "bad_prime";
    if (dynamic_cast<const ecsum::SingularCurveError*>(&e)) return "singular_curve";
    if (dynamic_cast<const ecsum::ZeroDenominatorError*>(&e)) return "zero_denominator";
    if (dynamic_cast<const ecsum::ArityMismatchError*>(&e)) return "arity_mismatch";
    return "internal";
}

int fail_with(const Options& opt, const std::exception& e) {
    const std::string kind = error_kind(e);
    if (opt.json) {
        Json j;
        j["error"] = kind;
        if (kind == "non_generic") {
            j["hypothesis"] = e.what();
        } else {
            j["message"] = e.what();
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cerr << "error (" << kind << "): " << e.what() << "\n";
    }
    return 2;
}

int run_add(const Options& opt) {
    const ecsum::Curve curve = ecsum::parse_curve_descriptor(opt.curve_text);
    const auto points = ecsum::parse_point_list(opt.points_text, curve.field());
    if (points.size() != 2) {
        throw ecsum::ParseError("add needs exactly two points");
    }
    const ecsum::Point sum = curve.add(points[0], points[1]);
    emit(opt, ecsum::point_to_json(sum), sum.to_string());
    return 0;
}

int run_sum3(const Options& opt) {
    const ecsum::Curve curve = ecsum::parse_curve_descriptor(opt.curve_text);
    const auto points = ecsum::parse_point_list(opt.points_text, curve.field());
    if (points.size() != 3) {
        throw ecsum::ParseError("sum3 needs exactly three points");
    }
    const ecsum::Point sum = ecsum::sum3_symmetric(points[0], points[1], points[2], curve);
    const auto coeffs = ecsum::triple_coeffs(points[0], points[1], points[2]);
    Json j;
    j["x4"] = sum.x().to_string();
    j["y4"] = sum.y().to_string();
    j["V"] = coeffs.V.to_string();
    j["c0"] = coeffs.c0.to_string();
    j["c1"] = coeffs.c1.to_string();
    j["c2"] = coeffs.c2.to_string();
    std::ostringstream human;
    human << "P4 = " << sum.to_string() << "  [V=" << coeffs.V.to_string()
          << " c0=" << coeffs.c0.to_string() << " c1=" << coeffs.c1.to_string()
          << " c2=" << coeffs.c2.to_string() << "]";
    emit(opt, j, human.str());
    return 0;
}

int run_sumn(const Options& opt) {
    std::optional<ecsum::Curve> curve;
    std::vector<ecsum::Point> points;
    if (!opt.input_path.empty()) {
        Json doc;
        if (opt.input_path == "-") {
            doc = Json::parse(std::cin, nullptr, true);
        } else {
            std::ifstream in(opt.input_path);
            if (!in) throw ecsum::ParseError("cannot open input file: " + opt.input_path);
            doc = Json::parse(in, nullptr, true);
        }
        if (!doc.is_object() || !doc.contains("curve") || !doc.contains("points")) {
            throw ecsum::ParseError("sumn input must be {\"curve\":{...},\"points\":[...]}");
        }
        curve = ecsum::curve_from_json(doc.at("curve"));
        for (const auto& pj : doc.at("points")) {
            points.push_back(ecsum::point_from_json(pj, curve->field()));
        }
    } else {
        curve = ecsum::parse_curve_descriptor(opt.curve_text);
        points = ecsum::parse_point_list(opt.points_text, curve->field());
    }

    const bool iterated = opt.method == "iterated";
    if (!iterated && opt.method != "closed-form" && opt.method != "closed") {
        throw ecsum::ParseError("sumn method must be closed-form or iterated");
    }

    const ecsum::Point sum = iterated ? ecsum::iterated_sum(points, *curve)
                                      : ecsum::multisum(points, *curve);

    Json j;
    if (sum.is_infinity()) {
        j["result"] = "O";
    } else {
        j["x"] = sum.x().to_string();
        j["y"] = sum.y().to_string();
    }
    bool cof_ok = points.size() >= 2;
    for (const auto& p : points) cof_ok = cof_ok && p.is_affine();
    if (cof_ok) {
        Json cof = Json::array();
        const ecsum::SumCofactors c = ecsum::cofactors(points);
        for (int l = 0; l <= c.n(); ++l) cof.push_back(c.c(l).to_string());
        j["cofactors"] = cof;
    } else {
        j["cofactors"] = nullptr;
    }
    j["method"] = iterated ? "iterated" : "closed-form";
    emit(opt, j, sum.to_string() + "  [" + j["method"].get<std::string>() + "]");
    return 0;
}

int run_check(const Options& opt) {
    const ecsum::Curve curve = ecsum::parse_curve_descriptor(opt.curve_text);
    const uint64_t trials = opt.trials == 0 ? 1000 : opt.trials;

    ecsum::SuiteResult result;
    if (opt.suite == "assoc") {
        result = ecsum::run_assoc_suite(curve, trials, opt.seed);
    } else if (opt.suite == "sum3") {
        result = ecsum::run_sum3_suite(curve, trials, opt.seed);
    } else if (opt.suite == "multisum") {
        result = ecsum::run_multisum_suite(curve, opt.n_min, opt.n_max, trials, opt.seed);
    } else if (opt.suite == "vanishing") {
        result = ecsum::run_vanishing_suite(curve, opt.n_min, opt.n_max, trials, opt.seed);
    } else {
        throw ecsum::ParseError("unknown suite (want assoc|sum3|multisum|vanishing): " +
                                opt.suite);
    }

    Json j;
    j["command"] = "check";
    j["curve"] = ecsum::curve_to_json(curve);
    Json rj = ecsum::suite_result_to_json(result);
    for (auto& [key, value] : rj.items()) j[key] = value;

    std::ostringstream human;
    human << "suite " << result.name << ": " << (result.passed() ? "PASS" : "FAIL") << " ("
          << result.checks << " checks, " << result.failures << " failures, seed "
          << result.seed << ")";
    for (const auto& [key, value] : result.counters) {
        human << "\n  " << key << ": " << value;
    }
    for (const auto& note : result.failure_notes) {
        human << "\n  FAIL " << note;
    }
    emit(opt, j, human.str());
    return result.passed() ? 0 : 1;
}

int run_prove(const Options& opt) {
    const auto started = std::chrono::steady_clock::now();
    std::string mode = "exact";
    int trials = 0;
    bool result = false;
    Json prime = nullptr;

    const mpz_class prime_value(opt.prime_text);
    const int sz_trials = opt.trials == 0 ? 20 : static_cast<int>(opt.trials);

    if (opt.identity == "eq2") {
        result = ecsum::check_builtin(ecsum::BuiltinIdentity::Eq2, false);
    } else if (opt.identity == "lemma") {
        result = ecsum::check_builtin(ecsum::BuiltinIdentity::Lemma, true);
    } else if (opt.identity == "theorem2") {
        result = ecsum::check_builtin(ecsum::BuiltinIdentity::Theorem2X, true) &&
                 ecsum::check_builtin(ecsum::BuiltinIdentity::Theorem2Y, true);
    } else if (opt.identity == "detm3") {
        try {
            result = ecsum::check_detm3_exact(std::chrono::milliseconds(opt.timeout_ms));
        } catch (const ecsum::ExpansionTimeout&) {
            ecsum::SzOptions sz;
            sz.trials = sz_trials;
            sz.prime = prime_value;
            mode = "schwartz-zippel";
            trials = sz.trials;
            prime = sz.prime.get_str();
            result = ecsum::sz_check_detm(3, sz, opt.seed);
        }
    } else if (opt.identity.rfind("detm:", 0) == 0) {
        const int n = std::stoi(opt.identity.substr(5));
        ecsum::SzOptions sz;
        sz.trials = sz_trials;
        sz.prime = prime_value;
        mode = "schwartz-zippel";
        trials = sz.trials;
        prime = sz.prime.get_str();
        result = ecsum::sz_check_detm(n, sz, opt.seed);
    } else {
        throw ecsum::ParseError(
            "unknown identity (want eq2|lemma|theorem2|detm3|detm:<n>): " + opt.identity);
    }

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    Json j;
    j["identity"] = opt.identity;
    j["mode"] = mode;
    j["result"] = result;
    j["trials"] = trials;
    j["prime"] = prime;
    j["elapsed_ms"] = elapsed;

    std::ostringstream human;
    human << "identity " << opt.identity << ": " << (result ? "holds" : "FAILS") << " ("
          << mode << ", " << elapsed << " ms)";
    emit(opt, j, human.str());
    return result ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact elliptic-curve sums: chord-tangent addition, determinant closed "
                 "forms, and a symbolic identity prover"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* add = app.add_subcommand("add", "Add two points with the full addition law");
    add_common_options(add, opt);
    add->add_option("--points", opt.points_text, "Two points: \"(x,y);(x,y)\" (O allowed)")
        ->required();

    CLI::App* sum3 =
        app.add_subcommand("sum3", "Three-point sum via the symmetric determinant form");
    add_common_options(sum3, opt);
    sum3->add_option("--points", opt.points_text, "Three points: \"(x,y);(x,y);(x,y)\"")
        ->required();

    CLI::App* sumn = app.add_subcommand("sumn", "n-point sum via determinant cofactors");
    add_common_options(sumn, opt);
    sumn->add_option("--points", opt.points_text, "Points: \"(x,y);...\"");
    sumn->add_option("--input", opt.input_path,
                     "JSON file {\"curve\":{...},\"points\":[...]} ('-' for stdin)");
    sumn->add_option("--method", opt.method, "closed-form (default) or iterated");

    CLI::App* check = app.add_subcommand("check", "Run a randomized property suite");
    add_common_options(check, opt);
    check->add_option("suite", opt.suite, "assoc|sum3|multisum|vanishing")->required();
    check->add_option("--nmin", opt.n_min, "Smallest point count (multisum/vanishing)");
    check->add_option("--nmax", opt.n_max, "Largest point count (multisum/vanishing)");

    CLI::App* prove = app.add_subcommand("prove", "Machine-check a symbolic identity");
    add_common_options(prove, opt);
    prove->add_option("identity", opt.identity, "eq2|lemma|theorem2|detm3|detm:<n>")
        ->required();
    prove->add_option("--prime", opt.prime_text, "Field size for randomized checking");
    prove->add_option("--timeout-ms", opt.timeout_ms,
                      "Exact-expansion deadline before falling back to randomized checking");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (add->parsed()) return run_add(opt);
        if (sum3->parsed()) return run_sum3(opt);
        if (sumn->parsed()) return run_sumn(opt);
        if (check->parsed()) return run_check(opt);
        if (prove->parsed()) return run_prove(opt);
    } catch (const std::exception& e) {
        return fail_with(opt, e);
    }
    return 2;
}
