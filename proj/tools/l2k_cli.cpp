// l2k: exact L²-Betti numbers, verification suites and the catalog.
//
//   l2k betti ALGEBRA.json [--max-degree N]
//   l2k verify lemmas|kuenneth-chain|kuenneth-betti|dim-mult [--trials N] [--seed S]
//   l2k catalog DESCRIPTOR.json | --rational p/q | --fixed-point c
//
// Exit codes: 0 ok, 1 parse, 2 validation, 3 ceiling, 4 verification failure,
// 5 internal error.

#include "l2k/catalog.hpp"
#include "l2k/errors.hpp"
#include "l2k/io.hpp"
#include "l2k/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

using namespace l2k;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kParse = 1, kValidation = 2, kCeiling = 3, kVerification = 4, kInternal = 5 };

struct Options {
    std::string backend = "exact";
    double tolerance = 1e-6;
    std::uint64_t ceiling = kDefaultCeiling;
    std::uint64_t seed = 42;
    std::size_t trials = 100;
    std::size_t max_degree = 2;
    std::string out;

    std::string algebra_file;
    std::string suite;
    std::string left_file, right_file;
    std::string descriptor_file;
    std::string rational;
    std::string fixed_point;
};

SuiteConfig suite_config(const Options& o)
{
    SuiteConfig c;
    c.seed = o.seed;
    c.trials = o.trials;
    c.backend = o.backend == "float" ? Backend::Float : Backend::Exact;
    c.tolerance = o.tolerance;
    c.ceiling = o.ceiling;
    return c;
}

Json config_json(const Options& o)
{
    return {{"backend", o.backend}, {"tolerance", o.tolerance}, {"ceiling", o.ceiling},
            {"seed", o.seed},       {"trials", o.trials},       {"max_degree", o.max_degree}};
}

Json checks_json(const std::vector<Check>& checks)
{
    Json arr = Json::array();
    for (const auto& c : checks)
        arr.push_back({{"name", c.name},
                       {"trial", c.trial},
                       {"status", c.passed ? "pass" : "fail"},
                       {"left", c.left},
                       {"right", c.right},
                       {"seconds", c.seconds}});
    return arr;
}

Json sequence_json(const BettiSequence& s)
{
    Json j = Json::object();
    for (const auto& [n, v] : s.support()) j[std::to_string(n)] = v.str();
    return j;
}

// Returns the exit code; fills `report`.
int cmd_betti(const Options& o, Json& report)
{
    const AlgebraPtr a = load_algebra(o.algebra_file);
    report["algebra"] = {{"file", o.algebra_file}, {"name", a->name()}, {"dim", a->dim()}};
    if (o.backend == "float") {
        const ChainComplex bar = bar_complex(a, o.max_degree + 1, o.ceiling);
        const FloatHomology h = homology_dimensions_float(bar, o.max_degree);
        Json b = Json::object();
        for (std::size_t n = 0; n < h.values.size(); ++n) b[std::to_string(n)] = format_double(h.values[n]);
        report["betti"] = b;
        report["depth"] = o.max_degree + 1;
        report["ill_conditioned"] = h.ill_conditioned;
        report["status"] = "pass";
        return kOk;
    }
    const BettiResult r = betti_numbers(a, o.max_degree, o.ceiling);
    Json b = Json::object();
    for (std::size_t n = 0; n < r.values.size(); ++n) b[std::to_string(n)] = r.values[n].str();
    report["betti"] = b;
    report["depth"] = r.depth;
    Json stab{{"checked", r.stabilization_checked}, {"stable", r.stabilized}};
    if (r.stabilization_checked) {
        Json rec = Json::object();
        for (std::size_t n = 0; n < r.recomputed.size(); ++n) rec[std::to_string(n)] = r.recomputed[n].str();
        stab["depth"] = r.depth + 1;
        stab["recomputed"] = rec;
    }
    report["stabilization"] = stab;
    const bool ok = !r.stabilization_checked || r.stabilized;
    report["status"] = ok ? "pass" : "fail";
    return ok ? kOk : kVerification;
}

int cmd_verify(const Options& o, Json& report)
{
    const SuiteConfig cfg = suite_config(o);
    SuiteResult r;
    if (o.suite == "lemmas") {
        r = lemma_suite(cfg);
    } else if (o.suite == "kuenneth-chain") {
        r = kuenneth_chain_suite(cfg);
    } else if (o.suite == "dim-mult") {
        r = dim_mult_suite(cfg);
    } else if (o.suite == "kuenneth-betti") {
        const AlgebraPtr a = o.left_file.empty() ? group_algebra(cyclic_group(2)) : load_algebra(o.left_file);
        const AlgebraPtr b = o.right_file.empty() ? multi_matrix_algebra({2}, {Rational(1, 2)}) : load_algebra(o.right_file);
        report["algebras"] = {a->name(), b->name()};
        r = kuenneth_betti_suite(a, b, o.max_degree, cfg);
    } else {
        throw ParseError("unknown suite " + o.suite);
    }
    report["suite"] = r.suite;
    report["summary"] = {{"checks", r.checks.size()}, {"failures", r.failures()}};
    report["checks"] = checks_json(r.checks);
    report["status"] = r.passed() ? "pass" : "fail";
    return r.passed() ? kOk : kVerification;
}

// "p/q" or "p" as two positive integers, kept unreduced.
std::pair<std::uint64_t, std::uint64_t> parse_fraction(const std::string& s)
{
    const auto slash = s.find('/');
    try {
        std::size_t used = 0;
        const std::string ps = s.substr(0, slash);
        const std::uint64_t p = std::stoull(ps, &used);
        if (used != ps.size()) throw std::invalid_argument(s);
        std::uint64_t q = 1;
        if (slash != std::string::npos) {
            const std::string qs = s.substr(slash + 1);
            q = std::stoull(qs, &used);
            if (used != qs.size()) throw std::invalid_argument(s);
        }
        if (p == 0 || q == 0 || s.front() == '-') throw std::invalid_argument(s);
        return {p, q};
    } catch (const std::exception&) {
        throw ParseError("expected a positive fraction p/q, got \"" + s + "\"");
    }
}

int cmd_catalog(const Options& o, Json& report)
{
    const int given = !o.descriptor_file.empty() + !o.rational.empty() + !o.fixed_point.empty();
    if (given != 1) throw ParseError("catalog needs exactly one of DESCRIPTOR, --rational, --fixed-point");

    if (!o.fixed_point.empty()) {
        Rational c;
        try {
            c = Rational::parse(o.fixed_point);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        if (c.sign() <= 0 || c >= Rational(1)) throw ValidationError("--fixed-point: c must lie in (0, 1)");
        Json sols = Json::array();
        for (const auto& x : fixed_point_classify(c)) sols.push_back(x.str());
        report["fixed_point"] = {{"c", c.str()}, {"solutions", sols}};
        report["status"] = "pass";
        return kOk;
    }

    DescriptorPtr d;
    if (!o.rational.empty()) {
        const auto [p, q] = parse_fraction(o.rational);
        d = rational_first_betti(p, q);
        report["target"] = Rational(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q)).str();
    } else {
        d = load_descriptor(o.descriptor_file);
    }
    report["descriptor"] = Json::parse(descriptor_to_text(d));
    report["describe"] = describe(d);
    report["betti"] = sequence_json(betti_of(d, o.ceiling));
    report["status"] = "pass";
    return kOk;
}

void emit(const Json& report, const std::string& out)
{
    const std::string text = report.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw ParseError("cannot write " + out);
    f << text;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact L2-Betti numbers of finite-dimensional tracial algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--backend", o.backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--tolerance", o.tolerance, "float agreement tolerance")->check(CLI::PositiveNumber);
    app.add_option("--ceiling", o.ceiling, "max scalar dimension d^(depth+2) of a bar module")
        ->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
    app.add_option("--seed", o.seed, "seed for randomized suites");
    app.add_option("--trials", o.trials, "trials per suite")->check(CLI::Range(std::size_t{1}, SIZE_MAX));
    app.add_option("--max-degree", o.max_degree, "highest Betti degree");
    app.add_option("--out", o.out, "write the report here instead of stdout");

    auto* betti = app.add_subcommand("betti", "Betti numbers from the truncated bar complex");
    betti->add_option("algebra", o.algebra_file, "algebra description file")->required();
    auto* verify = app.add_subcommand("verify", "seeded verification suite");
    verify->add_option("suite", o.suite, "lemmas | kuenneth-chain | kuenneth-betti | dim-mult")
        ->required()
        ->check(CLI::IsMember({"lemmas", "kuenneth-chain", "kuenneth-betti", "dim-mult"}));
    verify->add_option("--left", o.left_file, "kuenneth-betti: first algebra file (default Z/2)");
    verify->add_option("--right", o.right_file, "kuenneth-betti: second algebra file (default M2)");
    auto* catalog = app.add_subcommand("catalog", "Betti sequence of a catalog descriptor");
    catalog->add_option("descriptor", o.descriptor_file, "descriptor file");
    catalog->add_option("--rational", o.rational, "build a descriptor with first Betti number p/q");
    catalog->add_option("--fixed-point", o.fixed_point, "solve x = c*x in [0, inf] for c in (0, 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    Json report;
    Json argv_echo = Json::array();
    for (int i = 1; i < argc; ++i) argv_echo.push_back(argv[i]);
    report["command"] = {{"name", app.get_subcommands().front()->get_name()}, {"argv", argv_echo}};
    report["config"] = config_json(o);

    const auto t0 = std::chrono::steady_clock::now();
    int code = kOk;
    auto fail = [&](int c, const char* kind, const std::exception& e) {
        std::cerr << "l2k: " << e.what() << "\n";
        report["status"] = "error";
        report["error"] = {{"kind", kind}, {"message", e.what()}};
        code = c;
    };
    try {
        if (betti->parsed())
            code = cmd_betti(o, report);
        else if (verify->parsed())
            code = cmd_verify(o, report);
        else
            code = cmd_catalog(o, report);
    } catch (const ParseError& e) {
        fail(kParse, "parse", e);
    } catch (const ValidationError& e) {
        fail(kValidation, "validation", e);
    } catch (const DepthTooLarge& e) {
        fail(kCeiling, "ceiling", e);
    } catch (const std::exception& e) {
        fail(kInternal, "internal", e);
    }
    report["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};

    try {
        emit(report, o.out);
    } catch (const std::exception& e) {
        std::cerr << "l2k: " << e.what() << "\n";
        return code == kOk ? kParse : code;
    }
    return code;
}
