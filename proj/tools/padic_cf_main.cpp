// padic-cf: exact Browkin p-adic continued fractions, heights and the
// transcendence-family generators, behind one command-line surface.
//
// Exit codes: 0 success (all audited invariants pass), 2 invariant
// violation (violating datum printed), 1 usage or I/O error.

#include "padic_cf/cf_engine.hpp"
#include "padic_cf/config.hpp"
#include "padic_cf/errors.hpp"
#include "padic_cf/families.hpp"
#include "padic_cf/floors.hpp"
#include "padic_cf/heights.hpp"
#include "padic_cf/json_io.hpp"
#include "padic_cf/prng.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

using namespace padic_cf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct RunConfig {
    long long p = 5;
    long long precision = 256;
    long long max_steps = 10000;
    std::uint64_t seed = 1;
    std::string output = "human";
};

using Value = std::variant<Rat, QuadSurd>;

Value parse_value(const std::string& text, long long p, const std::string& branch) {
    if (text.find("sqrt") != std::string::npos)
        return QuadSurd::parse(text, p, branch == "-" ? -1 : 1);
    return Rat::parse(text);
}

CFExpansion expand_value(const Value& value, long long p, const ExpandOptions& options) {
    if (std::holds_alternative<Rat>(value)) return expand(std::get<Rat>(value), p, options);
    return expand(std::get<QuadSurd>(value), options);
}

std::string quotients_human(const CFExpansion& cf) {
    std::string out = "[";
    auto qs = cf.quotients();
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (i) out += ", ";
        out += qs[i].to_string();
    }
    out += "], " + cf.status.to_string();
    return out;
}

void emit(const Json& j, const RunConfig& config, const std::string& human) {
    if (config.output == "json")
        std::cout << j.dump(2) << "\n";
    else if (config.output == "human")
        std::cout << human << "\n";
}

int cmd_expand(const RunConfig& config, const std::string& value_text, const std::string& branch,
               const std::string& kind_name) {
    ExpandOptions options;
    options.max_steps = config.max_steps;
    options.kind = floor_kind_from_string(kind_name);
    CFExpansion cf = expand_value(parse_value(value_text, config.p, branch), config.p, options);
    if (config.output == "csv")
        std::cout << expansion_to_csv(cf);
    else
        emit(to_json(cf), config, quotients_human(cf));
    return kExitOk;
}

int cmd_euclid(const RunConfig& config, const std::string& x0_text, const std::string& x1_text) {
    Rat x0 = Rat::parse(x0_text), x1 = Rat::parse(x1_text);
    auto steps = euclid_algorithm(x0, x1, config.p);
    Json j{{"schema", kSchemaVersion}, {"p", config.p}, {"steps", Json::array()}};
    std::string human;
    bool remainder_ok = true;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const EuclidStep& s = steps[i];
        j["steps"].push_back(Json{{"x", s.x.to_string()},
                                  {"y", s.y.to_string()},
                                  {"q", to_json(s.q)},
                                  {"r", s.r.to_string()}});
        human += "step " + std::to_string(i) + ": q = " + s.q.to_string() + ", r = " + s.r.to_string() + "\n";
        if (!s.r.is_zero() && !(vp(s.r, config.p) > vp(s.y, config.p))) remainder_ok = false;
    }
    human += "quotients match expand(" + (x0 / x1).to_string() + ")";
    j["remainder_contract"] = remainder_ok;
    emit(j, config, human);
    if (config.output == "csv") {
        std::cout << "i,q_u,q_a,r\n";
        for (std::size_t i = 0; i < steps.size(); ++i)
            std::cout << i << "," << steps[i].q.u.str() << "," << steps[i].q.a << "," << steps[i].r.to_string()
                      << "\n";
    }
    if (!remainder_ok) {
        std::cerr << "remainder bound |r|_p < |y|_p violated\n";
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_convergents(const RunConfig& config, const std::string& value_text, const std::string& branch,
                    long long count) {
    ExpandOptions options;
    options.max_steps = config.max_steps;
    CFExpansion cf = expand_value(parse_value(value_text, config.p, branch), config.p, options);
    long long n = count < 0 ? cf.length() : std::min(count, cf.length());
    ConvergentTable table = convergents(cf, n);
    if (config.output == "csv") {
        std::cout << convergents_to_csv(table);
        return kExitOk;
    }
    std::string human;
    for (const auto& row : table.rows)
        human += "n=" + std::to_string(row.n) + "  A=" + row.A.to_string() + "  B=" + row.B.to_string() +
                 "  e=" + row.e.to_string() + "  f=" + row.f.to_string() + "\n";
    emit(to_json(table), config, human);
    return kExitOk;
}

int cmd_floor(const RunConfig& config, const std::string& value_text, const std::string& branch,
              const std::string& kind_name) {
    FloorKind kind = floor_kind_from_string(kind_name);
    Value value = parse_value(value_text, config.p, branch);
    PartialQuotient s = std::holds_alternative<Rat>(value)
                            ? padic_floor(std::get<Rat>(value), config.p, kind)
                            : padic_floor(std::get<QuadSurd>(value), kind);
    FloorContractReport contract = std::holds_alternative<Rat>(value)
                                       ? check_floor_contract(std::get<Rat>(value), config.p, kind)
                                       : check_floor_contract(std::get<QuadSurd>(value), kind);
    Json j{{"schema", kSchemaVersion}, {"p", config.p},     {"kind", to_string(kind)},
           {"floor", to_json(s)},      {"value", s.to_rat().to_string()}, {"contract", to_json(contract)}};
    emit(j, config,
         "floor = " + s.to_string() + "  (S-integers: " + (contract.in_s_integers ? "yes" : "NO") +
             ", |s|_inf < p/2: " + (contract.archimedean_bound ? "yes" : "NO") +
             ", |x - s|_p < 1: " + (contract.padic_contraction ? "yes" : "NO") + ")");
    return kExitOk;
}

int cmd_height(const RunConfig& config, const std::string& cf_file, const std::string& check) {
    Json spec = load_json_file(cf_file);
    PeriodicCF cf = periodic_cf_from_json(spec);
    if (cf.p != config.p)
        std::cerr << "note: using p = " << cf.p << " from the CF file\n";

    if (check == "h1") {
        HeightReport rep = check_h1_bound(cf);
        emit(to_json(rep, "h1"), config,
             "h = " + rep.naive_h.str() + "\nbound = " + rep.bound_value.to_string() + "\n" +
                 (rep.bound_holds ? "PASS" : "FAIL"));
        return rep.bound_holds ? kExitOk : kExitViolation;
    }
    if (check == "h2") {
        if (cf.period.size() != 1 || !cf.period[0].is_p_inverse())
            throw ParseError("h2 requires the period [overline(1/p)]");
        std::vector<PartialQuotient> prefix(cf.preperiod.begin() + 1, cf.preperiod.end());
        HeightReport rep = check_h2_bound(prefix, cf.p);
        emit(to_json(rep, "h2"), config,
             "h = " + rep.naive_h.str() + "\nbound = " + rep.bound_value.to_string() + "\n" +
                 (rep.bound_holds ? "PASS" : "FAIL"));
        return rep.bound_holds ? kExitOk : kExitViolation;
    }
    if (check == "remark") {
        QuadraticRelation rel = periodic_to_relation(cf);
        RemarkReport rep = check_remark_H(rel);
        bool pass = rep.upper_holds && rep.lower_holds;
        emit(to_json(rep), config,
             "h = " + std::to_string(rep.naive_h) + ", H = " + std::to_string(rep.weil_H) + "\n" +
                 (pass ? "PASS" : "FAIL"));
        return pass ? kExitOk : kExitViolation;
    }
    throw ParseError("unknown height check '" + check + "'");
}

Json sequence_json(const std::vector<PartialQuotient>& quotients) {
    Json arr = Json::array();
    for (const auto& b : quotients) arr.push_back(to_json(b));
    return arr;
}

int emit_family(const RunConfig& config, const GeneratedSequence& gen, bool emit_certificate) {
    Json j{{"schema", kSchemaVersion}, {"p", config.p}, {"quotients", sequence_json(gen.quotients)}};
    if (emit_certificate) j["certificate"] = to_json(gen.certificate);
    std::string human = "generated " + std::to_string(gen.quotients.size()) + " quotients\n";
    for (const auto& e : gen.certificate.entries)
        human += std::string(e.pass ? "PASS " : "FAIL ") + e.hypothesis + (e.note.empty() ? "" : "  (" + e.note + ")") +
                 "\n";
    emit(j, config, human);
    if (!gen.certificate.all_pass) {
        for (const auto& e : gen.certificate.entries)
            if (!e.pass) std::cerr << "certificate violation: " << e.hypothesis << " " << e.note << "\n";
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_family(const RunConfig& config, const std::string& family, const std::string& spec_file, long long length,
               bool emit_certificate) {
    if (family == "qper" || family == "ooto") {
        if (spec_file.empty()) throw ParseError("family " + family + " needs --spec FILE.json");
        Json spec_json = load_json_file(spec_file);
        if (family == "qper") {
            QPerSpec spec = qper_spec_from_json(spec_json);
            long long n = length > 0 ? length : spec.run_end(spec.runs() - 1) + 1;
            return emit_family(config, gen_qper(spec, n, config.seed), emit_certificate);
        }
        OotoSpec spec = ooto_spec_from_json(spec_json);
        if (spec_json.contains("blocks")) {
            for (const auto& blk : spec_json.at("blocks")) {
                std::vector<PartialQuotient> block;
                for (const auto& q : blk) block.push_back(partial_quotient_from_json(q, spec.p));
                spec.blocks.push_back(std::move(block));
            }
        }
        long long n = length > 0 ? length : spec.run_end(spec.runs() - 1) + 1;
        return emit_family(config, gen_ooto(spec, n, config.seed), emit_certificate);
    }
    if (family == "sturmian") {
        if (spec_file.empty()) throw ParseError("family sturmian needs --spec FILE.json");
        Json spec = load_json_file(spec_file);
        SturmianSlope slope{QuadSurd::parse(spec.at("theta").get<std::string>(), config.p,
                                            spec.value("branch", std::string("+")) == "-" ? -1 : 1),
                            partial_quotient_from_json(spec.at("a"), config.p),
                            partial_quotient_from_json(spec.at("b"), config.p)};
        auto word = gen_sturmian(slope, length > 0 ? length : 64);
        Json j{{"schema", kSchemaVersion}, {"p", config.p}, {"quotients", sequence_json(word)}};
        std::string human;
        for (const auto& c : word) human += c == slope.a ? "a" : "b";
        emit(j, config, human);
        return kExitOk;
    }
    if (family == "thue-morse") {
        PartialQuotient a = PartialQuotient::p_inverse(config.p);
        PartialQuotient b(config.p, 2, 2);
        if (!spec_file.empty()) {
            Json spec = load_json_file(spec_file);
            a = partial_quotient_from_json(spec.at("a"), config.p);
            b = partial_quotient_from_json(spec.at("b"), config.p);
        }
        auto word = gen_thue_morse(a, b, length > 0 ? length : 64);
        Json j{{"schema", kSchemaVersion}, {"p", config.p}, {"quotients", sequence_json(word)}};
        std::string human;
        for (const auto& c : word) human += c == a ? "a" : "b";
        emit(j, config, human);
        return kExitOk;
    }
    throw ParseError("unknown family '" + family + "'");
}

int cmd_audit(const RunConfig& config, const std::string& which, long long count) {
    Prng rng(config.seed);
    Json results = Json::array();
    long long failures = 0;
    if (which == "h1") {
        for (long long i = 0; i < count; ++i) {
            PeriodicCF cf;
            cf.p = config.p;
            cf.preperiod.push_back(PartialQuotient::zero(config.p));
            long long k = rng.range(1, 4), t1 = rng.range(1, 4);
            long long half = (config.p - 1) / 2;
            auto small = [&] {
                while (true) {
                    long long u = rng.range(-half, half);
                    if (u != 0) return PartialQuotient(config.p, u, rng.range(1, 4));
                }
            };
            for (long long j = 0; j < k; ++j) cf.preperiod.push_back(small());
            for (long long j = 0; j < t1; ++j) cf.period.push_back(small());
            HeightReport rep = check_h1_bound(cf);
            Rat approx = unrolled_approximant(cf, 72);
            bool residual_ok = relation_residual_valuation(rep.relation, approx) >= 60;
            if (!rep.bound_holds || !residual_ok) {
                ++failures;
                results.push_back(Json{{"cf", to_json(cf)}, {"report", to_json(rep, "h1")}});
            }
        }
    } else if (which == "h2") {
        for (long long i = 0; i < count; ++i) {
            long long k = rng.range(1, 5);
            long long a_min = 2 + k / 2;
            std::vector<PartialQuotient> prefix;
            for (long long j = 0; j < k; ++j) {
                Int fib = fibonacci(k + 1);
                Int cap = isqrt_int(3 * pow_int(Int(config.p), 2 * a_min) / (14 * fib * fib));
                long long cap_ll = cap < 1 ? 1 : (cap > 10000 ? 10000 : cap.convert_to<long long>());
                long long u = 0;
                do {
                    u = rng.range(-cap_ll, cap_ll);
                } while (u == 0 || u % config.p == 0);
                prefix.push_back(PartialQuotient(config.p, u, a_min + rng.range(0, 2)));
            }
            if (!hypothesis1_check(prefix, config.p).passes) {
                --i;
                continue;
            }
            HeightReport rep = check_h2_bound(prefix, config.p);
            if (!rep.bound_holds) {
                ++failures;
                results.push_back(to_json(rep, "h2"));
            }
        }
    } else {
        throw ParseError("unknown audit '" + which + "'");
    }
    Json j{{"schema", kSchemaVersion}, {"audit", which},          {"p", config.p},
           {"count", count},           {"failures", failures},    {"violating", results}};
    emit(j, config, "audit " + which + ": " + std::to_string(count - failures) + "/" + std::to_string(count) +
                        " pass");
    return failures == 0 ? kExitOk : kExitViolation;
}

struct SweepSuiteResult {
    std::string suite;
    long long checked = 0;
    long long violations = 0;
    Json counterexamples = Json::array();
};

int cmd_sweep(const RunConfig& config, const std::string& spec_file, const std::string& floor_name) {
    std::vector<long long> primes{3, 5, 7, 11};
    long long samples = 200;
    std::vector<std::string> suites{"termination", "valuation_laws", "determinant", "euclid", "floor_contract"};
    if (!spec_file.empty()) {
        Json spec = load_json_file(spec_file);
        if (!spec.contains("primes") || spec.at("primes").empty()) throw ParseError("sweep spec lists no primes");
        primes = spec.at("primes").get<std::vector<long long>>();
        samples = spec.value("samples", 200LL);
        if (spec.contains("suites")) suites = spec.at("suites").get<std::vector<std::string>>();
        if (suites.empty()) throw ParseError("sweep spec lists no suites");
    }
    FloorKind kind = floor_kind_from_string(floor_name);

    Json matrix = Json::array();
    long long total_violations = 0;
    for (long long p : primes) {
        for (const std::string& suite : suites) {
            SweepSuiteResult result;
            result.suite = suite;
            Prng rng(config.seed ^ (static_cast<std::uint64_t>(p) << 32));
            for (long long i = 0; i < samples; ++i) {
                Rat x = [&] {
                    while (true) {
                        long long num = rng.range(-1000000, 1000000);
                        long long den = rng.range(1, 1000000);
                        if (num != 0 || suite == "termination") return Rat(Int(num), Int(den));
                    }
                }();
                ++result.checked;
                auto record = [&](const std::string& what) {
                    ++result.violations;
                    if (result.counterexamples.size() < 5)
                        result.counterexamples.push_back(Json{{"input", x.to_string()}, {"violated", what}});
                };
                try {
                    if (suite == "termination") {
                        ExpandOptions opt;
                        opt.kind = kind;
                        opt.max_steps = config.max_steps;
                        CFExpansion cf = expand(x, p, opt);
                        if (cf.status.kind != ExpansionStatus::Kind::Finite)
                            record("finite expansion");
                        else if (fold_finite(cf.quotients(), p) != x)
                            record("exact reconstruction");
                    } else if (suite == "valuation_laws") {
                        ExpandOptions opt;
                        opt.kind = kind;
                        opt.record_quotients = true;
                        opt.max_steps = config.max_steps;
                        CFExpansion cf = expand(x, p, opt);
                        ConvergentTable table = convergents(cf, cf.length());
                        ValuationLawReport rep = check_valuation_laws(table, cf);
                        if (!rep.all_hold) {
                            for (const auto& law : rep.laws)
                                if (!law.holds) record(law.law + ": " + law.detail);
                        }
                    } else if (suite == "determinant") {
                        ExpandOptions opt;
                        opt.kind = kind;
                        opt.max_steps = config.max_steps;
                        CFExpansion cf = expand(x, p, opt);
                        ConvergentTable table = convergents(cf, cf.length());
                        for (long long n = 0; n <= table.max_index(); ++n) {
                            Rat det = table.at(n).A * table.at(n - 1).B - table.at(n - 1).A * table.at(n).B;
                            if (det != (n % 2 == 0 ? Rat(-1) : Rat(1))) {
                                record("determinant at n = " + std::to_string(n));
                                break;
                            }
                        }
                    } else if (suite == "euclid") {
                        Rat y = Rat(Int(rng.range(1, 1000000)), Int(rng.range(1, 1000000)));
                        EuclidStep s = euclid_divide(x, y, p);
                        if (s.q != padic_floor(x / y, p, FloorKind::Browkin))
                            record("q = floor(x/y) with y = " + y.to_string());
                        else if (!s.r.is_zero() && !(vp(s.r, p) > vp(y, p)))
                            record("|r|_p < |y|_p with y = " + y.to_string());
                    } else if (suite == "floor_contract") {
                        FloorContractReport rep = check_floor_contract(x, p, kind);
                        if (!rep.padic_contraction) record("padic_contraction at x = " + x.to_string());
                        else if (kind == FloorKind::Browkin && !(rep.in_s_integers && rep.archimedean_bound))
                            record("Browkin ball conditions");
                    } else {
                        throw ParseError("unknown sweep suite '" + suite + "'");
                    }
                } catch (const PrecisionExhaustedError& e) {
                    record(std::string("precision: ") + e.what());
                }
            }
            total_violations += result.violations;
            matrix.push_back(Json{{"p", p},
                                  {"suite", result.suite},
                                  {"checked", result.checked},
                                  {"violations", result.violations},
                                  {"counterexamples", result.counterexamples}});
        }
    }
    Json j{{"schema", kSchemaVersion},
           {"seed", config.seed},
           {"floor", to_string(kind)},
           {"matrix", matrix},
           {"total_violations", total_violations}};
    std::string human;
    for (const auto& cell : matrix)
        human += "p=" + cell["p"].dump() + " " + cell["suite"].get<std::string>() + ": " +
                 (cell["violations"] == 0 ? "pass" : ("FAIL (" + cell["violations"].dump() + ")")) + "\n";
    emit(j, config, human);
    if (total_violations > 0) {
        for (const auto& cell : matrix)
            for (const auto& ce : cell["counterexamples"])
                std::cerr << "counterexample p=" << cell["p"] << " " << cell["suite"].get<std::string>() << ": "
                          << ce.dump() << "\n";
        return kExitViolation;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Browkin p-adic continued fractions: exact expansion, heights and family generators"};
    app.require_subcommand(1);

    RunConfig config;
    if (const char* env = std::getenv("PADIC_CF_PRECISION")) config.precision = std::atoll(env);

    app.add_option("--precision", config.precision, "digit budget for adaptive p-adic precision")
        ->check(CLI::Range(8LL, 1000000LL));
    app.add_option("--seed", config.seed, "PRNG seed for reproducible generation");
    app.add_option("--output", config.output, "output format")->check(CLI::IsMember({"json", "csv", "human"}));

    std::string value_text, branch = "+", kind_name = "browkin";
    std::string x0_text, x1_text;
    std::string cf_file, check_name = "h1";
    std::string family_name, spec_file;
    std::string audit_name;
    long long count = -1, length = 0;
    bool emit_certificate = false;

    auto add_p = [&](CLI::App* cmd) {
        cmd->add_option("--p", config.p, "odd prime")->required();
    };

    CLI::App* expand_cmd = app.add_subcommand("expand", "continued fraction expansion of a value");
    expand_cmd->fallthrough();
    add_p(expand_cmd);
    expand_cmd->add_option("--value", value_text, "rational \"n/d\" or surd \"(P + Q*sqrt(D))/R\"")->required();
    expand_cmd->add_option("--branch", branch, "Hensel branch of sqrt(D): + or -");
    expand_cmd->add_option("--kind", kind_name, "floor function")
        ->check(CLI::IsMember({"browkin", "ruban", "counterexample"}));
    expand_cmd->add_option("--max-steps", config.max_steps, "iteration cap");

    CLI::App* euclid_cmd = app.add_subcommand("euclid", "p-adic Euclidean algorithm on a rational pair");
    euclid_cmd->fallthrough();
    add_p(euclid_cmd);
    euclid_cmd->add_option("--x0", x0_text, "first value")->required();
    euclid_cmd->add_option("--x1", x1_text, "second value")->required();

    CLI::App* conv_cmd = app.add_subcommand("convergents", "convergent table A_n, B_n with valuations");
    conv_cmd->fallthrough();
    add_p(conv_cmd);
    conv_cmd->add_option("--value", value_text)->required();
    conv_cmd->add_option("--branch", branch);
    conv_cmd->add_option("--count", count, "rows to compute (default: full expansion)");
    conv_cmd->add_option("--max-steps", config.max_steps);

    CLI::App* floor_cmd = app.add_subcommand("floor", "floor s(x) and its contract");
    floor_cmd->fallthrough();
    add_p(floor_cmd);
    floor_cmd->add_option("--value", value_text)->required();
    floor_cmd->add_option("--branch", branch);
    floor_cmd->add_option("--kind", kind_name)->check(CLI::IsMember({"browkin", "ruban", "counterexample"}));

    CLI::App* height_cmd = app.add_subcommand("height", "height bounds of a periodic CF");
    height_cmd->fallthrough();
    add_p(height_cmd);
    height_cmd->add_option("--cf", cf_file, "periodic CF JSON file")->required();
    height_cmd->add_option("--check", check_name)->check(CLI::IsMember({"h1", "h2", "remark"}))->required();

    CLI::App* family_cmd = app.add_subcommand("family", "transcendence-family generators");
    family_cmd->fallthrough();
    family_cmd->add_option("name", family_name, "qper | ooto | sturmian | thue-morse")->required();
    add_p(family_cmd);
    family_cmd->add_option("--length", length, "sequence length");
    family_cmd->add_option("--spec", spec_file, "family spec JSON");
    family_cmd->add_flag("--emit-certificate", emit_certificate, "include the hypothesis certificate");

    CLI::App* audit_cmd = app.add_subcommand("audit", "batch height-bound audits");
    audit_cmd->fallthrough();
    audit_cmd->add_option("name", audit_name, "h1 | h2")->required();
    add_p(audit_cmd);
    audit_cmd->add_option("--count", count, "number of random instances");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "full invariant battery over primes");
    sweep_cmd->fallthrough();
    sweep_cmd->add_option("--spec", spec_file, "sweep spec JSON");
    sweep_cmd->add_option("--floor", kind_name)->check(CLI::IsMember({"browkin", "ruban", "counterexample"}));
    sweep_cmd->add_option("--max-steps", config.max_steps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        set_digit_budget(config.precision);
        if (expand_cmd->parsed()) return cmd_expand(config, value_text, branch, kind_name);
        if (euclid_cmd->parsed()) return cmd_euclid(config, x0_text, x1_text);
        if (conv_cmd->parsed()) return cmd_convergents(config, value_text, branch, count);
        if (floor_cmd->parsed()) return cmd_floor(config, value_text, branch, kind_name);
        if (height_cmd->parsed()) return cmd_height(config, cf_file, check_name);
        if (family_cmd->parsed()) return cmd_family(config, family_name, spec_file, length, emit_certificate);
        if (audit_cmd->parsed()) return cmd_audit(config, audit_name, count < 0 ? 100 : count);
        if (sweep_cmd->parsed()) return cmd_sweep(config, spec_file, kind_name);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InfeasibleSpecError& e) {
        std::cerr << "infeasible spec: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
