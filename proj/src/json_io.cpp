#include "padic_cf/json_io.hpp"

#include "padic_cf/errors.hpp"

#include <fstream>
#include <sstream>

namespace padic_cf {

Json to_json(const PartialQuotient& b) { return Json{{"u", b.u.str()}, {"a", b.a}}; }

PartialQuotient partial_quotient_from_json(const Json& j, long long p) {
    if (!j.contains("u") || !j.contains("a")) throw ParseError("partial quotient needs fields u, a");
    return PartialQuotient(p, int_from_string(j.at("u").get<std::string>()), j.at("a").get<long long>());
}

Json to_json(const PAdicApprox& x) {
    return Json{{"schema", kSchemaVersion}, {"p", x.p}, {"r", x.r}, {"digits", x.digits}, {"precision", x.precision}};
}

namespace {

Json status_json(const ExpansionStatus& status) {
    switch (status.kind) {
        case ExpansionStatus::Kind::Finite: return Json{{"status", "finite"}};
        case ExpansionStatus::Kind::TruncatedAtMaxSteps: return Json{{"status", "truncated"}};
        case ExpansionStatus::Kind::PeriodDetected:
            return Json{{"status", "periodic"},
                        {"preperiod_len", status.preperiod_len},
                        {"period_len", status.period_len}};
    }
    return Json{{"status", "?"}};
}

} // namespace

Json to_json(const CFExpansion& cf) {
    Json tail = Json::array();
    for (const auto& b : cf.tail) tail.push_back(to_json(b));
    Json j{{"schema", kSchemaVersion},
           {"p", cf.p},
           {"kind", to_string(cf.kind)},
           {"b0", to_json(cf.b0)},
           {"tail", tail}};
    j.update(status_json(cf.status));
    return j;
}

std::string expansion_to_csv(const CFExpansion& cf) {
    std::ostringstream os;
    os << "n,u,a\n";
    auto qs = cf.quotients();
    for (std::size_t i = 0; i < qs.size(); ++i) os << i << "," << qs[i].u.str() << "," << qs[i].a << "\n";
    return os.str();
}

Json to_json(const ConvergentTable& table) {
    Json rows = Json::array();
    for (const auto& row : table.rows) {
        rows.push_back(Json{{"n", row.n},
                            {"A", row.A.to_string()},
                            {"B", row.B.to_string()},
                            {"e", row.e.is_infinite() ? Json(nullptr) : Json(row.e.finite())},
                            {"f", row.f.is_infinite() ? Json(nullptr) : Json(row.f.finite())}});
    }
    return Json{{"schema", kSchemaVersion}, {"p", table.p}, {"rows", rows}};
}

std::string convergents_to_csv(const ConvergentTable& table) {
    std::ostringstream os;
    os << "n,A,B,e,f\n";
    for (const auto& row : table.rows) {
        os << row.n << "," << row.A.to_string() << "," << row.B.to_string() << ","
           << (row.e.is_infinite() ? "inf" : std::to_string(row.e.finite())) << ","
           << (row.f.is_infinite() ? "inf" : std::to_string(row.f.finite())) << "\n";
    }
    return os.str();
}

Json to_json(const PeriodicCF& cf) {
    Json pre = Json::array(), per = Json::array();
    for (const auto& b : cf.preperiod) pre.push_back(to_json(b));
    for (const auto& b : cf.period) per.push_back(to_json(b));
    return Json{{"schema", kSchemaVersion}, {"p", cf.p}, {"preperiod", pre}, {"period", per}};
}

PeriodicCF periodic_cf_from_json(const Json& j) {
    PeriodicCF cf;
    if (!j.contains("p") || !j.contains("preperiod") || !j.contains("period"))
        throw ParseError("periodic CF needs fields p, preperiod, period");
    cf.p = j.at("p").get<long long>();
    for (const auto& q : j.at("preperiod")) cf.preperiod.push_back(partial_quotient_from_json(q, cf.p));
    for (const auto& q : j.at("period")) cf.period.push_back(partial_quotient_from_json(q, cf.p));
    cf.validate();
    return cf;
}

Json to_json(const QuadraticRelation& rel) {
    return Json{{"p", rel.p},
                {"C0", rel.C0.to_string()},
                {"C1", rel.C1.to_string()},
                {"C2", rel.C2.to_string()},
                {"c0", rel.c0.str()},
                {"c1", rel.c1.str()},
                {"c2", rel.c2.str()},
                {"content", rel.content.str()},
                {"clearing_exponent", rel.clearing_exponent},
                {"polynomial", rel.polynomial_string()}};
}

Json to_json(const HeightReport& report, const std::string& check_name) {
    Json j{{"schema", kSchemaVersion},
           {"check", check_name},
           {"p", report.p},
           {"degree", report.degree},
           {"naive_h", report.naive_h.str()},
           {"raw_max_coeff", report.raw_max_coeff.str()},
           {"bound", report.bound_value.to_string()},
           {"bound_holds", report.bound_holds},
           {"irreducible", report.irreducible},
           {"relation", to_json(report.relation)}};
    if (report.naive_h != 0) j["margin"] = (report.bound_value / Rat(report.naive_h)).to_string();
    if (report.minimal_h) j["minimal_h"] = report.minimal_h->str();
    if (check_name == "h2") {
        j["B_inf_bound_holds"] = report.b_inf_bound_holds;
        j["A_inf_bound_holds"] = report.a_inf_bound_holds;
        j["A_k"] = report.A_k.to_string();
        j["B_k"] = report.B_k.to_string();
    }
    return j;
}

Json to_json(const RemarkReport& report) {
    return Json{{"schema", kSchemaVersion}, {"check", "remark"},
                {"degree", report.degree},   {"naive_h", report.naive_h},
                {"weil_H", report.weil_H},   {"H_le_sqrt(D+1)h", report.upper_holds},
                {"h_le_2^D_H", report.lower_holds}};
}

Json to_json(const FloorContractReport& report) {
    return Json{{"in_S_integers", report.in_s_integers},
                {"archimedean_bound", report.archimedean_bound},
                {"padic_contraction", report.padic_contraction}};
}

Json to_json(const Hypothesis1Report& report) {
    return Json{{"k", report.k},
                {"a", report.a},
                {"a_defined", report.a_defined},
                {"F_{k+1}", report.fib.str()},
                {"bound_squared", report.bound_squared.to_string()},
                {"violations", report.violations},
                {"passes", report.passes}};
}

Json to_json(const FamilyCertificate& cert) {
    Json entries = Json::array();
    for (const auto& e : cert.entries)
        entries.push_back(Json{{"hypothesis", e.hypothesis}, {"pass", e.pass}, {"note", e.note}});
    return Json{{"schema", kSchemaVersion}, {"all_pass", cert.all_pass}, {"entries", entries}};
}

Json to_json(const ValuationLawReport& report) {
    Json laws = Json::array();
    for (const auto& law : report.laws) {
        Json j{{"law", law.law}, {"holds", law.holds}};
        if (!law.holds) {
            j["first_violation"] = law.first_violation;
            j["detail"] = law.detail;
        }
        laws.push_back(j);
    }
    return Json{{"schema", kSchemaVersion}, {"all_hold", report.all_hold}, {"laws", laws}};
}

Json to_json(const ArchimedeanReport& report) {
    return Json{{"schema", kSchemaVersion},
                {"growth_bound_holds", report.growth_bound_holds},
                {"first_dominated_index", report.first_dominated_index},
                {"B_remark_holds", report.b_remark_holds},
                {"M_A", report.growth_constant_A.to_string()},
                {"M_B", report.growth_constant_B.to_string()}};
}

Json to_json(const SubspaceWitnessReport& report) {
    Json j{{"schema", kSchemaVersion},
           {"applicable", report.applicable},
           {"gap1_vp", report.gap1.is_infinite() ? Json(nullptr) : Json(report.gap1.finite())},
           {"gap2_vp", report.gap2.is_infinite() ? Json(nullptr) : Json(report.gap2.finite())},
           {"delta_exceeds_15_8", report.delta_exceeds_15_8},
           {"size_x", report.size_x},
           {"size_y", report.size_y},
           {"size_z", report.size_z},
           {"z_max", report.z_max}};
    if (report.delta) j["delta"] = report.delta->to_string();
    return j;
}

namespace {

void spec_base_from_json(const Json& j, FamilySpecBase& spec) {
    spec.p = j.at("p").get<long long>();
    spec.C = Rat::parse(j.at("C").get<std::string>());
    spec.d_cap_exp = j.value("d_cap_exp", 1LL);
    spec.lambda_growth_index_cap = j.value("lambda_growth_index_cap", 3LL);
    for (const auto& q : j.at("filler_pool")) spec.filler_pool.push_back(partial_quotient_from_json(q, spec.p));
    if (j.contains("run_start")) {
        spec.run_start = j.at("run_start").get<std::vector<long long>>();
        spec.block_len = j.at("block_len").get<std::vector<long long>>();
        spec.repeats = j.at("repeats").get<std::vector<long long>>();
    }
}

} // namespace

QPerSpec qper_spec_from_json(const Json& j) {
    QPerSpec spec;
    spec_base_from_json(j, spec);
    if (spec.run_start.empty())
        spec = make_qper_spec(spec.p, spec.filler_pool, spec.C, j.at("n0").get<long long>(),
                              j.value("k", 1LL), j.at("runs").get<long long>(), j.value("gap", 1LL),
                              spec.d_cap_exp);
    return spec;
}

OotoSpec ooto_spec_from_json(const Json& j) {
    OotoSpec spec;
    spec_base_from_json(j, spec);
    if (spec.run_start.empty())
        spec = make_ooto_spec(spec.p, spec.filler_pool, spec.C, j.at("n0").get<long long>(),
                              j.value("k", 1LL), j.at("runs").get<long long>(), j.value("gap", 1LL),
                              spec.d_cap_exp);
    return spec;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

} // namespace padic_cf
