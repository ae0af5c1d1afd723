#include "padic_cf/cf_engine.hpp"

#include "padic_cf/errors.hpp"
#include "padic_cf/modular.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace padic_cf {

std::string ExpansionStatus::to_string() const {
    switch (kind) {
        case Kind::Finite: return "Finite";
        case Kind::TruncatedAtMaxSteps: return "TruncatedAtMaxSteps";
        case Kind::PeriodDetected: {
            std::ostringstream os;
            os << "PeriodDetected(preperiod=" << preperiod_len << ", period=" << period_len << ")";
            return os.str();
        }
    }
    return "?";
}

std::vector<PartialQuotient> CFExpansion::quotients() const {
    std::vector<PartialQuotient> out;
    out.reserve(tail.size() + 1);
    out.push_back(b0);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

namespace {

/// Shared iteration for exact complete quotients. Value must provide floor,
/// subtraction of a partial quotient, exact zero test, inversion and a
/// canonical key for period detection.
template <typename Value, typename Floor, typename MinusPq, typename IsZero, typename Invert, typename Key,
          typename Record>
CFExpansion expand_impl(Value alpha, long long p, const ExpandOptions& options, Floor floor_fn, MinusPq minus_pq,
                        IsZero is_zero, Invert invert, Key key, Record record) {
    if (options.max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
    CFExpansion cf;
    cf.p = p;
    cf.kind = options.kind;
    std::unordered_map<std::string, long long> seen;

    for (long long i = 0; i < options.max_steps; ++i) {
        if (options.detect_period) {
            auto [it, inserted] = seen.emplace(key(alpha), i);
            if (!inserted) {
                cf.status.kind = ExpansionStatus::Kind::PeriodDetected;
                cf.status.preperiod_len = it->second;
                cf.status.period_len = i - it->second;
                return cf;
            }
        }
        if (options.record_quotients) record(cf, alpha);
        PartialQuotient b = floor_fn(alpha);
        if (i == 0)
            cf.b0 = b;
        else
            cf.tail.push_back(b);
        Value diff = minus_pq(alpha, b);
        if (is_zero(diff)) {
            cf.status.kind = ExpansionStatus::Kind::Finite;
            return cf;
        }
        alpha = invert(diff);
    }
    cf.status.kind = ExpansionStatus::Kind::TruncatedAtMaxSteps;
    return cf;
}

} // namespace

CFExpansion expand(const Rat& x, long long p, const ExpandOptions& options) {
    require_odd_prime(p);
    return expand_impl<Rat>(
        x, p, options, [&](const Rat& a) { return padic_floor(a, p, options.kind); },
        [](const Rat& a, const PartialQuotient& b) { return a - b.to_rat(); },
        [](const Rat& a) { return a.is_zero(); }, [](const Rat& a) { return a.inverse(); },
        [](const Rat& a) { return a.to_string(); },
        [](CFExpansion& out, const Rat& a) { out.complete_rats.push_back(a); });
}

CFExpansion expand(const QuadSurd& x, const ExpandOptions& options) {
    if (x.is_rational()) return expand(x.to_rat(), x.prime(), options);
    long long p = x.prime();
    return expand_impl<QuadSurd>(
        x, p, options, [&](const QuadSurd& a) { return padic_floor(a, options.kind); },
        [](const QuadSurd& a, const PartialQuotient& b) { return a - b.to_rat(); },
        [](const QuadSurd& a) { return a.P() == 0 && a.Q() == 0; },
        [](const QuadSurd& a) { return a.inverse(); }, [](const QuadSurd& a) { return a.canonical_key(); },
        [](CFExpansion& out, const QuadSurd& a) { out.complete_surds.push_back(a); });
}

std::vector<PartialQuotient> expand_approx(UnitResidue x, long long max_steps) {
    std::vector<PartialQuotient> out;
    Int pp(x.p);
    for (long long step = 0; step < max_steps; ++step) {
        if (x.zero) break;
        PartialQuotient b;
        if (x.val >= 1) {
            b = PartialQuotient::zero(x.p);
        } else {
            long long span = 1 - x.val;
            if (x.digits_known < span) break; // out of digits
            Int modulus = pow_int(pp, span);
            Int w = centered_mod(x.unit, modulus);
            b = PartialQuotient(x.p, w, -x.val);
        }
        out.push_back(b);

        // y = x - b, known modulo p^{val + digits_known}
        UnitResidue y = x;
        if (!b.is_zero()) {
            Int raw = mod_reduce(x.unit - centered_mod(x.unit, pow_int(pp, 1 - x.val)), pow_int(pp, x.digits_known));
            if (raw == 0) { // value and floor agree to full precision
                break;
            }
            long long shift = factor_out(raw, pp);
            y.unit = raw;
            y.val = x.val + shift;
            y.digits_known = x.digits_known - shift;
        }
        if (y.digits_known < 1) break;
        Int modulus = pow_int(pp, y.digits_known);
        x.unit = mod_inverse(y.unit, modulus);
        x.val = -y.val;
        x.digits_known = y.digits_known;
        x.zero = false;
    }
    return out;
}

ConvergentTable convergents_of(const std::vector<PartialQuotient>& quotients, long long p) {
    require_odd_prime(p);
    ConvergentTable table;
    table.p = p;
    ConvergentRow seed2{-2, Rat(0), Rat(1), Valuation::infinity(), Valuation::of(0)};
    ConvergentRow seed1{-1, Rat(1), Rat(0), Valuation::of(0), Valuation::infinity()};
    table.rows.push_back(seed2);
    table.rows.push_back(seed1);
    for (std::size_t i = 0; i < quotients.size(); ++i) {
        const Rat b = quotients[i].to_rat();
        const ConvergentRow& r1 = table.rows[table.rows.size() - 1];
        const ConvergentRow& r2 = table.rows[table.rows.size() - 2];
        ConvergentRow row;
        row.n = static_cast<long long>(i);
        row.A = b * r1.A + r2.A;
        row.B = b * r1.B + r2.B;
        row.e = vp(row.A, p);
        row.f = vp(row.B, p);
        table.rows.push_back(row);
    }
    return table;
}

ConvergentTable convergents(const CFExpansion& cf, long long count) {
    if (count < 0 || count > cf.length()) throw std::invalid_argument("convergent count out of range");
    auto qs = cf.quotients();
    qs.resize(static_cast<std::size_t>(count));
    return convergents_of(qs, cf.p);
}

Rat fold_finite(const std::vector<PartialQuotient>& quotients, long long p) {
    if (quotients.empty()) throw std::invalid_argument("empty quotient list");
    ConvergentTable t = convergents_of(quotients, p);
    const ConvergentRow& last = t.rows.back();
    if (last.B.is_zero()) throw DivisionByZeroError("vanishing B_n while folding");
    return last.A / last.B;
}

EuclidStep euclid_divide(const Rat& x, const Rat& y, long long p) {
    if (y.is_zero()) throw DivisionByZeroError("euclid_divide by zero");
    EuclidStep step;
    step.x = x;
    step.y = y;
    step.q = padic_floor(x / y, p, FloorKind::Browkin);
    step.r = x - step.q.to_rat() * y;
    return step;
}

SurdEuclidStep euclid_divide(const QuadSurd& x, const QuadSurd& y) {
    if (y.P() == 0 && y.Q() == 0) throw DivisionByZeroError("euclid_divide by zero");
    PartialQuotient q = padic_floor(x / y, FloorKind::Browkin);
    QuadSurd r = x - y * q.to_rat();
    return {x, y, q, r};
}

std::vector<EuclidStep> euclid_algorithm(const Rat& x0, const Rat& x1, long long p) {
    if (x1.is_zero()) throw DivisionByZeroError("euclid_algorithm with x1 = 0");
    if (!(vp(x0, p) <= vp(x1, p)))
        throw std::invalid_argument("euclid_algorithm requires |x0|_p >= |x1|_p");
    std::vector<EuclidStep> steps;
    Rat a = x0, b = x1;
    while (!b.is_zero()) {
        EuclidStep s = euclid_divide(a, b, p);
        steps.push_back(s);
        a = b;
        b = s.r;
    }
    return steps;
}

namespace {

void add_law(ValuationLawReport& report, LawCheck check) {
    if (!check.holds) report.all_hold = false;
    report.laws.push_back(std::move(check));
}

} // namespace

ValuationLawReport check_valuation_laws(const ConvergentTable& table, const CFExpansion& cf) {
    ValuationLawReport report;
    const auto qs = cf.quotients();
    const long long n_max = table.max_index();
    const bool b0_zero = cf.b0.is_zero();

    LawCheck law2{"(ii) v_p(b_n) < 0 for n >= 1", true, -1, ""};
    for (long long n = 1; n < static_cast<long long>(qs.size()); ++n) {
        const auto& b = qs[static_cast<std::size_t>(n)];
        if (b.is_zero() || b.a < 1) {
            law2.holds = false;
            law2.first_violation = n;
            law2.detail = "b_" + std::to_string(n) + " = " + b.to_string();
            break;
        }
    }
    add_law(report, law2);

    // (iii)/(iv): valuation of A_n as partial sums of quotient valuations.
    {
        LawCheck law{b0_zero ? "(iv) v_p(A_n) = v_p(b_2...b_n), b_0 = 0" : "(iii) v_p(A_n) = v_p(b_0...b_n)", true, -1,
                     ""};
        const long long start = b0_zero ? 2 : 0;
        long long sum = 0;
        for (long long n = start; n <= n_max && law.holds; ++n) {
            const auto& b = qs[static_cast<std::size_t>(n)];
            if (n > 0 && b.is_zero()) {
                law.holds = false;
                law.first_violation = n;
                law.detail = "zero quotient b_" + std::to_string(n);
                break;
            }
            sum += -b.a;
            Valuation expected = Valuation::of(sum);
            if (table.at(n).e != expected) {
                law.holds = false;
                law.first_violation = n;
                law.detail = "v_p(A_" + std::to_string(n) + ") = " + table.at(n).e.to_string() + ", expected " +
                             expected.to_string();
            }
        }
        add_law(report, law);
    }

    // (v): v_p(B_n) = v_p(b_1) + ... + v_p(b_n) for n >= 1.
    {
        LawCheck law{"(v) v_p(B_n) = v_p(b_1...b_n)", true, -1, ""};
        long long sum = 0;
        for (long long n = 1; n <= n_max && law.holds; ++n) {
            const auto& b = qs[static_cast<std::size_t>(n)];
            if (b.is_zero()) {
                law.holds = false;
                law.first_violation = n;
                law.detail = "zero quotient b_" + std::to_string(n);
                break;
            }
            sum -= b.a;
            if (table.at(n).f != Valuation::of(sum)) {
                law.holds = false;
                law.first_violation = n;
                law.detail = "v_p(B_" + std::to_string(n) + ") = " + table.at(n).f.to_string() + ", expected " +
                             std::to_string(sum);
            }
        }
        add_law(report, law);
    }

    // (i): v_p(b_n) = v_p(alpha_n) for n >= 1, when complete quotients exist.
    const bool have_rats = !cf.complete_rats.empty();
    const bool have_surds = !cf.complete_surds.empty();
    if (have_rats || have_surds) {
        LawCheck law{"(i) v_p(b_n) = v_p(alpha_n) for n >= 1", true, -1, ""};
        long long count = have_rats ? static_cast<long long>(cf.complete_rats.size())
                                    : static_cast<long long>(cf.complete_surds.size());
        for (long long n = 1; n < count && n < static_cast<long long>(qs.size()); ++n) {
            Valuation va = have_rats ? vp(cf.complete_rats[static_cast<std::size_t>(n)], cf.p)
                                     : cf.complete_surds[static_cast<std::size_t>(n)].vp();
            if (va != qs[static_cast<std::size_t>(n)].vp()) {
                law.holds = false;
                law.first_violation = n;
                law.detail = "v_p(alpha_" + std::to_string(n) + ") = " + va.to_string();
                break;
            }
        }
        add_law(report, law);
    }

    // (vi): v_p(alpha - A_n/B_n) = -v_p(B_n B_{n+1}), checked against the
    // exact input value where the table still has a row n+1.
    if (have_rats || have_surds) {
        LawCheck law{"(vi) v_p(alpha - A_n/B_n) = -v_p(B_n B_{n+1})", true, -1, ""};
        for (long long n = 0; n + 1 <= n_max; ++n) {
            const auto& row = table.at(n);
            const auto& next = table.at(n + 1);
            if (row.B.is_zero() || row.f.is_infinite() || next.f.is_infinite()) continue;
            Rat conv = row.A / row.B;
            Valuation lhs = have_rats ? vp(cf.complete_rats[0] - conv, cf.p)
                                      : (cf.complete_surds[0] - conv).vp();
            Valuation rhs = Valuation::of(-(row.f.finite() + next.f.finite()));
            if (lhs != rhs) {
                law.holds = false;
                law.first_violation = n;
                law.detail = "v_p(alpha - A_n/B_n) = " + lhs.to_string() + ", expected " + rhs.to_string();
                break;
            }
        }
        add_law(report, law);
    }

    return report;
}

namespace {

/// |x|_inf < p^{-v} with v the p-adic valuation (possibly infinite => |x|_p = 0).
bool inf_strictly_below_padic(const Rat& x, const Valuation& v, long long p) {
    if (v.is_infinite()) return false; // |x|_p = 0; nothing is below it
    long long e = v.finite();
    Rat padic_abs = e <= 0 ? Rat(pow_int(Int(p), -e)) : Rat(Int(1), pow_int(Int(p), e));
    return x.abs() < padic_abs;
}

bool inf_at_most_padic(const Rat& x, const Valuation& v, long long p) {
    if (v.is_infinite()) return x.is_zero();
    long long e = v.finite();
    Rat padic_abs = e <= 0 ? Rat(pow_int(Int(p), -e)) : Rat(Int(1), pow_int(Int(p), e));
    return x.abs() <= padic_abs;
}

} // namespace

ArchimedeanReport archimedean_growth_check(const ConvergentTable& table, const CFExpansion& cf) {
    ArchimedeanReport report;
    const long long p = cf.p;
    const long long n_max = table.max_index();
    if (n_max < 0) throw std::invalid_argument("table needs rows from n = 0");
    const Rat ratio(Int(p) + 2, Int(2)); // p/2 + 1

    // Growth constants: |x_0| < M and |x_1| < M (p/2+1).
    auto growth_constant = [&](const Rat& x0, const Rat& x1) {
        Rat m = x0.abs();
        Rat m1 = x1.abs() / ratio;
        if (m1 > m) m = m1;
        return m + Rat(1);
    };
    const Rat a0 = table.at(0).A, b0 = table.at(0).B;
    const Rat a1 = n_max >= 1 ? table.at(1).A : a0, b1 = n_max >= 1 ? table.at(1).B : b0;
    report.growth_constant_A = growth_constant(a0, a1);
    report.growth_constant_B = growth_constant(b0, b1);

    Rat power(1);
    for (long long n = 0; n <= n_max; ++n) {
        if (!(table.at(n).A.abs() < report.growth_constant_A * power) ||
            !(table.at(n).B.abs() < report.growth_constant_B * power)) {
            report.growth_bound_holds = false;
            break;
        }
        power *= ratio;
    }

    // First index from which |A_n|_inf < |A_n|_p and |B_n|_inf < |B_n|_p hold onward.
    long long first = -1;
    for (long long n = n_max; n >= 0; --n) {
        const auto& row = table.at(n);
        if (inf_strictly_below_padic(row.A, row.e, p) && inf_strictly_below_padic(row.B, row.f, p)) {
            first = n;
        } else {
            break;
        }
    }
    report.first_dominated_index = first;

    for (long long n = -2; n <= n_max; ++n) {
        const auto& row = table.at(n);
        if (!inf_at_most_padic(row.B, row.f, p)) {
            report.b_remark_holds = false;
            break;
        }
    }
    return report;
}

} // namespace padic_cf
