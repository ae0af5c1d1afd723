#include "padic_cf/heights.hpp"

#include "padic_cf/config.hpp"
#include "padic_cf/errors.hpp"
#include "padic_cf/families.hpp"
#include "padic_cf/modular.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace padic_cf {

void PeriodicCF::validate() const {
    require_odd_prime(p);
    if (preperiod.size() < 2) throw std::invalid_argument("periodic CF needs b0 and k >= 1 preperiod terms");
    if (!preperiod.front().is_zero()) throw std::invalid_argument("periodic CF requires b0 = 0");
    if (period.empty()) throw std::invalid_argument("periodic CF needs a nonempty period");
    auto check_tail = [&](const PartialQuotient& b) {
        if (b.p != p) throw MixedFieldError("quotient prime differs from CF prime");
        if (b.is_zero() || b.a < 1)
            throw std::invalid_argument("quotient " + b.to_string() + " must have negative valuation");
    };
    for (std::size_t i = 1; i < preperiod.size(); ++i) check_tail(preperiod[i]);
    for (const auto& b : period) check_tail(b);
}

std::vector<PartialQuotient> PeriodicCF::unrolled(long long m) const {
    std::vector<PartialQuotient> out = preperiod;
    for (long long i = 0; i < m; ++i) out.insert(out.end(), period.begin(), period.end());
    return out;
}

std::string QuadraticRelation::polynomial_string() const {
    std::ostringstream os;
    os << c0.str() << "*x^2 " << (c1 < 0 ? "- " : "+ ") << abs_int(c1).str() << "*x " << (c2 < 0 ? "- " : "+ ")
       << abs_int(c2).str();
    return os.str();
}

namespace {

long long neg_vp_exponent(const Rat& x, long long p) {
    Valuation v = vp(x, p);
    if (v.is_infinite()) throw std::logic_error("unexpected zero in valuation bookkeeping");
    return -v.finite();
}

/// Multiplies the three coefficients by p^kappa; they must come out integral.
void clear_and_reduce(QuadraticRelation& rel, long long kappa) {
    Int scale = pow_int(Int(rel.p), kappa);
    auto to_int = [&](const Rat& c) {
        Rat cleared = c * Rat(scale);
        if (cleared.den() != 1)
            throw std::logic_error("clearing exponent too small for " + c.to_string());
        return cleared.num();
    };
    rel.clearing_exponent = kappa;
    rel.c0 = to_int(rel.C0);
    rel.c1 = to_int(rel.C1);
    rel.c2 = to_int(rel.C2);
    if (rel.c0 == 0 && rel.c1 == 0 && rel.c2 == 0)
        throw DegenerateRelationError("all relation coefficients vanish");
    Int g = gcd_int(gcd_int(abs_int(rel.c0), abs_int(rel.c1)), abs_int(rel.c2));
    rel.content = g;
    if (g > 1) {
        rel.c0 /= g;
        rel.c1 /= g;
        rel.c2 /= g;
    }
    const Int& lead = rel.c0 != 0 ? rel.c0 : (rel.c1 != 0 ? rel.c1 : rel.c2);
    if (lead < 0) {
        rel.c0 = -rel.c0;
        rel.c1 = -rel.c1;
        rel.c2 = -rel.c2;
    }
}

} // namespace

QuadraticRelation pure_period_relation(const std::vector<PartialQuotient>& period, long long p) {
    if (period.empty()) throw std::invalid_argument("empty period");
    ConvergentTable t = convergents_of(period, p);
    long long last = t.max_index();
    const Rat& At = t.at(last).A;
    const Rat& At1 = t.at(last - 1).A;
    const Rat& Bt = t.at(last).B;
    const Rat& Bt1 = t.at(last - 1).B;

    QuadraticRelation rel;
    rel.p = p;
    rel.C0 = Bt;
    rel.C1 = Bt1 - At;
    rel.C2 = -At1;
    long long kappa = 0;
    for (const Rat* c : {&rel.C0, &rel.C1, &rel.C2}) {
        if (c->is_zero()) continue;
        kappa = std::max(kappa, neg_vp_exponent(*c, p));
    }
    clear_and_reduce(rel, kappa);
    return rel;
}

RelationTerms relation_terms(const PeriodicCF& cf) {
    cf.validate();
    const long long p = cf.p;
    ConvergentTable pre = convergents_of(cf.preperiod, p);
    ConvergentTable per = convergents_of(cf.period, p);
    const long long k = cf.k(), t = cf.t();
    const Rat Ak = pre.at(k).A, Ak1 = pre.at(k - 1).A;
    const Rat Bk = pre.at(k).B, Bk1 = pre.at(k - 1).B;
    const Rat At = per.at(t).A, At1 = per.at(t - 1).A;
    const Rat Bt = per.at(t).B, Bt1 = per.at(t - 1).B;

    RelationTerms terms;
    terms.c0_terms = {-(At1 * Bk * Bk), At * Bk * Bk1, -(Bt1 * Bk * Bk1), Bt * Bk1 * Bk1};
    terms.c1_terms = {Rat(2) * At1 * Ak * Bk, -(At * Ak1 * Bk), Bt1 * Ak1 * Bk,
                      -(At * Ak * Bk1),       Bt1 * Ak * Bk1,  -(Rat(2) * Bt * Ak1 * Bk1)};
    terms.c2_terms = {-(At1 * Ak * Ak), At * Ak * Ak1, -(Bt1 * Ak * Ak1), Bt * Ak1 * Ak1};
    return terms;
}

Rat unrolled_approximant(const PeriodicCF& cf, long long target_valuation) {
    long long f_pre = 0;
    for (std::size_t i = 1; i < cf.preperiod.size(); ++i) f_pre += cf.preperiod[i].a;
    long long f_per = 0;
    for (const auto& b : cf.period) f_per += b.a;
    long long m = 1;
    while (2 * (f_pre + m * f_per) <= target_valuation) ++m;
    return fold_finite(cf.unrolled(m), cf.p);
}

Valuation relation_residual_valuation(const QuadraticRelation& rel, const Rat& a) {
    Rat res = Rat(rel.c0) * a * a + Rat(rel.c1) * a + Rat(rel.c2);
    return vp(res, rel.p);
}

QuadraticRelation periodic_to_relation(const PeriodicCF& cf, bool verify) {
    cf.validate();
    const long long p = cf.p;
    ConvergentTable pre = convergents_of(cf.preperiod, p);
    ConvergentTable per = convergents_of(cf.period, p);
    const long long k = cf.k(), t = cf.t();
    const Rat Ak = pre.at(k).A, Ak1 = pre.at(k - 1).A;
    const Rat Bk = pre.at(k).B, Bk1 = pre.at(k - 1).B;
    const Rat At = per.at(t).A, At1 = per.at(t - 1).A;
    const Rat Bt = per.at(t).B, Bt1 = per.at(t - 1).B;

    QuadraticRelation rel;
    rel.p = p;
    rel.C0 = -(At1 * Bk * Bk) + At * Bk * Bk1 - Bt1 * Bk * Bk1 + Bt * Bk1 * Bk1;
    rel.C1 = Rat(2) * At1 * Ak * Bk - At * Ak1 * Bk + Bt1 * Ak1 * Bk - At * Ak * Bk1 + Bt1 * Ak * Bk1 -
             Rat(2) * Bt * Ak1 * Bk1;
    rel.C2 = -(At1 * Ak * Ak) + At * Ak * Ak1 - Bt1 * Ak * Ak1 + Bt * Ak1 * Ak1;

    // e~_t + 2 f_k - 1 with |A~_t|_p = p^{e~_t}, |B_k|_p = p^{f_k}.
    const long long e_t = neg_vp_exponent(At, p);
    const long long f_k = neg_vp_exponent(Bk, p);
    clear_and_reduce(rel, e_t + 2 * f_k - 1);

    if (verify) {
        Rat approx = unrolled_approximant(cf, 72);
        Valuation res = relation_residual_valuation(rel, approx);
        if (res < 64)
            throw std::logic_error("relation fails to annihilate the CF value: residual v_p = " + res.to_string());
    }
    return rel;
}

UnitResidue padic_root_of_relation(const QuadraticRelation& rel, long long N, int branch) {
    if (N < 1) throw std::invalid_argument("precision must be >= 1");
    if (branch != 1 && branch != -1) throw std::invalid_argument("branch must be +1 or -1");
    const long long p = rel.p;
    Int pp(p);
    if (rel.c0 == 0) {
        if (rel.c1 == 0) throw DegenerateRelationError("relation has no root");
        return residue_of_rat(Rat(-rel.c2, rel.c1), p, N);
    }
    Int disc = rel.discriminant();
    Int root;
    if (is_perfect_square(disc, &root)) {
        // Rational roots; branch picks the sign of the square root.
        Int num = -rel.c1 + branch * root;
        return residue_of_rat(Rat(num, 2 * rel.c0), p, N);
    }
    if (disc == 0) return residue_of_rat(Rat(-rel.c1, 2 * rel.c0), p, N);

    Int disc_unit = disc;
    long long v_d = factor_out(disc_unit, pp);
    if (v_d % 2 != 0)
        throw NotResidueError("discriminant has odd p-adic valuation: no root in Q_p");
    if (legendre_symbol(disc_unit, p) != 1)
        throw NotResidueError("discriminant unit part is a non-residue mod p");

    Int c0_unit = rel.c0;
    long long v_c = factor_out(c0_unit, pp);

    long long budget = digit_budget();
    long long working = N + v_d / 2 + v_c + 16;
    while (true) {
        Int modulus = pow_int(pp, working);
        Int sqrt_disc = pow_int(pp, v_d / 2) * hensel_sqrt(disc_unit, p, working, branch);
        Int num = mod_reduce(-rel.c1 + sqrt_disc, modulus);
        if (num != 0) {
            long long v_n = factor_out(num, pp);
            if (working - v_n >= N) {
                Int target = pow_int(pp, N);
                Int unit = mod_reduce(num * mod_inverse(mod_reduce(2 * c0_unit, target), target), target);
                return {p, unit, v_n - v_c, N, false};
            }
        }
        if (working >= budget + N)
            throw PrecisionExhaustedError("root valuation unresolved within digit budget");
        working = working * 2 <= budget + N ? working * 2 : budget + N;
    }
}

UnitResidue matching_root(const QuadraticRelation& rel, const std::vector<PartialQuotient>& expected, long long N,
                          int* branch_out) {
    for (int branch : {1, -1}) {
        UnitResidue root = padic_root_of_relation(rel, N, branch);
        auto got = expand_approx(root, static_cast<long long>(expected.size()));
        if (got.size() < expected.size()) continue;
        bool match = true;
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (got[i] != expected[i]) {
                match = false;
                break;
            }
        }
        if (match) {
            if (branch_out) *branch_out = branch;
            return root;
        }
    }
    throw DegenerateRelationError("neither root's re-expansion reproduces the expected quotients");
}

Int naive_height(const QuadraticRelation& rel) {
    if (rel.c0 == 0 && rel.c1 == 0 && rel.c2 == 0) throw ZeroPolynomialError("zero polynomial");
    return std::max({abs_int(rel.c0), abs_int(rel.c1), abs_int(rel.c2)});
}

Int naive_height(const Rat& x) { return std::max(abs_int(x.num()), x.den()); }

namespace {

double safe_sqrt_double(const Int& m) {
    if (m > (Int(1) << 960)) throw SizeLimitError("value too large for float square root");
    return std::sqrt(m.convert_to<double>());
}

} // namespace

WeilHeight weil_height_deg2(const QuadraticRelation& rel) {
    if (rel.c0 == 0) throw ReduciblePolynomialError("degree below 2");
    Int disc = rel.discriminant();
    if (is_perfect_square(disc)) throw ReduciblePolynomialError("discriminant is a perfect square");

    WeilHeight h;
    const Int abs_c0 = abs_int(rel.c0), abs_c1 = abs_int(rel.c1), abs_c2 = abs_int(rel.c2);
    if (disc < 0) {
        // Conjugate pair of modulus sqrt(|c2/c0|): M = max(|c0|, |c2|).
        Int mahler = std::max(abs_c0, abs_c2);
        h.exact_square = Rat(mahler);
        h.value = safe_sqrt_double(mahler);
        h.tolerance = h.value * 1e-15;
        return h;
    }
    // Real roots; classify against the unit circle with exact sign tests.
    const Int f1 = rel.c0 + rel.c1 + rel.c2;   // sign of c0 * f(1)
    const Int fm1 = rel.c0 - rel.c1 + rel.c2;  // sign of c0 * f(-1)
    const bool lead_pos = rel.c0 > 0;
    const Int g1 = lead_pos ? f1 : -f1;
    const Int gm1 = lead_pos ? fm1 : -fm1;
    if (g1 == 0 || gm1 == 0) throw ReduciblePolynomialError("root at ±1");

    if (g1 > 0 && gm1 > 0) {
        if (abs_c1 < 2 * abs_c0) { // vertex inside (-1,1): both roots inside
            h.exact_square = Rat(abs_c0);
            h.value = safe_sqrt_double(abs_c0);
        } else { // both roots outside, same side
            h.exact_square = Rat(abs_c2);
            h.value = safe_sqrt_double(abs_c2);
        }
        h.tolerance = h.value * 1e-15;
        return h;
    }
    if (g1 < 0 && gm1 < 0) { // roots straddle (-1,1), both outside
        h.exact_square = Rat(abs_c2);
        h.value = safe_sqrt_double(abs_c2);
        h.tolerance = h.value * 1e-15;
        return h;
    }
    // One root inside, one outside: M = (|c1| + sqrt(disc)) / 2.
    double m = (abs_c1.convert_to<double>() + safe_sqrt_double(disc)) / 2.0;
    h.value = std::sqrt(m);
    h.tolerance = h.value * 1e-12;
    return h;
}

HeightReport check_h1_bound(const PeriodicCF& cf) {
    cf.validate();
    HeightReport report;
    report.p = cf.p;
    report.relation = periodic_to_relation(cf, false);
    report.naive_h = naive_height(report.relation);
    report.raw_max_coeff = report.naive_h * report.relation.content;

    long long f_k = 0;
    for (std::size_t i = 1; i < cf.preperiod.size(); ++i) f_k += cf.preperiod[i].a;
    long long f_all = f_k;
    for (const auto& b : cf.period) f_all += b.a;
    // (8/p^2) |B_{k+t+1}|_p^2 |B_k|_p^2 = 8 p^{2 f_all + 2 f_k - 2}
    report.bound_value = Rat(Int(8) * pow_int(Int(cf.p), 2 * f_all + 2 * f_k - 2));
    report.bound_holds = Rat(report.raw_max_coeff) <= report.bound_value &&
                         Rat(report.naive_h) <= report.bound_value;

    Int disc = report.relation.discriminant();
    report.irreducible = report.relation.c0 != 0 && !is_perfect_square(disc);
    report.degree = report.irreducible ? 2 : 1;
    if (!report.irreducible) {
        // Rational value: report the degree-1 height of the matching root.
        Int root;
        is_perfect_square(disc, &root);
        Rat r1(-report.relation.c1 + root, 2 * report.relation.c0);
        Rat r2(-report.relation.c1 - root, 2 * report.relation.c0);
        report.minimal_h = std::min(naive_height(r1), naive_height(r2));
    }
    return report;
}

HeightReport check_h2_bound(const std::vector<PartialQuotient>& prefix, long long p) {
    require_odd_prime(p);
    if (prefix.empty()) throw std::invalid_argument("empty prefix");
    Hypothesis1Report hyp = hypothesis1_check(prefix, p);
    if (!hyp.passes) {
        std::string idx;
        for (long long i : hyp.violations) idx += (idx.empty() ? "" : ",") + std::to_string(i);
        throw HypothesisViolatedError("prefix violates Hypothesis 1 at indices {" + idx + "}");
    }

    std::vector<PartialQuotient> quotients;
    quotients.push_back(PartialQuotient::zero(p));
    quotients.insert(quotients.end(), prefix.begin(), prefix.end());
    ConvergentTable table = convergents_of(quotients, p);
    const long long k = static_cast<long long>(prefix.size());
    const Rat Ak = table.at(k).A, Ak1 = table.at(k - 1).A;
    const Rat Bk = table.at(k).B, Bk1 = table.at(k - 1).B;
    const Rat pr((Int(p)));

    HeightReport report;
    report.p = p;
    QuadraticRelation rel;
    rel.p = p;
    rel.C0 = Bk * Bk1 - pr * Bk * Bk + pr * Bk1 * Bk1;
    rel.C1 = Rat(2) * pr * Ak * Bk - Rat(2) * pr * Ak1 * Bk1 - Ak * Bk1 - Ak1 * Bk;
    rel.C2 = Ak * Ak1 - pr * Ak * Ak + pr * Ak1 * Ak1;

    long long f_k = 0;
    for (const auto& b : prefix) f_k += b.a;
    clear_and_reduce(rel, 2 * f_k - 1);
    report.relation = rel;
    report.naive_h = naive_height(rel);
    report.raw_max_coeff = report.naive_h * rel.content;
    report.bound_value = Rat(pow_int(Int(p), 2 * f_k));
    report.bound_holds = Rat(report.raw_max_coeff) <= report.bound_value &&
                         Rat(report.naive_h) <= report.bound_value;

    // |B_k|_inf^2 < p/(4p+2) and |A_k|_inf^2 < p/(4p+2), exactly. Whichever
    // of A^_k, B^_k admits an all-domino tiling carries a pure p-power
    // monomial and sits near 1, so at most one of these can hold.
    const Rat limit(Int(p), Int(4) * p + 2);
    report.b_inf_bound_holds = Bk * Bk < limit;
    report.a_inf_bound_holds = Ak * Ak < limit;
    report.A_k = Ak;
    report.B_k = Bk;

    report.irreducible = rel.c0 != 0 && !is_perfect_square(rel.discriminant());
    report.degree = report.irreducible ? 2 : 1;
    return report;
}

RemarkReport check_remark_H(const QuadraticRelation& rel) {
    RemarkReport rep;
    rep.degree = 2;
    Int h = naive_height(rel);
    WeilHeight H = weil_height_deg2(rel);
    rep.naive_h = h.convert_to<double>();
    rep.weil_H = H.value;

    // Upper: H <= sqrt(D+1) h, i.e. M <= 3 h^2. Lower: h <= 2^D H^D = 4 M
    // (Landau-Mahler: h <= 2^D M(f) for the minimal polynomial).
    const Int disc = rel.discriminant();
    const Int h2 = h * h;
    if (H.exact_square) {
        rep.upper_holds = *H.exact_square <= Rat(3 * h2);
        rep.lower_holds = Rat(h) <= Rat(4) * *H.exact_square;
    } else {
        // Mixed-root case: M = (|c1| + sqrt(disc)) / 2 with disc > 0.
        const Int abs_c1 = abs_int(rel.c1);
        // upper: |c1| + sqrt(disc) <= 6 h^2
        Int slack = 6 * h2 - abs_c1;
        rep.upper_holds = slack >= 0 && disc <= slack * slack;
        // lower: h <= 2 (|c1| + sqrt(disc))
        Int lhs = h - 2 * abs_c1;
        rep.lower_holds = lhs <= 0 || lhs * lhs <= 4 * disc;
    }
    return rep;
}

RemarkReport check_remark_H(const Rat& x) {
    RemarkReport rep;
    rep.degree = 1;
    Int h = naive_height(x);
    rep.naive_h = h.convert_to<double>();
    rep.weil_H = rep.naive_h; // heights coincide on Q
    rep.upper_holds = true;
    rep.lower_holds = true;
    return rep;
}

FibonacciCountReport fibonacci_term_count(const std::vector<PartialQuotient>& prefix, long long p) {
    const long long k = static_cast<long long>(prefix.size());
    if (k < 1) throw std::invalid_argument("empty prefix");
    if (k > 12) throw SizeLimitError("symbolic expansion limited to k <= 12");

    // Monomial = bitmask of positions carried as b^ factors (bit i-1 for
    // position i); complementary positions contribute p^{a_j}.
    std::vector<std::vector<std::uint16_t>> levels(static_cast<std::size_t>(k) + 1);
    levels[0] = {0};                      // B^_0 = 1 (empty product)
    if (k >= 1) levels[1] = {0x1};        // B^_1 = b^_1
    for (long long i = 2; i <= k; ++i) {
        auto& out = levels[static_cast<std::size_t>(i)];
        for (std::uint16_t m : levels[static_cast<std::size_t>(i - 1)])
            out.push_back(static_cast<std::uint16_t>(m | (1u << (i - 1))));
        for (std::uint16_t m : levels[static_cast<std::size_t>(i - 2)]) out.push_back(m);
    }

    FibonacciCountReport rep;
    rep.k = k;
    rep.monomials = static_cast<long long>(levels[static_cast<std::size_t>(k)].size());
    rep.fibonacci_expected = fibonacci(k + 1);
    rep.count_matches = rep.monomials == rep.fibonacci_expected;

    // Re-evaluate the symbolic sum and compare with B^_k = B_k p^{f_k}.
    Int sum = 0;
    for (std::uint16_t m : levels[static_cast<std::size_t>(k)]) {
        Int term = 1;
        for (long long i = 1; i <= k; ++i) {
            const auto& b = prefix[static_cast<std::size_t>(i - 1)];
            if (m & (1u << (i - 1)))
                term *= b.u;
            else
                term *= pow_int(Int(p), b.a);
        }
        sum += term;
    }
    std::vector<PartialQuotient> quotients;
    quotients.push_back(PartialQuotient::zero(p));
    quotients.insert(quotients.end(), prefix.begin(), prefix.end());
    ConvergentTable table = convergents_of(quotients, p);
    long long f_k = 0;
    for (const auto& b : prefix) f_k += b.a;
    Rat b_hat = table.at(k).B * Rat(pow_int(Int(p), f_k));
    rep.sum_matches_Bk = b_hat.is_integer() && b_hat.num() == sum;
    return rep;
}

} // namespace padic_cf
