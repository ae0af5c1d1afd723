#include "padic_cf/cf_engine.hpp"
#include "padic_cf/errors.hpp"
#include "padic_cf/families.hpp"
#include "padic_cf/prng.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace padic_cf;

namespace {

std::vector<PartialQuotient> random_browkin_sequence(Prng& rng, long long p, long long len, bool zero_b0) {
    std::vector<PartialQuotient> qs;
    if (zero_b0)
        qs.push_back(PartialQuotient::zero(p));
    else {
        // b0: any floor fixed point, exponent 0 allowed
        long long u = rng.range(1, (p - 1) / 2);
        qs.push_back(PartialQuotient(p, rng.coin() ? u : -u, 0));
    }
    for (long long i = 1; i < len; ++i) qs.push_back(oracles::random_quotient(rng, p, 3));
    return qs;
}

} // namespace

TEST_CASE("expand 1/3 at p = 5") {
    CFExpansion cf = expand(Rat(Int(1), Int(3)), 5);
    CHECK(cf.status.kind == ExpansionStatus::Kind::Finite);
    REQUIRE(cf.tail.size() == 1);
    CHECK(cf.b0.to_rat() == Rat(2));
    CHECK(cf.tail[0].to_rat() == Rat(Int(-3), Int(5)));
    // exact-arithmetic oracle: 2 + 1/(-3/5) = 1/3
    CHECK(Rat(2) + Rat(Int(-3), Int(5)).inverse() == Rat(Int(1), Int(3)));
}

TEST_CASE("expand 0 and fixed points") {
    CFExpansion zero = expand(Rat(0), 5);
    CHECK(zero.status.kind == ExpansionStatus::Kind::Finite);
    CHECK(zero.length() == 1);
    CHECK(zero.b0.is_zero());

    CFExpansion two = expand(Rat(2), 7);
    CHECK(two.status.kind == ExpansionStatus::Kind::Finite);
    CHECK(two.length() == 1);
}

TEST_CASE("termination on rationals with exact reconstruction") {
    Prng rng(0x7E51);
    for (long long p : {3, 5, 7, 11}) {
        for (int i = 0; i < 100; ++i) {
            Rat x = oracles::random_rat(rng, 1000000, true);
            CFExpansion cf = expand(x, p);
            REQUIRE(cf.status.kind == ExpansionStatus::Kind::Finite);
            CHECK(fold_finite(cf.quotients(), p) == x);
            // independent oracle route: nested backward evaluation
            CHECK(oracles::nested_eval(cf.quotients()) == x);
        }
    }
}

TEST_CASE("Ruban expansion of -p is periodic, Browkin's is finite") {
    for (long long p : {3, 5, 7}) {
        ExpandOptions ruban;
        ruban.kind = FloorKind::Ruban;
        ruban.max_steps = 50;
        CFExpansion r = expand(Rat(-p), p, ruban);
        CHECK(r.status.kind == ExpansionStatus::Kind::PeriodDetected);
        // [0, overline((p^2-1)/p)]
        CHECK(r.status.preperiod_len == 1);
        CHECK(r.status.period_len == 1);
        CHECK(r.tail[0].to_rat() == Rat(Int(p) * p - 1, Int(p)));

        CFExpansion b = expand(Rat(-p), p);
        CHECK(b.status.kind == ExpansionStatus::Kind::Finite);
    }
}

TEST_CASE("euclid_divide examples") {
    EuclidStep s = euclid_divide(Rat(1), Rat(3), 5);
    CHECK(s.q.to_rat() == Rat(2));
    CHECK(s.r == Rat(-5));
    CHECK(vp(s.r, 5) > vp(Rat(3), 5)); // |r|_p < |y|_p

    EuclidStep same = euclid_divide(Rat(Int(22), Int(7)), Rat(Int(22), Int(7)), 5);
    CHECK(same.q.to_rat() == Rat(1));
    CHECK(same.r.is_zero());

    CHECK_THROWS_AS(euclid_divide(Rat(1), Rat(0), 5), DivisionByZeroError);
}

TEST_CASE("euclid properties on random pairs") {
    Prng rng(0xE0C11D);
    for (int i = 0; i < 500; ++i) {
        long long p = std::array<long long, 4>{3, 5, 7, 11}[rng.below(4)];
        Rat x = oracles::random_rat(rng, 10000);
        Rat y = oracles::random_rat(rng, 10000);
        EuclidStep s = euclid_divide(x, y, p);
        // q = floor(x/y), exactly
        CHECK(s.q == padic_floor(x / y, p));
        // x = q y + r with |r|_p < |y|_p
        CHECK(x == s.q.to_rat() * y + s.r);
        if (!s.r.is_zero()) CHECK(vp(s.r, p) > vp(y, p));
        // |q|_inf < p/2
        CHECK(2 * abs_int(s.q.u) < pow_int(Int(p), s.q.a + 1));
    }
}

TEST_CASE("division uniqueness: perturbing q breaks the remainder bound") {
    Prng rng(0x1D);
    for (int i = 0; i < 60; ++i) {
        long long p = std::array<long long, 2>{5, 7}[rng.below(2)];
        Rat x = oracles::random_rat(rng, 500);
        Rat y = oracles::random_rat(rng, 500);
        EuclidStep s = euclid_divide(x, y, p);
        for (int j = 0; j < 8; ++j) {
            // nonzero perturbation in Z[1/p], sometimes integral
            Rat w = rng.coin() ? Rat(rng.coin() ? 1 : -1) : oracles::random_small_quotient(rng, p, 2).to_rat();
            Rat q2 = s.q.to_rat() + w;
            // uniqueness quantifies over the archimedean ball |q|_inf < p/2
            if (q2.abs() * Rat(2) >= Rat(p)) continue;
            Rat r2 = x - q2 * y;
            CHECK_FALSE(vp(r2, p) > vp(y, p));
        }
    }
}

TEST_CASE("euclid division works on quadratic surds") {
    QuadSurd x(7, 2, 1, Rat(3), Rat(5), Rat(4));
    QuadSurd y(7, 2, 1, Rat(1), Rat(-2), Rat(7));
    SurdEuclidStep s = euclid_divide(x, y);
    // x = q y + r exactly, q = floor(x/y), |r|_p < |y|_p
    CHECK(s.q == padic_floor(x / y, FloorKind::Browkin));
    QuadSurd rebuilt = s.y * s.q.to_rat() + s.r;
    CHECK(rebuilt == x);
    CHECK(s.r.vp() > y.vp());
    CHECK(2 * abs_int(s.q.u) < pow_int(Int(7), s.q.a + 1));
}

TEST_CASE("euclid stream equals the expansion of the ratio") {
    Prng rng(0xCAFE);
    for (int i = 0; i < 200; ++i) {
        long long p = std::array<long long, 4>{3, 5, 7, 11}[rng.below(4)];
        Rat x0 = oracles::random_rat(rng, 5000);
        Rat x1 = oracles::random_rat(rng, 5000);
        if (!(vp(x0, p) <= vp(x1, p))) std::swap(x0, x1);
        auto steps = euclid_algorithm(x0, x1, p);
        CFExpansion cf = expand(x0 / x1, p);
        auto qs = cf.quotients();
        REQUIRE(steps.size() == qs.size());
        for (std::size_t j = 0; j < qs.size(); ++j) CHECK(steps[j].q == qs[j]);
        CHECK(steps.back().r.is_zero());
    }
    // (1, 3) at p = 5 gives quotients [2, -3/5]
    auto steps = euclid_algorithm(Rat(1), Rat(3), 5);
    REQUIRE(steps.size() == 2);
    CHECK(steps[0].q.to_rat() == Rat(2));
    CHECK(steps[1].q.to_rat() == Rat(Int(-3), Int(5)));
    // (x, x): single step, remainder 0
    auto self = euclid_algorithm(Rat(Int(9), Int(4)), Rat(Int(9), Int(4)), 5);
    CHECK(self.size() == 1);
    CHECK(self[0].r.is_zero());
}

TEST_CASE("convergents reproduce finite values and the determinant identity") {
    // [0, 4/25, -3/125] at p = 5
    std::vector<PartialQuotient> qs{PartialQuotient::zero(5), PartialQuotient(5, 4, 2), PartialQuotient(5, -3, 3)};
    ConvergentTable t = convergents_of(qs, 5);
    Rat direct = oracles::nested_eval(qs);
    CHECK(t.at(2).A / t.at(2).B == direct);

    // empty tail: only seed rows
    ConvergentTable seeds = convergents_of({}, 5);
    CHECK(seeds.rows.size() == 2);

    // determinant A_n B_{n-1} - A_{n-1} B_n = (-1)^{n+1}
    Prng rng(0xDE7);
    for (int i = 0; i < 50; ++i) {
        long long p = std::array<long long, 3>{3, 5, 7}[rng.below(3)];
        auto seq = random_browkin_sequence(rng, p, 1 + rng.range(1, 8), rng.coin());
        ConvergentTable table = convergents_of(seq, p);
        for (long long n = 0; n <= table.max_index(); ++n) {
            Rat det = table.at(n).A * table.at(n - 1).B - table.at(n - 1).A * table.at(n).B;
            CHECK(det == (n % 2 == 0 ? Rat(-1) : Rat(1)));
        }
    }
}

TEST_CASE("identity (4): folding the tail through convergents is exact") {
    Prng rng(0x1D4);
    for (int i = 0; i < 40; ++i) {
        long long p = 5;
        auto seq = random_browkin_sequence(rng, p, 6, true);
        Rat alpha = fold_finite(seq, p);
        ConvergentTable table = convergents_of(seq, p);
        // alpha = (alpha_{i+1} A_i + A_{i-1}) / (alpha_{i+1} B_i + B_{i-1})
        CFExpansion cf = expand(alpha, p, {.max_steps = 10000, .detect_period = true, .kind = FloorKind::Browkin,
                                           .record_quotients = true});
        for (std::size_t idx = 1; idx < cf.complete_rats.size(); ++idx) {
            long long i = static_cast<long long>(idx) - 1;
            const Rat& tail_value = cf.complete_rats[idx];
            Rat rebuilt = (tail_value * table.at(i).A + table.at(i - 1).A) /
                          (tail_value * table.at(i).B + table.at(i - 1).B);
            CHECK(rebuilt == alpha);
        }
    }
}

TEST_CASE("valuation laws hold on Browkin expansions") {
    Prng rng(0x1A3);
    for (long long p : {3, 5, 7, 11}) {
        for (int i = 0; i < 60; ++i) {
            Rat x = oracles::random_rat(rng, 100000);
            ExpandOptions opt;
            opt.record_quotients = true;
            CFExpansion cf = expand(x, p, opt);
            ConvergentTable table = convergents(cf, cf.length());
            ValuationLawReport report = check_valuation_laws(table, cf);
            if (!report.all_hold) {
                for (const auto& law : report.laws)
                    if (!law.holds) MESSAGE(law.law, " violated at ", law.first_violation, ": ", law.detail);
            }
            CHECK(report.all_hold);
        }
    }
}

TEST_CASE("law (iv) applies when b0 = 0 and single-term expansions are vacuous") {
    ExpandOptions opt;
    opt.record_quotients = true;
    CFExpansion cf = expand(Rat(Int(7), Int(25)), 5, opt); // v_5 = -2 < 0 => b0 != 0... use a unit-ball value
    CFExpansion cf0 = expand(Rat(Int(5), Int(3)), 5, opt); // v_5 = 1 => b0 = 0
    CHECK(cf0.b0.is_zero());
    ConvergentTable t0 = convergents(cf0, cf0.length());
    CHECK(check_valuation_laws(t0, cf0).all_hold);

    CFExpansion single = expand(Rat(2), 5, opt);
    ConvergentTable ts = convergents(single, single.length());
    CHECK(check_valuation_laws(ts, single).all_hold);
    CHECK(check_valuation_laws(convergents(cf, cf.length()), cf).all_hold);
}

TEST_CASE("shared prefix gives the approximation gap bound") {
    Prng rng(0x9A9);
    for (int i = 0; i < 100; ++i) {
        long long p = std::array<long long, 3>{3, 5, 7}[rng.below(3)];
        long long n = rng.range(1, 6);
        auto prefix = random_browkin_sequence(rng, p, n + 1, rng.coin()); // quotients b0..bn
        auto a_tail = oracles::random_quotient(rng, p, 3);
        auto b_tail = oracles::random_quotient(rng, p, 3);
        if (a_tail == b_tail) continue;
        auto qa = prefix, qb = prefix;
        qa.push_back(a_tail);
        qb.push_back(b_tail);
        Rat alpha = fold_finite(qa, p);
        Rat beta = fold_finite(qb, p);
        REQUIRE(alpha != beta);
        ConvergentTable table = convergents_of(prefix, p);
        long long fn = table.at(n).f.finite();
        // |alpha - beta|_p < |B_n|_p^{-2"}: v(alpha - beta) > -2 v... = 2|f_n|
        CHECK(vp(alpha - beta, p) >= -2 * fn + 1);
    }
}

TEST_CASE("archimedean growth bounds") {
    Prng rng(0xA7C);
    for (int i = 0; i < 30; ++i) {
        long long p = std::array<long long, 3>{3, 5, 7}[rng.below(3)];
        auto seq = random_browkin_sequence(rng, p, 40, rng.coin());
        CFExpansion cf;
        cf.p = p;
        cf.b0 = seq[0];
        cf.tail.assign(seq.begin() + 1, seq.end());
        ConvergentTable table = convergents(cf, cf.length());
        ArchimedeanReport rep = archimedean_growth_check(table, cf);
        CHECK(rep.growth_bound_holds);
        CHECK(rep.b_remark_holds);
        CHECK(rep.first_dominated_index >= 0); // strict domination reached
        CHECK(rep.first_dominated_index <= 20);
    }
    // seed boundary: |B_{-2}|_inf = |B_{-2}|_p = 1 passes the weak remark
    CFExpansion cf;
    cf.p = 5;
    cf.b0 = PartialQuotient::zero(5);
    cf.tail = {PartialQuotient(5, 1, 1)};
    ConvergentTable table = convergents(cf, 2);
    CHECK(archimedean_growth_check(table, cf).b_remark_holds);
}

TEST_CASE("valuation laws hold on quadratic-surd and Ruban expansions") {
    // Surd input: the 2-periodic value of [0, overline(1/5, 2/25)].
    QuadSurd alpha = two_periodic_value(PartialQuotient(5, 1, 1), PartialQuotient(5, 2, 2));
    ExpandOptions opt;
    opt.max_steps = 25;
    opt.detect_period = false;
    opt.record_quotients = true;
    CFExpansion cf = expand(alpha, opt);
    ConvergentTable table = convergents(cf, cf.length());
    ValuationLawReport rep = check_valuation_laws(table, cf);
    for (const auto& law : rep.laws)
        if (!law.holds) MESSAGE(law.law, ": ", law.detail);
    CHECK(rep.all_hold);

    // Ruban floors also satisfy |x - s(x)|_p < 1 and v_p(b_n) < 0, so the
    // laws carry over.
    ExpandOptions ruban;
    ruban.kind = FloorKind::Ruban;
    ruban.max_steps = 60;
    ruban.record_quotients = true;
    Prng rng(0x5B5);
    for (int i = 0; i < 20; ++i) {
        Rat x = oracles::random_rat(rng, 5000);
        CFExpansion rcf = expand(x, 5, ruban);
        ConvergentTable rt = convergents(rcf, rcf.length());
        CHECK(check_valuation_laws(rt, rcf).all_hold);
    }
}

TEST_CASE("surd expansion detects periods exactly") {
    // alpha = [0, overline(1/5, 2/25)]: complete quotients recur exactly
    PartialQuotient b1(5, 1, 1), b2(5, 2, 2);
    QuadSurd alpha = two_periodic_value(b1, b2);
    ExpandOptions opt;
    opt.max_steps = 50;
    CFExpansion cf = expand(alpha, opt);
    REQUIRE(cf.status.kind == ExpansionStatus::Kind::PeriodDetected);
    CHECK(cf.status.period_len == 2);
    CHECK(cf.b0.is_zero());
    CHECK(cf.tail[0] == b1);
    CHECK(cf.tail[1] == b2);
}
