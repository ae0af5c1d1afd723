#include "padic_cf/config.hpp"
#include "padic_cf/errors.hpp"
#include "padic_cf/modular.hpp"
#include "padic_cf/prng.hpp"
#include "padic_cf/quad_surd.hpp"
#include "padic_cf/rat.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace padic_cf;

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rat(Int(6), Int(4)) == Rat(Int(3), Int(2)));
    CHECK(Rat(Int(-6), Int(-4)) == Rat(Int(3), Int(2)));
    CHECK(Rat(Int(2), Int(-4)).to_string() == "-1/2");
    CHECK(Rat(0).to_string() == "0");
    CHECK(Rat::parse("50/7") == Rat(Int(50), Int(7)));
    CHECK(Rat::parse("-3") == Rat(-3));
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), DivisionByZeroError);
    CHECK_THROWS_AS(Rat::parse("x/y"), ParseError);
}

TEST_CASE("vp on rationals") {
    CHECK(vp(Rat(Int(1), Int(3)), 5) == 0);
    CHECK(vp(Rat(Int(-3), Int(5)), 5) == -1);
    // 50 = 2 * 5^2 by the factorization oracle
    CHECK(vp(Rat(Int(50), Int(7)), 5) == 2);
    CHECK(vp(Rat(0), 5).is_infinite());
    CHECK_THROWS(vp(Rat(1), 4));
}

TEST_CASE("vp is a valuation: product and ultrametric laws") {
    Prng rng(0xA11CE5);
    for (long long p : {3, 5, 7, 11}) {
        for (int i = 0; i < 1000; ++i) {
            Rat x = oracles::random_rat(rng, 5000);
            Rat y = oracles::random_rat(rng, 5000);
            Valuation vx = vp(x, p), vy = vp(y, p);
            CHECK(vp(x * y, p) == vx + vy);
            Valuation vsum = vp(x + y, p);
            CHECK(vsum >= min(vx, vy));
            if (vx != vy) CHECK(vsum == min(vx, vy));
        }
    }
}

TEST_CASE("quad surd norm identity and rationalization") {
    // (1 + sqrt(2))(1 - sqrt(2)) = -1
    QuadSurd x(7, 2, 1, Rat(1), Rat(1), Rat(1));
    QuadSurd y(7, 2, 1, Rat(1), Rat(-1), Rat(1));
    QuadSurd prod = x * y;
    CHECK(prod.is_rational());
    CHECK(prod.to_rat() == Rat(-1));

    // 1/sqrt(2) = (0 + (1/2) sqrt(2))/1
    QuadSurd sqrt2(7, 2, 1, Rat(0), Rat(1), Rat(1));
    QuadSurd inv = sqrt2.inverse();
    CHECK(inv.P() == 0);
    CHECK(Rat(inv.Q(), inv.R()) == Rat(Int(1), Int(2)));
}

TEST_CASE("quad surd canonical form") {
    // (2 + 2 sqrt(2))/2 -> (1 + sqrt(2))/1
    QuadSurd x(7, 2, 1, Rat(2), Rat(2), Rat(2));
    CHECK(x.P() == 1);
    CHECK(x.Q() == 1);
    CHECK(x.R() == 1);
    CHECK(x.canonical_form() == x);

    // equality-respecting: x - y = 0 iff canonical forms match
    QuadSurd y(7, 2, 1, Rat(Int(1), Int(3)), Rat(Int(1), Int(3)), Rat(Int(1), Int(3)));
    CHECK(x == y);
    QuadSurd diff = x - y;
    CHECK(diff.is_rational());
    CHECK(diff.to_rat().is_zero());
}

TEST_CASE("quad surd rejects invalid fields") {
    CHECK_THROWS_AS(QuadSurd(7, 4, 1, Rat(1), Rat(1), Rat(1)), std::invalid_argument); // not squarefree
    CHECK_THROWS_AS(QuadSurd(5, 2, 1, Rat(1), Rat(1), Rat(1)), NotResidueError);       // 2 is not a QR mod 5
    CHECK_THROWS_AS(QuadSurd(5, 10, 1, Rat(1), Rat(1), Rat(1)), NotResidueError);      // p | D
    CHECK_THROWS_AS(QuadSurd(7, 2, 1, Rat(1), Rat(1), Rat(0)), DivisionByZeroError);
    QuadSurd a(7, 2, 1, Rat(0), Rat(1), Rat(1));
    QuadSurd b(7, 2, -1, Rat(0), Rat(1), Rat(1));
    CHECK_THROWS_AS(a + b, MixedFieldError); // branches differ
}

TEST_CASE("quad surd arithmetic agrees with floating point") {
    Prng rng(0xF10A7);
    const double sqrt2 = std::sqrt(2.0);
    auto value = [&](const QuadSurd& s) {
        return (s.P().convert_to<double>() + s.Q().convert_to<double>() * sqrt2) / s.R().convert_to<double>();
    };
    for (int i = 0; i < 200; ++i) {
        Rat p1 = oracles::random_rat(rng, 50, true), q1 = oracles::random_rat(rng, 50);
        Rat p2 = oracles::random_rat(rng, 50, true), q2 = oracles::random_rat(rng, 50);
        QuadSurd x(7, 2, 1, p1, q1, Rat(rng.range(1, 20)));
        QuadSurd y(7, 2, 1, p2, q2, Rat(rng.range(1, 20)));
        double vx = value(x), vy = value(y);
        CHECK(value(x + y) == doctest::Approx(vx + vy).epsilon(1e-9));
        CHECK(value(x - y) == doctest::Approx(vx - vy).epsilon(1e-9));
        CHECK(value(x * y) == doctest::Approx(vx * vy).epsilon(1e-9));
        if (std::abs(vy) > 1e-6) CHECK(value(x / y) == doctest::Approx(vx / vy).epsilon(1e-9));
    }
}

TEST_CASE("quad surd vp via the embedding") {
    // v_p(sqrt(D)) = 0; min rule when valuations differ
    QuadSurd x(7, 2, 1, Rat(49), Rat(1), Rat(1)); // 49 + sqrt(2): v = min(2, 0) = 0
    CHECK(x.vp() == 0);
    QuadSurd y(7, 2, 1, Rat(49), Rat(7), Rat(1)); // v = min(2, 1) = 1
    CHECK(y.vp() == 1);
    QuadSurd z(7, 2, 1, Rat(0), Rat(3), Rat(49)); // 3 sqrt(2)/49: v = -2
    CHECK(z.vp() == -2);

    // Tie case: (s - sqrt(2)) with s^2 = 2 mod 7^k has high valuation on one branch.
    Int s = hensel_sqrt(2, 7, 6, 1);
    QuadSurd tie(7, 2, 1, Rat(s), Rat(-1), Rat(1));
    Valuation v = tie.vp();
    CHECK(v >= 6);
    QuadSurd other(7, 2, -1, Rat(s), Rat(-1), Rat(1));
    CHECK(other.vp() == 0);
}

TEST_CASE("valuation resolution respects the digit budget") {
    // s agrees with sqrt(2) to 128 digits, so v_p(s - sqrt(2)) >= 128 and a
    // budget of 64 digits cannot resolve it.
    Int s = hensel_sqrt(2, 7, 128, 1);
    QuadSurd close(7, 2, 1, Rat(s), Rat(-1), Rat(1));
    long long saved = digit_budget();
    set_digit_budget(64);
    CHECK_THROWS_AS(close.vp(), PrecisionExhaustedError);
    set_digit_budget(saved);
    CHECK(close.vp() >= 128);
}

TEST_CASE("quad surd parse and print round out") {
    QuadSurd x(7, 2, 1, Rat(1), Rat(-2), Rat(3));
    CHECK(x.to_string() == "(1 - 2*sqrt(2))/3");
    QuadSurd parsed = QuadSurd::parse(x.to_string(), 7, 1);
    CHECK(parsed == x);
    QuadSurd y = QuadSurd::parse("(0 + 1*sqrt(2))/1", 7, 1);
    CHECK(y.Q() == 1);
}

TEST_CASE("real sign of quadratic surds") {
    QuadSurd golden(11, 5, 1, Rat(-1), Rat(1), Rat(2)); // (sqrt(5) - 1)/2 > 0
    CHECK(golden.real_sign() == 1);
    CHECK((golden - Rat(1)).real_sign() == -1);
    CHECK(golden.to_double() == doctest::Approx(0.6180339887));
}
