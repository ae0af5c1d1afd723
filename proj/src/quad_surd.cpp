#include "padic_cf/quad_surd.hpp"

#include "padic_cf/config.hpp"
#include "padic_cf/errors.hpp"
#include "padic_cf/modular.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace padic_cf {

namespace {

void validate_field(long long p, const Int& D) {
    require_odd_prime(p);
    if (D == 0 || D == 1) throw std::invalid_argument("D must not be 0 or 1");
    Int m, d;
    squarefree_decompose(D, m, d);
    if (m != 1) throw std::invalid_argument("D = " + D.str() + " is not squarefree");
    if (mod_reduce(D, Int(p)) == 0) throw NotResidueError("p | D: no unramified embedding");
    if (legendre_symbol(D, p) != 1)
        throw NotResidueError("D = " + D.str() + " has no square root in Q_" + std::to_string(p));
}

} // namespace

QuadSurd::QuadSurd(RawTag, long long p, Int D, int branch, Int P, Int Q, Int R)
    : p_(p), D_(std::move(D)), branch_(branch), P_(std::move(P)), Q_(std::move(Q)), R_(std::move(R)) {
    canonicalize();
}

QuadSurd::QuadSurd(long long p, Int D, int branch, const Rat& P, const Rat& Q, const Rat& R)
    : p_(p), D_(std::move(D)), branch_(branch) {
    validate_field(p_, D_);
    if (branch_ != 1 && branch_ != -1) throw std::invalid_argument("branch must be +1 or -1");
    if (R.is_zero()) throw DivisionByZeroError("QuadSurd with R = 0");
    Int common = P.den() * Q.den() * R.den();
    P_ = P.num() * (common / P.den());
    Q_ = Q.num() * (common / Q.den());
    R_ = R.num() * (common / R.den());
    canonicalize();
}

void QuadSurd::canonicalize() {
    if (R_ == 0) throw DivisionByZeroError("QuadSurd with R = 0");
    Int g = gcd_int(gcd_int(abs_int(P_), abs_int(Q_)), abs_int(R_));
    if (g > 1) {
        P_ /= g;
        Q_ /= g;
        R_ /= g;
    }
    if (R_ < 0) {
        P_ = -P_;
        Q_ = -Q_;
        R_ = -R_;
    }
}

Rat QuadSurd::to_rat() const {
    if (!is_rational()) throw std::domain_error("QuadSurd value is irrational");
    return Rat(P_, R_);
}

QuadSurd QuadSurd::operator-() const { return raw(-P_, -Q_, R_); }

QuadSurd QuadSurd::operator+(const QuadSurd& o) const {
    if (!same_field(o)) throw MixedFieldError("QuadSurd arithmetic across different (D, branch, p)");
    return raw(P_ * o.R_ + o.P_ * R_, Q_ * o.R_ + o.Q_ * R_, R_ * o.R_);
}

QuadSurd QuadSurd::operator-(const QuadSurd& o) const { return *this + (-o); }

QuadSurd QuadSurd::operator*(const QuadSurd& o) const {
    if (!same_field(o)) throw MixedFieldError("QuadSurd arithmetic across different (D, branch, p)");
    return raw(P_ * o.P_ + Q_ * o.Q_ * D_, P_ * o.Q_ + Q_ * o.P_, R_ * o.R_);
}

QuadSurd QuadSurd::operator/(const QuadSurd& o) const { return *this * o.inverse(); }

QuadSurd QuadSurd::operator+(const Rat& s) const {
    return raw(P_ * s.den() + s.num() * R_, Q_ * s.den(), R_ * s.den());
}

QuadSurd QuadSurd::operator-(const Rat& s) const { return *this + (-s); }

QuadSurd QuadSurd::operator*(const Rat& s) const { return raw(P_ * s.num(), Q_ * s.num(), R_ * s.den()); }

QuadSurd QuadSurd::operator/(const Rat& s) const {
    if (s.is_zero()) throw DivisionByZeroError("QuadSurd division by zero rational");
    return *this * s.inverse();
}

QuadSurd QuadSurd::inverse() const {
    // 1/((P + Q sqrt(D))/R) = R (P - Q sqrt(D)) / (P^2 - Q^2 D)
    Int norm = P_ * P_ - Q_ * Q_ * D_;
    if (norm == 0) throw DivisionByZeroError("QuadSurd inverse of zero");
    return raw(R_ * P_, -R_ * Q_, norm);
}

bool QuadSurd::operator==(const QuadSurd& o) const {
    return same_field(o) && P_ == o.P_ && Q_ == o.Q_ && R_ == o.R_;
}

std::string QuadSurd::canonical_key() const {
    return P_.str() + "|" + Q_.str() + "|" + R_.str() + "|" + D_.str() + "|" + (branch_ > 0 ? "+" : "-") + "|" +
           std::to_string(p_);
}

std::string QuadSurd::to_string() const {
    std::string q_part =
        (Q_ < 0 ? " - " : " + ") + abs_int(Q_).str() + "*sqrt(" + D_.str() + ")";
    return "(" + P_.str() + q_part + ")/" + R_.str();
}

Valuation QuadSurd::vp() const {
    if (P_ == 0 && Q_ == 0) return Valuation::infinity();
    Int pp(p_);
    // v_p(P + Q sqrt(D)) with v_p(sqrt(D)) = 0: exact by the min rule when
    // v_p(P) != v_p(Q); otherwise resolved through the embedding.
    long long num_val;
    if (Q_ == 0) {
        Int n = P_;
        num_val = factor_out(n, pp);
    } else if (P_ == 0) {
        Int n = Q_;
        num_val = factor_out(n, pp);
    } else {
        Int np = P_, nq = Q_;
        long long vP = factor_out(np, pp);
        long long vQ = factor_out(nq, pp);
        if (vP != vQ) {
            num_val = vP < vQ ? vP : vQ;
        } else {
            // P + Q s with s = hensel_sqrt(D): both terms share p^vP; the
            // unit combination np + nq*s needs enough digits to show its
            // leading one.
            long long budget = digit_budget();
            long long precision = 16;
            long long v = -1;
            while (true) {
                Int modulus = pow_int(pp, precision);
                Int s = hensel_sqrt(D_, p_, precision, branch_);
                Int t = mod_reduce(np + nq * s, modulus);
                if (t != 0) {
                    v = factor_out(t, pp);
                    if (v < precision) break;
                }
                if (precision >= budget)
                    throw PrecisionExhaustedError("valuation unresolved within digit budget " +
                                                  std::to_string(budget));
                precision = precision * 2 <= budget ? precision * 2 : budget;
            }
            num_val = vP + v;
        }
    }
    Int r = R_;
    long long vR = factor_out(r, pp);
    return Valuation::of(num_val - vR);
}

int QuadSurd::real_sign() const {
    if (D_ <= 1) throw std::domain_error("real_sign requires D > 1");
    int num_sign;
    if (Q_ == 0) {
        num_sign = P_ == 0 ? 0 : (P_ < 0 ? -1 : 1);
    } else if (P_ >= 0 && Q_ > 0) {
        num_sign = 1;
    } else if (P_ <= 0 && Q_ < 0) {
        num_sign = -1;
    } else {
        // P and Q sqrt(D) pull in opposite directions: compare P^2 vs Q^2 D.
        Int lhs = Q_ * Q_ * D_;
        Int rhs = P_ * P_;
        int q_sign = Q_ < 0 ? -1 : 1;
        num_sign = lhs == rhs ? 0 : (lhs > rhs ? q_sign : -q_sign);
    }
    return num_sign; // R > 0 by canonical form
}

double QuadSurd::to_double() const {
    if (D_ <= 1) throw std::domain_error("to_double requires D > 1");
    double sq = std::sqrt(D_.convert_to<double>());
    return (P_.convert_to<double>() + Q_.convert_to<double>() * sq) / R_.convert_to<double>();
}

QuadSurd QuadSurd::parse(const std::string& text, long long p, int branch) {
    // "(P + Q*sqrt(D))/R" or "(P - Q*sqrt(D))/R"
    auto fail = [&] { throw ParseError("not a quadratic surd: '" + text + "'"); };
    std::size_t pos = text.find('(');
    std::size_t close = text.rfind(')');
    if (pos == std::string::npos || close == std::string::npos || close < pos) fail();
    std::string inner = text.substr(pos + 1, close - pos - 1);
    std::string after = text.substr(close + 1);

    std::size_t sq = inner.find("sqrt(");
    if (sq == std::string::npos) fail();
    std::size_t sq_close = inner.find(')', sq);
    if (sq_close == std::string::npos) fail();
    Int D = int_from_string(inner.substr(sq + 5, sq_close - sq - 5));

    std::size_t star = inner.rfind('*', sq);
    if (star == std::string::npos) fail();
    // Split "P +" / "P -" from the Q factor.
    std::size_t op = std::string::npos;
    int q_sign = 1;
    for (std::size_t i = star; i-- > 0;) {
        if (inner[i] == '+' || inner[i] == '-') {
            op = i;
            q_sign = inner[i] == '-' ? -1 : 1;
            break;
        }
    }
    if (op == std::string::npos) fail();
    auto strip = [](std::string s) {
        std::size_t b = s.find_first_not_of(" \t");
        std::size_t e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    Rat P = Rat::parse(strip(inner.substr(0, op)));
    Rat Q = Rat::parse(strip(inner.substr(op + 1, star - op - 1))) * Rat(q_sign);
    std::string after_stripped = strip(after);
    Rat R(1);
    if (!after_stripped.empty()) {
        if (after_stripped[0] != '/') fail();
        R = Rat::parse(strip(after_stripped.substr(1)));
    }
    return QuadSurd(p, D, branch, P, Q, R);
}

} // namespace padic_cf
