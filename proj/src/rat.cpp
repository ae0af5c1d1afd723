#include "padic_cf/rat.hpp"

#include "padic_cf/errors.hpp"

#include <ostream>

namespace padic_cf {

Rat::Rat(Int n, Int d) {
    if (d == 0) throw DivisionByZeroError("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) {
        num_ = 0;
        den_ = 1;
        return;
    }
    Int g = gcd_int(abs_int(n), d);
    num_ = n / g;
    den_ = d / g;
}

Rat Rat::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(int_from_string(text));
        return Rat(int_from_string(text.substr(0, slash)), int_from_string(text.substr(slash + 1)));
    } catch (const ParseError&) {
        throw ParseError("not a rational: '" + text + "'");
    }
}

Rat Rat::operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rat Rat::operator+(const Rat& o) const { return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
Rat Rat::operator-(const Rat& o) const { return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
Rat Rat::operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }

Rat Rat::operator/(const Rat& o) const {
    if (o.num_ == 0) throw DivisionByZeroError("rational division by zero");
    return Rat(num_ * o.den_, den_ * o.num_);
}

Rat Rat::inverse() const {
    if (num_ == 0) throw DivisionByZeroError("inverse of zero");
    return Rat(den_, num_);
}

Rat Rat::abs() const {
    Rat r = *this;
    if (r.num_ < 0) r.num_ = -r.num_;
    return r;
}

std::string Rat::to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

double Rat::to_double() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

Valuation vp(const Rat& x, long long p) {
    require_odd_prime(p);
    if (x.is_zero()) return Valuation::infinity();
    Int q(p);
    Int n = x.num();
    long long v = factor_out(n, q);
    if (v > 0) return Valuation::of(v);
    Int d = x.den();
    return Valuation::of(-factor_out(d, q));
}

Rat p_unit_part(const Rat& x, long long p, long long& valuation_out) {
    if (x.is_zero()) throw std::domain_error("p_unit_part of zero");
    Int q(p);
    Int n = x.num();
    Int d = x.den();
    long long v = factor_out(n, q);
    v -= factor_out(d, q);
    valuation_out = v;
    return Rat(n, d);
}

bool is_p_integer(const Rat& x, long long p) {
    Int d = x.den();
    factor_out(d, Int(p));
    return d == 1;
}

} // namespace padic_cf
