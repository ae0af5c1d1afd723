#pragma once

#include "padic_cf/int_types.hpp"
#include "padic_cf/valuation.hpp"

#include <compare>
#include <iosfwd>
#include <string>

namespace padic_cf {

/// Arbitrary-precision rational, always reduced: gcd(num, den) = 1, den >= 1,
/// zero is 0/1. Immutable after construction.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}          // NOLINT: implicit by design
    Rat(const Int& n) : num_(n), den_(1) {}         // NOLINT
    Rat(Int n, Int d);

    static Rat parse(const std::string& text);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rat operator-() const;
    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;
    Rat inverse() const;
    Rat abs() const;

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator<=(const Rat& o) const { return !(o < *this); }
    bool operator>=(const Rat& o) const { return !(*this < o); }

    /// "num/den"; integers render without the "/1".
    std::string to_string() const;
    double to_double() const;

private:
    Int num_;
    Int den_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// p-adic valuation of a rational; v_p(0) = +infinity.
Valuation vp(const Rat& x, long long p);

/// x * p^{-vp(x)}: the p-unit part (x != 0).
Rat p_unit_part(const Rat& x, long long p, long long& valuation_out);

/// True when den(x) is a power of p, i.e. x in Z[1/p].
bool is_p_integer(const Rat& x, long long p);

} // namespace padic_cf
