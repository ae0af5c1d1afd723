#pragma once

#include "padic_cf/int_types.hpp"
#include "padic_cf/rat.hpp"
#include "padic_cf/valuation.hpp"

#include <string>

namespace padic_cf {

/// Element u / p^a of Z[1/p] with p ∤ u, the partial quotients b_i.
/// Zero is (u=0, a=0). |value|_p = p^a when u != 0.
struct PartialQuotient {
    long long p = 0;
    Int u = 0;
    long long a = 0;

    PartialQuotient() = default;
    PartialQuotient(long long p_, Int u_, long long a_);

    static PartialQuotient zero(long long p) { return PartialQuotient(p, 0, 0); }
    static PartialQuotient p_inverse(long long p) { return PartialQuotient(p, 1, 1); }

    /// Validates that x = u/p^a for some p ∤ u, a >= 0.
    static PartialQuotient from_rat(const Rat& x, long long p);

    bool is_zero() const { return u == 0; }
    bool is_p_inverse() const { return u == 1 && a == 1; }
    Rat to_rat() const { return Rat(u, pow_int(Int(p), a)); }
    Valuation vp() const { return is_zero() ? Valuation::infinity() : Valuation::of(-a); }

    /// True when the value is a fixed point of the Browkin floor, i.e. a
    /// legitimate partial quotient: |u| <= (p^{a+1}-1)/2.
    bool is_browkin_canonical() const;

    bool operator==(const PartialQuotient& o) const { return p == o.p && u == o.u && a == o.a; }
    bool operator!=(const PartialQuotient& o) const { return !(*this == o); }

    /// Paper-style rendering: "u/p^a", plain "u" when a = 0.
    std::string to_string() const;
};

} // namespace padic_cf
