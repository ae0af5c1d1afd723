#pragma once

#include "padic_cf/int_types.hpp"
#include "padic_cf/quad_surd.hpp"
#include "padic_cf/rat.hpp"

#include <string>
#include <vector>

namespace padic_cf {

/// Truncated balanced-digit Laurent expansion: value ≡ Σ digits[i] p^{r+i}
/// (mod p^{r+N}), every digit in {-(p-1)/2, ..., (p-1)/2}, leading digit
/// nonzero unless the value is 0 to the stated precision (then digits is
/// empty and r = 0 by convention).
struct PAdicApprox {
    long long p = 0;
    long long r = 0;
    std::vector<long long> digits;
    long long precision = 0;

    bool is_zero() const { return digits.empty(); }

    /// Exact rational value of the truncation Σ digits[i] p^{r+i}.
    Rat truncation_value() const;

    std::string to_string() const;
};

/// Approximate p-adic number in unit-times-power form: value ≡ unit * p^val
/// (mod p^{val + digits_known}) with p ∤ unit; `zero` marks a value that is
/// 0 modulo everything known. Internal workhorse behind PAdicApprox, surd
/// valuations and approximate re-expansion.
struct UnitResidue {
    long long p = 0;
    Int unit = 0;
    long long val = 0;
    long long digits_known = 0;
    bool zero = true;

    static UnitResidue zero_value(long long p, long long known) { return {p, 0, 0, known, true}; }
};

/// First N balanced digits of x starting at r = vp(x).
PAdicApprox digits_of_rat(const Rat& x, long long p, long long N);

/// First N balanced digits of a quadratic surd through its p-adic embedding;
/// adaptive precision, PrecisionExhausted past the digit budget.
PAdicApprox digits_of_surd(const QuadSurd& x, long long N);

UnitResidue residue_of_rat(const Rat& x, long long p, long long N);
UnitResidue residue_of_surd(const QuadSurd& x, long long N);

PAdicApprox approx_from_residue(const UnitResidue& u, long long N);

/// Balanced digits of an integer residue known mod p^count.
std::vector<long long> balanced_digits(Int residue, long long p, long long count);

/// Centered representative of x modulo m (m odd): result ≡ x, |result| <= (m-1)/2.
Int centered_mod(const Int& x, const Int& m);

} // namespace padic_cf
