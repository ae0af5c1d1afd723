#pragma once

#include "padic_cf/int_types.hpp"

namespace padic_cf {

/// base^exp mod m, exp >= 0, m >= 1.
Int mod_pow(const Int& base, const Int& exp, const Int& m);

/// Inverse of a mod m for gcd(a, m) = 1; throws DivisionByZeroError otherwise.
Int mod_inverse(const Int& a, const Int& m);

/// Least nonnegative residue.
Int mod_reduce(const Int& a, const Int& m);

/// Legendre symbol (a/p) in {-1, 0, 1} for odd prime p.
int legendre_symbol(const Int& a, long long p);

/// Square root of a mod odd prime p (a a quadratic residue); Tonelli-Shanks.
/// Throws NotResidueError when no root exists.
Int sqrt_mod_prime(const Int& a, long long p);

/// s with s^2 ≡ D (mod p^N), requires p ∤ D and D a QR mod p.
/// branch = +1 picks the lift whose residue mod p lies in {1..(p-1)/2},
/// branch = -1 the complementary lift.
Int hensel_sqrt(const Int& D, long long p, long long N, int branch);

} // namespace padic_cf
