#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace padic_cf {

using Int = boost::multiprecision::cpp_int;

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int abs_int(const Int& a) { return boost::multiprecision::abs(a); }

/// p^e for e >= 0.
Int pow_int(const Int& base, long long e);

/// Largest s with s*s <= n (n >= 0).
Int isqrt_int(const Int& n);

bool is_perfect_square(const Int& n, Int* root = nullptr);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_i64(long long n);

/// Throws std::invalid_argument unless p is an odd prime.
void require_odd_prime(long long p);

/// Multiplicity of q in n (n != 0).
long long factor_out(Int& n, const Int& q);

/// n = m^2 * d with d squarefree (sign of d = sign of n). Trial division
/// up to 10^6 plus a primality fallback; throws SizeLimitError when the
/// remaining cofactor cannot be classified.
void squarefree_decompose(const Int& n, Int& m, Int& d);

std::string int_to_string(const Int& v);
Int int_from_string(const std::string& s);

/// F_0 = 0, F_1 = 1, ...
Int fibonacci(long long n);

} // namespace padic_cf
