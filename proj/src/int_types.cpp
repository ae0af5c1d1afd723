#include "padic_cf/int_types.hpp"

#include "padic_cf/errors.hpp"

#include <stdexcept>

namespace padic_cf {

Int pow_int(const Int& base, long long e) {
    if (e < 0) throw std::invalid_argument("pow_int: negative exponent");
    Int result = 1;
    Int b = base;
    long long n = e;
    while (n > 0) {
        if (n & 1) result *= b;
        b *= b;
        n >>= 1;
    }
    return result;
}

Int isqrt_int(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt_int: negative input");
    if (n == 0) return 0;
    // Initial guess from bit length, then Newton.
    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    Int x = Int(1) << ((bits + 1) / 2);
    while (true) {
        Int y = (x + n / x) >> 1;
        if (y >= x) break;
        x = y;
    }
    while (x * x > n) --x;
    return x;
}

bool is_perfect_square(const Int& n, Int* root) {
    if (n < 0) return false;
    Int s = isqrt_int(n);
    if (s * s == n) {
        if (root) *root = s;
        return true;
    }
    return false;
}

namespace {

Int modpow(Int base, Int exp, const Int& mod) {
    Int result = 1;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (boost::multiprecision::bit_test(exp, 0)) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

bool miller_rabin(const Int& n, const Int& a) {
    if (n % a == 0) return n == a;
    Int d = n - 1;
    long long s = 0;
    while (!boost::multiprecision::bit_test(d, 0)) {
        d >>= 1;
        ++s;
    }
    Int x = modpow(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (long long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

bool is_prime_int(const Int& n) {
    if (n < 2) return false;
    for (int q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (!miller_rabin(n, Int(a))) return false;
    }
    // Deterministic for n < 3.3e24, probabilistically safe beyond.
    return true;
}

} // namespace

bool is_prime_i64(long long n) { return is_prime_int(Int(n)); }

void require_odd_prime(long long p) {
    if (p < 3 || p % 2 == 0 || !is_prime_i64(p))
        throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
}

long long factor_out(Int& n, const Int& q) {
    long long count = 0;
    while (n % q == 0) {
        n /= q;
        ++count;
    }
    return count;
}

void squarefree_decompose(const Int& n, Int& m, Int& d) {
    if (n == 0) {
        m = 0;
        d = 0;
        return;
    }
    Int rest = abs_int(n);
    m = 1;
    d = n < 0 ? -1 : 1;
    for (Int q = 2; q * q <= rest && q <= 1000000; ++q) {
        if (rest % q != 0) continue;
        long long e = factor_out(rest, q);
        m *= pow_int(q, e / 2);
        if (e % 2 != 0) d *= q;
    }
    if (rest > 1) {
        Int root;
        if (is_perfect_square(rest, &root)) {
            m *= root;
        } else if (is_prime_int(rest)) {
            d *= rest;
        } else if (rest <= Int(1) << 80) {
            // Composite leftover with no factor <= 10^6: product of two
            // large primes, hence squarefree unless a perfect square
            // (excluded above).
            d *= rest;
        } else {
            throw SizeLimitError("squarefree_decompose: cofactor too large to classify");
        }
    }
}

std::string int_to_string(const Int& v) { return v.str(); }

Int int_from_string(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw ParseError("not an integer: '" + s + "'");
    }
}

Int fibonacci(long long n) {
    if (n < 0) throw std::invalid_argument("fibonacci: negative index");
    Int a = 0, b = 1;
    for (long long i = 0; i < n; ++i) {
        Int t = a + b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace padic_cf
