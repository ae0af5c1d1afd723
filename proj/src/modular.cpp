#include "padic_cf/modular.hpp"

#include "padic_cf/errors.hpp"

#include <stdexcept>

namespace padic_cf {

Int mod_reduce(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

Int mod_pow(const Int& base, const Int& exp, const Int& m) {
    if (m == 1) return 0;
    Int result = 1;
    Int b = mod_reduce(base, m);
    Int e = exp;
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) result = result * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return result;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int old_r = mod_reduce(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw DivisionByZeroError("no modular inverse: gcd != 1");
    return mod_reduce(old_s, m);
}

int legendre_symbol(const Int& a, long long p) {
    Int r = mod_reduce(a, Int(p));
    if (r == 0) return 0;
    Int ls = mod_pow(r, (Int(p) - 1) / 2, Int(p));
    return ls == 1 ? 1 : -1;
}

Int sqrt_mod_prime(const Int& a, long long p) {
    Int pp(p);
    Int n = mod_reduce(a, pp);
    if (n == 0) return 0;
    if (legendre_symbol(n, p) != 1)
        throw NotResidueError(n.str() + " is not a quadratic residue mod " + std::to_string(p));
    if (p % 4 == 3) return mod_pow(n, (pp + 1) / 4, pp);

    // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
    Int q = pp - 1;
    long long s = 0;
    while (!boost::multiprecision::bit_test(q, 0)) {
        q >>= 1;
        ++s;
    }
    Int z = 2;
    while (legendre_symbol(z, p) != -1) ++z;
    Int m(s);
    Int c = mod_pow(z, q, pp);
    Int t = mod_pow(n, q, pp);
    Int r = mod_pow(n, (q + 1) / 2, pp);
    while (t != 1) {
        Int t2 = t;
        long long i = 0;
        while (t2 != 1) {
            t2 = t2 * t2 % pp;
            ++i;
        }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) b = b * b % pp;
        m = i;
        c = b * b % pp;
        t = t * c % pp;
        r = r * b % pp;
    }
    return r;
}

Int hensel_sqrt(const Int& D, long long p, long long N, int branch) {
    if (N < 1) throw std::invalid_argument("hensel_sqrt: precision must be >= 1");
    if (branch != 1 && branch != -1) throw std::invalid_argument("hensel_sqrt: branch must be +1 or -1");
    Int pp(p);
    if (mod_reduce(D, pp) == 0)
        throw NotResidueError("hensel_sqrt requires p ∤ D");
    Int s = sqrt_mod_prime(D, p);

    // Newton lifting with doubling modulus.
    Int modulus = pp;
    Int target = pow_int(pp, N);
    while (modulus < target) {
        Int next = modulus * modulus;
        if (next > target) next = target;
        s = mod_reduce(s - (s * s - D) * mod_inverse(2 * s, next), next);
        modulus = next;
    }
    s = mod_reduce(s, target);

    bool plus_branch = 2 * mod_reduce(s, pp) <= pp - 1;
    if ((branch == 1) != plus_branch) s = target - s;
    return s;
}

} // namespace padic_cf
