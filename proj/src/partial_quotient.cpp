#include "padic_cf/partial_quotient.hpp"

#include "padic_cf/errors.hpp"

#include <stdexcept>

namespace padic_cf {

PartialQuotient::PartialQuotient(long long p_, Int u_, long long a_) : p(p_), u(std::move(u_)), a(a_) {
    require_odd_prime(p);
    if (u == 0) {
        a = 0;
        return;
    }
    if (a < 0) throw std::invalid_argument("partial quotient exponent must be >= 0");
    if (u % p == 0) throw std::invalid_argument("partial quotient numerator divisible by p");
}

PartialQuotient PartialQuotient::from_rat(const Rat& x, long long p) {
    require_odd_prime(p);
    if (x.is_zero()) return zero(p);
    Int d = x.den();
    long long a = factor_out(d, Int(p));
    if (d != 1) throw std::invalid_argument("value " + x.to_string() + " is not in Z[1/" + std::to_string(p) + "]");
    return PartialQuotient(p, x.num(), a);
}

bool PartialQuotient::is_browkin_canonical() const {
    if (is_zero()) return true;
    return 2 * abs_int(u) <= pow_int(Int(p), a + 1) - 1;
}

std::string PartialQuotient::to_string() const {
    if (a == 0) return u.str();
    if (a == 1) return u.str() + "/" + std::to_string(p);
    return u.str() + "/" + std::to_string(p) + "^" + std::to_string(a);
}

} // namespace padic_cf
