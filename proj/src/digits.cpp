#include "padic_cf/digits.hpp"

#include "padic_cf/config.hpp"
#include "padic_cf/errors.hpp"
#include "padic_cf/modular.hpp"

#include <sstream>
#include <stdexcept>

namespace padic_cf {

Rat PAdicApprox::truncation_value() const {
    Int num = 0;
    Int scale = 1;
    for (long long d : digits) {
        num += d * scale;
        scale *= p;
    }
    // value = num * p^r
    if (r >= 0) return Rat(num * pow_int(Int(p), r));
    return Rat(num, pow_int(Int(p), -r));
}

std::string PAdicApprox::to_string() const {
    std::ostringstream os;
    if (is_zero()) {
        os << "0 (mod " << p << "^" << (r + precision) << ")";
        return os.str();
    }
    os << "[";
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) os << ", ";
        os << digits[i];
    }
    os << "] * " << p << "^" << r;
    return os.str();
}

Int centered_mod(const Int& x, const Int& m) {
    Int r = mod_reduce(x, m);
    if (2 * r > m - 1) r -= m;
    return r;
}

std::vector<long long> balanced_digits(Int residue, long long p, long long count) {
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(count));
    Int pp(p);
    for (long long i = 0; i < count; ++i) {
        Int d = centered_mod(residue, pp);
        out.push_back(d.convert_to<long long>());
        residue = (residue - d) / pp;
    }
    return out;
}

UnitResidue residue_of_rat(const Rat& x, long long p, long long N) {
    require_odd_prime(p);
    if (N < 1) throw std::invalid_argument("precision must be >= 1");
    if (x.is_zero()) return UnitResidue::zero_value(p, N);
    long long v;
    Rat unit = p_unit_part(x, p, v);
    Int modulus = pow_int(Int(p), N);
    Int u = mod_reduce(unit.num() * mod_inverse(unit.den(), modulus), modulus);
    return {p, u, v, N, false};
}

UnitResidue residue_of_surd(const QuadSurd& x, long long N) {
    if (N < 1) throw std::invalid_argument("precision must be >= 1");
    long long p = x.prime();
    if (x.is_rational()) return residue_of_rat(x.to_rat(), p, N);
    Int pp(p);

    Int r_unit = x.R();
    long long v_r = factor_out(r_unit, pp);

    long long budget = digit_budget();
    long long working = N + 16;
    while (true) {
        Int modulus = pow_int(pp, working);
        Int s = hensel_sqrt(x.D(), p, working, x.branch());
        Int t = mod_reduce(x.P() + x.Q() * s, modulus);
        if (t != 0) {
            long long v_num = factor_out(t, pp);
            if (working - v_num >= N) {
                Int target = pow_int(pp, N);
                Int unit = mod_reduce(t * mod_inverse(r_unit, target), target);
                return {p, unit, v_num - v_r, N, false};
            }
        }
        if (working >= budget + N)
            throw PrecisionExhaustedError("surd digits unresolved within digit budget " + std::to_string(budget));
        working = working * 2 <= budget + N ? working * 2 : budget + N;
    }
}

PAdicApprox approx_from_residue(const UnitResidue& u, long long N) {
    PAdicApprox out;
    out.p = u.p;
    out.precision = N;
    if (u.zero) {
        out.r = 0;
        return out;
    }
    if (u.digits_known < N) throw PrecisionExhaustedError("residue holds fewer digits than requested");
    out.r = u.val;
    out.digits = balanced_digits(mod_reduce(u.unit, pow_int(Int(u.p), N)), u.p, N);
    return out;
}

PAdicApprox digits_of_rat(const Rat& x, long long p, long long N) {
    return approx_from_residue(residue_of_rat(x, p, N), N);
}

PAdicApprox digits_of_surd(const QuadSurd& x, long long N) {
    return approx_from_residue(residue_of_surd(x, N), N);
}

} // namespace padic_cf
