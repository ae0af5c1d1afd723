#include "padic_cf/floors.hpp"

#include "padic_cf/config.hpp"
#include "padic_cf/errors.hpp"
#include "padic_cf/modular.hpp"

#include <stdexcept>

namespace padic_cf {

std::string to_string(FloorKind kind) {
    switch (kind) {
        case FloorKind::Browkin: return "browkin";
        case FloorKind::Ruban: return "ruban";
        case FloorKind::Counterexample: return "counterexample";
    }
    return "?";
}

FloorKind floor_kind_from_string(const std::string& name) {
    if (name == "browkin") return FloorKind::Browkin;
    if (name == "ruban") return FloorKind::Ruban;
    if (name == "counterexample") return FloorKind::Counterexample;
    throw ParseError("unknown floor kind '" + name + "'");
}

namespace {

/// Truncation Σ_{i<=0} a_i p^i from a unit residue with val <= 0. The
/// balanced truncation is the centered representative of the unit modulo
/// p^{1-val}; the Ruban truncation is the least nonnegative one.
PartialQuotient truncation_floor(const UnitResidue& x, bool balanced) {
    long long span = 1 - x.val; // digits at indices val..0
    if (x.digits_known < span)
        throw PrecisionExhaustedError("floor needs digits up to index 0");
    Int modulus = pow_int(Int(x.p), span);
    Int w = balanced ? centered_mod(x.unit, modulus) : mod_reduce(x.unit, modulus);
    return PartialQuotient(x.p, w, -x.val);
}

PartialQuotient floor_of_residue(const UnitResidue& x, FloorKind kind) {
    switch (kind) {
        case FloorKind::Browkin:
        case FloorKind::Ruban: {
            if (x.zero || x.val >= 1) {
                // Zero-to-precision with val+known >= 1 pins the value in the
                // maximal ideal, where both floors vanish.
                if (x.zero && x.val + x.digits_known < 1)
                    throw PrecisionExhaustedError("cannot separate value from the unit ball");
                return PartialQuotient::zero(x.p);
            }
            return truncation_floor(x, kind == FloorKind::Browkin);
        }
        case FloorKind::Counterexample: {
            if (x.zero) {
                if (x.val + x.digits_known < 1)
                    throw PrecisionExhaustedError("cannot separate value from the unit ball");
                return PartialQuotient::zero(x.p);
            }
            if (x.val >= 1) return PartialQuotient::zero(x.p);
            return PartialQuotient(x.p, 1, -x.val);
        }
    }
    throw std::logic_error("unreachable floor kind");
}

} // namespace

PartialQuotient padic_floor(const Rat& x, long long p, FloorKind kind) {
    require_odd_prime(p);
    if (x.is_zero()) return PartialQuotient::zero(p);
    long long v;
    p_unit_part(x, p, v);
    if (v >= 1) return PartialQuotient::zero(p);
    return floor_of_residue(residue_of_rat(x, p, 1 - v), kind);
}

PartialQuotient padic_floor(const QuadSurd& x, FloorKind kind) {
    if (x.is_rational()) return padic_floor(x.to_rat(), x.prime(), kind);
    Valuation v = x.vp();
    if (v >= 1) return PartialQuotient::zero(x.prime());
    return floor_of_residue(residue_of_surd(x, 1 - v.finite()), kind);
}

PartialQuotient padic_floor(const PAdicApprox& x, FloorKind kind) {
    UnitResidue res;
    res.p = x.p;
    if (x.is_zero()) {
        res = UnitResidue::zero_value(x.p, x.precision);
        res.val = x.r;
    } else {
        res.zero = false;
        res.val = x.r;
        res.digits_known = static_cast<long long>(x.digits.size());
        Int u = 0;
        Int scale = 1;
        for (long long d : x.digits) {
            u += d * scale;
            scale *= x.p;
        }
        res.unit = mod_reduce(u, scale);
    }
    return floor_of_residue(res, kind);
}

namespace diag {

PartialQuotient counterexample_floor(const Rat& x, long long p) {
    return padic_floor(x, p, FloorKind::Counterexample);
}

PartialQuotient counterexample_floor(const QuadSurd& x) {
    return padic_floor(x, FloorKind::Counterexample);
}

} // namespace diag

namespace {

FloorContractReport contract_from(const PartialQuotient& s, const Valuation& diff_vp, long long p) {
    FloorContractReport rep;
    rep.in_s_integers = is_p_integer(s.to_rat(), p);
    rep.archimedean_bound = s.is_zero() || 2 * abs_int(s.u) < pow_int(Int(p), s.a + 1);
    rep.padic_contraction = diff_vp >= 1;
    return rep;
}

} // namespace

FloorContractReport check_floor_contract(const Rat& x, long long p, FloorKind kind) {
    PartialQuotient s = padic_floor(x, p, kind);
    return contract_from(s, vp(x - s.to_rat(), p), p);
}

FloorContractReport check_floor_contract(const QuadSurd& x, FloorKind kind) {
    PartialQuotient s = padic_floor(x, kind);
    if (x.is_rational()) return check_floor_contract(x.to_rat(), x.prime(), kind);
    return contract_from(s, (x - s.to_rat()).vp(), x.prime());
}

} // namespace padic_cf
