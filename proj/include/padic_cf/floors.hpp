#pragma once

#include "padic_cf/digits.hpp"
#include "padic_cf/partial_quotient.hpp"
#include "padic_cf/quad_surd.hpp"
#include "padic_cf/rat.hpp"

#include <string>

namespace padic_cf {

enum class FloorKind { Browkin, Ruban, Counterexample };

std::string to_string(FloorKind kind);
FloorKind floor_kind_from_string(const std::string& name);

/// The floor s(x): Browkin truncates the balanced expansion at index 0,
/// Ruban does the same with digits in {0..p-1}, Counterexample is the
/// diagnostic function of the axiomatization remarks (0 on pZ_p, else
/// p^{vp(x)}).
PartialQuotient padic_floor(const Rat& x, long long p, FloorKind kind = FloorKind::Browkin);
PartialQuotient padic_floor(const QuadSurd& x, FloorKind kind = FloorKind::Browkin);
PartialQuotient padic_floor(const PAdicApprox& x, FloorKind kind = FloorKind::Browkin);

namespace diag {
/// s(a) = 0 for a in pZ_p, p^{vp(a)} otherwise; satisfies (S1)/(S3) but not
/// the contraction |x - s(x)|_p < 1. Exposed for the incompatibility checks.
PartialQuotient counterexample_floor(const Rat& x, long long p);
PartialQuotient counterexample_floor(const QuadSurd& x);
} // namespace diag

/// The three floor-function conditions: values in the S-integers Z[1/p],
/// archimedean bound |s(x)|_inf < p/2, and p-adic contraction
/// |x - s(x)|_p < 1.
struct FloorContractReport {
    bool in_s_integers = false;
    bool archimedean_bound = false;
    bool padic_contraction = false;
    bool all() const { return in_s_integers && archimedean_bound && padic_contraction; }
};

FloorContractReport check_floor_contract(const Rat& x, long long p, FloorKind kind);
FloorContractReport check_floor_contract(const QuadSurd& x, FloorKind kind);

} // namespace padic_cf
