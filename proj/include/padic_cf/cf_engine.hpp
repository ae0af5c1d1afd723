#pragma once

#include "padic_cf/digits.hpp"
#include "padic_cf/floors.hpp"
#include "padic_cf/partial_quotient.hpp"
#include "padic_cf/quad_surd.hpp"
#include "padic_cf/rat.hpp"
#include "padic_cf/valuation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace padic_cf {

struct ExpansionStatus {
    enum class Kind { Finite, TruncatedAtMaxSteps, PeriodDetected };
    Kind kind = Kind::Finite;
    long long preperiod_len = 0; // quotients before the period (b0 counted)
    long long period_len = 0;

    std::string to_string() const;
};

/// A continued fraction expansion [b0, b1, b2, ...]. For Browkin/Ruban
/// expansions every tail quotient has v_p < 0 and b0 has v_p <= 0 or is 0;
/// check_valuation_laws audits this rather than the type enforcing it (the
/// diagnostic Counterexample floor violates it by design).
struct CFExpansion {
    long long p = 0;
    PartialQuotient b0;
    std::vector<PartialQuotient> tail;
    ExpansionStatus status;
    FloorKind kind = FloorKind::Browkin;

    // Exact complete quotients α_0, α_1, ... when recorded (rational inputs
    // fill complete_rats, surd inputs complete_surds).
    std::vector<Rat> complete_rats;
    std::vector<QuadSurd> complete_surds;

    std::vector<PartialQuotient> quotients() const;
    long long length() const { return 1 + static_cast<long long>(tail.size()); }
};

struct ExpandOptions {
    long long max_steps = 10000;
    bool detect_period = true;
    FloorKind kind = FloorKind::Browkin;
    bool record_quotients = false;
};

CFExpansion expand(const Rat& x, long long p, const ExpandOptions& options = {});
CFExpansion expand(const QuadSurd& x, const ExpandOptions& options = {});

/// Quotient stream of an approximate value; stops early (without error) when
/// the residue runs out of digits. Used for Hensel-branch matching.
std::vector<PartialQuotient> expand_approx(UnitResidue x, long long max_steps);

/// Convergent table with rows n = -2, -1, 0, ...: A_n, B_n and their
/// valuations e_n = v_p(A_n), f_n = v_p(B_n).
struct ConvergentRow {
    long long n = 0;
    Rat A;
    Rat B;
    Valuation e = Valuation::infinity();
    Valuation f = Valuation::infinity();
};

struct ConvergentTable {
    long long p = 0;
    std::vector<ConvergentRow> rows; // rows[0] is n = -2

    const ConvergentRow& at(long long n) const { return rows.at(static_cast<std::size_t>(n + 2)); }
    long long max_index() const { return static_cast<long long>(rows.size()) - 3; }
};

ConvergentTable convergents(const CFExpansion& cf, long long count);
ConvergentTable convergents_of(const std::vector<PartialQuotient>& quotients, long long p);

/// Exact value A_n/B_n of a finite quotient list.
Rat fold_finite(const std::vector<PartialQuotient>& quotients, long long p);

/// One step of the p-adic division with remainder: x = q*y + r with
/// q = s(x/y) in Z[1/p], |q|_inf < p/2 and |r|_p < |y|_p.
struct EuclidStep {
    Rat x;
    Rat y;
    PartialQuotient q;
    Rat r;
};

EuclidStep euclid_divide(const Rat& x, const Rat& y, long long p);

/// Division step for quadratic surds sharing one field.
struct SurdEuclidStep {
    QuadSurd x;
    QuadSurd y;
    PartialQuotient q;
    QuadSurd r;
};

SurdEuclidStep euclid_divide(const QuadSurd& x, const QuadSurd& y);

/// Iterated division x_i = b_i x_{i+1} + x_{i+2}; terminates on rational
/// inputs with |x0|_p >= |x1|_p != 0.
std::vector<EuclidStep> euclid_algorithm(const Rat& x0, const Rat& x1, long long p);

struct LawCheck {
    std::string law;
    bool holds = true;
    long long first_violation = -1;
    std::string detail;
};

struct ValuationLawReport {
    std::vector<LawCheck> laws;
    bool all_hold = true;
};

/// Audits the classical valuation laws (i)-(vi) on an expansion and its table. Law (i)
/// and law (vi) need the exact input value; they are skipped when the
/// expansion carries no recorded complete quotients and no value is given.
ValuationLawReport check_valuation_laws(const ConvergentTable& table, const CFExpansion& cf);

struct ArchimedeanReport {
    bool growth_bound_holds = true;       // |x_k|_inf < M (p/2+1)^k for all rows
    long long first_dominated_index = -1; // first n with |A|_inf < |A|_p and |B|_inf < |B|_p onward
    bool b_remark_holds = true;           // |B_n|_inf <= |B_n|_p for all n >= -2
    Rat growth_constant_A;
    Rat growth_constant_B;
};

ArchimedeanReport archimedean_growth_check(const ConvergentTable& table, const CFExpansion& cf);

} // namespace padic_cf
