#pragma once

#include "padic_cf/cf_engine.hpp"
#include "padic_cf/int_types.hpp"
#include "padic_cf/partial_quotient.hpp"
#include "padic_cf/rat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace padic_cf {

/// Periodic expansion [b0, b1, ..., bk, overline(b_{k+1}, ..., b_{k+t+1})]
/// with b0 = 0 and k >= 1 (the height-bound shape); every quotient after b0 has
/// negative valuation.
struct PeriodicCF {
    long long p = 0;
    std::vector<PartialQuotient> preperiod; // b0 (= 0), b1, ..., bk
    std::vector<PartialQuotient> period;    // b_{k+1}, ..., b_{k+t+1}, nonempty

    long long k() const { return static_cast<long long>(preperiod.size()) - 1; }
    long long t() const { return static_cast<long long>(period.size()) - 1; }

    void validate() const;

    /// Quotients of the finite truncation with the period unrolled m times.
    std::vector<PartialQuotient> unrolled(long long m) const;
};

/// C0 x^2 + C1 x + C2 annihilating the periodic value; C_i in Z[1/p],
/// (c0, c1, c2) the primitive integer form after clearing by
/// p^{e~_t + 2 f_k - 1} and dividing by the content, sign-normalized to
/// c0 > 0.
struct QuadraticRelation {
    long long p = 0;
    Rat C0, C1, C2;
    Int c0 = 0, c1 = 0, c2 = 0;
    Int content = 1;             // gcd of the cleared (pre-primitive) coefficients
    long long clearing_exponent = 0;

    Int discriminant() const { return c1 * c1 - 4 * c0 * c2; }
    bool is_degree_two() const { return c0 != 0; }
    std::string polynomial_string() const;
};

/// The 16 summands C_ij of the relation before collection, for the
/// |C_ij|_p <= p^{e~_t + 2 f_k - 1} integrality audit.
struct RelationTerms {
    std::vector<Rat> c0_terms, c1_terms, c2_terms;
};

/// Relation of the pure period value beta = [overline(q_0, ..., q_t)]:
/// Bt beta^2 + (B_{t-1} - A_t) beta - A_{t-1} = 0, cleared to integers.
QuadraticRelation pure_period_relation(const std::vector<PartialQuotient>& period, long long p);

/// Quadratic relation of a periodic CF via the convergent C0/C1/C2 formulas.
/// With verify = true the relation is checked to annihilate the CF value to
/// >= 64 p-adic digits (via an exact unrolled rational approximant).
QuadraticRelation periodic_to_relation(const PeriodicCF& cf, bool verify = true);

RelationTerms relation_terms(const PeriodicCF& cf);

/// Exact rational approximant alpha_m with v_p(alpha - alpha_m) > target.
Rat unrolled_approximant(const PeriodicCF& cf, long long target_valuation);

/// v_p(C0 a^2 + C1 a + C2) for a rational test point a.
Valuation relation_residual_valuation(const QuadraticRelation& rel, const Rat& a);

/// Hensel root of the relation mod p^N on the chosen branch of sqrt(disc).
UnitResidue padic_root_of_relation(const QuadraticRelation& rel, long long N, int branch);

/// Solves the relation mod p^N for both branches and returns the one whose
/// approximate re-expansion reproduces the expected quotients; throws
/// DegenerateRelationError when neither branch matches.
UnitResidue matching_root(const QuadraticRelation& rel, const std::vector<PartialQuotient>& expected,
                          long long N, int* branch_out = nullptr);

Int naive_height(const QuadraticRelation& rel);
Int naive_height(const Rat& x);

struct WeilHeight {
    double value = 0.0;
    double tolerance = 0.0;
    /// H^2 = Mahler measure; exact in all but the mixed-root case.
    std::optional<Rat> exact_square;
};

/// Weil height of the degree-2 relation via the Mahler measure; throws
/// ReduciblePolynomialError when the discriminant is a perfect square.
WeilHeight weil_height_deg2(const QuadraticRelation& rel);

struct HeightReport {
    long long p = 0;
    long long degree = 2;
    Int naive_h = 0;              // height of the primitive cleared polynomial
    Int raw_max_coeff = 0;        // max |c_i| before content division
    std::optional<Int> minimal_h; // degree-1 height when the quadratic is reducible
    Rat bound_value;
    bool bound_holds = false;
    bool irreducible = true;
    QuadraticRelation relation;
    // h2 extras
    bool b_inf_bound_holds = true; // |B_k|_inf^2 < p/(4p+2)
    bool a_inf_bound_holds = true; // |A_k|_inf^2 < p/(4p+2)
    Rat A_k;
    Rat B_k;
};

/// h1 height-bound audit: h <= (8/p^2) |B_{k+t+1}|_p^2 |B_k|_p^2.
HeightReport check_h1_bound(const PeriodicCF& cf);

/// h2 height-bound audit for alpha = [0, b1..bk, overline(1/p)]: h <= |B_k|_p^2
/// plus the intermediate archimedean bounds. The prefix must satisfy
/// Hypothesis 1 (HypothesisViolatedError otherwise).
HeightReport check_h2_bound(const std::vector<PartialQuotient>& prefix, long long p);

struct RemarkReport {
    long long degree = 0;
    double naive_h = 0.0;
    double weil_H = 0.0;
    bool upper_holds = false; // H <= sqrt(D+1) h
    bool lower_holds = false; // h <= 2^D H
};

RemarkReport check_remark_H(const QuadraticRelation& rel);
RemarkReport check_remark_H(const Rat& x);

struct FibonacciCountReport {
    long long k = 0;
    Int monomials = 0;
    Int fibonacci_expected = 0;
    bool count_matches = false;
    bool sum_matches_Bk = false; // symbolic expansion re-evaluates to B^_k
};

/// Expands B^_k symbolically into monomials b^_{i...} p^{a_...} and counts
/// them (= F_{k+1}); k <= 12 (SizeLimitError beyond).
FibonacciCountReport fibonacci_term_count(const std::vector<PartialQuotient>& prefix, long long p);

} // namespace padic_cf
