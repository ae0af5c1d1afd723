#pragma once

#include "padic_cf/cf_engine.hpp"
#include "padic_cf/heights.hpp"
#include "padic_cf/partial_quotient.hpp"
#include "padic_cf/quad_surd.hpp"
#include "padic_cf/rat.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace padic_cf {

/// Hypothesis 1 on a prefix (b_1, ..., b_k): every a_i > 0 and, for the
/// b_i != p^{-1}, |b^_i|_inf < sqrt(3/14) p^a / F_{k+1} with
/// a = min{a_i : a_i != 1}. Evaluated exactly as 14 b^_i^2 F_{k+1}^2 < 3 p^{2a}.
/// When no exponent differs from 1 the convention a = 1 applies.
struct Hypothesis1Report {
    long long k = 0;
    long long a = 1;
    bool a_defined = false; // false: min over empty set, convention a = 1
    Int fib = 0;            // F_{k+1}
    Rat bound_squared;      // (3/14) p^{2a} / F_{k+1}^2
    std::vector<long long> violations; // 1-based indices
    bool passes = false;
};

Hypothesis1Report hypothesis1_check(const std::vector<PartialQuotient>& prefix, long long p);

struct CertificateEntry {
    std::string hypothesis;
    bool pass = false;
    std::string note;
};

struct FamilyCertificate {
    std::vector<CertificateEntry> entries;
    bool all_pass = true;

    void add(std::string hypothesis, bool pass, std::string note = "");
};

/// Run layout shared by the quasi-periodic and block-repetition families:
/// runs start at positions run_start[i] (1-based), repeat a block of length
/// block_len[i] exactly repeats[i] times. For the quasi-periodic family the
/// block is the single quotient p^{-1}.
struct FamilySpecBase {
    long long p = 0;
    long long d_cap_exp = 1; // |b_i|_p <= p^{d_cap_exp}
    Rat C;
    std::vector<long long> run_start;
    std::vector<long long> block_len;
    std::vector<long long> repeats;
    std::vector<PartialQuotient> filler_pool;
    // Optional explicit block contents, one per run (block-repetition
    // family); empty blocks are drawn from the pool.
    std::vector<std::vector<PartialQuotient>> blocks;
    long long lambda_growth_index_cap = 3;

    long long runs() const { return static_cast<long long>(run_start.size()); }
    long long run_end(long long i) const; // last position of run i
    void validate_shape() const;
};

struct QPerSpec : FamilySpecBase {};
struct OotoSpec : FamilySpecBase {};

/// Derives run positions from the growth rule lambda_i = ceil(C n_i) + 1,
/// n_{i+1} = n_i + lambda_i k_i + gap.
QPerSpec make_qper_spec(long long p, const std::vector<PartialQuotient>& pool, const Rat& C, long long n0,
                        long long block_len, long long runs, long long gap, long long d_cap_exp);
OotoSpec make_ooto_spec(long long p, const std::vector<PartialQuotient>& pool, const Rat& C, long long n0,
                        long long block_len, long long runs, long long gap, long long d_cap_exp);

struct GeneratedSequence {
    std::vector<PartialQuotient> quotients; // b_1 .. b_N
    FamilyCertificate certificate;
};

GeneratedSequence gen_qper(const QPerSpec& spec, long long length, std::uint64_t seed);
GeneratedSequence gen_ooto(const OotoSpec& spec, long long length, std::uint64_t seed);

/// Independent re-validation of an emitted sequence against every family
/// hypothesis (kept separate from the generators by design).
FamilyCertificate validate_qper(const std::vector<PartialQuotient>& seq, const QPerSpec& spec);
FamilyCertificate validate_ooto(const std::vector<PartialQuotient>& seq, const OotoSpec& spec);

/// beta' = [overline(p^{-1})]: the v_p = -1 root of p x^2 - x - p.
QuadSurd pinv_tail_value(long long p);

/// Exact value of [0, overline(b1, b2)] as a QuadSurd (b1 b2 > 0 so that the
/// field is real; the p-adic branch is fixed by v_p = v_p(b1) on the tail).
QuadSurd two_periodic_value(const PartialQuotient& b1, const PartialQuotient& b2);

struct BetaApproximantReport {
    QuadSurd beta;
    Valuation gap_vp = Valuation::infinity();     // v_p(alpha_N - beta)
    long long bound_exponent = 0;                  // 2 f_{shared-1}
    bool gap_ok = false;                           // gap_vp > bound_exponent
    std::optional<long long> predicted_gap_vp;     // 2 f_{shared-1} + 1 when a_shared >= 2
    Int height = 0;
    Int height_bound = 0; // |B_{n_i - 1}|_p^2
    bool height_ok = false;
};

/// The quasi-periodic-family approximant beta^{(i)} = [0, b_1..b_{n_i - 1}, overline(p^{-1})]
/// with the shared-prefix gap and the h2 height audit. `quotients` is
/// b_1..b_N of the generated alpha, shared = n_i + k_i lambda_i.
BetaApproximantReport beta_approximant(const std::vector<PartialQuotient>& quotients, long long p, long long n_i,
                                       long long shared);

struct PalindromeReport {
    bool palindromic = false;
    bool symmetric = false;   // M_n symmetric, i.e. A_n = B_{n-1}
    bool a_eq_bprev = false;
    std::optional<Valuation> sq_approx_valuation; // v_p(alpha^2 - A_{n-1}/B_n)
    bool sq_bound_holds = false;
};

PalindromeReport palindrome_analysis(const std::vector<PartialQuotient>& quotients, long long p, long long n,
                                     const std::optional<QuadSurd>& alpha = std::nullopt);

struct SturmianSlope {
    QuadSurd theta; // irrational, 0 < theta < 1, D > 1
    PartialQuotient a;
    PartialQuotient b;

    void validate() const;
};

/// c_n = a when floor((n+1)theta) - floor(n theta) = 0, b when 1; n = 1..N.
std::vector<PartialQuotient> gen_sturmian(const SturmianSlope& slope, long long N);

/// c_n by bit-parity of n, n = 0..N-1.
std::vector<PartialQuotient> gen_thue_morse(const PartialQuotient& a, const PartialQuotient& b, long long N);

struct SubspaceWitnessReport {
    bool applicable = false; // palindromic prefix at n
    Valuation gap1 = Valuation::infinity(); // v_p(alpha - A_n/B_n)
    Valuation gap2 = Valuation::infinity(); // v_p(alpha^2 - A_{n-1}/B_n)
    std::optional<Rat> delta;               // min(gap)/(-v_p(B_n)); empty when a gap is infinite
    bool delta_exceeds_15_8 = false;
    bool size_x = false, size_y = false, size_z = false; // |.|_inf < |.|_p^{1/4}
    bool z_max = false; // |B_n|_p = max(|A_n|_p, |A_{n-1}|_p, |B_n|_p)
};

SubspaceWitnessReport subspace_witness(const std::vector<PartialQuotient>& quotients, long long p, long long n,
                                       const QuadSurd& alpha);

} // namespace padic_cf
