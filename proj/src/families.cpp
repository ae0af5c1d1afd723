#include "padic_cf/families.hpp"

#include "padic_cf/errors.hpp"
#include "padic_cf/modular.hpp"
#include "padic_cf/prng.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace padic_cf {

Hypothesis1Report hypothesis1_check(const std::vector<PartialQuotient>& prefix, long long p) {
    require_odd_prime(p);
    Hypothesis1Report rep;
    rep.k = static_cast<long long>(prefix.size());
    rep.fib = fibonacci(rep.k + 1);

    long long a = 0;
    for (const auto& b : prefix) {
        if (b.is_zero() || b.a < 1) continue; // flagged below
        if (b.a != 1 && (a == 0 || b.a < a)) a = b.a;
    }
    rep.a_defined = a != 0;
    rep.a = rep.a_defined ? a : 1;

    const Int p2a = pow_int(Int(p), 2 * rep.a);
    rep.bound_squared = Rat(3 * p2a, 14 * rep.fib * rep.fib);

    for (std::size_t i = 0; i < prefix.size(); ++i) {
        const auto& b = prefix[i];
        if (b.is_zero() || b.a < 1) {
            rep.violations.push_back(static_cast<long long>(i + 1));
            continue;
        }
        if (b.is_p_inverse()) continue; // exempt
        // |b^_i|_inf < sqrt(3/14) p^a / F_{k+1}  <=>  14 b^2 F^2 < 3 p^{2a}
        if (!(14 * b.u * b.u * rep.fib * rep.fib < 3 * p2a))
            rep.violations.push_back(static_cast<long long>(i + 1));
    }
    rep.passes = rep.violations.empty();
    return rep;
}

void FamilyCertificate::add(std::string hypothesis, bool pass, std::string note) {
    if (!pass) all_pass = false;
    entries.push_back({std::move(hypothesis), pass, std::move(note)});
}

long long FamilySpecBase::run_end(long long i) const {
    return run_start[static_cast<std::size_t>(i)] +
           repeats[static_cast<std::size_t>(i)] * block_len[static_cast<std::size_t>(i)] - 1;
}

void FamilySpecBase::validate_shape() const {
    require_odd_prime(p);
    if (run_start.empty()) throw InfeasibleSpecError("spec has no runs");
    if (run_start.size() != block_len.size() || run_start.size() != repeats.size())
        throw InfeasibleSpecError("run_start/block_len/repeats sizes differ");
    for (std::size_t i = 0; i < run_start.size(); ++i) {
        if (run_start[i] < 1 || block_len[i] < 1 || repeats[i] < 1)
            throw InfeasibleSpecError("run parameters must be positive");
        if (i + 1 < run_start.size() && run_start[i + 1] <= run_end(static_cast<long long>(i)))
            throw InfeasibleSpecError("runs overlap");
    }
    if (d_cap_exp < 1) throw InfeasibleSpecError("d_cap must allow |b|_p >= p");
}

namespace {

long long rat_ceil(const Rat& x) {
    Int q = x.num() / x.den();
    if (x.num() > 0 && x.num() % x.den() != 0) q += 1;
    return q.convert_to<long long>();
}

template <typename Spec>
Spec make_spec(long long p, const std::vector<PartialQuotient>& pool, const Rat& C, long long n0,
               long long block_len, long long runs, long long gap, long long d_cap_exp) {
    Spec spec;
    spec.p = p;
    spec.C = C;
    spec.filler_pool = pool;
    spec.d_cap_exp = d_cap_exp;
    long long n = n0;
    for (long long i = 0; i < runs; ++i) {
        long long lambda = rat_ceil(C * Rat(n)) + 1;
        spec.run_start.push_back(n);
        spec.block_len.push_back(block_len);
        spec.repeats.push_back(lambda);
        n = n + lambda * block_len + gap;
    }
    return spec;
}

/// Conservative per-position feasibility filter for fillers and block
/// entries: an element must satisfy Hypothesis 1 inside every checked prefix
/// that will contain it, assuming the worst-case a = min{a != 1 over pool}.
struct Hyp1Filter {
    long long p;
    long long a_eff;
    std::vector<long long> checked_ends; // ascending prefix lengths

    bool admits(const PartialQuotient& b, long long position) const {
        if (b.is_p_inverse()) return true;
        Int p2a = pow_int(Int(p), 2 * a_eff);
        for (long long end : checked_ends) {
            if (end < position) continue;
            Int fib = fibonacci(end + 1);
            if (!(14 * b.u * b.u * fib * fib < 3 * p2a)) return false;
        }
        return true;
    }
};

long long pool_a_eff(const std::vector<PartialQuotient>& pool) {
    long long a = 0;
    for (const auto& b : pool)
        if (b.a != 1 && (a == 0 || b.a < a)) a = b.a;
    return a == 0 ? 1 : a;
}

void validate_pool(const std::vector<PartialQuotient>& pool, long long p, long long d_cap_exp) {
    if (pool.empty()) throw InfeasibleSpecError("empty filler pool");
    for (const auto& b : pool) {
        if (b.p != p) throw InfeasibleSpecError("pool element prime mismatch");
        if (b.is_zero() || b.a < 1) throw InfeasibleSpecError("pool element " + b.to_string() + " has v_p >= 0");
        if (b.a > d_cap_exp) throw InfeasibleSpecError("pool element " + b.to_string() + " exceeds the |b|_p cap");
        if (!b.is_browkin_canonical())
            throw InfeasibleSpecError("pool element " + b.to_string() + " is not a Browkin floor value");
    }
}

/// Checked Hypothesis-1 prefix ends: the prefix indexing differs between
/// the two families (qper: prefixes to n_{i-1} for i >= 1; ooto: prefixes to
/// n_i for every i) and is preserved as written.
std::vector<long long> checked_prefix_ends(const FamilySpecBase& spec, bool ooto) {
    std::vector<long long> ends;
    for (long long i = 0; i < spec.runs(); ++i) {
        if (ooto)
            ends.push_back(spec.run_start[static_cast<std::size_t>(i)]);
        else if (i + 1 < spec.runs())
            ends.push_back(spec.run_start[static_cast<std::size_t>(i)]); // = n_{(i+1)-1}
    }
    return ends;
}

FamilyCertificate validate_common(const std::vector<PartialQuotient>& seq, const FamilySpecBase& spec, bool ooto);

GeneratedSequence generate(const FamilySpecBase& spec, long long length, std::uint64_t seed, bool ooto) {
    spec.validate_shape();
    validate_pool(spec.filler_pool, spec.p, spec.d_cap_exp);
    const long long last_needed = spec.run_end(spec.runs() - 1);
    if (length < last_needed)
        throw InfeasibleSpecError("length " + std::to_string(length) + " does not cover the last run (needs " +
                                  std::to_string(last_needed) + ")");

    Hyp1Filter filter{spec.p, pool_a_eff(spec.filler_pool), checked_prefix_ends(spec, ooto)};
    Prng rng(seed);
    auto pick = [&](long long position) {
        std::vector<const PartialQuotient*> candidates;
        for (const auto& b : spec.filler_pool)
            if (filter.admits(b, position)) candidates.push_back(&b);
        if (candidates.empty())
            throw InfeasibleSpecError("no pool element passes Hypothesis 1 at position " + std::to_string(position));
        return *candidates[static_cast<std::size_t>(rng.below(candidates.size()))];
    };

    std::vector<PartialQuotient> seq(static_cast<std::size_t>(length), PartialQuotient::zero(spec.p));
    std::vector<bool> fixed(static_cast<std::size_t>(length), false);
    for (long long i = 0; i < spec.runs(); ++i) {
        const long long n = spec.run_start[static_cast<std::size_t>(i)];
        const long long k = spec.block_len[static_cast<std::size_t>(i)];
        const long long lam = spec.repeats[static_cast<std::size_t>(i)];
        std::vector<PartialQuotient> block;
        if (ooto && static_cast<std::size_t>(i) < spec.blocks.size() &&
            !spec.blocks[static_cast<std::size_t>(i)].empty()) {
            block = spec.blocks[static_cast<std::size_t>(i)];
            if (static_cast<long long>(block.size()) != k)
                throw InfeasibleSpecError("explicit block length differs from block_len");
        } else {
            for (long long j = 0; j < k; ++j)
                block.push_back(ooto ? pick(n + j) : PartialQuotient::p_inverse(spec.p));
        }
        for (long long r = 0; r < lam; ++r)
            for (long long j = 0; j < k; ++j) {
                const long long pos = n + r * k + j;
                seq[static_cast<std::size_t>(pos - 1)] = block[static_cast<std::size_t>(j)];
                fixed[static_cast<std::size_t>(pos - 1)] = true;
            }
    }
    for (long long pos = 1; pos <= length; ++pos)
        if (!fixed[static_cast<std::size_t>(pos - 1)]) seq[static_cast<std::size_t>(pos - 1)] = pick(pos);

    GeneratedSequence out;
    out.quotients = std::move(seq);
    out.certificate = validate_common(out.quotients, spec, ooto);
    // Structural hypotheses are satisfied by construction; a failing
    // Hypothesis-1 entry here means the pool itself is infeasible.
    for (const auto& e : out.certificate.entries)
        if (!e.pass && e.hypothesis.rfind("hyp1", 0) == 0)
            throw InfeasibleSpecError("filler pool violates Hypothesis 1: " + e.hypothesis + " (" + e.note + ")");
    return out;
}

FamilyCertificate validate_common(const std::vector<PartialQuotient>& seq, const FamilySpecBase& spec, bool ooto) {
    spec.validate_shape();
    FamilyCertificate cert;
    const long long N = static_cast<long long>(seq.size());
    auto at = [&](long long pos) -> const PartialQuotient& { return seq[static_cast<std::size_t>(pos - 1)]; };

    // Run contents.
    {
        bool ok = true;
        std::string note;
        for (long long i = 0; i < spec.runs() && ok; ++i) {
            const long long n = spec.run_start[static_cast<std::size_t>(i)];
            const long long k = spec.block_len[static_cast<std::size_t>(i)];
            const long long lam = spec.repeats[static_cast<std::size_t>(i)];
            if (spec.run_end(i) > N) {
                ok = false;
                note = "run " + std::to_string(i) + " exceeds the sequence";
                break;
            }
            if (ooto) {
                // b_{h + k_i} = b_h for n_i <= h <= n_i + (lambda_i - 1) k_i - 1
                for (long long h = n; h <= n + (lam - 1) * k - 1 && ok; ++h)
                    if (at(h + k) != at(h)) {
                        ok = false;
                        note = "repetition broken at h = " + std::to_string(h);
                    }
            } else {
                for (long long pos = n; pos <= spec.run_end(i) && ok; ++pos)
                    if (!at(pos).is_p_inverse()) {
                        ok = false;
                        note = "b_" + std::to_string(pos) + " = " + at(pos).to_string() + " != 1/p";
                    }
            }
        }
        cert.add(ooto ? "block_repetition" : "runs_equal_p_inverse", ok, note);
    }

    // Spacing n_{i+1} >= n_i + lambda_i k_i.
    {
        bool ok = true;
        std::string note;
        for (long long i = 0; i + 1 < spec.runs(); ++i) {
            const long long next_min = spec.run_start[static_cast<std::size_t>(i)] +
                                       spec.repeats[static_cast<std::size_t>(i)] *
                                           spec.block_len[static_cast<std::size_t>(i)];
            if (spec.run_start[static_cast<std::size_t>(i + 1)] < next_min) {
                ok = false;
                note = "n_" + std::to_string(i + 1) + " < n_" + std::to_string(i) + " + lambda_i k_i";
                break;
            }
        }
        cert.add("run_spacing", ok, note);
    }

    // k_i bounded (finite data: report the max).
    {
        long long kmax = 0;
        for (long long k : spec.block_len) kmax = std::max(kmax, k);
        cert.add("k_bounded", true, "max k_i = " + std::to_string(kmax));
    }

    // D = max |b_i|_p over the emitted sequence; cap and C threshold.
    long long amax = 0;
    for (const auto& b : seq) amax = std::max(amax, b.a);
    cert.add("d_cap", amax <= spec.d_cap_exp,
             "max |b|_p = p^" + std::to_string(amax) + ", cap p^" + std::to_string(spec.d_cap_exp));

    // C > (2 or 4) log D / log p - 1 with D = p^amax: exact rational compare.
    {
        const long long factor = ooto ? 4 : 2;
        const Rat threshold(Int(factor) * amax - 1);
        cert.add("C_threshold", spec.C > threshold,
                 "C = " + spec.C.to_string() + ", needs > " + threshold.to_string());
    }

    // lambda_i > C n_i from some i0 onward, i0 <= cap.
    {
        long long i0 = -1;
        for (long long i = spec.runs() - 1; i >= 0; --i) {
            if (Rat(spec.repeats[static_cast<std::size_t>(i)]) >
                spec.C * Rat(spec.run_start[static_cast<std::size_t>(i)]))
                i0 = i;
            else
                break;
        }
        const bool ok = i0 >= 0 && i0 <= spec.lambda_growth_index_cap;
        cert.add("lambda_growth", ok,
                 i0 < 0 ? "lambda_i <= C n_i at the last run"
                        : "holds from i0 = " + std::to_string(i0) + " (cap " +
                              std::to_string(spec.lambda_growth_index_cap) + ")");
    }

    // Hypothesis 1 prefixes, preserving each family's own off-by-one indexing.
    for (long long i = 0; i < spec.runs(); ++i) {
        long long end;
        std::string name;
        if (ooto) {
            end = spec.run_start[static_cast<std::size_t>(i)];
            name = "hyp1(b_1..b_{n_" + std::to_string(i) + "})";
        } else {
            if (i + 1 >= spec.runs()) continue; // qper checks (b_1..b_{n_{i-1}}) for i >= 1
            end = spec.run_start[static_cast<std::size_t>(i)];
            name = "hyp1(b_1..b_{n_" + std::to_string(i) + "}) for i = " + std::to_string(i + 1);
        }
        if (end > N) {
            cert.add(name, false, "prefix exceeds sequence");
            continue;
        }
        std::vector<PartialQuotient> prefix(seq.begin(), seq.begin() + end);
        Hypothesis1Report rep = hypothesis1_check(prefix, spec.p);
        std::ostringstream note;
        note << "k = " << rep.k << ", a = " << rep.a << ", F_{k+1} = " << rep.fib.str();
        if (!rep.passes) {
            note << ", violations at";
            for (long long v : rep.violations) note << " " << v;
        }
        cert.add(name, rep.passes, note.str());
    }

    return cert;
}

} // namespace

QPerSpec make_qper_spec(long long p, const std::vector<PartialQuotient>& pool, const Rat& C, long long n0,
                        long long block_len, long long runs, long long gap, long long d_cap_exp) {
    return make_spec<QPerSpec>(p, pool, C, n0, block_len, runs, gap, d_cap_exp);
}

OotoSpec make_ooto_spec(long long p, const std::vector<PartialQuotient>& pool, const Rat& C, long long n0,
                        long long block_len, long long runs, long long gap, long long d_cap_exp) {
    return make_spec<OotoSpec>(p, pool, C, n0, block_len, runs, gap, d_cap_exp);
}

GeneratedSequence gen_qper(const QPerSpec& spec, long long length, std::uint64_t seed) {
    return generate(spec, length, seed, false);
}

GeneratedSequence gen_ooto(const OotoSpec& spec, long long length, std::uint64_t seed) {
    return generate(spec, length, seed, true);
}

FamilyCertificate validate_qper(const std::vector<PartialQuotient>& seq, const QPerSpec& spec) {
    return validate_common(seq, spec, false);
}

FamilyCertificate validate_ooto(const std::vector<PartialQuotient>& seq, const OotoSpec& spec) {
    return validate_common(seq, spec, true);
}

QuadSurd pinv_tail_value(long long p) {
    require_odd_prime(p);
    // Root of p x^2 - x - p with v_p = -1.
    Int disc = 1 + 4 * Int(p) * Int(p);
    Int m, D;
    squarefree_decompose(disc, m, D);
    for (int sign : {1, -1}) {
        QuadSurd root(p, D, 1, Rat(1), Rat(sign * m), Rat(2 * p));
        if (root.vp() == -1) return root;
    }
    throw std::logic_error("no v_p = -1 root of p x^2 - x - p");
}

QuadSurd two_periodic_value(const PartialQuotient& b1, const PartialQuotient& b2) {
    const long long p = b1.p;
    if (b2.p != p) throw MixedFieldError("mixed primes in period");
    QuadraticRelation rel = pure_period_relation({b1, b2}, p);
    Int disc = rel.discriminant();
    if (is_perfect_square(disc)) throw DegenerateRelationError("period value is rational");
    Int m, D;
    squarefree_decompose(disc, m, D);
    if (D <= 1) throw DegenerateRelationError("period discriminant is not positive (use b1 b2 > 0)");
    for (int sign : {1, -1}) {
        QuadSurd beta(p, D, 1, Rat(-rel.c1), Rat(sign * m), Rat(2 * rel.c0));
        if (beta.vp() == b1.vp()) return beta.inverse(); // alpha = [0, overline(b1, b2)] = 1/beta
    }
    throw std::logic_error("no root with the tail valuation v_p(b1)");
}

BetaApproximantReport beta_approximant(const std::vector<PartialQuotient>& quotients, long long p, long long n_i,
                                       long long shared) {
    const long long N = static_cast<long long>(quotients.size());
    if (n_i < 2 || shared <= n_i || N < shared)
        throw std::invalid_argument("need 2 <= n_i < shared <= N");

    std::vector<PartialQuotient> full;
    full.push_back(PartialQuotient::zero(p));
    full.insert(full.end(), quotients.begin(), quotients.end());
    ConvergentTable table = convergents_of(full, p);

    // beta = (beta' A_{n_i - 1} + A_{n_i - 2}) / (beta' B_{n_i - 1} + B_{n_i - 2})
    QuadSurd beta_tail = pinv_tail_value(p);
    QuadSurd num = beta_tail * table.at(n_i - 1).A + table.at(n_i - 2).A;
    QuadSurd den = beta_tail * table.at(n_i - 1).B + table.at(n_i - 2).B;
    QuadSurd beta = num / den;

    BetaApproximantReport rep{beta, Valuation::infinity(), 0, false, std::nullopt, 0, 0, false};
    Rat alpha_n = fold_finite(full, p);
    rep.gap_vp = (beta - alpha_n).vp();
    long long f_shared = 0;
    for (long long j = 1; j <= shared - 1; ++j) f_shared += quotients[static_cast<std::size_t>(j - 1)].a;
    rep.bound_exponent = 2 * f_shared;
    rep.gap_ok = rep.gap_vp >= rep.bound_exponent + 1;
    if (shared <= N && quotients[static_cast<std::size_t>(shared - 1)].a >= 2)
        rep.predicted_gap_vp = rep.bound_exponent + 1;

    std::vector<PartialQuotient> prefix(quotients.begin(), quotients.begin() + (n_i - 1));
    HeightReport h2 = check_h2_bound(prefix, p);
    rep.height = h2.naive_h;
    long long f_prefix = 0;
    for (const auto& b : prefix) f_prefix += b.a;
    rep.height_bound = pow_int(Int(p), 2 * f_prefix);
    rep.height_ok = h2.bound_holds && rep.height <= rep.height_bound;
    return rep;
}

PalindromeReport palindrome_analysis(const std::vector<PartialQuotient>& quotients, long long p, long long n,
                                     const std::optional<QuadSurd>& alpha) {
    if (n < 1 || n > static_cast<long long>(quotients.size()))
        throw std::invalid_argument("prefix length out of range");
    PalindromeReport rep;
    rep.palindromic = true;
    for (long long i = 0; i < n / 2; ++i)
        if (quotients[static_cast<std::size_t>(i)] != quotients[static_cast<std::size_t>(n - 1 - i)]) {
            rep.palindromic = false;
            break;
        }

    std::vector<PartialQuotient> full;
    full.push_back(PartialQuotient::zero(p));
    full.insert(full.end(), quotients.begin(), quotients.begin() + n);
    ConvergentTable table = convergents_of(full, p);
    rep.a_eq_bprev = table.at(n).A == table.at(n - 1).B;
    rep.symmetric = rep.a_eq_bprev; // M_n = [[B_n, B_{n-1}], [A_n, A_{n-1}]]

    if (alpha) {
        const auto& row = table.at(n);
        const auto& prev = table.at(n - 1);
        QuadSurd residual = *alpha * *alpha - Rat(prev.A / row.B);
        Valuation v = residual.vp();
        rep.sq_approx_valuation = v;
        Valuation v_alpha = alpha->vp();
        if (!v_alpha.is_infinite() && !row.f.is_infinite() && !prev.f.is_infinite()) {
            long long bound = v_alpha.finite() - row.f.finite() - prev.f.finite();
            rep.sq_bound_holds = v >= bound;
        }
    }
    return rep;
}

void SturmianSlope::validate() const {
    if (theta.is_rational()) throw RationalSlopeError("Sturmian slope must be irrational");
    if (theta.D() <= 1) throw RationalSlopeError("Sturmian slope needs a real embedding (D > 1)");
    if (theta.real_sign() <= 0 || (theta - Rat(1)).real_sign() >= 0)
        throw std::invalid_argument("slope must satisfy 0 < theta < 1");
    if (a == b) throw std::invalid_argument("Sturmian letters must differ");
}

std::vector<PartialQuotient> gen_sturmian(const SturmianSlope& slope, long long N) {
    slope.validate();
    std::vector<PartialQuotient> out;
    out.reserve(static_cast<std::size_t>(N));
    // floor(n theta) is nondecreasing with steps in {0, 1} for 0 < theta < 1.
    long long fl = 0; // floor(1 * theta) = 0
    for (long long n = 1; n <= N; ++n) {
        QuadSurd next = slope.theta * Rat(n + 1) - Rat(fl + 1);
        long long fl_next = fl + (next.real_sign() > 0 ? 1 : 0);
        out.push_back(fl_next - fl == 0 ? slope.a : slope.b);
        fl = fl_next;
    }
    return out;
}

std::vector<PartialQuotient> gen_thue_morse(const PartialQuotient& a, const PartialQuotient& b, long long N) {
    if (a == b) throw std::invalid_argument("Thue-Morse letters must differ");
    std::vector<PartialQuotient> out;
    out.reserve(static_cast<std::size_t>(N));
    for (long long n = 0; n < N; ++n) {
        int parity = __builtin_parityll(static_cast<unsigned long long>(n));
        out.push_back(parity == 0 ? a : b);
    }
    return out;
}

SubspaceWitnessReport subspace_witness(const std::vector<PartialQuotient>& quotients, long long p, long long n,
                                       const QuadSurd& alpha) {
    if (n < 1 || n > static_cast<long long>(quotients.size()))
        throw std::invalid_argument("prefix length out of range");
    SubspaceWitnessReport rep;
    PalindromeReport pal = palindrome_analysis(quotients, p, n);
    rep.applicable = pal.palindromic;

    std::vector<PartialQuotient> full;
    full.push_back(PartialQuotient::zero(p));
    full.insert(full.end(), quotients.begin(), quotients.begin() + n);
    ConvergentTable table = convergents_of(full, p);
    const auto& row = table.at(n);
    const auto& prev = table.at(n - 1);

    rep.gap1 = (alpha - Rat(row.A / row.B)).vp();
    rep.gap2 = (alpha * alpha - Rat(prev.A / row.B)).vp();

    if (!row.f.is_infinite() && row.f.finite() < 0) {
        const long long denom = -row.f.finite(); // -v_p(B_n) > 0
        if (!rep.gap1.is_infinite() && !rep.gap2.is_infinite()) {
            long long g = std::min(rep.gap1.finite(), rep.gap2.finite());
            rep.delta = Rat(Int(g), Int(denom));
            rep.delta_exceeds_15_8 = *rep.delta > Rat(Int(15), Int(8));
        } else {
            rep.delta_exceeds_15_8 = true; // an exact gap only strengthens the witness
        }
    }

    // |x|_inf < |x|_p^{1/4}: |x|^4 < p^{-4 v_p(x)}, exactly.
    auto size_ok = [&](const Rat& x, const Valuation& v) {
        if (v.is_infinite()) return false;
        Rat x4 = x * x * x * x;
        long long e = -4 * v.finite();
        Rat rhs = e >= 0 ? Rat(pow_int(Int(p), e)) : Rat(Int(1), pow_int(Int(p), -e));
        return x4 < rhs;
    };
    rep.size_x = size_ok(row.A, row.e);
    rep.size_y = size_ok(prev.A, prev.e);
    rep.size_z = size_ok(row.B, row.f);
    rep.z_max = row.f <= row.e && row.f <= prev.e;
    return rep;
}

} // namespace padic_cf
