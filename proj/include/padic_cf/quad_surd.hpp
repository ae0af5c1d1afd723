#pragma once

#include "padic_cf/int_types.hpp"
#include "padic_cf/rat.hpp"
#include "padic_cf/valuation.hpp"

#include <string>

namespace padic_cf {

/// Exact element (P + Q*sqrt(D))/R of a quadratic field Q(sqrt(D)) together
/// with a chosen p-adic embedding: D squarefree, D not in {0, 1}, p ∤ D, D a
/// quadratic residue mod p, and `branch` selecting which Hensel lift of
/// sqrt(D) in Q_p the symbol denotes (+1: residue mod p in {1..(p-1)/2}).
///
/// Canonical form: P, Q, R integers with gcd(P, Q, R) = 1 and R > 0.
/// Arithmetic may produce rational degenerations (Q = 0); is_rational() and
/// to_rat() expose them. Values are immutable.
class QuadSurd {
public:
    QuadSurd(long long p, Int D, int branch, const Rat& P, const Rat& Q, const Rat& R);

    /// "(P + Q*sqrt(D))/R", e.g. "(1 - 2*sqrt(2))/3".
    static QuadSurd parse(const std::string& text, long long p, int branch);

    long long prime() const { return p_; }
    const Int& D() const { return D_; }
    int branch() const { return branch_; }
    const Int& P() const { return P_; }
    const Int& Q() const { return Q_; }
    const Int& R() const { return R_; }

    bool is_rational() const { return Q_ == 0; }
    Rat to_rat() const;

    bool same_field(const QuadSurd& o) const { return p_ == o.p_ && D_ == o.D_ && branch_ == o.branch_; }

    QuadSurd operator-() const;
    QuadSurd operator+(const QuadSurd& o) const;
    QuadSurd operator-(const QuadSurd& o) const;
    QuadSurd operator*(const QuadSurd& o) const;
    QuadSurd operator/(const QuadSurd& o) const;
    QuadSurd operator+(const Rat& s) const;
    QuadSurd operator-(const Rat& s) const;
    QuadSurd operator*(const Rat& s) const;
    QuadSurd operator/(const Rat& s) const;
    QuadSurd inverse() const;

    bool operator==(const QuadSurd& o) const;
    bool operator!=(const QuadSurd& o) const { return !(*this == o); }

    /// Already-canonical values return themselves; kept for contract clarity.
    const QuadSurd& canonical_form() const { return *this; }

    /// Stable key for exact period detection.
    std::string canonical_key() const;

    std::string to_string() const;

    /// p-adic valuation via the chosen embedding; adaptive precision,
    /// throws PrecisionExhaustedError past the digit budget.
    Valuation vp() const;

    /// Sign under the real embedding sqrt(D) > 0; requires D > 1.
    int real_sign() const;

    /// Float value under the real embedding; requires D > 1.
    double to_double() const;

private:
    struct RawTag {};
    QuadSurd(RawTag, long long p, Int D, int branch, Int P, Int Q, Int R);

    void canonicalize();
    QuadSurd raw(Int P, Int Q, Int R) const { return QuadSurd(RawTag{}, p_, D_, branch_, std::move(P), std::move(Q), std::move(R)); }

    long long p_;
    Int D_;
    int branch_;
    Int P_, Q_, R_;
};

} // namespace padic_cf
