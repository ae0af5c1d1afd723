#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace padic_cf {

/// p-adic valuation value: a finite integer, or +infinity for the zero element.
class Valuation {
public:
    static Valuation infinity() { return Valuation(true, 0); }
    static Valuation of(long long v) { return Valuation(false, v); }

    bool is_infinite() const { return infinite_; }

    long long finite() const {
        if (infinite_) throw std::domain_error("valuation of zero is +infinity");
        return v_;
    }

    Valuation operator+(const Valuation& o) const {
        if (infinite_ || o.infinite_) return infinity();
        return of(v_ + o.v_);
    }

    friend Valuation min(const Valuation& a, const Valuation& b) {
        if (a.infinite_) return b;
        if (b.infinite_) return a;
        return of(a.v_ < b.v_ ? a.v_ : b.v_);
    }

    bool operator==(const Valuation& o) const {
        return infinite_ == o.infinite_ && (infinite_ || v_ == o.v_);
    }
    bool operator!=(const Valuation& o) const { return !(*this == o); }

    /// +infinity compares greater than every finite value.
    bool operator<(const Valuation& o) const {
        if (infinite_) return false;
        if (o.infinite_) return true;
        return v_ < o.v_;
    }
    bool operator>=(const Valuation& o) const { return !(*this < o); }
    bool operator>(const Valuation& o) const { return o < *this; }
    bool operator<=(const Valuation& o) const { return !(o < *this); }

    bool operator>=(long long v) const { return infinite_ || v_ >= v; }
    bool operator<(long long v) const { return !infinite_ && v_ < v; }
    bool operator<=(long long v) const { return !infinite_ && v_ <= v; }
    bool operator==(long long v) const { return !infinite_ && v_ == v; }

    std::string to_string() const { return infinite_ ? "+inf" : std::to_string(v_); }

private:
    Valuation(bool inf, long long v) : infinite_(inf), v_(v) {}

    bool infinite_;
    long long v_;
};

} // namespace padic_cf
