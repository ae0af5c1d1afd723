#include "padic_cf/config.hpp"

#include <atomic>
#include <stdexcept>

namespace padic_cf {

namespace {
std::atomic<long long> g_digit_budget{256};
}

long long digit_budget() { return g_digit_budget.load(std::memory_order_relaxed); }

void set_digit_budget(long long budget) {
    if (budget < 8) throw std::invalid_argument("digit budget must be >= 8");
    g_digit_budget.store(budget, std::memory_order_relaxed);
}

} // namespace padic_cf
