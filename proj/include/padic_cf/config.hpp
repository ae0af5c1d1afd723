#pragma once

namespace padic_cf {

/// Digit budget: the maximum working precision (in p-adic digits) that
/// adaptive valuation/digit extraction may reach before giving up with
/// PrecisionExhausted. Default 256.
long long digit_budget();
void set_digit_budget(long long budget);

} // namespace padic_cf
