#pragma once

#include <variant>
#include <vector>

namespace hwlod {

/// Vanilla call: max(0, x - strike).
struct RampPayoff {
    double strike;
};

/// Pays `amount` strictly in the money. The Heaviside convention at x ==
/// strike is "no payment" unless pay_at_strike is set.
struct CashOrNothingPayoff {
    double amount;
    double strike;
    bool pay_at_strike = false;
};

/// Long call at strike_lo, short call at strike_hi (strike_lo < strike_hi).
struct BullishSpreadPayoff {
    double strike_lo;
    double strike_hi;
};

/// Step portfolio: +1 on (x1,x2), -1 on (x2,x3), 0 elsewhere. Takes negative
/// values, so positivity guarantees do not apply to it.
struct ButterflyPayoff {
    double x1;
    double x2;
    double x3;
};

/// Piecewise-linear payoff through sampled (x, value) pairs, x strictly
/// increasing. Evaluation outside the sampled range is a domain error.
struct TablePayoff {
    std::vector<double> x;
    std::vector<double> value;
};

using Payoff = std::variant<RampPayoff, CashOrNothingPayoff, BullishSpreadPayoff, ButterflyPayoff, TablePayoff>;

/// Terminal value u_T(x). The payoff does not depend on the variance.
/// Throws std::domain_error for x < 0 (and outside the table range for
/// TablePayoff).
double evaluate_payoff(const Payoff& payoff, double x);

/// Left-sided slope of u_T at `at`; used to extend payoffs past the box.
double payoff_right_slope(const Payoff& payoff, double at);

/// evaluate_payoff for x <= x_max, linear extension with the rightmost slope
/// beyond it (call payoffs grow linearly, digital ones stay flat).
double payoff_with_extension(const Payoff& payoff, double x, double x_max);

/// Checks the strike ordering invariants against the box width. Throws
/// std::invalid_argument on violation.
void validate_payoff(const Payoff& payoff, double x_max);

const char* payoff_name(const Payoff& payoff);

/// Boundary data on the degenerate variance floor y = 0: the deterministic
/// growth price e^(-rt) u_T(x e^(rt)). The grown argument may leave [0,x_max];
/// it is then evaluated by linear extension.
double natural_boundary_y0(const Payoff& payoff, double r, double x, double t, double x_max);

}  // namespace hwlod
