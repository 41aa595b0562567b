#include "hwlod/payoff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hwlod {

namespace {

double table_value(const TablePayoff& p, double x) {
    if (p.x.size() < 2 || p.x.size() != p.value.size())
        throw std::invalid_argument("TablePayoff: needs >= 2 samples with matching value count");
    if (x < p.x.front() || x > p.x.back())
        throw std::domain_error("TablePayoff: x=" + std::to_string(x) + " outside sampled range");
    auto it = std::upper_bound(p.x.begin(), p.x.end(), x);
    if (it == p.x.end()) return p.value.back();
    std::size_t hi = static_cast<std::size_t>(it - p.x.begin());
    std::size_t lo = hi - 1;
    double w = (x - p.x[lo]) / (p.x[hi] - p.x[lo]);
    return p.value[lo] + w * (p.value[hi] - p.value[lo]);
}

double table_slope_at(const TablePayoff& p, double at) {
    // slope of the segment containing `at` (left-sided at sample points)
    auto it = std::lower_bound(p.x.begin(), p.x.end(), at);
    std::size_t hi = static_cast<std::size_t>(it - p.x.begin());
    if (hi == 0) hi = 1;
    if (hi >= p.x.size()) hi = p.x.size() - 1;
    std::size_t lo = hi - 1;
    return (p.value[hi] - p.value[lo]) / (p.x[hi] - p.x[lo]);
}

}  // namespace

double evaluate_payoff(const Payoff& payoff, double x) {
    if (x < 0.0) throw std::domain_error("evaluate_payoff: negative asset price " + std::to_string(x));
    return std::visit(
        [x](const auto& p) -> double {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, RampPayoff>) {
                return std::max(0.0, x - p.strike);
            } else if constexpr (std::is_same_v<P, CashOrNothingPayoff>) {
                if (x > p.strike) return p.amount;
                if (x == p.strike && p.pay_at_strike) return p.amount;
                return 0.0;
            } else if constexpr (std::is_same_v<P, BullishSpreadPayoff>) {
                return std::max(0.0, x - p.strike_lo) - std::max(0.0, x - p.strike_hi);
            } else if constexpr (std::is_same_v<P, ButterflyPayoff>) {
                if (x > p.x1 && x < p.x2) return 1.0;
                if (x > p.x2 && x < p.x3) return -1.0;
                return 0.0;
            } else {
                return table_value(p, x);
            }
        },
        payoff);
}

double payoff_right_slope(const Payoff& payoff, double at) {
    return std::visit(
        [at](const auto& p) -> double {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, RampPayoff>) {
                return at > p.strike ? 1.0 : 0.0;
            } else if constexpr (std::is_same_v<P, CashOrNothingPayoff>) {
                return 0.0;
            } else if constexpr (std::is_same_v<P, BullishSpreadPayoff>) {
                return (at > p.strike_lo && at <= p.strike_hi) ? 1.0 : 0.0;
            } else if constexpr (std::is_same_v<P, ButterflyPayoff>) {
                return 0.0;
            } else {
                return table_slope_at(p, at);
            }
        },
        payoff);
}

double payoff_with_extension(const Payoff& payoff, double x, double x_max) {
    if (x <= x_max) return evaluate_payoff(payoff, x);
    return evaluate_payoff(payoff, x_max) + payoff_right_slope(payoff, x_max) * (x - x_max);
}

void validate_payoff(const Payoff& payoff, double x_max) {
    std::visit(
        [x_max](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, RampPayoff>) {
                if (!(p.strike < x_max)) throw std::invalid_argument("RampPayoff: strike must lie below X");
                if (p.strike < 0.0) throw std::invalid_argument("RampPayoff: negative strike");
            } else if constexpr (std::is_same_v<P, CashOrNothingPayoff>) {
                if (!(p.strike < x_max)) throw std::invalid_argument("CashOrNothingPayoff: strike must lie below X");
                if (!(p.amount > 0.0)) throw std::invalid_argument("CashOrNothingPayoff: amount must be positive");
            } else if constexpr (std::is_same_v<P, BullishSpreadPayoff>) {
                if (!(p.strike_lo < p.strike_hi))
                    throw std::invalid_argument("BullishSpreadPayoff: requires strike_lo < strike_hi");
                if (!(p.strike_lo < x_max)) throw std::invalid_argument("BullishSpreadPayoff: strikes above X");
            } else if constexpr (std::is_same_v<P, ButterflyPayoff>) {
                if (!(p.x1 < p.x2 && p.x2 < p.x3 && p.x3 <= x_max))
                    throw std::invalid_argument("ButterflyPayoff: requires x1 < x2 < x3 <= X");
            } else {
                if (p.x.size() < 2 || p.x.size() != p.value.size())
                    throw std::invalid_argument("TablePayoff: needs >= 2 samples with matching value count");
                for (std::size_t i = 1; i < p.x.size(); ++i)
                    if (!(p.x[i] > p.x[i - 1])) throw std::invalid_argument("TablePayoff: x must be strictly increasing");
            }
        },
        payoff);
}

const char* payoff_name(const Payoff& payoff) {
    switch (payoff.index()) {
        case 0: return "ramp";
        case 1: return "cash-or-nothing";
        case 2: return "bullish-spread";
        case 3: return "butterfly";
        default: return "table";
    }
}

double natural_boundary_y0(const Payoff& payoff, double r, double x, double t, double x_max) {
    const double growth = std::exp(r * t);
    return payoff_with_extension(payoff, x * growth, x_max) / growth;
}

}  // namespace hwlod
