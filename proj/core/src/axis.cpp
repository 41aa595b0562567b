#include "hwlod/axis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hwlod {

namespace {

void validate_spec(const AxisSpec& spec, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("build_axis: requires lo < hi");
    std::visit(
        [&](const auto& s) {
            using S = std::decay_t<decltype(s)>;
            if (s.n < 2) throw std::invalid_argument("build_axis: need at least 2 intervals");
            if constexpr (std::is_same_v<S, SinhOriginSpec>) {
                if (!(s.d > 0.0)) throw std::invalid_argument("SinhOriginSpec: d must be positive");
            } else if constexpr (std::is_same_v<S, SinhStrikeSpec>) {
                if (!(s.c > 0.0)) throw std::invalid_argument("SinhStrikeSpec: c must be positive");
                if (!(s.strike > 0.0 && s.strike < hi - lo))
                    throw std::invalid_argument("SinhStrikeSpec: strike offset must lie inside (0, hi-lo)");
            }
        },
        spec);
}

std::vector<double> make_nodes(const AxisSpec& spec, double lo, double hi) {
    return std::visit(
        [&](const auto& s) {
            using S = std::decay_t<decltype(s)>;
            const int n = s.n;
            std::vector<double> nodes(static_cast<std::size_t>(n) + 1);
            if constexpr (std::is_same_v<S, UniformSpec>) {
                const double h = (hi - lo) / n;
                for (int i = 0; i <= n; ++i) nodes[static_cast<std::size_t>(i)] = lo + i * h;
            } else if constexpr (std::is_same_v<S, SinhOriginSpec>) {
                const double d_eta = std::asinh((hi - lo) / s.d) / n;
                for (int i = 0; i <= n; ++i)
                    nodes[static_cast<std::size_t>(i)] = lo + s.d * std::sinh(i * d_eta);
            } else {
                const double eta0 = std::asinh(-s.strike / s.c);
                const double d_eta = (std::asinh((hi - lo - s.strike) / s.c) - eta0) / n;
                for (int i = 0; i <= n; ++i)
                    nodes[static_cast<std::size_t>(i)] = lo + s.strike + s.c * std::sinh(eta0 + i * d_eta);
            }
            nodes.front() = lo;
            nodes.back() = hi;
            return nodes;
        },
        spec);
}

}  // namespace

Axis build_axis(const AxisSpec& spec, double lo, double hi) {
    validate_spec(spec, lo, hi);
    Axis ax;
    ax.nodes = make_nodes(spec, lo, hi);
    const std::size_t n = ax.nodes.size() - 1;
    for (std::size_t i = 1; i <= n; ++i) {
        if (!(ax.nodes[i] > ax.nodes[i - 1]))
            throw std::runtime_error("build_axis: nodes not strictly increasing at index " + std::to_string(i));
    }
    ax.mids.resize(n + 2);
    ax.mids.front() = ax.nodes.front();
    ax.mids.back() = ax.nodes.back();
    for (std::size_t i = 0; i < n; ++i) ax.mids[i + 1] = 0.5 * (ax.nodes[i] + ax.nodes[i + 1]);
    ax.primal_widths.resize(n);
    for (std::size_t i = 0; i < n; ++i) ax.primal_widths[i] = ax.nodes[i + 1] - ax.nodes[i];
    ax.dual_widths.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) ax.dual_widths[i] = ax.mids[i + 1] - ax.mids[i];
    return ax;
}

const char* axis_spec_name(const AxisSpec& spec) {
    switch (spec.index()) {
        case 0: return "uniform";
        case 1: return "sinh-origin";
        default: return "sinh-strike";
    }
}

}  // namespace hwlod
