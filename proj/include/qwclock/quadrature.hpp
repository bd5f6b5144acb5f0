#pragma once

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>

#include "core.hpp"

namespace qwclock {

/// Composite 20-point Gauss-Legendre rule over equal panels.
template <class F>
double integrate_gl(F&& f, double a, double b, int panels = 64) {
    using rule = boost::math::quadrature::gauss<double, 20>;
    if (b == a) return 0.0;
    panels = std::max(panels, 1);
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double lo = a + i * h;
        total += rule::integrate(f, lo, lo + h);
    }
    return total;
}

/// Nodes per panel of integrate_gl.
inline constexpr int gl_nodes_per_panel = 20;

}  // namespace qwclock
