#pragma once

// Small helpers over sampled time series: least-squares fits and local extrema.

#include <cstddef>
#include <span>
#include <vector>

#include "core.hpp"

namespace qwclock {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};

/// Ordinary least squares y ~ intercept + slope * x.
inline LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    require(x.size() == y.size() && x.size() >= 2, "line fit needs >= 2 paired samples");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    require(sxx > 0.0, "line fit needs distinct abscissae");
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    return fit;
}

/// Least squares y ~ c + a t^2; returns {a, c} as {slope, intercept} in t^2.
inline LineFit fit_const_plus_quadratic(std::span<const double> t, std::span<const double> y) {
    std::vector<double> t2(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) t2[i] = t[i] * t[i];
    return fit_line(t2, y);
}

/// Indices of samples strictly above both neighbours.
inline std::vector<std::size_t> local_maxima(std::span<const double> y) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        if (y[i] > y[i - 1] && y[i] > y[i + 1]) out.push_back(i);
    }
    return out;
}

/// Indices of samples strictly below both neighbours.
inline std::vector<std::size_t> local_minima(std::span<const double> y) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        if (y[i] < y[i - 1] && y[i] < y[i + 1]) out.push_back(i);
    }
    return out;
}

/// Uniform grid start, start+step, ... up to stop inclusive (within half a step of rounding).
inline std::vector<double> uniform_grid(double start, double stop, double step) {
    require(step > 0.0, "time step must be > 0");
    require(stop > start, "grid stop must exceed start");
    const auto count = static_cast<std::size_t>((stop - start) / step + 0.5) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) grid[i] = start + static_cast<double>(i) * step;
    return grid;
}

}  // namespace qwclock
