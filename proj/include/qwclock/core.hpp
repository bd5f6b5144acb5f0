#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwclock {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr Complex I{0.0, 1.0};

/// Thrown when a computation would exceed the desk-scale size caps.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a state drifts from unit norm beyond the diagnostic tolerance.
class normalization_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
    if (!condition) throw std::domain_error(message);
}

/// Static configuration of an open XY chain: s cursor sites, hopping coupling lambda.
class ChainSpec {
public:
    explicit ChainSpec(int sites, double lambda = 1.0) : sites_(sites), lambda_(lambda) {
        require(sites >= 2, "chain length s must be >= 2 (got " + std::to_string(sites) + ")");
        require(lambda > 0.0 && std::isfinite(lambda), "coupling lambda must be positive");
    }

    [[nodiscard]] int sites() const noexcept { return sites_; }
    [[nodiscard]] double lambda() const noexcept { return lambda_; }

    friend bool operator==(const ChainSpec&, const ChainSpec&) = default;

private:
    int sites_;
    double lambda_;
};

}  // namespace qwclock
