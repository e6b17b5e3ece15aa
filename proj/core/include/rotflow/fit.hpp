#pragma once

#include <optional>
#include <span>

namespace rotflow {

/// Values below this magnitude are treated as exact zeros by the log-log fits.
inline constexpr double kExactZero = 1e-14;

/// Least-squares slope of log|y| against log x, skipping points with |y| < kExactZero.
/// Empty when fewer than two points survive.
std::optional<double> loglog_slope(std::span<const double> x, std::span<const double> y);

/// log2(coarse / fine) for successive refinement levels.
std::optional<double> halving_order(double coarse, double fine);

}  // namespace rotflow
