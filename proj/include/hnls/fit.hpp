#pragma once

#include <span>

namespace hnls {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0; // max |y - (slope x + intercept)|
    int points = 0;
};

/// Least-squares line through (x_i, y_i); requires >= 2 points
/// (fits against scaling laws use >= 3).
LineFit fit_line(std::span<const double> xs, std::span<const double> ys);

} // namespace hnls
