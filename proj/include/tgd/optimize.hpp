#pragma once

#include <array>
#include <functional>
#include <vector>

namespace tgd::optimize {

using Point = std::array<double, 2>;
using Objective = std::function<double(const Point&)>;

struct Box {
    Point lo;
    Point hi;

    Point clamp(Point x) const;
};

struct SimplexOptions {
    Point initial_step{0.05, 0.1};
    int max_iterations = 4000;
    int max_restarts = 4;
    double value_tolerance = 1e-14;     // relative to max(1, |f|)
    double diameter_tolerance = 1e-10;
};

struct SimplexResult {
    Point x{};
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
};

/// Box-constrained Nelder-Mead. Trial points are projected onto the box;
/// the search restarts from the best vertex until a restart no longer
/// improves the value.
SimplexResult nelder_mead(const Objective& f, Point start, const Box& box,
                          const SimplexOptions& options = {});

/// Start points of the multi-start search, row-major over (x0, x1).
std::vector<Point> start_grid(const Box& box, int per_axis);

/// Runs nelder_mead from every start. Result i belongs to start i regardless
/// of thread count. `parallel` selects the OpenMP loop over the serial one.
std::vector<SimplexResult> multistart(const Objective& f, const std::vector<Point>& starts,
                                      const Box& box, const SimplexOptions& options,
                                      bool parallel);

/// Every root of g on [lo, hi] that shows a sign change across one of `panels`
/// equal sub-intervals, refined by bisection to width `tolerance`.
std::vector<double> bracketed_roots(const std::function<double(double)>& g, double lo, double hi,
                                    int panels, double tolerance, int* iterations = nullptr);

} // namespace tgd::optimize
