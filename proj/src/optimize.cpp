#include "tgd/optimize.hpp"

#include <algorithm>
#include <cmath>

namespace tgd::optimize {
namespace {

double distance(const Point& a, const Point& b) { return std::hypot(a[0] - b[0], a[1] - b[1]); }

struct Vertex {
    Point x;
    double f;
};

Point affine(const Point& centroid, const Point& x, double t) {
    return {centroid[0] + t * (x[0] - centroid[0]), centroid[1] + t * (x[1] - centroid[1])};
}

// Initial simplex steps point into the box.
std::array<Vertex, 3> initial_simplex(const Objective& f, const Point& start, const Box& box,
                                      const Point& step) {
    std::array<Vertex, 3> s;
    s[0] = {start, f(start)};
    for (int axis = 0; axis < 2; ++axis) {
        Point x = start;
        const double up = x[axis] + step[axis];
        x[axis] = up <= box.hi[axis] ? up : x[axis] - step[axis];
        x = box.clamp(x);
        s[axis + 1] = {x, f(x)};
    }
    return s;
}

SimplexResult single_run(const Objective& f, const Point& start, const Box& box,
                         const SimplexOptions& opt) {
    auto s = initial_simplex(f, start, box, opt.initial_step);
    const auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };

    SimplexResult result;
    for (int it = 0; it < opt.max_iterations; ++it) {
        std::sort(s.begin(), s.end(), by_value);
        result.iterations = it;

        const double scale = std::max(1.0, std::abs(s[0].f));
        const double spread = s[2].f - s[0].f;
        const double diameter = std::max(distance(s[0].x, s[1].x), distance(s[0].x, s[2].x));
        if (spread <= opt.value_tolerance * scale && diameter < opt.diameter_tolerance) {
            result.converged = true;
            break;
        }

        const Point centroid{(s[0].x[0] + s[1].x[0]) / 2.0, (s[0].x[1] + s[1].x[1]) / 2.0};
        const auto trial = [&](double t) {
            const Point x = box.clamp(affine(centroid, s[2].x, t));
            return Vertex{x, f(x)};
        };

        const Vertex reflected = trial(-1.0);
        if (reflected.f < s[0].f) {
            const Vertex expanded = trial(-2.0);
            s[2] = expanded.f < reflected.f ? expanded : reflected;
            continue;
        }
        if (reflected.f < s[1].f) {
            s[2] = reflected;
            continue;
        }
        const bool outside = reflected.f < s[2].f;
        const Vertex contracted = trial(outside ? -0.5 : 0.5);
        if (contracted.f < (outside ? reflected.f : s[2].f)) {
            s[2] = contracted;
            continue;
        }
        for (int i = 1; i < 3; ++i) {
            const Point x = affine(s[0].x, s[i].x, 0.5);
            s[i] = {x, f(x)};
        }
    }
    std::sort(s.begin(), s.end(), by_value);
    result.x = s[0].x;
    result.value = s[0].f;
    return result;
}

} // namespace

Point Box::clamp(Point x) const {
    for (int i = 0; i < 2; ++i) x[i] = std::clamp(x[i], lo[i], hi[i]);
    return x;
}

SimplexResult nelder_mead(const Objective& f, Point start, const Box& box,
                          const SimplexOptions& options) {
    SimplexResult best = single_run(f, box.clamp(start), box, options);
    int total = best.iterations;
    Point step = options.initial_step;
    for (int restart = 0; restart < options.max_restarts; ++restart) {
        // Fresh simplex around the incumbent; catches collapse onto a box face.
        step = {step[0] * 0.1, step[1] * 0.1};
        SimplexOptions again = options;
        again.initial_step = step;
        const SimplexResult next = single_run(f, best.x, box, again);
        total += next.iterations;
        const double scale = std::max(1.0, std::abs(best.value));
        const bool improved = next.value < best.value - options.value_tolerance * scale;
        if (next.value <= best.value) best = next;
        if (!improved) break;
    }
    best.iterations = total;
    return best;
}

std::vector<Point> start_grid(const Box& box, int per_axis) {
    std::vector<Point> starts;
    starts.reserve(static_cast<std::size_t>(per_axis * per_axis));
    for (int i = 0; i < per_axis; ++i) {
        // interior along axis 0, endpoints included along axis 1
        const double x0 = box.lo[0] + (box.hi[0] - box.lo[0]) * (i + 1) / (per_axis + 1);
        for (int j = 0; j < per_axis; ++j) {
            const double x1 = box.lo[1] + (box.hi[1] - box.lo[1]) * j / (per_axis - 1);
            starts.push_back({x0, x1});
        }
    }
    return starts;
}

std::vector<SimplexResult> multistart(const Objective& f, const std::vector<Point>& starts,
                                      const Box& box, const SimplexOptions& options,
                                      bool parallel) {
    std::vector<SimplexResult> results(starts.size());
    const auto count = static_cast<long>(starts.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long i = 0; i < count; ++i) {
        results[static_cast<std::size_t>(i)] = nelder_mead(f, starts[static_cast<std::size_t>(i)], box, options);
    }
    return results;
}

std::vector<double> bracketed_roots(const std::function<double(double)>& g, double lo, double hi,
                                    int panels, double tolerance, int* iterations) {
    std::vector<double> roots;
    int steps = 0;
    const double width = (hi - lo) / panels;
    double a = lo;
    double ga = g(a);
    for (int k = 1; k <= panels; ++k) {
        const double b = k == panels ? hi : lo + width * k;
        const double gb = g(b);
        if (!std::isfinite(ga) || !std::isfinite(gb)) {
            // no bracket across a pole or an undefined edge
        } else if (ga == 0.0) {
            roots.push_back(a);
        } else if (std::signbit(ga) != std::signbit(gb) && gb != 0.0) {
            double left = a;
            double right = b;
            double gl = ga;
            while (right - left > tolerance) {
                const double mid = 0.5 * (left + right);
                const double gm = g(mid);
                ++steps;
                if (gm == 0.0) {
                    left = right = mid;
                    break;
                }
                if (std::signbit(gm) == std::signbit(gl)) {
                    left = mid;
                    gl = gm;
                } else {
                    right = mid;
                }
            }
            roots.push_back(0.5 * (left + right));
        }
        a = b;
        ga = gb;
    }
    if (ga == 0.0) roots.push_back(hi);
    if (iterations != nullptr) *iterations = steps;
    return roots;
}

} // namespace tgd::optimize
