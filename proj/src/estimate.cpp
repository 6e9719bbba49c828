#include "tgd/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "tgd/distribution.hpp"
#include "tgd/error.hpp"
#include "tgd/moments.hpp"
#include "tgd/optimize.hpp"

namespace tgd {
namespace {

using optimize::Point;

constexpr double kQLow = 1e-6;
constexpr double kQHigh = 1.0 - 1e-6;
const optimize::Box kFitBox{{kQLow, -1.0}, {kQHigh, 1.0}};
constexpr int kStartsPerAxis = 9;

// Root scan for the alpha-eliminated equation systems.
constexpr double kScanLow = 1e-9;
constexpr double kScanHigh = 1.0 - 1e-9;
constexpr int kScanPanels = 1000;
constexpr double kRootTolerance = 1e-12;
constexpr double kAlphaSlack = 1e-9;

struct RootSolutions {
    std::vector<Params> params;
    int iterations = 0;
};

// Keeps roots whose eliminated alpha is admissible; alpha within kAlphaSlack
// of +-1 is clamped onto the boundary.
template <typename AlphaOf, typename Residual>
RootSolutions solve_eliminated(AlphaOf alpha_of, Residual residual) {
    RootSolutions out;
    const auto roots = optimize::bracketed_roots(residual, kScanLow, kScanHigh, kScanPanels,
                                                 kRootTolerance, &out.iterations);
    for (const double q : roots) {
        double a = alpha_of(q);
        if (!(a >= -1.0 - kAlphaSlack && a <= 1.0 + kAlphaSlack)) continue;
        a = std::clamp(a, -1.0, 1.0);
        const bool duplicate = std::any_of(out.params.begin(), out.params.end(), [&](const Params& p) {
            return std::abs(p.q() - q) < 1e-9;
        });
        if (!duplicate) out.params.emplace_back(q, a);
    }
    return out;
}

RootSolutions proportions_roots(double p0, double p1) {
    if (!(p0 > 0.0 && p0 < 1.0)) throw DomainError("p0", "proportion must lie in (0, 1)");
    if (!(p1 > 0.0 && p1 < 1.0)) throw DomainError("p1", "proportion must lie in (0, 1)");
    if (!(p0 + p1 < 1.0)) throw DomainError("p1", "p0 + p1 must be below 1");
    // p0 = (1-q) + a q (1-q), linear in a
    const auto alpha_of = [p0](double q) { return (p0 - (1.0 - q)) / (q * (1.0 - q)); };
    const auto residual = [p1, alpha_of](double q) {
        const double a = alpha_of(q);
        return q * (1.0 - q) * ((1.0 - a) + a * q * (1.0 + q)) - p1;
    };
    return solve_eliminated(alpha_of, residual);
}

RootSolutions quantile_roots(SupportPoint t1, double p1, SupportPoint t2, double p2) {
    if (t1 < 0) throw DomainError("t1", "must be non-negative");
    if (!(t1 < t2)) throw DomainError("t2", "must exceed t1");
    if (!(p1 > 0.0 && p1 < 1.0)) throw DomainError("p1", "level must lie in (0, 1)");
    if (!(p2 > p1 && p2 < 1.0)) throw DomainError("p2", "level must lie in (p1, 1)");
    // 1 - p = z - a z (1 - z) with z = q^(t+1), linear in a
    const auto alpha_of = [t1, p1](double q) {
        const double z = std::pow(q, static_cast<double>(t1 + 1));
        return (z - (1.0 - p1)) / (z * (1.0 - z));
    };
    const auto residual = [t2, p2, alpha_of](double q) {
        const double a = alpha_of(q);
        const double z = std::pow(q, static_cast<double>(t2 + 1));
        return (z - a * z * (1.0 - z)) - (1.0 - p2);
    };
    return solve_eliminated(alpha_of, residual);
}

std::string describe(const std::vector<Params>& candidates) {
    std::ostringstream os;
    os.precision(10);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        os << (i ? ", " : "") << "(q=" << candidates[i].q() << ", alpha=" << candidates[i].alpha() << ")";
    }
    return os.str();
}

Params unique_root(const RootSolutions& roots, const std::string& kind) {
    if (roots.params.empty()) {
        throw SolverError(kind, "no admissible (q, alpha) reproduces the inputs");
    }
    if (roots.params.size() > 1) {
        throw SolverError("ambiguous-solution",
                          "inputs are reproduced exactly by " + describe(roots.params));
    }
    return roots.params.front();
}

bool on_boundary(const Params& p) {
    return p.q() <= kQLow + 1e-9 || p.q() >= kQHigh - 1e-9 || std::abs(p.alpha()) >= 1.0 - 1e-9;
}

double loglik(double q, double a, const Dataset& data) {
    const double log_q = std::log(q);
    const double log_p = std::log1p(-q);
    double total = 0.0;
    for (const auto& [y, c] : data.counts()) {
        const double qy = std::pow(q, static_cast<double>(y));
        total += c * (log_p + static_cast<double>(y) * log_q + std::log((1.0 - a) + a * qy * (1.0 + q)));
    }
    return total;
}

// Report from the exact-solution front ends; ties between exact solutions are
// broken by likelihood on the data.
FitReport root_report(const RootSolutions& roots, FitMethod method, const Dataset& data,
                      const std::string& kind, const std::function<double(const Params&)>& residual) {
    if (roots.params.empty()) {
        throw SolverError(kind, "no admissible (q, alpha) reproduces the sample summary");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < roots.params.size(); ++i) {
        if (log_likelihood(roots.params[i], data) > log_likelihood(roots.params[best], data)) best = i;
    }
    const Params chosen = roots.params[best];
    FitReport report{chosen, method, residual(chosen), roots.params.size() == 1, roots.iterations,
                     log_likelihood(chosen, data), on_boundary(chosen), {}};
    for (std::size_t i = 0; i < roots.params.size(); ++i) {
        if (i != best) report.alternatives.push_back(roots.params[i]);
    }
    return report;
}

struct Selection {
    optimize::SimplexResult best;
    std::vector<Point> alternatives;
};

// Best local result (lowest index on ties) plus any distinct converged local
// results whose value is within `tie_tolerance` of it.
Selection select(const std::vector<optimize::SimplexResult>& results, double tie_tolerance) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); ++i) {
        if (results[i].value < results[best].value) best = i;
    }
    Selection sel{results[best], {}};
    const auto far = [](const Point& a, const Point& b) {
        return std::hypot(a[0] - b[0], a[1] - b[1]) > 1e-4;
    };
    for (const auto& r : results) {
        if (!r.converged || r.value > sel.best.value + tie_tolerance) continue;
        if (!far(r.x, sel.best.x)) continue;
        const bool seen = std::any_of(sel.alternatives.begin(), sel.alternatives.end(),
                                      [&](const Point& x) { return !far(x, r.x); });
        if (!seen) sel.alternatives.push_back(r.x);
    }
    return sel;
}

FitReport simplex_report(const Selection& sel, FitMethod method, double objective,
                         double log_likelihood_value) {
    const Params params(sel.best.x[0], sel.best.x[1]);
    FitReport report{params,
                     method,
                     objective,
                     sel.best.converged && sel.alternatives.empty(),
                     sel.best.iterations,
                     log_likelihood_value,
                     on_boundary(params),
                     {}};
    for (const auto& x : sel.alternatives) report.alternatives.emplace_back(x[0], x[1]);
    return report;
}

void require_sample_size(const Dataset& data) {
    if (data.n() < 2.0) throw DomainError("n", "estimation needs at least two observations");
}

} // namespace

std::string_view to_string(FitMethod method) {
    switch (method) {
    case FitMethod::Proportions: return "proportions";
    case FitMethod::Quantiles: return "quantiles";
    case FitMethod::Moments: return "moments";
    case FitMethod::MLE: return "mle";
    }
    return "unknown";
}

FitMethod parse_fit_method(std::string_view name) {
    if (name == "proportions") return FitMethod::Proportions;
    if (name == "quantiles") return FitMethod::Quantiles;
    if (name == "moments") return FitMethod::Moments;
    if (name == "mle") return FitMethod::MLE;
    throw DomainError("method", "unknown estimator '" + std::string(name) + "'");
}

std::vector<Params> solve_proportions(double p0, double p1) {
    return proportions_roots(p0, p1).params;
}

Params fit_proportions(double p0, double p1) {
    return unique_root(proportions_roots(p0, p1), "inconsistent-proportions");
}

std::vector<Params> solve_quantiles(SupportPoint t1, double p1, SupportPoint t2, double p2) {
    return quantile_roots(t1, p1, t2, p2).params;
}

Params fit_quantiles(SupportPoint t1, double p1, SupportPoint t2, double p2) {
    return unique_root(quantile_roots(t1, p1, t2, p2), "inconsistent-quantiles");
}

QuantilePoints empirical_quantile_points(const Dataset& data) {
    const auto percentile_value = [&](double level) {
        double below = 0.0;
        for (const auto& [y, c] : data.counts()) {
            below += c;
            if (below / data.n() >= level) return y;
        }
        return data.counts().rbegin()->first;
    };
    QuantilePoints pts{percentile_value(0.25), 0.0, percentile_value(0.75), 0.0};
    if (pts.t2 == pts.t1) {
        const auto next = data.counts().upper_bound(pts.t1);
        if (next == data.counts().end()) {
            throw SolverError("inconsistent-quantiles", "sample has a single distinct value above its 25th percentile");
        }
        pts.t2 = next->first;
    }
    pts.p1 = data.empirical_cdf(pts.t1);
    pts.p2 = data.empirical_cdf(pts.t2);
    if (!(pts.p2 < 1.0)) {
        throw SolverError("inconsistent-quantiles",
                          "empirical cdf reaches 1 at t2 = " + std::to_string(pts.t2) +
                              "; pass --t1/--p1/--t2/--p2 explicitly");
    }
    return pts;
}

FitReport fit_proportions(const Dataset& data) {
    const double p0 = data.proportion(0);
    const double p1 = data.proportion(1);
    if (!(p0 > 0.0 && p1 > 0.0 && p0 + p1 < 1.0)) {
        throw SolverError("inconsistent-proportions",
                          "sample needs zeros, ones and at least one value above one");
    }
    const auto residual = [p0, p1](const Params& p) {
        return std::max(std::abs(pmf(p, 0) - p0), std::abs(pmf(p, 1) - p1));
    };
    return root_report(proportions_roots(p0, p1), FitMethod::Proportions, data,
                       "inconsistent-proportions", residual);
}

FitReport fit_quantiles(const Dataset& data, std::optional<QuantilePoints> points) {
    const QuantilePoints pts = points ? *points : empirical_quantile_points(data);
    const auto residual = [pts](const Params& p) {
        return std::max(std::abs(cdf(p, pts.t1) - pts.p1), std::abs(cdf(p, pts.t2) - pts.p2));
    };
    return root_report(quantile_roots(pts.t1, pts.p1, pts.t2, pts.p2), FitMethod::Quantiles, data,
                       "inconsistent-quantiles", residual);
}

double moment_objective(const Params& params, double m1, double m2) {
    const double d1 = mean(params) - m1;
    const double d2 = raw_moment(params, 2) - m2;
    return d1 * d1 + d2 * d2;
}

FitReport fit_moments(double m1, double m2, const FitOptions& options) {
    if (!std::isfinite(m1) || !std::isfinite(m2)) {
        throw DomainError("moments", "sample moments must be finite");
    }
    const auto objective = [m1, m2](const Point& x) { return moment_objective(Params(x[0], x[1]), m1, m2); };
    const auto results = optimize::multistart(objective, optimize::start_grid(kFitBox, kStartsPerAxis),
                                              kFitBox, {}, options.parallel);
    // Exact-moment solutions are ties at the squared-residual scale of the moments.
    const double tie = 1e-14 * (1.0 + m1 * m1 + m2 * m2);
    const Selection sel = select(results, tie);
    return simplex_report(sel, FitMethod::Moments, sel.best.value,
                          std::numeric_limits<double>::quiet_NaN());
}

FitReport fit_moments(const Dataset& data, const FitOptions& options) {
    require_sample_size(data);
    FitReport report = fit_moments(data.mean(), data.m2(), options);
    report.log_likelihood = log_likelihood(report.params, data);
    return report;
}

double log_likelihood(const Params& params, const Dataset& data) {
    return loglik(params.q(), params.alpha(), data);
}

FitReport fit_mle(const Dataset& data, const FitOptions& options) {
    require_sample_size(data);
    const double n = data.n();
    const auto objective = [&data, n](const Point& x) { return -loglik(x[0], x[1], data) / n; };
    const auto results = optimize::multistart(objective, optimize::start_grid(kFitBox, kStartsPerAxis),
                                              kFitBox, {}, options.parallel);
    const double best = std::min_element(results.begin(), results.end(), [](const auto& a, const auto& b) {
                            return a.value < b.value;
                        })->value;
    const Selection sel = select(results, 1e-10 * std::max(1.0, std::abs(best)));
    const double ll = loglik(sel.best.x[0], sel.best.x[1], data);
    return simplex_report(sel, FitMethod::MLE, ll, ll);
}

} // namespace tgd
