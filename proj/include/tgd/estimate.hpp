#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tgd/dataset.hpp"
#include "tgd/params.hpp"

namespace tgd {

enum class FitMethod { Proportions, Quantiles, Moments, MLE };

std::string_view to_string(FitMethod method);
FitMethod parse_fit_method(std::string_view name);

struct FitReport {
    Params params;
    FitMethod method;
    /// Moments: final objective. MLE: maximized log-likelihood.
    /// Proportions/quantiles: largest absolute residual of the defining equations.
    double objective;
    /// False when the solver stalled or when distinct parameter pairs fit
    /// equally well (see `alternatives`).
    bool converged;
    int iterations;
    /// Evaluated at `params`; NaN when no sample was supplied.
    double log_likelihood;
    bool at_boundary;
    /// Other parameter pairs that fit as well as `params`.
    std::vector<Params> alternatives;
};

struct FitOptions {
    bool parallel = true;
};

/// Every admissible (q, alpha) solving the zero/one proportion equations.
std::vector<Params> solve_proportions(double p0, double p1);

/// Unique solution of the proportion equations. Throws SolverError when the
/// pair lies outside the model's image or when more than one solution exists.
Params fit_proportions(double p0, double p1);

std::vector<Params> solve_quantiles(SupportPoint t1, double p1, SupportPoint t2, double p2);
Params fit_quantiles(SupportPoint t1, double p1, SupportPoint t2, double p2);

struct QuantilePoints {
    SupportPoint t1;
    double p1;
    SupportPoint t2;
    double p2;
};

/// Default (t, p) pairs for quantile fitting: t1, t2 are the empirical
/// 25th and 75th percentile values; p1, p2 the empirical cdf there. When both
/// percentiles land on one value t2 moves to the next observed value.
QuantilePoints empirical_quantile_points(const Dataset& data);

/// Dataset front ends. Multiple exact solutions are resolved by likelihood,
/// reported in `alternatives`, and mark the report as not converged.
FitReport fit_proportions(const Dataset& data);
FitReport fit_quantiles(const Dataset& data, std::optional<QuantilePoints> points = std::nullopt);

/// (mean - m1)^2 + (E[Y^2] - m2)^2
double moment_objective(const Params& params, double m1, double m2);

FitReport fit_moments(double m1, double m2, const FitOptions& options = {});
/// Requires n >= 2.
FitReport fit_moments(const Dataset& data, const FitOptions& options = {});

double log_likelihood(const Params& params, const Dataset& data);

/// Requires n >= 2.
FitReport fit_mle(const Dataset& data, const FitOptions& options = {});

} // namespace tgd
