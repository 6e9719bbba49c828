#pragma once

#include <functional>

#include "tgd/params.hpp"

// Brute-force references built only from term-by-term evaluation of the mass
// function. Nothing here calls the closed forms in distribution.hpp or
// moments.hpp, so agreement between the two is a genuine cross-check.
namespace tgd::oracle {

/// Permissible truncated mass, 0 < eps < 1.
class Tolerance {
public:
    explicit Tolerance(double eps);
    double eps() const noexcept { return eps_; }

private:
    double eps_;
};

/// Two-term mixture form (1-a) q^y (1-q) + a q^(2y) (1-q^2).
double term_pmf(const Params& params, SupportPoint y);

/// Smallest y_max with P(Y >= y_max) < eps.
SupportPoint tail_bound(const Params& params, Tolerance eps);

/// sum_{y <= y_max} weight(y) pmf(y), where y_max is grown past tail_bound
/// until |weight(y_max)| P(Y >= y_max) < eps. Compensated summation.
double oracle_sum(const Params& params, const std::function<double(SupportPoint)>& weight,
                  Tolerance eps);

/// Cumulative sum of term_pmf over 0..y.
double oracle_cdf(const Params& params, SupportPoint y);

/// Linear scan for min{y : cumulative pmf >= p}.
SupportPoint oracle_quantile(const Params& params, double prob);

/// argmax of term_pmf over [0, tail_bound(1e-15)], ties to the smaller y.
SupportPoint oracle_mode(const Params& params);

/// Moment sums; truncation is relative to the moment's magnitude.
double oracle_factorial_moment(const Params& params, int order, Tolerance eps = Tolerance(1e-15));
double oracle_raw_moment(const Params& params, int order, Tolerance eps = Tolerance(1e-15));
double oracle_central_moment(const Params& params, int order, Tolerance eps = Tolerance(1e-15));

/// cdf of the continuous skew exponential with rate beta,
/// (1+a)(1-e^(-beta x)) - a (1-e^(-beta x))^2 for x >= 0.
double skew_exponential_cdf(double beta, double alpha, double x);

} // namespace tgd::oracle
