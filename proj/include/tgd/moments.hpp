#pragma once

#include <array>
#include <cstdint>

#include "tgd/params.hpp"

namespace tgd {

/// E[Y (Y-1) ... (Y-r+1)] for r >= 1. Throws std::overflow_error when the
/// result is not representable.
double factorial_moment(const Params& params, int order);

/// Stirling number of the second kind S(n, k), 0 <= k <= n <= 20.
/// Throws std::out_of_range beyond n = 20.
std::uint64_t stirling2(int n, int k);

/// E[Y^r], r in 1..4, assembled from factorial moments.
double raw_moment(const Params& params, int order);

/// E[(Y - mean)^r], r in 2..4.
double central_moment(const Params& params, int order);

/// Cumulants of the factorial-moment generating function, r in 1..4.
double factorial_cumulant(const Params& params, int order);

double mean(const Params& params);
double variance(const Params& params);
double index_of_dispersion(const Params& params);

/// mu3^2 / mu2^3
double skewness_beta1(const Params& params);

/// mu4 / mu2^2
double kurtosis_beta2(const Params& params);

struct MomentSet {
    double mean;
    double variance;
    std::array<double, 4> raw;                 // orders 1..4
    std::array<double, 3> central;             // orders 2..4
    std::array<double, 4> factorial;           // orders 1..4
    std::array<double, 4> factorial_cumulant;  // orders 1..4
    double index_of_dispersion;
    double beta1;
    double beta2;
};

MomentSet summarize(const Params& params);

} // namespace tgd
