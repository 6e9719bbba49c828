#include "tgd/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tgd/error.hpp"

namespace tgd {
namespace {

void require_order(int order, int lo, int hi) {
    if (order < lo || order > hi) {
        throw DomainError("r", "moment order must lie in [" + std::to_string(lo) + ", " +
                                   std::to_string(hi) + "]");
    }
}

// Factorial moments of GD(q) and GD(q^2) mix linearly with weights (1-a, a).
double geometric_factorial_moment(double ratio, int order, double factorial) {
    return factorial * std::pow(ratio, order);
}

} // namespace

double factorial_moment(const Params& params, int order) {
    if (order < 1) throw DomainError("r", "factorial moment order must be >= 1");
    double fact = 1.0;
    for (int k = 2; k <= order; ++k) fact *= k;
    if (!std::isfinite(fact)) {
        throw std::overflow_error("factorial moment: r! overflows at r = " + std::to_string(order));
    }
    const double q = params.q();
    const double a = params.alpha();
    const double single = q / (1.0 - q);
    const double paired = q * q / (1.0 - q * q);
    const double value = (1.0 - a) * geometric_factorial_moment(single, order, fact) +
                         a * geometric_factorial_moment(paired, order, fact);
    if (!std::isfinite(value)) {
        throw std::overflow_error("factorial moment overflows at r = " + std::to_string(order));
    }
    return value;
}

std::uint64_t stirling2(int n, int k) {
    if (n < 0 || k < 0) throw std::out_of_range("stirling2: negative argument");
    if (n > 20) throw std::out_of_range("stirling2: n > 20 is not exact in 64 bits");
    if (k > n) return 0;
    // table[j] holds S(row, j) while row advances to n
    std::uint64_t table[21] = {1};
    for (int row = 1; row <= n; ++row) {
        for (int j = row; j >= 1; --j) {
            table[j] = static_cast<std::uint64_t>(j) * table[j] + table[j - 1];
        }
        table[0] = 0;
    }
    return table[k];
}

double raw_moment(const Params& params, int order) {
    require_order(order, 1, 4);
    double sum = 0.0;
    for (int j = 1; j <= order; ++j) {
        sum += static_cast<double>(stirling2(order, j)) * factorial_moment(params, j);
    }
    return sum;
}

double central_moment(const Params& params, int order) {
    require_order(order, 2, 4);
    if (order == 2) return variance(params);
    const double m = mean(params);
    double sum = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= order; ++j) {
        const double raw = j == 0 ? 1.0 : raw_moment(params, j);
        sum += binom * std::pow(-m, order - j) * raw;
        binom = binom * (order - j) / (j + 1);
    }
    return sum;
}

double factorial_cumulant(const Params& params, int order) {
    require_order(order, 1, 4);
    const double m1 = factorial_moment(params, 1);
    if (order == 1) return m1;
    const double m2 = factorial_moment(params, 2);
    if (order == 2) return m2 - m1 * m1;
    const double m3 = factorial_moment(params, 3);
    if (order == 3) return m3 - 3.0 * m2 * m1 + 2.0 * m1 * m1 * m1;
    const double m4 = factorial_moment(params, 4);
    return m4 - 4.0 * m3 * m1 - 3.0 * m2 * m2 + 12.0 * m2 * m1 * m1 - 6.0 * std::pow(m1, 4);
}

double mean(const Params& params) { return factorial_moment(params, 1); }

double variance(const Params& params) {
    // mu2 = E[Y(Y-1)] + m - m^2 avoids one cancellation step
    const double m = mean(params);
    return factorial_moment(params, 2) + m - m * m;
}

double index_of_dispersion(const Params& params) { return variance(params) / mean(params); }

double skewness_beta1(const Params& params) {
    const double mu2 = variance(params);
    const double mu3 = central_moment(params, 3);
    return mu3 * mu3 / (mu2 * mu2 * mu2);
}

double kurtosis_beta2(const Params& params) {
    const double mu2 = variance(params);
    return central_moment(params, 4) / (mu2 * mu2);
}

MomentSet summarize(const Params& params) {
    MomentSet s{};
    for (int r = 1; r <= 4; ++r) {
        s.raw[r - 1] = raw_moment(params, r);
        s.factorial[r - 1] = factorial_moment(params, r);
        s.factorial_cumulant[r - 1] = factorial_cumulant(params, r);
    }
    s.mean = s.factorial[0];
    s.variance = variance(params);
    s.central = {s.variance, central_moment(params, 3), central_moment(params, 4)};
    s.index_of_dispersion = s.variance / s.mean;
    s.beta1 = s.central[1] * s.central[1] / std::pow(s.variance, 3);
    s.beta2 = s.central[2] / (s.variance * s.variance);
    return s;
}

} // namespace tgd
