#include "tgd/distribution.hpp"

#include <cassert>
#include <cmath>

#include "tgd/error.hpp"

namespace tgd {
namespace {

constexpr double kRoundOff = 1e-15;

double clamp_probability(double v) {
    assert(v > -kRoundOff && v <= 1.0 + kRoundOff);
    if (v < 0.0) return 0.0;
    if (v > 1.0) return 1.0;
    return v;
}

double qpow(const Params& params, SupportPoint y) {
    return std::pow(params.q(), static_cast<double>(y));
}

// Root z = q^(y+1) of a z^2 + (1-a) z = 1 - p, the "+" branch written in
// rationalized form so it stays accurate as a -> 0.
double quantile_root(double alpha, double prob) {
    const double tail = 1.0 - prob;
    if (std::abs(alpha) < 1e-12) return tail;
    const double b = 1.0 - alpha;
    const double disc = std::max(0.0, b * b + 4.0 * alpha * tail);
    return 2.0 * tail / (b + std::sqrt(disc));
}

} // namespace

double pmf(const Params& params, SupportPoint y) {
    if (y < 0) return 0.0;
    const double q = params.q();
    const double a = params.alpha();
    const double qy = qpow(params, y);
    return clamp_probability(params.p() * qy * ((1.0 - a) + a * qy * (1.0 + q)));
}

double cdf(const Params& params, SupportPoint y) {
    if (y < 0) return 0.0;
    const double a = params.alpha();
    const double z = qpow(params, y + 1);
    return clamp_probability(1.0 - z * ((1.0 - a) + a * z));
}

double survival(const Params& params, SupportPoint y) {
    if (y <= 0) return 1.0;
    const double a = params.alpha();
    const double qy = qpow(params, y);
    return clamp_probability(qy * ((1.0 - a) + a * qy));
}

double hazard(const Params& params, SupportPoint y) {
    if (y < 0) return 0.0;
    const double q = params.q();
    const double a = params.alpha();
    const double qy = qpow(params, y);
    const double num = (1.0 - a) + a * qy * q;
    const double den = (1.0 - a) + a * qy;
    return clamp_probability(1.0 - q * num / den);
}

double reversed_hazard(const Params& params, SupportPoint y) {
    if (y < 0) return 0.0;
    if (y == 0) return 1.0;
    return clamp_probability(pmf(params, y) / cdf(params, y));
}

HazardClass hazard_class(const Params& params) {
    const double a = params.alpha();
    const double q = params.q();
    if (a < 0.0) return Increasing{};
    if (a == 0.0) return Constant{1.0 - q};
    if (a < 1.0) return Decreasing{};
    return Constant{1.0 - q * q};
}

double pgf(const Params& params, double z) {
    const double q = params.q();
    const double a = params.alpha();
    if (!(std::abs(q * z) < 1.0)) {
        throw DomainError("z", "pgf requires |q z| < 1");
    }
    const double q2 = q * q;
    return (1.0 - a) * (1.0 - q) / (1.0 - q * z) + a * (1.0 - q2) / (1.0 - q2 * z);
}

namespace {

// Extended-precision cdf for settling ties: grid levels such as 0.9 often sit
// within an ulp of an attained cdf value, and the double form can land on
// either side.
long double cdf_extended(const Params& params, SupportPoint y) {
    const long double a = params.alpha();
    const long double z = std::pow(static_cast<long double>(params.q()), static_cast<long double>(y + 1));
    return 1.0L - z * ((1.0L - a) + a * z);
}

} // namespace

SupportPoint quantile(const Params& params, double prob) {
    if (!(prob > 0.0 && prob < 1.0)) {
        throw DomainError("p", "quantile level must lie in (0, 1)");
    }
    const double z = quantile_root(params.alpha(), prob);
    const double x = std::log(z) / std::log(params.q());

    constexpr double kMaxGuess = 1e15;
    SupportPoint y = 0;
    if (x > 0.0) y = static_cast<SupportPoint>(std::floor(std::min(x, kMaxGuess)));

    // The floor form lands one step high when q^(y+1) hits the root exactly.
    while (y > 0 && cdf_extended(params, y - 1) >= prob) --y;
    while (cdf_extended(params, y) < prob) ++y;
    return y;
}

SupportPoint median(const Params& params) { return quantile(params, 0.5); }

bool is_unimodal(const Params& params) {
    const double q = params.q();
    const double curvature = q * (2.0 + q);
    return curvature > 1.0 && params.alpha() < -1.0 / curvature;
}

SupportPoint mode(const Params& params) {
    if (!is_unimodal(params)) return 0;
    // Two-term geometric sum: once the pmf stops rising it keeps falling.
    // The scan never needs to pass the point where 2 q^y drops below 1e-15.
    const auto scan_limit = static_cast<SupportPoint>(
        std::ceil(std::log(0.5e-15) / std::log(params.q())));
    SupportPoint y = 0;
    double current = pmf(params, 0);
    while (y < scan_limit) {
        const double next = pmf(params, y + 1);
        if (next <= current) break;
        current = next;
        ++y;
    }
    return y;
}

} // namespace tgd
