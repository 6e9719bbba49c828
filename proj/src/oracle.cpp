#include "tgd/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "tgd/error.hpp"

namespace tgd::oracle {
namespace {

// Neumaier compensated accumulator.
class Accumulator {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double tail_mass(const Params& params, SupportPoint y) {
    const double qy = std::pow(params.q(), static_cast<double>(y));
    return (1.0 - params.alpha()) * qy + params.alpha() * qy * qy;
}

} // namespace

Tolerance::Tolerance(double eps) : eps_(eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps", "tolerance must lie in (0, 1)");
}

double term_pmf(const Params& params, SupportPoint y) {
    if (y < 0) return 0.0;
    const double q = params.q();
    const double a = params.alpha();
    const double qy = std::pow(q, static_cast<double>(y));
    return (1.0 - a) * qy * (1.0 - q) + a * std::pow(q, 2.0 * static_cast<double>(y)) * (1.0 - q * q);
}

SupportPoint tail_bound(const Params& params, Tolerance eps) {
    // P(Y >= y) <= 2 q^y over the whole parameter box
    auto y = static_cast<SupportPoint>(std::ceil(std::log(eps.eps() / 2.0) / std::log(params.q())));
    if (y < 0) y = 0;
    while (y > 0 && tail_mass(params, y - 1) < eps.eps()) --y;
    while (tail_mass(params, y) >= eps.eps()) ++y;
    return y;
}

double oracle_sum(const Params& params, const std::function<double(SupportPoint)>& weight,
                  Tolerance eps) {
    SupportPoint y_max = tail_bound(params, eps);
    while (std::abs(weight(y_max)) * tail_mass(params, y_max) >= eps.eps()) ++y_max;
    Accumulator acc;
    for (SupportPoint y = 0; y <= y_max; ++y) acc.add(weight(y) * term_pmf(params, y));
    return acc.value();
}

double oracle_cdf(const Params& params, SupportPoint y) {
    Accumulator acc;
    for (SupportPoint k = 0; k <= y; ++k) acc.add(term_pmf(params, k));
    return acc.value();
}

SupportPoint oracle_quantile(const Params& params, double prob) {
    if (!(prob > 0.0 && prob < 1.0)) throw DomainError("p", "quantile level must lie in (0, 1)");
    // long double so that levels sitting on an attained cdf value are
    // decided by the inputs, not by rounding
    const long double q = params.q();
    const long double a = params.alpha();
    long double total = 0.0L;
    for (SupportPoint y = 0;; ++y) {
        const long double g = std::pow(q, static_cast<long double>(y));
        total += (1.0L - a) * g * (1.0L - q) + a * g * g * (1.0L - q * q);
        if (total >= prob) return y;
    }
}

SupportPoint oracle_mode(const Params& params) {
    const SupportPoint limit = tail_bound(params, Tolerance(1e-15));
    SupportPoint best = 0;
    double best_mass = term_pmf(params, 0);
    for (SupportPoint y = 1; y <= limit; ++y) {
        const double mass = term_pmf(params, y);
        if (mass > best_mass) {
            best = y;
            best_mass = mass;
        }
    }
    return best;
}

// Second pass scales eps by the magnitude of the first estimate, so the
// truncation error stays relative for moments far below one.
double relative_sum(const Params& params, const std::function<double(SupportPoint)>& weight,
                    Tolerance eps) {
    const double rough = std::abs(oracle_sum(params, weight, eps));
    if (rough >= 1.0) return oracle_sum(params, weight, eps);
    return oracle_sum(params, weight, Tolerance(std::max(1e-300, eps.eps() * rough)));
}

double oracle_factorial_moment(const Params& params, int order, Tolerance eps) {
    return relative_sum(
        params,
        [order](SupportPoint y) {
            double w = 1.0;
            for (int k = 0; k < order; ++k) w *= static_cast<double>(y - k);
            return w;
        },
        eps);
}

double oracle_raw_moment(const Params& params, int order, Tolerance eps) {
    return relative_sum(params, [order](SupportPoint y) { return std::pow(static_cast<double>(y), order); }, eps);
}

double oracle_central_moment(const Params& params, int order, Tolerance eps) {
    const double m = oracle_raw_moment(params, 1, eps);
    return relative_sum(
        params, [m, order](SupportPoint y) { return std::pow(static_cast<double>(y) - m, order); }, eps);
}

double skew_exponential_cdf(double beta, double alpha, double x) {
    if (x <= 0.0) return 0.0;
    const double g = 1.0 - std::exp(-beta * x);
    return (1.0 + alpha) * g - alpha * g * g;
}

} // namespace tgd::oracle
