#include "tgd/sample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tgd/distribution.hpp"
#include "tgd/error.hpp"

namespace tgd {
namespace {

SupportPoint geometric_draw(double log_q, double u) {
    return static_cast<SupportPoint>(std::floor(std::log1p(-u) / log_q));
}

double geometric_cdf(double q, SupportPoint y) {
    if (y < 0) return 0.0;
    return 1.0 - std::pow(q, static_cast<double>(y + 1));
}

} // namespace

std::string_view to_string(SampleMethod method) {
    return method == SampleMethod::Inverse ? "inverse" : "bridge";
}

SampleMethod parse_sample_method(std::string_view name) {
    if (name == "inverse") return SampleMethod::Inverse;
    if (name == "bridge") return SampleMethod::Bridge;
    throw DomainError("method", "unknown sampler '" + std::string(name) + "'");
}

SupportPoint sample_inverse(const Params& params, double u) {
    if (!(u >= 0.0 && u < 1.0)) throw DomainError("u", "uniform must lie in [0, 1)");
    if (u == 0.0) return 0;
    return quantile(params, u);
}

SupportPoint sample_bridge(const Params& params, RandomStream& stream) {
    const double a = params.alpha();
    const double log_q = std::log(params.q());
    const double single_weight = a >= 0.0 ? 1.0 - a : 1.0 + a;

    const double branch = stream.uniform();
    if (branch < single_weight) return geometric_draw(log_q, stream.uniform());

    const SupportPoint first = geometric_draw(log_q, stream.uniform());
    const SupportPoint second = geometric_draw(log_q, stream.uniform());
    return a >= 0.0 ? std::min(first, second) : std::max(first, second);
}

double bridge_mixture_cdf(const Params& params, SupportPoint y) {
    const double a = params.alpha();
    const double f = geometric_cdf(params.q(), y);
    if (a >= 0.0) return (1.0 - a) * f + a * (1.0 - (1.0 - f) * (1.0 - f));
    return (1.0 + a) * f + (-a) * f * f;
}

SampleBatch sample_many(const Params& params, std::size_t n, std::uint64_t seed,
                        SampleMethod method) {
    if (n == 0) throw DomainError("n", "sample size must be positive");
    SampleBatch batch{{}, params, seed, method};
    batch.values.reserve(n);
    RandomStream stream(seed);
    for (std::size_t i = 0; i < n; ++i) {
        batch.values.push_back(method == SampleMethod::Inverse
                                   ? sample_inverse(params, stream.uniform())
                                   : sample_bridge(params, stream));
    }
    return batch;
}

} // namespace tgd
