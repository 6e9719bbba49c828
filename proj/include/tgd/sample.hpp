#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "tgd/params.hpp"
#include "tgd/random.hpp"

namespace tgd {

enum class SampleMethod { Inverse, Bridge };

std::string_view to_string(SampleMethod method);
/// Accepts "inverse" or "bridge"; throws DomainError otherwise.
SampleMethod parse_sample_method(std::string_view name);

struct SampleBatch {
    std::vector<SupportPoint> values;
    Params params;
    std::uint64_t seed;
    SampleMethod method;
};

/// Inverse-cdf draw: min{y : cdf(y) >= u}, and 0 for u = 0. Requires 0 <= u < 1.
SupportPoint sample_inverse(const Params& params, double u);

/// Draw through the min/max mixture representation. Consumes one branch
/// uniform, then one uniform for a single geometric draw or two for a pair.
SupportPoint sample_bridge(const Params& params, RandomStream& stream);

/// cdf implied by the mixture sample_bridge draws from.
double bridge_mixture_cdf(const Params& params, SupportPoint y);

/// n variates from one stream seeded with `seed`.
SampleBatch sample_many(const Params& params, std::size_t n, std::uint64_t seed,
                        SampleMethod method);

} // namespace tgd
