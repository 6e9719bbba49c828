#pragma once

#include <cstdint>
#include <variant>

namespace tgd {

/// Outcome value on the support {0, 1, 2, ...}.
using SupportPoint = std::int64_t;

/// Validated parameter pair of one transmuted geometric distribution.
///
/// q is the geometric survival ratio, 0 < q < 1. alpha is the transmutation
/// weight in the closed interval [-1, 1]; alpha = -1 gives the maximum of two
/// independent geometric draws, alpha = 1 the minimum.
class Params {
public:
    /// Throws DomainError naming "q" or "alpha" when out of range (NaN included).
    Params(double q, double alpha);

    /// Discretisation of the skew exponential with rate beta: q = exp(-beta).
    static Params from_continuous_rate(double beta, double alpha);

    double q() const noexcept { return q_; }
    double alpha() const noexcept { return alpha_; }
    double p() const noexcept { return p_; }

    friend bool operator==(const Params&, const Params&) = default;

private:
    double q_;
    double alpha_;
    double p_;
};

struct Increasing {
    friend bool operator==(Increasing, Increasing) = default;
};
struct Decreasing {
    friend bool operator==(Decreasing, Decreasing) = default;
};
struct Constant {
    double rate;
    friend bool operator==(Constant, Constant) = default;
};

/// Monotonicity of the hazard rate in y.
using HazardClass = std::variant<Increasing, Decreasing, Constant>;

} // namespace tgd
