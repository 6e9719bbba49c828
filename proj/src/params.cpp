#include "tgd/params.hpp"

#include <cmath>

#include "tgd/error.hpp"

namespace tgd {

Params::Params(double q, double alpha) : q_(q), alpha_(alpha), p_(1.0 - q) {
    if (!(q > 0.0 && q < 1.0)) {
        throw DomainError("q", "must lie in the open interval (0, 1)");
    }
    if (!(alpha >= -1.0 && alpha <= 1.0)) {
        throw DomainError("alpha", "must lie in the closed interval [-1, 1]");
    }
}

Params Params::from_continuous_rate(double beta, double alpha) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw DomainError("beta", "rate must be positive and finite");
    }
    return Params(std::exp(-beta), alpha);
}

} // namespace tgd
