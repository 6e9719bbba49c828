#pragma once

#include "tgd/params.hpp"

namespace tgd {

// Exact pointwise evaluation. Support is y >= 0.

double pmf(const Params& params, SupportPoint y);

/// P(Y <= y); zero for y < 0.
double cdf(const Params& params, SupportPoint y);

/// Inclusive tail P(Y >= y); one for y <= 0.
double survival(const Params& params, SupportPoint y);

/// pmf(y) / P(Y >= y), evaluated through the reduced form
/// 1 - q [(1-a) + a q^(y+1)] / [(1-a) + a q^y].
double hazard(const Params& params, SupportPoint y);

/// pmf(y) / P(Y <= y).
double reversed_hazard(const Params& params, SupportPoint y);

HazardClass hazard_class(const Params& params);

/// Probability generating function E[z^Y]. Requires |q z| < 1.
double pgf(const Params& params, double z);

/// Smallest y >= 0 with cdf(y) >= p, for 0 < p < 1.
SupportPoint quantile(const Params& params, double prob);

SupportPoint median(const Params& params);

/// True when the mode is strictly positive (pmf(1) > pmf(0)).
bool is_unimodal(const Params& params);

/// argmax of the pmf, ties toward the smaller y.
SupportPoint mode(const Params& params);

} // namespace tgd
