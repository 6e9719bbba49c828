#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <span>

#include "tgd/params.hpp"

namespace tgd {

/// Histogram of a non-negative integer sample with cached raw moments.
///
/// Counts are stored as doubles: user data always produces whole counts, but
/// fractional weights are accepted so that an exact pmf-proportional
/// histogram can stand in for an infinite sample.
class Dataset {
public:
    /// Throws DomainError on empty input or a negative value (index reported).
    static Dataset from_values(std::span<const SupportPoint> values);

    /// Throws DomainError on negative keys, negative weights or zero total.
    static Dataset from_counts(std::map<SupportPoint, double> counts);

    const std::map<SupportPoint, double>& counts() const noexcept { return counts_; }
    double n() const noexcept { return n_; }
    double mean() const noexcept { return mean_; }
    double m2() const noexcept { return m2_; }

    double count(SupportPoint y) const;
    double proportion(SupportPoint y) const { return count(y) / n_; }
    /// Fraction of the sample <= y.
    double empirical_cdf(SupportPoint y) const;

private:
    explicit Dataset(std::map<SupportPoint, double> counts);

    std::map<SupportPoint, double> counts_;
    double n_ = 0.0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

/// Reads one non-negative integer per line, or a two-column CSV whose first
/// line is a header (e.g. `value,count`). Blank lines are skipped. Malformed
/// lines raise DomainError("input", ...) with the 1-based line number.
Dataset read_dataset(std::istream& in);

} // namespace tgd
