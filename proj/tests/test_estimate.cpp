#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "grid.hpp"
#include "tgd/distribution.hpp"
#include "tgd/error.hpp"
#include "tgd/estimate.hpp"
#include "tgd/moments.hpp"
#include "tgd/oracle.hpp"
#include "tgd/sample.hpp"

namespace tgd {
namespace {

bool contains(const std::vector<Params>& candidates, double q, double a, double tol) {
    return std::any_of(candidates.begin(), candidates.end(), [&](const Params& p) {
        return std::abs(p.q() - q) < tol && std::abs(p.alpha() - a) < tol;
    });
}

std::vector<Params> all_candidates(const FitReport& r) {
    std::vector<Params> out{r.params};
    out.insert(out.end(), r.alternatives.begin(), r.alternatives.end());
    return out;
}

// Exact pmf-proportional histogram with fractional counts.
Dataset population(const Params& p, double mass = 1e4, double eps = 1e-12) {
    std::map<SupportPoint, double> counts;
    const SupportPoint limit = oracle::tail_bound(p, oracle::Tolerance(eps));
    for (SupportPoint y = 0; y <= limit; ++y) counts[y] = mass * pmf(p, y);
    return Dataset::from_counts(counts);
}

Dataset simulated(const Params& p, std::size_t n, std::uint64_t seed) {
    return Dataset::from_values(sample_many(p, n, seed, SampleMethod::Inverse).values);
}

TEST(Dataset, Ingest) {
    const std::vector<SupportPoint> a{0, 0, 1};
    const Dataset d = Dataset::from_values(a);
    EXPECT_EQ(d.count(0), 2.0);
    EXPECT_EQ(d.count(1), 1.0);
    EXPECT_EQ(d.n(), 3.0);
    EXPECT_NEAR(d.mean(), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(d.m2(), 1.0 / 3.0, 1e-15);

    const std::vector<SupportPoint> b{0, 1, 2, 2};
    const Dataset e = Dataset::from_values(b);
    EXPECT_NEAR(e.mean(), 1.25, 1e-15);
    EXPECT_NEAR(e.m2(), 2.25, 1e-15);
    EXPECT_NEAR(e.empirical_cdf(1), 0.5, 1e-15);
}

TEST(Dataset, IngestErrors) {
    EXPECT_THROW(Dataset::from_values({}), DomainError);
    const std::vector<SupportPoint> bad{0, 3, -2};
    try {
        Dataset::from_values(bad);
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("index 2"), std::string::npos);
    }
}

TEST(Dataset, ReadsPlainAndCountFormats) {
    std::istringstream plain("0\n2\n\n2\n 1 \n");
    const Dataset a = read_dataset(plain);
    EXPECT_EQ(a.n(), 4.0);
    EXPECT_EQ(a.count(2), 2.0);

    std::istringstream csv("value,count\n0,5\n3,2\n");
    const Dataset b = read_dataset(csv);
    EXPECT_EQ(b.n(), 7.0);
    EXPECT_EQ(b.count(3), 2.0);

    std::istringstream junk("1\n2\nx\n");
    try {
        read_dataset(junk);
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
    std::istringstream frac("1\n2.5\n");
    EXPECT_THROW(read_dataset(frac), DomainError);
    std::istringstream neg("1\n-2\n");
    EXPECT_THROW(read_dataset(neg), DomainError);
    std::istringstream empty("\n\n");
    EXPECT_THROW(read_dataset(empty), DomainError);
}

TEST(FitProportions, RecoversUniqueSolution) {
    const Params p = fit_proportions(0.625, 0.21875);
    EXPECT_NEAR(p.q(), 0.5, 1e-10);
    EXPECT_NEAR(p.alpha(), 0.5, 1e-10);
}

TEST(FitProportions, GeometricTwinsAreReportedAsAmbiguous) {
    // GD(q^2) is both (q^2, 0) and (q, 1); the proportion pair cannot tell them apart.
    const auto roots = solve_proportions(0.5, 0.25);
    EXPECT_EQ(roots.size(), 2u);
    EXPECT_TRUE(contains(roots, 0.5, 0.0, 1e-9));
    EXPECT_TRUE(contains(roots, std::sqrt(0.5), 1.0, 1e-9));

    const auto twins = solve_proportions(0.75, 0.1875);
    EXPECT_TRUE(contains(twins, 0.5, 1.0, 1e-9));
    EXPECT_TRUE(contains(twins, 0.25, 0.0, 1e-9));
    try {
        fit_proportions(0.75, 0.1875);
        FAIL();
    } catch (const SolverError& e) {
        EXPECT_EQ(e.kind(), "ambiguous-solution");
    }
}

TEST(FitProportions, TruthIsAlwaysAmongSolutions) {
    for (const auto& p : testing::grid()) {
        const auto roots = solve_proportions(pmf(p, 0), pmf(p, 1));
        EXPECT_TRUE(contains(roots, p.q(), p.alpha(), 1e-8)) << p.q() << ' ' << p.alpha();
    }
}

TEST(FitProportions, Errors) {
    EXPECT_THROW(fit_proportions(0.0, 0.2), DomainError);
    EXPECT_THROW(fit_proportions(0.6, 0.5), DomainError);
    try {
        fit_proportions(0.05, 0.9);
        FAIL();
    } catch (const SolverError& e) {
        EXPECT_EQ(e.kind(), "inconsistent-proportions");
    }
}

TEST(FitQuantiles, Examples) {
    const Params p = fit_quantiles(0, 0.625, 1, 0.84375);
    EXPECT_NEAR(p.q(), 0.5, 1e-10);
    EXPECT_NEAR(p.alpha(), 0.5, 1e-10);

    const Params n = fit_quantiles(0, 0.375, 1, 0.65625);
    EXPECT_NEAR(n.q(), 0.5, 1e-10);
    EXPECT_NEAR(n.alpha(), -0.5, 1e-10);

    const auto geometric = solve_quantiles(0, 0.5, 1, 0.75);
    EXPECT_TRUE(contains(geometric, 0.5, 0.0, 1e-9));
    EXPECT_THROW(fit_quantiles(0, 0.5, 1, 0.75), SolverError);
}

TEST(FitQuantiles, NonAdjacentPoints) {
    const Params truth(0.8, -0.3);
    const auto roots = solve_quantiles(2, cdf(truth, 2), 7, cdf(truth, 7));
    EXPECT_TRUE(contains(roots, 0.8, -0.3, 1e-8));
}

TEST(FitQuantiles, Errors) {
    EXPECT_THROW(fit_quantiles(1, 0.5, 1, 0.7), DomainError);
    EXPECT_THROW(fit_quantiles(0, 0.7, 1, 0.5), DomainError);
    EXPECT_THROW(fit_quantiles(-1, 0.2, 1, 0.5), DomainError);
    try {
        fit_quantiles(0, 0.01, 1, 0.99);
        FAIL();
    } catch (const SolverError& e) {
        EXPECT_EQ(e.kind(), "inconsistent-quantiles");
    }
}

TEST(FitQuantiles, EmpiricalPercentilePolicy) {
    const std::vector<SupportPoint> v{0, 0, 0, 1, 1, 2, 3, 5};
    const Dataset d = Dataset::from_values(v);
    const QuantilePoints pts = empirical_quantile_points(d);
    EXPECT_EQ(pts.t1, 0);
    EXPECT_EQ(pts.t2, 2);
    EXPECT_NEAR(pts.p1, 3.0 / 8.0, 1e-15);
    EXPECT_NEAR(pts.p2, 6.0 / 8.0, 1e-15);

    const std::vector<SupportPoint> flat{0, 0, 0, 0, 0, 0, 1, 2};
    const QuantilePoints moved = empirical_quantile_points(Dataset::from_values(flat));
    EXPECT_EQ(moved.t1, 0);
    EXPECT_EQ(moved.t2, 1);
    EXPECT_NEAR(moved.p2, 7.0 / 8.0, 1e-15);

    // moving t2 up lands on the sample maximum, where the cdf is 1
    const std::vector<SupportPoint> top{0, 0, 0, 0, 0, 0, 1};
    EXPECT_THROW(empirical_quantile_points(Dataset::from_values(top)), SolverError);
}

TEST(DatasetFits, AmbiguityResolvedByLikelihood) {
    const Params truth(0.5, 0.4);
    const Dataset d = population(truth);
    const FitReport r = fit_proportions(d);
    EXPECT_EQ(r.method, FitMethod::Proportions);
    EXPECT_LT(r.objective, 1e-10);
    EXPECT_NEAR(r.log_likelihood, log_likelihood(r.params, d), 1e-9);
    for (const auto& alt : r.alternatives) EXPECT_GE(r.log_likelihood, log_likelihood(alt, d));
    EXPECT_EQ(r.converged, r.alternatives.empty());

    const FitReport qr = fit_quantiles(d);
    EXPECT_EQ(qr.method, FitMethod::Quantiles);
    EXPECT_LT(qr.objective, 1e-10);
}

TEST(MomentObjective, Examples) {
    EXPECT_NEAR(moment_objective(Params(0.5, 0.5), 2.0 / 3.0, 16.0 / 9.0), 0.0, 1e-28);
    EXPECT_NEAR(moment_objective(Params(0.5, 0.0), 1.0, 3.0), 0.0, 1e-28);
    const Params p(0.37, -0.81);
    EXPECT_EQ(moment_objective(p, mean(p), raw_moment(p, 2)), 0.0);
    EXPECT_NEAR(moment_objective(Params(0.5, 0.0), 0.0, 0.0), 10.0, 1e-12);
}

TEST(FitMoments, ExactMomentsRecoverTruthOrReportTwin) {
    const FitReport r = fit_moments(2.0 / 3.0, 16.0 / 9.0);
    EXPECT_LT(r.objective, 1e-12);
    EXPECT_TRUE(contains(all_candidates(r), 0.5, 0.5, 1e-5));

    // (0.5, 0) and (sqrt(0.5), 1) are the same distribution
    const FitReport g = fit_moments(1.0, 3.0);
    EXPECT_LT(g.objective, 1e-12);
    EXPECT_FALSE(g.converged);
    EXPECT_TRUE(contains(all_candidates(g), 0.5, 0.0, 1e-5));
    EXPECT_TRUE(contains(all_candidates(g), std::sqrt(0.5), 1.0, 1e-5));
}

TEST(FitMoments, ExactMomentsUniqueRegion) {
    const Params truth(0.6, -0.5);
    const FitReport r = fit_moments(mean(truth), raw_moment(truth, 2));
    EXPECT_TRUE(r.converged);
    EXPECT_TRUE(r.alternatives.empty());
    EXPECT_NEAR(r.params.q(), 0.6, 1e-5);
    EXPECT_NEAR(r.params.alpha(), -0.5, 1e-5);
}

TEST(FitMoments, SimulatedCalibration) {
    const Dataset d = simulated(Params(0.6, -0.5), 100000, 17);
    const FitReport r = fit_moments(d);
    EXPECT_NEAR(r.params.q(), 0.6, 0.02);
    EXPECT_NEAR(r.params.alpha(), -0.5, 0.15);
    EXPECT_TRUE(std::isfinite(r.log_likelihood));
}

TEST(FitMoments, SerialAndParallelAgree) {
    const Dataset d = simulated(Params(0.7, 0.2), 5000, 8);
    const FitReport a = fit_moments(d, FitOptions{false});
    const FitReport b = fit_moments(d, FitOptions{true});
    EXPECT_EQ(a.params, b.params);
    EXPECT_EQ(a.objective, b.objective);
}

TEST(FitMoments, NeedsTwoObservations) {
    const std::vector<SupportPoint> one{3};
    EXPECT_THROW(fit_moments(Dataset::from_values(one)), DomainError);
    EXPECT_THROW(fit_mle(Dataset::from_values(one)), DomainError);
}

TEST(LogLikelihood, Examples) {
    const std::vector<SupportPoint> zero{0};
    EXPECT_NEAR(log_likelihood(Params(0.5, 0.5), Dataset::from_values(zero)), -0.47000362924573555, 1e-14);
    const std::vector<SupportPoint> two{2};
    EXPECT_NEAR(log_likelihood(Params(0.5, 1.0), Dataset::from_values(two)), -3.0602707946915622, 1e-14);

    const std::vector<SupportPoint> v{0, 4, 1, 1, 9};
    const Dataset d = Dataset::from_values(v);
    const double q = 0.35;
    EXPECT_NEAR(log_likelihood(Params(q, 0.0), d), 5 * std::log(1 - q) + 5 * d.mean() * std::log(q), 1e-12);
}

TEST(LogLikelihood, MatchesSumOfLogPmf) {
    const Dataset d = simulated(Params(0.8, -0.7), 2000, 4);
    for (const auto& p : testing::grid()) {
        double direct = 0.0;
        for (const auto& [y, c] : d.counts()) direct += c * std::log(pmf(p, y));
        EXPECT_NEAR(log_likelihood(p, d), direct, 1e-10 * std::max(1.0, std::abs(direct)));
    }
}

TEST(FitMle, PopulationHistogramRecoversTruth) {
    const FitReport r = fit_mle(population(Params(0.5, 0.5)));
    EXPECT_NEAR(r.params.q(), 0.5, 1e-4);
    EXPECT_NEAR(r.params.alpha(), 0.5, 1e-4);
    EXPECT_EQ(r.method, FitMethod::MLE);
    EXPECT_EQ(r.objective, r.log_likelihood);
}

TEST(FitMle, DominatesTruthOnItsData) {
    const Params truth(0.5, 0.5);
    const Dataset d = simulated(truth, 100000, 7);
    const FitReport r = fit_mle(d);
    EXPECT_GE(r.log_likelihood, log_likelihood(truth, d));
    EXPECT_NEAR(r.params.q(), 0.5, 0.01);
    EXPECT_NEAR(r.params.alpha(), 0.5, 0.08);
}

TEST(FitMle, AllZerosGoesToLowerEdge) {
    const std::vector<SupportPoint> zeros(50, 0);
    const FitReport r = fit_mle(Dataset::from_values(zeros));
    EXPECT_LT(r.params.q(), 1e-5);
    EXPECT_TRUE(r.at_boundary);
    EXPECT_TRUE(r.converged);
}

TEST(FitMle, ConsistencyAcrossSeeds) {
    std::vector<double> dq;
    std::vector<double> da;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const FitReport r = fit_mle(simulated(Params(0.6, -0.5), 10000, seed));
        dq.push_back(std::abs(r.params.q() - 0.6));
        da.push_back(std::abs(r.params.alpha() + 0.5));
    }
    const auto median_of = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        return 0.5 * (v[9] + v[10]);
    };
    EXPECT_LT(median_of(dq), 0.01);
    EXPECT_LT(median_of(da), 0.1);
}

TEST(FitMethod, ParsesNames) {
    EXPECT_EQ(parse_fit_method("mle"), FitMethod::MLE);
    EXPECT_EQ(to_string(FitMethod::Quantiles), "quantiles");
    EXPECT_THROW(parse_fit_method("bayes"), DomainError);
}

} // namespace
} // namespace tgd
