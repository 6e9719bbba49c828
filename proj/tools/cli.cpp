#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tgd/dataset.hpp"
#include "tgd/distribution.hpp"
#include "tgd/error.hpp"
#include "tgd/estimate.hpp"
#include "tgd/kernels.hpp"
#include "tgd/moments.hpp"
#include "tgd/sample.hpp"
#ifdef TGD_HAVE_ORACLE
#include "tgd/oracle.hpp"
#endif

namespace tgd::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class ExitCode : int { Ok = 0, Usage = 1, Failure = 2 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    double q = 0.0;
    double alpha = 0.0;
    SupportPoint y = 0;
    SupportPoint ymax = 20;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string method;
    std::string input;
    std::string output;
    std::string format = "csv";
    bool audit = false;
    bool serial = false;
    std::optional<SupportPoint> t1, t2;
    std::optional<double> p1, p2;
};

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string hazard_label(const HazardClass& c) {
    if (std::holds_alternative<Increasing>(c)) return "increasing";
    if (std::holds_alternative<Decreasing>(c)) return "decreasing";
    return "constant";
}

Json params_json(const Params& p) { return Json{{"q", p.q()}, {"alpha", p.alpha()}}; }

#ifdef TGD_HAVE_ORACLE
Json eval_audit(const Params& p, SupportPoint y) {
    const double o_pmf = oracle::term_pmf(p, y);
    const double o_cdf = oracle::oracle_cdf(p, y);
    const double o_surv = 1.0 - oracle::oracle_cdf(p, y - 1);
    const double deviations[] = {
        std::abs(pmf(p, y) - o_pmf),
        std::abs(cdf(p, y) - o_cdf),
        std::abs(survival(p, y) - o_surv),
        std::abs(hazard(p, y) - o_pmf / o_surv),
        std::abs(reversed_hazard(p, y) - o_pmf / o_cdf),
    };
    return Json{{"max_abs_deviation", *std::max_element(std::begin(deviations), std::end(deviations))}};
}

Json summary_audit(const Params& p, const MomentSet& m) {
    double worst = 0.0;
    const auto rel = [&worst](double value, double reference) {
        worst = std::max(worst, std::abs(value - reference) / std::max(1e-300, std::abs(reference)));
    };
    for (int r = 1; r <= 4; ++r) {
        rel(m.factorial[r - 1], oracle::oracle_factorial_moment(p, r));
        rel(m.raw[r - 1], oracle::oracle_raw_moment(p, r));
    }
    for (int r = 2; r <= 4; ++r) rel(m.central[r - 2], oracle::oracle_central_moment(p, r));
    return Json{{"max_rel_deviation", worst},
                {"median_matches", median(p) == oracle::oracle_quantile(p, 0.5)},
                {"mode_matches", mode(p) == oracle::oracle_mode(p)}};
}
#endif

Json audit_unavailable() {
    throw DomainError("audit", "this build has no reference library (TGD_WITH_ORACLE=OFF)");
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void cmd_eval(const Config& c, std::ostream& out) {
    const Params p(c.q, c.alpha);
    if (c.y < 0) throw DomainError("y", "support point must be non-negative");
    Json j{{"q", c.q},
           {"alpha", c.alpha},
           {"y", c.y},
           {"pmf", pmf(p, c.y)},
           {"cdf", cdf(p, c.y)},
           {"survival", survival(p, c.y)},
           {"hazard", hazard(p, c.y)},
           {"reversed_hazard", reversed_hazard(p, c.y)}};
    if (c.audit) {
#ifdef TGD_HAVE_ORACLE
        j["audit"] = eval_audit(p, c.y);
#else
        audit_unavailable();
#endif
    }
    write_json(out, j);
}

void cmd_table(const Config& c, std::ostream& out) {
    const Params p(c.q, c.alpha);
    const auto rows = kernels::evaluate_table(p, c.ymax, kernels::Execution::Serial);
    if (c.format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows) {
            arr.push_back(Json{{"y", r.y}, {"pmf", r.pmf}, {"cdf", r.cdf}, {"survival", r.survival}, {"hazard", r.hazard}});
        }
        write_json(out, arr);
        return;
    }
    out << "y,pmf,cdf,survival,hazard\n";
    for (const auto& r : rows) {
        out << r.y << ',' << format_number(r.pmf) << ',' << format_number(r.cdf) << ','
            << format_number(r.survival) << ',' << format_number(r.hazard) << '\n';
    }
}

void cmd_sample(const Config& c, std::ostream& out) {
    const Params p(c.q, c.alpha);
    if (c.n == 0) throw DomainError("n", "sample size must be positive");
    const auto batch = sample_many(p, c.n, c.seed, parse_sample_method(c.method));
    std::string buffer;
    for (const auto v : batch.values) {
        buffer += std::to_string(v);
        buffer += '\n';
    }
    out << buffer;
}

Dataset load_dataset(const std::string& path) {
    if (path == "-") return read_dataset(std::cin);
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return read_dataset(in);
}

void cmd_fit(const Config& c, std::ostream& out) {
    const FitMethod method = parse_fit_method(c.method);
    const Dataset data = load_dataset(c.input);
    const FitOptions options{!c.serial};

    std::optional<QuantilePoints> points;
    const int given = int(c.t1.has_value()) + int(c.p1.has_value()) + int(c.t2.has_value()) + int(c.p2.has_value());
    if (given != 0 && given != 4) throw DomainError("t1", "--t1 --p1 --t2 --p2 must be given together");
    if (given == 4) points = QuantilePoints{*c.t1, *c.p1, *c.t2, *c.p2};

    FitReport report = [&] {
        switch (method) {
        case FitMethod::Proportions: return fit_proportions(data);
        case FitMethod::Quantiles: return fit_quantiles(data, points);
        case FitMethod::Moments: return fit_moments(data, options);
        case FitMethod::MLE: return fit_mle(data, options);
        }
        throw DomainError("method", "unhandled estimator");
    }();

    Json alternatives = Json::array();
    for (const auto& a : report.alternatives) alternatives.push_back(params_json(a));
    Json j{{"method", std::string(to_string(report.method))},
           {"q", report.params.q()},
           {"alpha", report.params.alpha()},
           {"objective", report.objective},
           {"log_likelihood", report.log_likelihood},
           {"converged", report.converged},
           {"at_boundary", report.at_boundary},
           {"iterations", report.iterations},
           {"n", data.n()},
           {"alternatives", alternatives}};
    if (method == FitMethod::Quantiles) {
        const QuantilePoints used = points ? *points : empirical_quantile_points(data);
        j["quantile_points"] = Json{{"t1", used.t1}, {"p1", used.p1}, {"t2", used.t2}, {"p2", used.p2}};
    }
    write_json(out, j);
}

void cmd_summary(const Config& c, std::ostream& out) {
    const Params p(c.q, c.alpha);
    const MomentSet m = summarize(p);
    const HazardClass hc = hazard_class(p);
    Json j{{"q", c.q},
           {"alpha", c.alpha},
           {"mean", m.mean},
           {"variance", m.variance},
           {"raw", m.raw},
           {"central", m.central},
           {"factorial", m.factorial},
           {"factorial_cumulant", m.factorial_cumulant},
           {"index_of_dispersion", m.index_of_dispersion},
           {"beta1", m.beta1},
           {"beta2", m.beta2},
           {"median", median(p)},
           {"mode", mode(p)},
           {"hazard_class", hazard_label(hc)},
           {"is_unimodal", is_unimodal(p)}};
    if (const auto* constant = std::get_if<Constant>(&hc)) j["hazard_rate"] = constant->rate;
    if (c.audit) {
#ifdef TGD_HAVE_ORACLE
        j["audit"] = summary_audit(p, m);
#else
        audit_unavailable();
#endif
    }
    write_json(out, j);
}

void add_params(CLI::App* sub, Config& c) {
    sub->add_option("--q", c.q, "geometric ratio, 0 < q < 1")->required();
    sub->add_option("--alpha", c.alpha, "transmutation weight, -1 <= alpha <= 1")->required();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Transmuted geometric distribution toolkit", "tgd"};
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "pmf, cdf, survival, hazard and reversed hazard at one point");
    add_params(eval, c);
    eval->add_option("--y", c.y, "support point")->required();
    eval->add_flag("--audit", c.audit, "compare against brute-force summation");

    auto* table = app.add_subcommand("table", "pmf, cdf, survival and hazard for y = 0..ymax");
    add_params(table, c);
    table->add_option("--ymax", c.ymax, "last row")->required();
    table->add_option("--format", c.format)->check(CLI::IsMember({"csv", "json"}));

    auto* sample = app.add_subcommand("sample", "draw variates, one per line");
    add_params(sample, c);
    sample->add_option("--n", c.n, "number of variates")->required();
    sample->add_option("--seed", c.seed, "generator seed")->envname("TGD_SEED")->required();
    sample->add_option("--method", c.method)->check(CLI::IsMember({"inverse", "bridge"}))->default_val("inverse");

    auto* fit = app.add_subcommand("fit", "estimate (q, alpha) from a sample");
    fit->add_option("--input", c.input, "one integer per line, or value,count CSV with header; '-' for stdin")->required();
    fit->add_option("--method", c.method)->check(CLI::IsMember({"proportions", "quantiles", "moments", "mle"}))->required();
    fit->add_option("--t1", c.t1);
    fit->add_option("--p1", c.p1);
    fit->add_option("--t2", c.t2);
    fit->add_option("--p2", c.p2);
    fit->add_flag("--serial", c.serial, "run the multi-start search on one thread");

    auto* summary = app.add_subcommand("summary", "moments, median, mode and hazard classification");
    add_params(summary, c);
    summary->add_flag("--audit", c.audit, "compare against brute-force summation");

    for (auto* sub : {eval, table, sample, fit, summary}) {
        sub->add_option("--output", c.output, "write data here instead of standard output");
    }

    std::vector<std::string> argv_storage{"tgd"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return static_cast<int>(ExitCode::Ok);
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << one_line(e.what()) << '\n';
        return static_cast<int>(ExitCode::Usage);
    }

    try {
        std::ostringstream data;
        if (eval->parsed()) cmd_eval(c, data);
        else if (table->parsed()) cmd_table(c, data);
        else if (sample->parsed()) cmd_sample(c, data);
        else if (fit->parsed()) cmd_fit(c, data);
        else if (summary->parsed()) cmd_summary(c, data);

        if (c.output.empty()) {
            out << data.str();
        } else {
            std::ofstream file(c.output, std::ios::binary);
            if (!(file << data.str())) throw IoError("cannot write '" + c.output + "'");
        }
    } catch (const DomainError& e) {
        err << "error: domain: " << one_line(e.what()) << '\n';
        return static_cast<int>(ExitCode::Failure);
    } catch (const SolverError& e) {
        err << "error: " << e.kind() << ": " << one_line(e.what()) << '\n';
        return static_cast<int>(ExitCode::Failure);
    } catch (const IoError& e) {
        err << "error: io: " << one_line(e.what()) << '\n';
        return static_cast<int>(ExitCode::Failure);
    } catch (const std::exception& e) {
        err << "error: internal: " << one_line(e.what()) << '\n';
        return static_cast<int>(ExitCode::Failure);
    }
    return static_cast<int>(ExitCode::Ok);
}

} // namespace tgd::cli
