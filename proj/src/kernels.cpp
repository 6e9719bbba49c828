#include "tgd/kernels.hpp"

#include <algorithm>
#include <span>

#include "tgd/distribution.hpp"
#include "tgd/error.hpp"
#include "tgd/random.hpp"

namespace tgd::kernels {
namespace {

TableRow row(const Params& params, SupportPoint y) {
    return {y, pmf(params, y), cdf(params, y), survival(params, y), hazard(params, y)};
}

void fill_chunk(const Params& params, std::uint64_t seed, SampleMethod method,
                std::span<SupportPoint> out) {
    RandomStream stream(seed);
    for (auto& v : out) {
        v = method == SampleMethod::Inverse ? sample_inverse(params, stream.uniform())
                                            : sample_bridge(params, stream);
    }
}

} // namespace

std::vector<TableRow> evaluate_table(const Params& params, SupportPoint ymax, Execution exec) {
    if (ymax < 0) throw DomainError("ymax", "table extent must be non-negative");
    std::vector<TableRow> rows(static_cast<std::size_t>(ymax) + 1);
    if (exec == Execution::Serial) {
        for (SupportPoint y = 0; y <= ymax; ++y) rows[static_cast<std::size_t>(y)] = row(params, y);
        return rows;
    }
#pragma omp parallel for schedule(static)
    for (SupportPoint y = 0; y <= ymax; ++y) rows[static_cast<std::size_t>(y)] = row(params, y);
    return rows;
}

std::vector<SupportPoint> sample_chunked(const Params& params, std::size_t n, std::uint64_t seed,
                                         SampleMethod method, Execution exec, std::size_t chunk_size) {
    if (n == 0) throw DomainError("n", "sample size must be positive");
    if (chunk_size == 0) throw DomainError("chunk_size", "must be positive");
    std::vector<SupportPoint> values(n);
    const auto chunks = static_cast<long>((n + chunk_size - 1) / chunk_size);
    const auto run = [&](long k) {
        const std::size_t begin = static_cast<std::size_t>(k) * chunk_size;
        const std::size_t len = std::min(chunk_size, n - begin);
        fill_chunk(params, seed + static_cast<std::uint64_t>(k), method,
                   std::span<SupportPoint>(values).subspan(begin, len));
    };
    if (exec == Execution::Serial) {
        for (long k = 0; k < chunks; ++k) run(k);
        return values;
    }
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < chunks; ++k) run(k);
    return values;
}

} // namespace tgd::kernels
