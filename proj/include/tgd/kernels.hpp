#pragma once

#include <cstdint>
#include <vector>

#include "tgd/params.hpp"
#include "tgd/sample.hpp"

// Batch kernels with an OpenMP path and the serial loop it must reproduce.
namespace tgd::kernels {

enum class Execution { Serial, Parallel };

struct TableRow {
    SupportPoint y;
    double pmf;
    double cdf;
    double survival;
    double hazard;
};

/// Rows for y = 0..ymax.
std::vector<TableRow> evaluate_table(const Params& params, SupportPoint ymax, Execution exec);

/// n variates split into fixed-size chunks; chunk k draws from its own stream
/// seeded with seed + k, so the output does not depend on the thread count.
std::vector<SupportPoint> sample_chunked(const Params& params, std::size_t n, std::uint64_t seed,
                                         SampleMethod method, Execution exec,
                                         std::size_t chunk_size = 1 << 14);

} // namespace tgd::kernels
