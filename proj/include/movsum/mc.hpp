#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "movsum/model.hpp"

namespace movsum {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;

// Replication budget and reproducibility contract of a Monte Carlo run.
// Results are bit-identical for a fixed (seed, replications) regardless of
// thread_hint: every replication draws from its own counter-based substream
// keyed by (seed, replication index), and reductions run in index order.
struct MCConfig {
    std::int64_t replications = 100000;
    std::uint64_t seed = kDefaultSeed;
    std::int64_t max_horizon = 0;  // 0: derived default max(1e6, 1000*L)
    int thread_hint = 0;           // 0: hardware concurrency

    void validate() const;
};

struct MCResult {
    double estimate = 0.0;
    double stderr_ = 0.0;
    double truncated_fraction = 0.0;
    bool truncation_warning = false;
};

// Counter-based substream: value i is a mix of (seed, replication, i), so
// any replication can be generated on any thread with identical output.
class SubstreamRng {
public:
    SubstreamRng(std::uint64_t seed, std::uint64_t replication);

    std::uint64_t next_u64();
    double uniform();  // strictly inside (0, 1)
    double normal();   // inverse-CDF transform of uniform()

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// Empirical first-passage sample: sorted stopping indices (xi-index units),
// with replications that never crossed stored as max_horizon + 1.
struct PassageSample {
    std::vector<std::int64_t> tau;  // sorted ascending
    std::int64_t L = 1;
    std::int64_t max_horizon = 0;
    double truncated_fraction = 0.0;
    bool truncation_warning = false;

    // Empirical c.d.f. of tau/L at t (window-length units).
    double ecdf_windows(double t) const;
};

// Per-replication maximum of the standardized moving sums over window
// positions 0..M; each replication consumes exactly L + M standard normals.
std::vector<double> simulate_max_per_replication(const ProcessSpec& spec,
                                                 std::int64_t M,
                                                 const MCConfig& cfg);

// Empirical frequency of max_{n<=M} xi_n >= h, with binomial standard error.
MCResult simulate_bcp(const ProcessSpec& spec, std::int64_t M, double h,
                      const MCConfig& cfg);

// First-crossing index per replication, capped at `cap` (values cap + 1 mark
// replications that never crossed). rep_offset shifts the substream indices,
// which is how independent replication groups are formed.
std::vector<std::int64_t> simulate_first_cross_capped(const ProcessSpec& spec,
                                                      double h, std::int64_t cap,
                                                      const MCConfig& cfg,
                                                      std::int64_t rep_offset = 0);

// Full first-passage sample up to cfg.max_horizon.
PassageSample simulate_passage(const ProcessSpec& spec, double h,
                               const MCConfig& cfg);

// Mean stopping index with standard error (see PassageSample for the
// truncation convention; truncated replications enter at max_horizon).
struct ArlMcResult {
    double value = 0.0;
    double stderr_ = 0.0;
    double truncated_fraction = 0.0;
    bool truncation_warning = false;
};

ArlMcResult simulate_arl(const ProcessSpec& spec, double h, const MCConfig& cfg);

namespace detail {

// Runs per_rep(r) for r in [0, n) on up to thread_hint threads. per_rep must
// only write to replication-indexed slots.
void parallel_replications(std::int64_t n, int thread_hint,
                           const std::function<void(std::int64_t)>& per_rep);

}  // namespace detail

}  // namespace movsum
