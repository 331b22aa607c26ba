#pragma once

#include <cstdint>

#include "hotcold/dataset.hpp"

namespace hotcold {

/// Knobs of the synthetic catalog generator. Defaults are tuned so that the
/// generated traffic is long-tailed (top 20% of contents carry most views)
/// and every feature family carries real signal: series history dominates
/// for sequels, categorical levels and keywords matter for standalones.
struct SyntheticParams {
    std::int64_t n_contents = 1000;
    std::int64_t days = 90;
    std::uint64_t seed = 0;
    double type_a_fraction = 0.7;

    double base_log_views = 4.1;       // exp() ~ 60 views on release day
    double series_sigma = 1.0;         // shared per-series popularity factor
    double episode_jitter_sigma = 0.3; // per-episode deviation from series
    double standalone_sigma = 1.05;    // residual spread for standalones
    double daily_noise_sigma = 0.35;   // day-to-day volatility
    double decay_halflife_days = 3.2;  // post-release demand decay
    double decay_floor = 0.02;         // long-run trickle of old catalog
};

Dataset generate_synthetic(const SyntheticParams& params);

/// Convenience overload matching the CLI surface.
Dataset generate_synthetic(std::int64_t n_contents, std::int64_t days,
                           std::uint64_t seed, double type_a_fraction = 0.7);

/// Share of contents classified TypeA at their own release date.
double type_a_share(const Dataset& ds);

} // namespace hotcold
