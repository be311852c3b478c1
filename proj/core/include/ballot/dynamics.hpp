#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ballot/code.hpp"
#include "ballot/errors.hpp"
#include "ballot/trajectory.hpp"

namespace ballot {

// r_i = a_i - 1 elementwise. Throws EmptyCode.
Trajectory trajectory_from_code(const Code& c);

// Inverse: a_i = r_i + 1 elementwise. Throws EmptyTrajectory.
Code code_from_trajectory(const Trajectory& t);

// Amounts withdrawn from the reserve at ticks 1..n-1. The deposit of one
// unit lands first, then the withdrawal: w_i = r_i + 1 - r_{i+1}, which the
// trajectory invariants keep nonnegative. Conservation:
// sum of amounts + final reserve = n - 1.
struct WithdrawalSchedule {
    std::vector<int> amounts;

    int total() const;
};

WithdrawalSchedule withdrawals(const Trajectory& t);

// Global statistics of the reserve over all length-n configurations, either
// exact (aggregated over every code) or estimated by uniform sampling. All
// probabilities and expectations are exact rationals.
struct StatsReport {
    enum class Source { exact, monte_carlo };

    unsigned n = 0;
    Source source = Source::exact;
    std::uint64_t seed = 0;       // monte_carlo only
    std::uint64_t samples = 0;    // monte_carlo only
    std::vector<mpq_class> final_distribution;  // P(final reserve = j), j = 0..n-1
    mpq_class expected_final;
    mpq_class expected_withdrawn;
};

// Aggregates over enum_codes(n); the final-value distribution equals
// l(n, k) / C_n with k = final + 1. Throws resource_error past the
// enumeration bound.
StatsReport exact_stats(unsigned n);

// Same aggregates estimated from `samples` draws of a CodeSampler(n, seed).
StatsReport monte_carlo_stats(unsigned n, std::uint64_t samples, std::uint64_t seed);

enum class RenderFormat { ascii, svg };

// Deterministic step plot of r_i against i; ascii uses one column per tick,
// svg is a self-contained document.
std::string render_trajectory(const Trajectory& t, RenderFormat format);

}  // namespace ballot
