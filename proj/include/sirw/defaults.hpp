#pragma once

#include <cstdint>

// Single source of truth for numerical and statistical thresholds.
// Tests and the CLI both read these; CLI flags may override per run.
namespace sirw::defaults {

// Absolute truncation tolerance for the perturbation-parameter series.
inline constexpr double gamma_tol = 1e-10;

// Certified truncation tolerance for urn dynamic-programming oracles.
inline constexpr double dp_tol = 1e-8;

// Grid-point residual tolerance for the discrete perturbed-Brownian solver.
inline constexpr double bmpe_residual_tol = 1e-12;

// Per-term tolerance for the pathwise drift identity (walk vs urn route).
inline constexpr double drift_identity_tol = 1e-10;

// Statistical gates.
inline constexpr double ks_distance_max = 0.05;   // KS distance acceptance
inline constexpr double p_value_min = 0.01;       // single-test p threshold
inline constexpr double p_value_min_grid = 0.001; // per-cell, Bonferroni-adjusted
inline constexpr double sigma_rule = 3.0;         // |estimate - truth| <= rule * s.e.

// Hard cap on urn draws before an error record is produced.
inline constexpr std::uint64_t urn_draw_cap = 1'000'000'000ULL;

// Weight values are memoized up to this argument; beyond it they are
// evaluated directly.
inline constexpr std::uint64_t weight_memo_cap = 1ULL << 20;

// Memory gate for full position recording.
inline constexpr std::uint64_t max_recorded_steps = 1ULL << 28;

} // namespace sirw::defaults
