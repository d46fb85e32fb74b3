#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbitkit/fiber.hpp"

namespace orbitkit {

using ojson = nlohmann::ordered_json;

/// Pass thresholds of the verification suites, pinned here so campaigns,
/// unit tests and the acceptance runner all agree on them.
inline constexpr double kInvarianceThreshold = 1e-9;
inline constexpr double kChainThreshold = 1e-12;
inline constexpr double kSurjectivityThreshold = 1e-8;
inline constexpr double kMonotonicityThreshold = 1e-12;
inline constexpr double kIntertwineThreshold = 1e-12;
inline constexpr double kFrameRoundTripThreshold = 1e-14;
/// Independent pairs whose target images are closer than this (absolute) are
/// reported as indeterminate instead of pass/fail: a float toolkit cannot
/// resolve orbit equality at the boundary.
inline constexpr double kSeparationBand = 1e-3;

struct CampaignConfig {
    std::vector<int> n_values{1, 2, 3, 5};
    int samples = 10000;
    std::uint64_t seed = 0;
    int grid_size = 2048;
    double tol = kDefaultTol;
};

/// One counterexample: enough input data to reproduce the case, plus the
/// residual that tripped the check.
struct Failure {
    ojson input;
    double residual = 0.0;
};

struct CampaignReport {
    std::string suite;
    std::vector<int> n_values;
    int samples = 0;
    std::uint64_t seed = 0;
    std::int64_t cases = 0;
    std::int64_t indeterminate = 0; // separation suite only
    std::vector<Failure> failures;
    double max_residual = 0.0;
    double threshold = 0.0; // pass criterion: max residual <= threshold
    double elapsed_ms = 0.0;

    bool passed() const { return failures.empty(); }
};

/**
 * Grid oracle for orbit distance: min over theta on the `grid_size`-point
 * circle and both components of ||g·x - y|| in R^6. Overestimates the true
 * orbit distance by at most (2*pi/grid_size)*max(1,n)*||x||, the Lipschitz
 * bound of the action in theta.
 */
double brute_force_orbit_distance(const Point3C& x, const Point3C& y, int n,
                                  int grid_size);

/// Lipschitz grid bound used by the separation checks.
double grid_distance_bound(const Point3C& x, int n, int grid_size);

// Sampling distribution shared by campaigns: coordinates uniform on a square
// (default half-width 3), each coordinate zeroed with probability 0.1 so the
// degenerate strata of the membership sets are exercised.
Point3C sample_point_w(Rng& rng, double half_width = 3.0, double zero_prob = 0.1);
Point3C sample_point_z(Rng& rng, double half_width = 3.0, double zero_prob = 0.1);
Target sample_target(Rng& rng, double half_width = 10.0, double zero_prob = 0.1);
CPoint sample_cpoint(Rng& rng, double half_width = 3.0, double zero_prob = 0.1);

// Randomized verification campaigns. Each report is fully determined by its
// config (identical failure lists bit for bit); elapsed_ms is the only
// run-dependent field. Failures are data, not errors.

/// F(g·w) = F(w) for sampled (w, g); threshold kInvarianceThreshold.
CampaignReport run_invariance_suite(const CampaignConfig& cfg);

/// Orbit pairs must be accepted by both the factor-map test and the grid
/// oracle; independent pairs outside the indeterminate band must be separated
/// by the grid oracle. Residuals are violation ratios, threshold 1.
CampaignReport run_separation_suite(const CampaignConfig& cfg);

/// Every sampled target lifts, with round-trip residual <= kSurjectivityThreshold.
CampaignReport run_surjectivity_suite(const CampaignConfig& cfg);

/// factor_map equals the four-stage chain; threshold kChainThreshold.
CampaignReport run_chain_suite(const CampaignConfig& cfg);

/// Root-solve certificates: f(t0) <= 0 (up to kMonotonicityThreshold), f
/// nondecreasing and f_minus nonincreasing and nonnegative on a 100-point
/// grid of [t0, t*+10], convergence within the iteration cap.
CampaignReport run_monotonicity_suite(const CampaignConfig& cfg);

/// The coordinate change conjugates both z-frame generators to the w-frame
/// generators and round-trips; ratio-normalized, threshold kIntertwineThreshold.
CampaignReport run_intertwining_suite(const CampaignConfig& cfg);

/// All six suites in a fixed order.
std::vector<CampaignReport> run_all_suites(const CampaignConfig& cfg);

/// nullptr when `name` is not a suite name; accepts the six suite names.
using SuiteRunner = CampaignReport (*)(const CampaignConfig&);
SuiteRunner find_suite(const std::string& name);

} // namespace orbitkit
