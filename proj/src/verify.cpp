#include "orbitkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "orbitkit/report_json.hpp"

namespace orbitkit {

namespace {

/// Residual recorded when a lift throws instead of returning a point.
constexpr double kBreakdownResidual = 9.9e99;

enum SuiteId : std::uint64_t {
    kInvariance = 1,
    kSeparation = 2,
    kSurjectivity = 3,
    kChain = 4,
    kMonotonicity = 5,
    kIntertwining = 6,
};

/// Per-sample substream key; distinct across suite, n and sample index.
std::uint64_t stream_key(SuiteId suite, int n, int index) {
    return (static_cast<std::uint64_t>(suite) << 56) ^
           (static_cast<std::uint64_t>(static_cast<std::uint32_t>(n)) << 32) ^
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(index));
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

cplx sample_component(Rng& rng, double half_width, double zero_prob) {
    cplx z = rng.square_complex(half_width);
    if (rng.uniform01() < zero_prob) z = cplx(0.0, 0.0);
    return z;
}

void record(CampaignReport& report, double residual, const ojson& input) {
    report.cases += 1;
    report.max_residual = std::max(report.max_residual, residual);
    if (residual > report.threshold) report.failures.push_back({input, residual});
}

} // namespace

double brute_force_orbit_distance(const Point3C& x, const Point3C& y, int n,
                                  int grid_size) {
    if (x.frame != Frame::W || y.frame != Frame::W)
        throw std::invalid_argument("brute_force_orbit_distance: w-frame points required");
    if (grid_size < 8)
        throw std::invalid_argument("brute_force_orbit_distance: grid_size must be >= 8");
    double best = std::numeric_limits<double>::infinity();
    for (int eps = 0; eps < 2; ++eps) {
        cplx b1 = x.c1, b2 = x.c2, b3 = x.c3;
        if (eps) {
            std::swap(b1, b2);
            b3 = std::conj(b3);
        }
        for (int k = 0; k < grid_size; ++k) {
            double theta = two_pi * static_cast<double>(k) / grid_size;
            cplx lam = std::polar(1.0, theta);
            cplx lam_n = std::polar(1.0, n * theta);
            double d2 = std::norm(b1 * lam - y.c1) +
                        std::norm(b2 * std::conj(lam) - y.c2) +
                        std::norm(b3 * lam_n - y.c3);
            best = std::min(best, d2);
        }
    }
    return std::sqrt(best);
}

double grid_distance_bound(const Point3C& x, int n, int grid_size) {
    return (two_pi / grid_size) * std::max(1, n) * point_norm(x);
}

Point3C sample_point_w(Rng& rng, double half_width, double zero_prob) {
    cplx c1 = sample_component(rng, half_width, zero_prob);
    cplx c2 = sample_component(rng, half_width, zero_prob);
    cplx c3 = sample_component(rng, half_width, zero_prob);
    return w_point(c1, c2, c3);
}

Point3C sample_point_z(Rng& rng, double half_width, double zero_prob) {
    Point3C p = sample_point_w(rng, half_width, zero_prob);
    p.frame = Frame::Z;
    return p;
}

Target sample_target(Rng& rng, double half_width, double zero_prob) {
    cplx a = sample_component(rng, half_width, zero_prob);
    cplx b = sample_component(rng, half_width, zero_prob);
    double c = rng.uniform(-half_width, half_width);
    if (rng.uniform01() < zero_prob) c = 0.0;
    return {a, b, c};
}

CPoint sample_cpoint(Rng& rng, double half_width, double zero_prob) {
    CPoint p;
    double* rs[3] = {&p.r1, &p.r2, &p.r3};
    for (double* r : rs) {
        *r = rng.uniform(0.0, half_width);
        if (rng.uniform01() < zero_prob) *r = 0.0;
    }
    p.v1 = sample_component(rng, half_width, zero_prob);
    p.v2 = sample_component(rng, half_width, zero_prob);
    p.v3 = sample_component(rng, half_width, zero_prob);
    return p;
}

CampaignReport run_invariance_suite(const CampaignConfig& cfg) {
    Stopwatch watch;
    CampaignReport report;
    report.suite = "invariance";
    report.n_values = cfg.n_values;
    report.samples = cfg.samples;
    report.seed = cfg.seed;
    report.threshold = kInvarianceThreshold;
    for (int n : cfg.n_values) {
        for (int i = 0; i < cfg.samples; ++i) {
            Rng rng = Rng::for_sample(cfg.seed, stream_key(kInvariance, n, i));
            Point3C w = sample_point_w(rng);
            GroupElement g = random_group_element(rng);
            double res = orbit_residual(w, act_w(g, w, n), n);
            ojson input;
            input["index"] = i;
            input["n"] = n;
            input["w"] = to_json(w);
            input["g"] = to_json(g);
            record(report, res, input);
        }
    }
    report.elapsed_ms = watch.ms();
    return report;
}

CampaignReport run_separation_suite(const CampaignConfig& cfg) {
    Stopwatch watch;
    CampaignReport report;
    report.suite = "separation";
    report.n_values = cfg.n_values;
    report.samples = cfg.samples;
    report.seed = cfg.seed;
    report.threshold = 1.0; // residuals are violation ratios
    for (int n : cfg.n_values) {
        for (int i = 0; i < cfg.samples; ++i) {
            Rng rng = Rng::for_sample(cfg.seed, stream_key(kSeparation, n, i));
            bool pair_on_orbit = i < cfg.samples / 2;
            if (pair_on_orbit) {
                Point3C x = sample_point_w(rng);
                GroupElement g = random_group_element(rng);
                Point3C y = act_w(g, x, n);
                double scaled = orbit_residual(x, y, n);
                double bf = brute_force_orbit_distance(x, y, n, cfg.grid_size);
                double bound = grid_distance_bound(x, n, cfg.grid_size);
                double ratio = scaled / cfg.tol;
                if (bound > 0.0)
                    ratio = std::max(ratio, bf / bound);
                else if (bf > 0.0)
                    ratio = std::numeric_limits<double>::infinity();
                ojson input;
                input["index"] = i;
                input["n"] = n;
                input["kind"] = "orbit-pair";
                input["x"] = to_json(x);
                input["g"] = to_json(g);
                input["target_residual"] = scaled;
                input["brute_distance"] = bf;
                input["grid_bound"] = bound;
                record(report, ratio, input);
            } else {
                Point3C x = sample_point_w(rng);
                Point3C y = sample_point_w(rng);
                double td = target_distance(factor_map(x, n), factor_map(y, n));
                if (td <= kSeparationBand) {
                    report.indeterminate += 1;
                    continue;
                }
                double bf = brute_force_orbit_distance(x, y, n, cfg.grid_size);
                double bound = grid_distance_bound(x, n, cfg.grid_size);
                // Distinct orbits must stay separated by the grid oracle.
                double ratio = (bf > 0.0) ? bound / bf
                                          : std::numeric_limits<double>::infinity();
                ojson input;
                input["index"] = i;
                input["n"] = n;
                input["kind"] = "independent-pair";
                input["x"] = to_json(x);
                input["y"] = to_json(y);
                input["target_distance"] = td;
                input["brute_distance"] = bf;
                input["grid_bound"] = bound;
                record(report, ratio, input);
            }
        }
    }
    report.elapsed_ms = watch.ms();
    return report;
}

CampaignReport run_surjectivity_suite(const CampaignConfig& cfg) {
    Stopwatch watch;
    CampaignReport report;
    report.suite = "surjectivity";
    report.n_values = cfg.n_values;
    report.samples = cfg.samples;
    report.seed = cfg.seed;
    report.threshold = kSurjectivityThreshold;
    for (int n : cfg.n_values) {
        for (int i = 0; i < cfg.samples; ++i) {
            Rng rng = Rng::for_sample(cfg.seed, stream_key(kSurjectivity, n, i));
            Target t = sample_target(rng);
            ojson input;
            input["index"] = i;
            input["n"] = n;
            input["target"] = to_json(t);
            double res;
            try {
                Point3C w = lift(t, n);
                res = target_distance(factor_map(w, n), t) /
                      std::max(1.0, target_norm(t));
            } catch (const std::exception& e) {
                res = kBreakdownResidual;
                input["error"] = e.what();
            }
            record(report, res, input);
        }
    }
    report.elapsed_ms = watch.ms();
    return report;
}

CampaignReport run_chain_suite(const CampaignConfig& cfg) {
    Stopwatch watch;
    CampaignReport report;
    report.suite = "chain";
    report.n_values = cfg.n_values;
    report.samples = cfg.samples;
    report.seed = cfg.seed;
    report.threshold = kChainThreshold;
    for (int n : cfg.n_values) {
        for (int i = 0; i < cfg.samples; ++i) {
            Rng rng = Rng::for_sample(cfg.seed, stream_key(kChain, n, i));
            Point3C w = sample_point_w(rng);
            Target direct = factor_map(w, n);
            Target chained = phi(phi0(pi(pi0(w, n), n)), n);
            double res = target_distance(direct, chained) /
                         std::max(1.0, target_norm(direct));
            ojson input;
            input["index"] = i;
            input["n"] = n;
            input["w"] = to_json(w);
            record(report, res, input);
        }
    }
    report.elapsed_ms = watch.ms();
    return report;
}

CampaignReport run_monotonicity_suite(const CampaignConfig& cfg) {
    Stopwatch watch;
    CampaignReport report;
    report.suite = "monotonicity";
    report.n_values = cfg.n_values;
    report.samples = cfg.samples;
    report.seed = cfg.seed;
    report.threshold = kMonotonicityThreshold;
    const int grid_points = 100;
    for (int i = 0; i < cfg.samples; ++i) {
        Rng rng = Rng::for_sample(cfg.seed, stream_key(kMonotonicity, 0, i));
        int n = cfg.n_values[rng.uniform_index(
            static_cast<std::uint32_t>(cfg.n_values.size()))];
        cplx a = sample_component(rng, 3.0, 0.1);
        cplx b = sample_component(rng, 3.0, 0.1);
        double c = rng.uniform(-3.0, 3.0);
        if (rng.uniform01() < 0.1) c = 0.0;
        RootProblem prob{a, b, c, n};

        ojson input;
        input["index"] = i;
        input["n"] = n;
        input["a"] = to_json(a);
        input["b"] = to_json(b);
        input["c"] = c;

        double res = 0.0;
        try {
            double tstar = solve_t(prob);
            double lo = prob.t0();
            double hi = tstar + 10.0;
            // Magnitude of the terms feeding f at t, the scale of its noise.
            auto term_scale = [&](double t) {
                return std::max({1.0, std::abs(prob.f_plus(t)), std::norm(prob.a),
                                 4.0 * t * rpow_int(std::abs(prob.b), prob.n)});
            };
            res = std::max(res, prob.f(lo)); // f(t0) <= 0 up to the threshold
            double prev_f = prob.f(lo);
            double prev_fm = prob.f_minus(lo);
            double prev_t = lo;
            for (int k = 1; k < grid_points; ++k) {
                double t = lo + (hi - lo) * static_cast<double>(k) / (grid_points - 1);
                double ft = prob.f(t);
                double fmt = prob.f_minus(t);
                double scale = std::max(term_scale(t), term_scale(prev_t));
                res = std::max(res, (prev_f - ft) / scale);    // f nondecreasing
                res = std::max(res, (fmt - prev_fm) / scale);  // f_minus nonincreasing
                res = std::max(res, -fmt / term_scale(t));     // f_minus >= 0
                prev_f = ft;
                prev_fm = fmt;
                prev_t = t;
            }
        } catch (const std::exception& e) {
            res = kBreakdownResidual;
            input["error"] = e.what();
        }
        record(report, res, input);
    }
    report.elapsed_ms = watch.ms();
    return report;
}

CampaignReport run_intertwining_suite(const CampaignConfig& cfg) {
    Stopwatch watch;
    CampaignReport report;
    report.suite = "intertwining";
    report.n_values = cfg.n_values;
    report.samples = cfg.samples;
    report.seed = cfg.seed;
    report.threshold = kIntertwineThreshold;
    for (int n : cfg.n_values) {
        ExponentTriple exps{1, 1, n};
        for (int i = 0; i < cfg.samples; ++i) {
            Rng rng = Rng::for_sample(cfg.seed, stream_key(kIntertwining, n, i));
            Point3C z = sample_point_z(rng);
            double theta = rng.uniform(0.0, two_pi);
            GroupElement rot{normalize_angle(theta), false};
            GroupElement conj_gen{0.0, true};
            Point3C wz = z_to_w(z);

            auto rel = [](const Point3C& lhs, const Point3C& rhs) {
                return point_distance(lhs, rhs) / std::max(1.0, point_norm(rhs));
            };
            double r_rot = rel(z_to_w(act_z(rot, z, exps)), act_w(rot, wz, n));
            double r_conj = rel(z_to_w(act_z(conj_gen, z, exps)), act_w(conj_gen, wz, n));
            double r_round = point_distance(w_to_z(wz), z) / std::max(1.0, point_norm(z));
            // The round trip has a tighter budget; normalize it to the suite
            // threshold by the budget ratio.
            double res = std::max({r_rot, r_conj,
                                   r_round * (kIntertwineThreshold / kFrameRoundTripThreshold)});
            ojson input;
            input["index"] = i;
            input["n"] = n;
            input["z"] = to_json(z);
            input["theta"] = theta;
            record(report, res, input);
        }
    }
    report.elapsed_ms = watch.ms();
    return report;
}

std::vector<CampaignReport> run_all_suites(const CampaignConfig& cfg) {
    return {run_invariance_suite(cfg),   run_separation_suite(cfg),
            run_surjectivity_suite(cfg), run_chain_suite(cfg),
            run_monotonicity_suite(cfg), run_intertwining_suite(cfg)};
}

SuiteRunner find_suite(const std::string& name) {
    if (name == "invariance") return &run_invariance_suite;
    if (name == "separation") return &run_separation_suite;
    if (name == "surjectivity") return &run_surjectivity_suite;
    if (name == "chain") return &run_chain_suite;
    if (name == "monotonicity") return &run_monotonicity_suite;
    if (name == "intertwining") return &run_intertwining_suite;
    return nullptr;
}

} // namespace orbitkit
