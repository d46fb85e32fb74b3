// Acceptance runner: executes the eight release criteria end to end and
// prints one PASS/FAIL line per criterion. Exit code is the number of failed
// criteria. Sample sizes, tolerances and seeds are pinned here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "orbitkit/fiber.hpp"
#include "orbitkit/verify.hpp"

using namespace orbitkit;

namespace {

const std::vector<int> kNValues{1, 2, 3, 5};

struct Outcome {
    bool passed;
    std::string detail;
};

double now_ms() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point start = clock::now();
    return std::chrono::duration<double, std::milli>(clock::now() - start).count();
}

std::string describe(const CampaignReport& r) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "max residual %.3g <= %.3g, %lld cases",
                  r.max_residual, r.threshold, static_cast<long long>(r.cases));
    std::string s(buf);
    if (r.indeterminate > 0)
        s += ", " + std::to_string(r.indeterminate) + " indeterminate";
    return s;
}

Outcome from_report(const CampaignReport& r) { return {r.passed(), describe(r)}; }

// 1. Invariance of the orbit map under the group action.
Outcome criterion_invariance() {
    CampaignConfig cfg;
    cfg.n_values = kNValues;
    cfg.samples = 10000;
    cfg.seed = 101;
    return from_report(run_invariance_suite(cfg));
}

// 2. The closed form equals the four-stage chain.
Outcome criterion_chain() {
    CampaignConfig cfg;
    cfg.n_values = kNValues;
    cfg.samples = 10000;
    cfg.seed = 202;
    return from_report(run_chain_suite(cfg));
}

// 3. Every random target lifts with a tight round trip.
Outcome criterion_surjectivity() {
    CampaignConfig cfg;
    cfg.n_values = kNValues;
    cfg.samples = 1000;
    cfg.seed = 303;
    return from_report(run_surjectivity_suite(cfg));
}

// 4. Orbit pairs accepted, distinct orbits separated, per the grid oracle.
Outcome criterion_separation() {
    CampaignConfig cfg;
    cfg.n_values = kNValues;
    cfg.samples = 1000; // 500 orbit pairs + 500 independent pairs per n
    cfg.seed = 404;
    cfg.grid_size = 2048;
    return from_report(run_separation_suite(cfg));
}

// 5. Root-solve certificates: sign at the bracket edge, monotonicity of both
// parts on a 100-point grid, convergence within the iteration cap.
Outcome criterion_monotonicity() {
    CampaignConfig cfg;
    cfg.n_values = kNValues;
    cfg.samples = 1000;
    cfg.seed = 505;
    return from_report(run_monotonicity_suite(cfg));
}

// 6. Membership transport in both directions: swap-orbit images of the
// quotient stay inside L, and points pushed off every swap image of M leave L.
Outcome criterion_membership_transport() {
    const int cases = 1000;
    const std::uint64_t seed = 606;
    int forward_failures = 0;
    int converse_failures = 0;
    int premise_failures = 0;
    double max_forward_residual = 0.0;

    for (int i = 0; i < cases; ++i) {
        Rng rng = Rng::for_sample(seed, static_cast<std::uint64_t>(i));
        int n = kNValues[rng.uniform_index(static_cast<std::uint32_t>(kNValues.size()))];

        // Forward: gamma-images of quotient points satisfy the L equations.
        CPoint p = pi0(sample_point_w(rng), n);
        GammaElement g{rng.coin(), rng.coin()};
        MembershipReport fwd = in_L(pi(gamma_act(g, p), n), n);
        max_forward_residual = std::max(max_forward_residual, fwd.residual);
        if (!fwd.is_member) ++forward_failures;

        // Converse: rescale the third product so every swap image violates
        // |v3| = r1*r2, then the push-forward must fail the L test.
        CPoint off = pi0(sample_point_w(rng), n);
        if (std::abs(off.v3) < 0.01) {
            off.v3 = std::polar(rng.uniform(0.02, 0.1), rng.uniform(0.0, two_pi));
        } else {
            off.v3 *= 1.0 + rng.uniform(0.05, 0.3);
        }
        double worst = 1e300;
        for (bool sr : {false, true})
            for (bool sv : {false, true})
                worst = std::min(worst, in_M(gamma_act({sr, sv}, off), n).residual);
        if (worst <= 1e-5) {
            ++premise_failures;
            continue;
        }
        if (in_L(pi(off, n), n).is_member) ++converse_failures;
    }

    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "forward max residual %.3g, %d/%d forward, %d/%d converse, "
                  "%d premise rejections",
                  max_forward_residual, forward_failures, cases, converse_failures,
                  cases, premise_failures);
    bool ok = forward_failures == 0 && converse_failures == 0 && premise_failures == 0;
    return {ok, buf};
}

// 7. The coordinate change conjugates both generator families and round-trips.
Outcome criterion_intertwining() {
    CampaignConfig cfg;
    cfg.n_values = kNValues;
    cfg.samples = 1000;
    cfg.seed = 707;
    return from_report(run_intertwining_suite(cfg));
}

// 8. Micro-inversion round trips at 1e-10, degenerate strata included.
Outcome criterion_micro_oracles() {
    const int rounds = 10000;
    const std::uint64_t seed = 808;
    const double tol = 1e-10;
    int failures = 0;
    double worst = 0.0;

    auto rel = [](double err, double scale) { return err / std::max(1.0, scale); };
    auto note = [&](double r) {
        worst = std::max(worst, r);
        if (r > tol) ++failures;
    };

    for (int i = 0; i < rounds; ++i) {
        Rng rng = Rng::for_sample(seed, static_cast<std::uint64_t>(i));
        int n = kNValues[rng.uniform_index(static_cast<std::uint32_t>(kNValues.size()))];

        // invert_r_pair
        double s1 = rng.uniform(0.0, 9.0);
        double s2 = rng.uniform(0.0, 9.0);
        if (rng.uniform01() < 0.1) s1 = 0.0;
        if (rng.uniform01() < 0.1) s2 = 0.0;
        auto [r1, r2] = invert_r_pair(s1, s2, n);
        double d = rpow_int(r1, n) - rpow_int(r2, n);
        note(rel(std::abs(d * d - s1), s1));
        note(rel(std::abs(r1 * r2 - s2), s2));

        // split_sum_product
        cplx u1 = rng.square_complex(3.0);
        cplx u2 = rng.square_complex(3.0);
        if (rng.uniform01() < 0.1) u1 = 0.0;
        if (rng.uniform01() < 0.1) u2 = 0.0;
        auto [v1, v2] = split_sum_product(u1, u2);
        note(rel(std::abs(v1 + v2 - u1), std::abs(u1)));
        note(rel(std::abs(v1 * v2 - u2), std::abs(u2)));

        // invert_pi
        CPoint q = pi(pi0(sample_point_w(rng), n), n);
        CPoint p = invert_pi(q, n);
        note(cpoint_distance(pi(p, n), q) / std::max(1.0, cpoint_norm(q)));

        // invert_pi0
        CPoint m = pi0(sample_point_w(rng), n);
        Point3C w = invert_pi0(m, n);
        note(cpoint_distance(pi0(w, n), m) / std::max(1.0, cpoint_norm(m)));
    }

    char buf[160];
    std::snprintf(buf, sizeof(buf), "worst round-trip residual %.3g <= %.3g, %d rounds x4 inverters",
                  worst, tol, rounds);
    return {failures == 0, buf};
}

} // namespace

int main() {
    struct Entry {
        const char* name;
        Outcome (*run)();
    };
    const Entry entries[] = {
        {"invariance", &criterion_invariance},
        {"chain equality", &criterion_chain},
        {"surjectivity", &criterion_surjectivity},
        {"separation", &criterion_separation},
        {"root-solve certificates", &criterion_monotonicity},
        {"membership transport", &criterion_membership_transport},
        {"frame intertwining", &criterion_intertwining},
        {"inversion micro-oracles", &criterion_micro_oracles},
    };

    std::printf("acceptance: n in {1,2,3,5}, fixed seeds; pass = max residual within threshold\n");
    int failed = 0;
    int id = 0;
    for (const auto& e : entries) {
        ++id;
        double t0 = now_ms();
        Outcome o = e.run();
        double dt = now_ms() - t0;
        if (!o.passed) ++failed;
        std::printf("[%s] %d. %s: %s (%.0f ms)\n", o.passed ? "PASS" : "FAIL", id,
                    e.name, o.detail.c_str(), dt);
    }
    if (failed == 0)
        std::printf("acceptance: all %d criteria passed\n", id);
    else
        std::printf("acceptance: %d of %d criteria FAILED\n", failed, id);
    return failed;
}
