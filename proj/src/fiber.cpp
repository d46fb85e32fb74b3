#include "orbitkit/fiber.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace orbitkit {

namespace {

/// Gate for the membership preconditions and the swap-image correction.
/// Looser than the reporting default on purpose: near the r1 = r2 stratum the
/// root split is square-root ill-conditioned, so faithful reconstructions can
/// carry residuals well above 1e-9 while the round trip stays tight. Anything
/// above this gate is genuine breakdown or a bad input, not conditioning.
constexpr double kMembershipGate = 1e-6;

bool all_finite(const Point3C& p) {
    auto ok = [](const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
    return ok(p.c1) && ok(p.c2) && ok(p.c3);
}

/// Phase of v mapped into [0, 2*pi).
double phase01(const cplx& v) {
    double a = std::arg(v);
    if (a < 0.0) a += two_pi;
    return a;
}

/**
 * Bisection for a function increasing on [lo, hi] with fn(lo) <= 0 < fn(hi).
 * Runs to floating-point resolution (adjacent bracket endpoints); the root
 * location is then exact to one ulp, which the downstream inverses need on
 * their degenerate strata. If the iteration cap lands first, the bracket must
 * at least satisfy the configured width tolerance, else convergence failed.
 */
template <typename Fn>
double bisect_increasing(const Fn& fn, double lo, double hi,
                         const SolverConfig& cfg, const char* who) {
    double mid = lo;
    for (int i = 0; i < cfg.max_iters; ++i) {
        mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) return mid; // float resolution reached
        if (fn(mid) <= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    if (hi - lo <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(hi))) return mid;
    throw std::runtime_error(std::string(who) + ": bisection failed to converge");
}

} // namespace

double RootProblem::t0() const { return std::max(0.0, c); }

double RootProblem::f_plus(double t) const { return 2.0 * (t - c) * t; }

double RootProblem::f_minus(double t) const {
    cplx a2 = a * a;
    cplx x = 4.0 * t * cpow_int(b, n);
    double abs_a2 = std::abs(a2);
    double denom = std::abs(a2 - x) + std::abs(x);
    if (denom == 0.0) return abs_a2;
    // |a2-x| - |x| rearranged through the difference of squares: the direct
    // form loses ~ulp(|x|) absolutely once |x| dominates |a2|, which is fatal
    // to the fiber solves near the r1 = r2 stratum at large |b|^n.
    double num = std::norm(a2) - 2.0 * (a2.real() * x.real() + a2.imag() * x.imag());
    return abs_a2 + num / denom;
}

double RootProblem::f(double t) const { return f_plus(t) - f_minus(t); }

double solve_t(const RootProblem& prob, const SolverConfig& cfg) {
    if (prob.n < 1) throw std::invalid_argument("solve_t: n must be >= 1");
    const double lo0 = prob.t0();
    if (prob.f(lo0) >= 0.0) return lo0; // root at the bracket edge

    double offset = 1.0;
    double hi = lo0 + offset;
    int used = 0;
    while (prob.f(hi) <= 0.0) {
        offset *= 2.0;
        hi = lo0 + offset;
        if (++used >= cfg.max_iters || !std::isfinite(hi))
            throw std::runtime_error("solve_t: failed to bracket the root");
    }
    return bisect_increasing([&](double t) { return prob.f(t); }, lo0, hi, cfg,
                             "solve_t");
}

Target phi_inverse(const Target& t, int n) {
    if (n < 1) throw std::invalid_argument("phi_inverse: n must be >= 1");
    return {t.a, t.b, t.c + 2.0 * rpow_int(std::abs(t.b), n)};
}

CPoint phi0_inverse(const Target& t, int n, const SolverConfig& cfg) {
    RootProblem prob{t.a, t.b, t.c, n};
    double tstar = solve_t(prob, cfg);
    // At the root, t - c = f_minus(t)/(2t) exactly. The quotient form keeps
    // the first slot consistent with the root pair of (a, t*b^n) even though
    // t* carries its unavoidable half-ulp placement error, which the plain
    // difference would amplify through the downstream square roots.
    double s1 = tstar > 0.0 ? std::max(0.0, prob.f_minus(tstar) / (2.0 * tstar))
                            : tstar - t.c;
    return {s1, std::abs(t.b), tstar, t.a, tstar * cpow_int(t.b, n), t.b};
}

std::pair<double, double> invert_r_pair(double s1, double s2, int m,
                                        const SolverConfig& cfg) {
    if (m < 1) throw std::invalid_argument("invert_r_pair: m must be >= 1");
    if (s1 < 0.0 || s2 < 0.0)
        throw std::domain_error("invert_r_pair: inputs must be nonnegative");
    if (s2 == 0.0) {
        return {std::pow(s1, 1.0 / (2.0 * m)), 0.0};
    }
    const double root_s1 = std::sqrt(s1);
    const double lo0 = std::sqrt(s2);
    auto h = [&](double r) { return rpow_int(r, m) - rpow_int(s2 / r, m) - root_s1; };
    // s2/r1 can round one ulp past r1 when the root sits at sqrt(s2); clamp to
    // keep the canonical r1 >= r2 exact.
    if (h(lo0) >= 0.0) return {lo0, std::min(lo0, s2 / lo0)};

    double offset = 1.0;
    double hi = lo0 + offset;
    int used = 0;
    while (h(hi) <= 0.0) {
        offset *= 2.0;
        hi = lo0 + offset;
        if (++used >= cfg.max_iters || !std::isfinite(hi))
            throw std::runtime_error("invert_r_pair: failed to bracket the root");
    }
    double r1 = bisect_increasing(h, lo0, hi, cfg, "invert_r_pair");
    return {r1, std::min(r1, s2 / r1)};
}

std::pair<cplx, cplx> split_sum_product(cplx u1, cplx u2) {
    cplx big;
    if (u1 == cplx(0.0, 0.0) && u2 == cplx(0.0, 0.0)) {
        return {cplx(0.0, 0.0), cplx(0.0, 0.0)};
    }
    cplx sq = std::sqrt(u1 * u1 - 4.0 * u2);
    // Pick the sign that grows |u1 + sign*sq| to avoid cancellation.
    big = (std::abs(u1 + sq) >= std::abs(u1 - sq)) ? (u1 + sq) * 0.5 : (u1 - sq) * 0.5;
    cplx small = (big == cplx(0.0, 0.0)) ? cplx(0.0, 0.0) : u2 / big;

    double ms = std::abs(small), mb = std::abs(big);
    bool small_first = ms < mb || (ms == mb && phase01(small) <= phase01(big));
    if (small_first) return {small, big};
    return {big, small};
}

CPoint invert_pi(const CPoint& q, int n, const SolverConfig& cfg) {
    auto gate = in_L(q, n, kMembershipGate);
    if (!gate.is_member)
        throw std::domain_error("invert_pi: input is not in L (residual " +
                                std::to_string(gate.residual) + ")");
    double r3 = std::sqrt(q.r3);
    auto [r1, r2] = invert_r_pair(q.r1, q.r2, n, cfg);
    auto [v1, v2] = split_sum_product(q.v1, q.v2);
    CPoint base{r1, r2, r3, v1, v2, q.v3};

    // Scan the four swap images; first strict minimum wins. The product-swap
    // image leads so that on the r1 = r2 stratum (where it ties with the
    // identity) the representative assigns the later root to v1.
    constexpr std::array<GammaElement, 4> order{
        GammaElement{false, true}, GammaElement{false, false},
        GammaElement{true, false}, GammaElement{true, true}};
    CPoint best;
    double best_res = -1.0;
    for (const auto& g : order) {
        CPoint cand = gamma_act(g, base);
        double res = in_M(cand, n, kDefaultTol).residual;
        if (best_res < 0.0 || res < best_res) {
            best_res = res;
            best = cand;
        }
    }
    if (best_res > kMembershipGate)
        throw std::runtime_error("invert_pi: no swap image lies near M (residual " +
                                 std::to_string(best_res) + ")");
    return best;
}

Point3C invert_pi0(const CPoint& p, int n, const SolverConfig& cfg) {
    (void)cfg;
    auto gate = in_M(p, n, kMembershipGate);
    if (!gate.is_member)
        throw std::domain_error("invert_pi0: input is not in M (residual " +
                                std::to_string(gate.residual) + ")");
    Point3C w{cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0), Frame::W};
    if (p.r1 > 0.0) {
        w.c1 = cplx(p.r1, 0.0);
        w.c2 = p.v3 / w.c1;
        if (p.r2 > 0.0 && w.c2 != cplx(0.0, 0.0)) {
            w.c3 = p.v1 / cpow_int(w.c2, n);
        } else {
            w.c3 = std::conj(p.v2 / cpow_int(w.c1, n));
        }
    } else if (p.r2 > 0.0) {
        w.c2 = cplx(p.r2, 0.0);
        w.c3 = p.v1 / cpow_int(w.c2, n);
    } else {
        w.c3 = cplx(p.r3, 0.0);
    }
    if (!all_finite(w))
        throw std::runtime_error("invert_pi0: reconstruction produced non-finite values");
    return w;
}

Point3C lift(const Target& t, int n, const SolverConfig& cfg) {
    CPoint q = phi0_inverse(phi_inverse(t, n), n, cfg);
    CPoint p = invert_pi(q, n, cfg);
    return invert_pi0(p, n, cfg);
}

} // namespace orbitkit
