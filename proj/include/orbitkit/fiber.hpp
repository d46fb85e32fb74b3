#pragma once

#include <utility>

#include "orbitkit/quotient.hpp"

namespace orbitkit {

/// Controls for the scalar root solves. Bisection normally runs to floating
/// point resolution well inside max_iters; if the cap lands first the bracket
/// is accepted only when narrower than max(abs_tol, rel_tol * |t|).
struct SolverConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_iters = 200;
};

/**
 * The scalar equation whose unique root parameterizes the fiber of the
 * projection (s1..u3) -> (u1, u3, s3 - s1) over (a, b, c):
 *
 *   f(t) = f_plus(t) - f_minus(t),
 *   f_plus(t)  = 2*(t - c)*t,
 *   f_minus(t) = |a^2| + |a^2 - 4*t*b^n| - |4*t*b^n|.
 *
 * On I = [t0, inf), t0 = max(0, c): f_plus is strictly increasing from 0,
 * f_minus is nonnegative (triangle inequality) and nonincreasing, so f is
 * strictly increasing with f(t0) <= 0 and f -> +inf. Hence f has exactly one
 * root on I, and bisection after bracket doubling always finds it.
 */
struct RootProblem {
    cplx a, b;
    double c = 0.0;
    int n = 1;

    double t0() const;
    double f_plus(double t) const;
    double f_minus(double t) const;
    double f(double t) const;
};

/// The unique root of prob.f on [t0, inf). Bracket by doubling the offset
/// from t0 + 1 until f > 0, then bisect to float resolution; the returned
/// point is within one ulp of the bracketed root. Throws std::runtime_error
/// if the iteration cap is exceeded first.
double solve_t(const RootProblem& prob, const SolverConfig& cfg = {});

/// Inverse of the shear phi: (a, b, c) -> (a, b, c + 2|b|^n).
Target phi_inverse(const Target& t, int n);

/// Constructive inverse of phi0: with t* = solve_t(a, b, c, n), returns
/// (t* - c, |b|, t*, a, t*·b^n, b), which lands in L and maps back to (a, b, c).
CPoint phi0_inverse(const Target& t, int n, const SolverConfig& cfg = {});

/**
 * Inverse of (r1, r2) -> ((r1^m - r2^m)^2, r1*r2) on the nonnegative quadrant,
 * returning the canonical representative with r1 >= r2. The other fiber point
 * is the swap. For s2 > 0 the root of r^m - (s2/r)^m = sqrt(s1) on
 * [sqrt(s2), inf) is found by bisection run to float resolution, which keeps
 * the round trip at ulp-level accuracy. Throws std::domain_error on negative
 * inputs.
 */
std::pair<double, double> invert_r_pair(double s1, double s2, int m,
                                        const SolverConfig& cfg = {});

/**
 * The unordered root pair of X^2 - u1*X + u2, ordered deterministically:
 * |v1| <= |v2|, exact-modulus ties broken by ascending phase in [0, 2*pi).
 * The larger root is computed with the cancellation-avoiding sign choice and
 * the smaller as u2 / larger, so both the sum and the product round-trip.
 */
std::pair<cplx, cplx> split_sum_product(cplx u1, cplx u2);

/**
 * A preimage in M of a point q in L under pi. Reconstructs
 * r3 = sqrt(s3), (r1, r2) = invert_r_pair(s1, s2, n),
 * (v1, v2) = split_sum_product(u1, u2), v3 = u3, then corrects by the
 * swap-group image with the smallest M residual (ties resolved toward the
 * product-swap image, which fixes the representative on the r1 = r2 stratum).
 * Throws std::domain_error if q fails the in_L gate, std::runtime_error if no
 * image lands acceptably close to M (numerical breakdown).
 */
CPoint invert_pi(const CPoint& q, int n, const SolverConfig& cfg = {});

/**
 * A preimage in C^3 of a point p in M under pi0, in the phase gauge that
 * makes the first nonzero magnitude coordinate real and nonnegative:
 *   r1 > 0:            w1 = r1, w2 = v3/w1, w3 = v1/w2^n  (or conj(v2/w1^n) when r2 = 0)
 *   r1 = 0 < r2:       w = (0, r2, v1/r2^n)
 *   r1 = r2 = 0:       w = (0, 0, r3)
 * Any gauge lands in the same circle orbit. Throws std::domain_error if p
 * fails in_M.
 */
Point3C invert_pi0(const CPoint& p, int n, const SolverConfig& cfg = {});

/// An explicit preimage of any target under the orbit map:
/// invert_pi0 ∘ invert_pi ∘ phi0_inverse ∘ phi_inverse. Every target is
/// liftable; factor_map(lift(t, n), n) reproduces t.
Point3C lift(const Target& t, int n, const SolverConfig& cfg = {});

} // namespace orbitkit
