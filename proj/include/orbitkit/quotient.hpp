#pragma once

#include "orbitkit/group.hpp"

namespace orbitkit {

/// Default scaled-residual tolerance for membership predicates.
inline constexpr double kDefaultTol = 1e-9;

/**
 * A point of the intermediate space C = R^3_{>=0} x C^3.
 *
 * Written (r1, r2, r3, v1, v2, v3) for images of pi0; the same layout is read
 * as (s1, s2, s3, u1, u2, u3) for images of pi. r1..r3 are nonnegative.
 */
struct CPoint {
    double r1 = 0.0, r2 = 0.0, r3 = 0.0;
    cplx v1, v2, v3;
};

/// A point of the target space C^2 ⊕ R.
struct Target {
    cplx a, b;
    double c = 0.0;
};

/// Result of a membership test: the max scaled residual over the defining
/// equations, and whether it clears the tolerance the test was run with.
struct MembershipReport {
    bool is_member = false;
    double residual = 0.0;
};

/// Klein-group action on C: swap_r exchanges (r1, r2), swap_v exchanges
/// (v1, v2); the third components are always fixed.
CPoint gamma_act(const GammaElement& g, const CPoint& p);

/// Magnitude/invariant-product quotient of the circle action:
/// (|w1|, |w2|, |w3|, w2^n*w3, w1^n*conj(w3), w1*w2). Fibers are exactly the
/// orbits of the identity component.
CPoint pi0(const Point3C& w, int n);

/**
 * Membership in M, the image of pi0. Defining equations:
 *   |v1| = r2^n*r3,  |v2| = r1^n*r3,  |v3| = r1*r2,  v1*v2 = r3^2*v3^n.
 * Each residual is scaled by max(1, magnitudes of the equation's terms).
 */
MembershipReport in_M(const CPoint& p, int n, double tol = kDefaultTol);

/// Symmetrization collapsing the Klein-group action:
/// ((r1^n - r2^n)^2, r1*r2, r3^2, v1 + v2, v1*v2, v3), read as (s, u) fields.
CPoint pi(const CPoint& p, int n);

/**
 * Membership in L, the image of pi∘pi0. Defining equations (s, u reading):
 *   |u3| = s2,  u2 = s3*u3^n,  |u1^2| + |u1^2 - 4*u2| - |4*u2| = 2*s1*s3.
 */
MembershipReport in_L(const CPoint& q, int n, double tol = kDefaultTol);

/// Projection (s1, s2, s3, u1, u2, u3) -> (u1, u3, s3 - s1); a bijection on L.
Target phi0(const CPoint& q);

/// Shear (a, b, c) -> (a, b, c - 2|b|^n); a bijection of the target space.
Target phi(const Target& t, int n);

/**
 * The closed-form orbit map C^3 -> C^2 ⊕ R:
 *
 *   w -> (w2^n*w3 + w1^n*conj(w3), w1*w2, |w3|^2 - |w1|^(2n) - |w2|^(2n))
 *
 * Equal to phi∘phi0∘pi∘pi0 identically; its fibers are exactly the G-orbits,
 * so it separates orbits and realizes the quotient as a map onto R^5.
 */
Target factor_map(const Point3C& w, int n);

double target_norm(const Target& t);
double target_distance(const Target& x, const Target& y);
double cpoint_norm(const CPoint& p);
double cpoint_distance(const CPoint& a, const CPoint& b);

/// Scaled distance between orbit-map images: ||F(x) - F(y)|| / max(1, ||F(x)||).
double orbit_residual(const Point3C& x, const Point3C& y, int n);

/// True iff x and y lie on the same G-orbit, decided through the orbit map:
/// orbit_residual(x, y, n) <= tol.
bool orbit_equivalent(const Point3C& x, const Point3C& y, int n, double tol = kDefaultTol);

/// Independent route to the same decision: min over the two double-swap
/// images of ||gamma(pi0(x)) - pi0(y)||. Agrees with the factor-map route on
/// clean inputs.
double pi0_gamma0_distance(const Point3C& x, const Point3C& y, int n);
bool orbit_equivalent_via_pi0(const Point3C& x, const Point3C& y, int n,
                              double tol = kDefaultTol);

} // namespace orbitkit
