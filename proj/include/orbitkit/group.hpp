#pragma once

#include <complex>

#include "orbitkit/rng.hpp"

namespace orbitkit {

using cplx = std::complex<double>;

inline constexpr double two_pi = 6.283185307179586476925286766559;

/// Coordinate frame a point of C^3 lives in. The group acts in both frames;
/// z_to_w / w_to_z translate between them.
enum class Frame { Z, W };

/// A point of C^3 tagged with its coordinate frame. Every operation preserves
/// the tag except the explicit coordinate changes.
struct Point3C {
    cplx c1, c2, c3;
    Frame frame = Frame::W;
};

inline Point3C w_point(cplx c1, cplx c2, cplx c3) { return {c1, c2, c3, Frame::W}; }
inline Point3C z_point(cplx c1, cplx c2, cplx c3) { return {c1, c2, c3, Frame::Z}; }

/**
 * An element of the group G = G0 ⊔ G0·tau in normal form.
 *
 * G0 is the circle {sigma_lambda : lambda = e^{i theta}} and tau is the
 * order-two generator of the other component. The element encoded by
 * (theta, eps) acts as sigma_lambda ∘ tau^eps, with theta normalized to
 * [0, 2*pi). The normal form is unique, so group identities can be tested
 * with exact equality on the encoding.
 */
struct GroupElement {
    double theta = 0.0;
    bool eps = false;
};

/// Exponents (n1, n2, n3) of the circle action in the z frame.
struct ExponentTriple {
    int n1 = 1, n2 = 1, n3 = 1;
};

/// Image of a group element in the Klein-group factor: which of the two
/// coordinate swaps (radii, products) it induces downstream of the quotient.
struct GammaElement {
    bool swap_r = false;
    bool swap_v = false;
};

/// Floored modulo into [0, 2*pi); values within 1e-15 of 2*pi snap to 0 so
/// that inverse pairs compose to the exact identity encoding.
double normalize_angle(double theta);

GroupElement make_element(double theta, bool eps);
inline GroupElement group_identity() { return {0.0, false}; }

/// Composition g∘h (h acts first). Derived from tau * sigma_mu = sigma_conj(mu) * tau.
GroupElement compose(const GroupElement& g, const GroupElement& h);

/// Group inverse; reflections are their own inverses.
GroupElement inverse(const GroupElement& g);

/// The two-element quotient of G by its identity component, realized as the
/// swap pair acting on quotient coordinates: eps = 0 -> identity, eps = 1 ->
/// the double swap.
GammaElement rho(const GroupElement& g);

/**
 * Action in the w frame for exponent n:
 * tau first when eps = 1 (swap the first two coordinates, conjugate the
 * third), then scale by (lambda, conj(lambda), lambda^n).
 * Throws std::invalid_argument on a z-frame point or n < 1.
 */
Point3C act_w(const GroupElement& g, const Point3C& w, int n);

/**
 * Action in the z frame for general exponents: componentwise conjugation
 * first when eps = 1, then scaling by (lambda^n1, lambda^n2, lambda^n3).
 * Throws std::invalid_argument on a w-frame point or exponents < 1.
 */
Point3C act_z(const GroupElement& g, const Point3C& z, const ExponentTriple& exps);

/**
 * R-linear coordinate change intertwining the two presentations of the group
 * with exponents (1, 1, n):
 *
 *     w1 = z1 + i*z2,   w2 = conj(z1) + i*conj(z2),   w3 = z3
 *
 * It conjugates the z-frame circle to the w-frame circle and componentwise
 * conjugation to tau. w_to_z is its exact inverse.
 */
Point3C z_to_w(const Point3C& z);
Point3C w_to_z(const Point3C& w);

/// theta uniform on [0, 2*pi), eps a fair coin; fully determined by the stream.
GroupElement random_group_element(Rng& rng);

/// Euclidean norm of C^3 viewed as R^6.
double point_norm(const Point3C& p);
double point_distance(const Point3C& a, const Point3C& b);

/// x^k for small nonnegative integer k by repeated multiplication.
cplx cpow_int(cplx x, int k);
double rpow_int(double x, int k);

} // namespace orbitkit
