#include "orbitkit/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace orbitkit {

namespace {

void require_w(const Point3C& p, const char* who) {
    if (p.frame != Frame::W)
        throw std::invalid_argument(std::string(who) + ": point must be in the w frame");
}

/// |lhs - rhs| scaled by max(1, |lhs|, |rhs|).
double scaled_residual(double lhs, double rhs) {
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

double scaled_residual(const cplx& lhs, const cplx& rhs) {
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

} // namespace

CPoint gamma_act(const GammaElement& g, const CPoint& p) {
    CPoint out = p;
    if (g.swap_r) std::swap(out.r1, out.r2);
    if (g.swap_v) std::swap(out.v1, out.v2);
    return out;
}

CPoint pi0(const Point3C& w, int n) {
    require_w(w, "pi0");
    if (n < 1) throw std::invalid_argument("pi0: n must be >= 1");
    return {std::abs(w.c1),
            std::abs(w.c2),
            std::abs(w.c3),
            cpow_int(w.c2, n) * w.c3,
            cpow_int(w.c1, n) * std::conj(w.c3),
            w.c1 * w.c2};
}

MembershipReport in_M(const CPoint& p, int n, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("in_M: tol must be positive");
    double res = scaled_residual(std::abs(p.v1), rpow_int(p.r2, n) * p.r3);
    res = std::max(res, scaled_residual(std::abs(p.v2), rpow_int(p.r1, n) * p.r3));
    res = std::max(res, scaled_residual(std::abs(p.v3), p.r1 * p.r2));
    res = std::max(res, scaled_residual(p.v1 * p.v2, (p.r3 * p.r3) * cpow_int(p.v3, n)));
    return {res <= tol, res};
}

CPoint pi(const CPoint& p, int n) {
    if (n < 1) throw std::invalid_argument("pi: n must be >= 1");
    double d = rpow_int(p.r1, n) - rpow_int(p.r2, n);
    return {d * d, p.r1 * p.r2, p.r3 * p.r3, p.v1 + p.v2, p.v1 * p.v2, p.v3};
}

MembershipReport in_L(const CPoint& q, int n, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("in_L: tol must be positive");
    // (s1, s2, s3, u1, u2, u3) reading of the fields.
    double res = scaled_residual(std::abs(q.v3), q.r2);
    res = std::max(res, scaled_residual(q.v2, q.r3 * cpow_int(q.v3, n)));
    // Third equation combines three magnitudes; scale by all of its terms so
    // the cancellation among large values does not swamp the tolerance.
    double u1sq = std::norm(q.v1);
    double mid = std::abs(q.v1 * q.v1 - 4.0 * q.v2);
    double four_u2 = 4.0 * std::abs(q.v2);
    double rhs = 2.0 * q.r1 * q.r3;
    double scale = std::max({1.0, u1sq, mid, four_u2, rhs});
    res = std::max(res, std::abs(u1sq + mid - four_u2 - rhs) / scale);
    return {res <= tol, res};
}

Target phi0(const CPoint& q) {
    return {q.v1, q.v3, q.r3 - q.r1};
}

Target phi(const Target& t, int n) {
    if (n < 1) throw std::invalid_argument("phi: n must be >= 1");
    return {t.a, t.b, t.c - 2.0 * rpow_int(std::abs(t.b), n)};
}

Target factor_map(const Point3C& w, int n) {
    require_w(w, "factor_map");
    if (n < 1) throw std::invalid_argument("factor_map: n must be >= 1");
    cplx a = cpow_int(w.c2, n) * w.c3 + cpow_int(w.c1, n) * std::conj(w.c3);
    cplx b = w.c1 * w.c2;
    double c = std::norm(w.c3) - rpow_int(std::norm(w.c1), n) - rpow_int(std::norm(w.c2), n);
    return {a, b, c};
}

double target_norm(const Target& t) {
    return std::sqrt(std::norm(t.a) + std::norm(t.b) + t.c * t.c);
}

double target_distance(const Target& x, const Target& y) {
    return std::sqrt(std::norm(x.a - y.a) + std::norm(x.b - y.b) +
                     (x.c - y.c) * (x.c - y.c));
}

double cpoint_norm(const CPoint& p) {
    return std::sqrt(p.r1 * p.r1 + p.r2 * p.r2 + p.r3 * p.r3 + std::norm(p.v1) +
                     std::norm(p.v2) + std::norm(p.v3));
}

double cpoint_distance(const CPoint& a, const CPoint& b) {
    double dr1 = a.r1 - b.r1, dr2 = a.r2 - b.r2, dr3 = a.r3 - b.r3;
    return std::sqrt(dr1 * dr1 + dr2 * dr2 + dr3 * dr3 + std::norm(a.v1 - b.v1) +
                     std::norm(a.v2 - b.v2) + std::norm(a.v3 - b.v3));
}

double orbit_residual(const Point3C& x, const Point3C& y, int n) {
    Target fx = factor_map(x, n);
    Target fy = factor_map(y, n);
    return target_distance(fx, fy) / std::max(1.0, target_norm(fx));
}

bool orbit_equivalent(const Point3C& x, const Point3C& y, int n, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("orbit_equivalent: tol must be positive");
    return orbit_residual(x, y, n) <= tol;
}

double pi0_gamma0_distance(const Point3C& x, const Point3C& y, int n) {
    CPoint px = pi0(x, n);
    CPoint py = pi0(y, n);
    double d_id = cpoint_distance(px, py);
    double d_swap = cpoint_distance(gamma_act({true, true}, px), py);
    return std::min(d_id, d_swap);
}

bool orbit_equivalent_via_pi0(const Point3C& x, const Point3C& y, int n, double tol) {
    if (tol <= 0.0)
        throw std::invalid_argument("orbit_equivalent_via_pi0: tol must be positive");
    double scale = std::max(1.0, cpoint_norm(pi0(x, n)));
    return pi0_gamma0_distance(x, y, n) <= tol * scale;
}

} // namespace orbitkit
