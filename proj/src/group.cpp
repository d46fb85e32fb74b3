#include "orbitkit/group.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace orbitkit {

namespace {

void require_frame(const Point3C& p, Frame want, const char* who) {
    if (p.frame != want) {
        throw std::invalid_argument(std::string(who) + ": point is in the " +
                                    (p.frame == Frame::Z ? "z" : "w") +
                                    " frame, expected the other");
    }
}

} // namespace

double normalize_angle(double theta) {
    double m = std::fmod(theta, two_pi);
    if (m < 0.0) m += two_pi;
    // fmod is exact, but the fold-in addition above can land one ulp shy of
    // 2*pi; snap that band to 0 so inverses compose to the exact identity.
    if (m >= two_pi || two_pi - m <= 1e-15) m = 0.0;
    return m;
}

GroupElement make_element(double theta, bool eps) {
    return {normalize_angle(theta), eps};
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    // sigma_a tau^e sigma_b tau^f = sigma_{a b^(±1)} tau^(e xor f)
    if (!g.eps) return {normalize_angle(g.theta + h.theta), h.eps};
    return {normalize_angle(g.theta - h.theta), !h.eps};
}

GroupElement inverse(const GroupElement& g) {
    if (g.eps) return g; // reflections are involutions
    return {normalize_angle(-g.theta), false};
}

GammaElement rho(const GroupElement& g) {
    return g.eps ? GammaElement{true, true} : GammaElement{false, false};
}

Point3C act_w(const GroupElement& g, const Point3C& w, int n) {
    require_frame(w, Frame::W, "act_w");
    if (n < 1) throw std::invalid_argument("act_w: exponent n must be >= 1");
    cplx a = w.c1, b = w.c2, c = w.c3;
    if (g.eps) {
        std::swap(a, b);
        c = std::conj(c);
    }
    // Scale by (lambda, conj(lambda), lambda^n) with lambda^n evaluated as
    // polar(1, n*theta) rather than a repeated product, for phase accuracy.
    return {a * std::polar(1.0, g.theta),
            b * std::polar(1.0, -g.theta),
            c * std::polar(1.0, static_cast<double>(n) * g.theta),
            Frame::W};
}

Point3C act_z(const GroupElement& g, const Point3C& z, const ExponentTriple& exps) {
    require_frame(z, Frame::Z, "act_z");
    if (exps.n1 < 1 || exps.n2 < 1 || exps.n3 < 1)
        throw std::invalid_argument("act_z: exponents must be >= 1");
    cplx a = z.c1, b = z.c2, c = z.c3;
    if (g.eps) {
        a = std::conj(a);
        b = std::conj(b);
        c = std::conj(c);
    }
    return {a * std::polar(1.0, static_cast<double>(exps.n1) * g.theta),
            b * std::polar(1.0, static_cast<double>(exps.n2) * g.theta),
            c * std::polar(1.0, static_cast<double>(exps.n3) * g.theta),
            Frame::Z};
}

Point3C z_to_w(const Point3C& z) {
    require_frame(z, Frame::Z, "z_to_w");
    const cplx i(0.0, 1.0);
    return {z.c1 + i * z.c2, std::conj(z.c1) + i * std::conj(z.c2), z.c3, Frame::W};
}

Point3C w_to_z(const Point3C& w) {
    require_frame(w, Frame::W, "w_to_z");
    const cplx two_i(0.0, 2.0);
    cplx w2bar = std::conj(w.c2);
    return {(w.c1 + w2bar) / 2.0, (w.c1 - w2bar) / two_i, w.c3, Frame::Z};
}

GroupElement random_group_element(Rng& rng) {
    double theta = normalize_angle(rng.uniform(0.0, two_pi));
    bool eps = rng.coin();
    return {theta, eps};
}

double point_norm(const Point3C& p) {
    return std::sqrt(std::norm(p.c1) + std::norm(p.c2) + std::norm(p.c3));
}

double point_distance(const Point3C& a, const Point3C& b) {
    return std::sqrt(std::norm(a.c1 - b.c1) + std::norm(a.c2 - b.c2) +
                     std::norm(a.c3 - b.c3));
}

cplx cpow_int(cplx x, int k) {
    cplx acc(1.0, 0.0);
    for (int i = 0; i < k; ++i) acc *= x;
    return acc;
}

double rpow_int(double x, int k) {
    double acc = 1.0;
    for (int i = 0; i < k; ++i) acc *= x;
    return acc;
}

} // namespace orbitkit
