#include "idcp/hypgeom.hpp"

#include <cmath>

namespace idcp {

namespace {

void require_in_disk(Complex p, const char* what) {
    if (!(std::abs(p) < 1.0)) throw GeometryError(std::string(what) + ": point not in open disk");
}

/// Circumcenter of three non-collinear points.
Complex circumcenter(Complex p, Complex q, Complex r) {
    double ax = p.real(), ay = p.imag();
    double bx = q.real(), by = q.imag();
    double cx = r.real(), cy = r.imag();
    double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    if (std::abs(d) < 1e-300) throw GeometryError("circumcenter: collinear points");
    double ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) +
                 (cx * cx + cy * cy) * (ay - by)) /
                d;
    double uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) +
                 (cx * cx + cy * cy) * (bx - ax)) /
                d;
    return {ux, uy};
}

}  // namespace

double hyp_distance(Complex p, Complex q) {
    require_in_disk(p, "hyp_distance");
    require_in_disk(q, "hyp_distance");
    double num = std::abs(p - q);
    double den = std::sqrt((1.0 - std::norm(p)) * (1.0 - std::norm(q)));
    return 2.0 * std::asinh(num / den);
}

DiskMobius mobius_to_origin(Complex a) {
    require_in_disk(a, "mobius_to_origin");
    return {a, 0.0};
}

Complex apply_mobius(const DiskMobius& m, Complex z) {
    Complex num = z - m.a;
    Complex den = 1.0 - std::conj(m.a) * z;
    return std::polar(1.0, m.theta) * num / den;
}

Complex apply_mobius_inverse(const DiskMobius& m, Complex w) {
    Complex wp = w * std::polar(1.0, -m.theta);
    return (wp + m.a) / (1.0 + std::conj(m.a) * wp);
}

EuclideanCircle apply_mobius_circle(const DiskMobius& m, const EuclideanCircle& c) {
    if (std::abs(m.a) < 1e-14) {
        // Pure rotation about the origin.
        return {std::polar(1.0, m.theta) * c.center, c.radius};
    }
    Complex pole = 1.0 / std::conj(m.a);
    double dist = std::abs(c.center - pole);
    if (std::abs(dist - c.radius) < 1e-12)
        throw GeometryError("apply_mobius_circle: circle passes through the pole");
    if (dist < 1e-8) {
        // Pole at the circle center: the two diametral points on any line
        // through it map to diametral points; circumscribe three images.
        Complex q0 = apply_mobius(m, c.center + c.radius);
        Complex q1 = apply_mobius(m, c.center + c.radius * Complex(-0.5, std::sqrt(3.0) / 2.0));
        Complex q2 = apply_mobius(m, c.center + c.radius * Complex(-0.5, -std::sqrt(3.0) / 2.0));
        Complex cc = circumcenter(q0, q1, q2);
        return {cc, std::abs(q0 - cc)};
    }
    // The line through the pole and the circle center meets the circle
    // orthogonally, so its two intersection points map to a diameter of the
    // image circle.
    Complex dir = (c.center - pole) / dist;
    Complex qp = apply_mobius(m, c.center + c.radius * dir);
    Complex qm = apply_mobius(m, c.center - c.radius * dir);
    return {0.5 * (qp + qm), 0.5 * std::abs(qp - qm)};
}

EuclideanCircle hyp_to_euc_circle(const HyperbolicCircle& c) {
    require_in_disk(c.center, "hyp_to_euc_circle");
    if (!(c.radius > 0.0)) throw GeometryError("hyp_to_euc_circle: radius must be positive");
    double d = 2.0 * std::atanh(std::abs(c.center));
    double t1 = std::tanh((d - c.radius) / 2.0);
    double t2 = std::tanh((d + c.radius) / 2.0);
    Complex dir = std::abs(c.center) > 0.0 ? c.center / std::abs(c.center) : Complex(1.0, 0.0);
    return {0.5 * (t1 + t2) * dir, 0.5 * (t2 - t1)};
}

HyperbolicCircle euc_to_hyp_circle(const EuclideanCircle& c) {
    if (!(c.radius > 0.0)) throw GeometryError("euc_to_hyp_circle: radius must be positive");
    double L = std::abs(c.center);
    if (!(L + c.radius < 1.0))
        throw GeometryError("euc_to_hyp_circle: circle not strictly inside the disk");
    double x = L - c.radius;
    double y = L + c.radius;
    // tanh(r/2) in the rationalized form, stable near the boundary.
    double th = (y - x) / (1.0 - x * y + std::sqrt((1.0 - x * x) * (1.0 - y * y)));
    double r = 2.0 * std::atanh(th);
    double mid = std::tanh((std::atanh(x) + std::atanh(y)) / 2.0);
    Complex dir = L > 0.0 ? c.center / L : Complex(1.0, 0.0);
    return {mid * dir, r};
}

double inversive_distance_euc(const EuclideanCircle& c1, const EuclideanCircle& c2) {
    double L2 = std::norm(c1.center - c2.center);
    return (L2 - c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * c1.radius * c2.radius);
}

double inversive_distance_hyp(const HyperbolicCircle& c1, const HyperbolicCircle& c2) {
    double l = hyp_distance(c1.center, c2.center);
    return (std::cosh(l) - std::cosh(c1.radius) * std::cosh(c2.radius)) /
           (std::sinh(c1.radius) * std::sinh(c2.radius));
}

double inversive_distance_to_unit_circle(const EuclideanCircle& c) {
    double L2 = std::norm(c.center);
    return (L2 - c.radius * c.radius - 1.0) / (2.0 * c.radius);
}

EuclideanCircle scale_circle(double lambda, const EuclideanCircle& c) {
    if (!(lambda > 0.0)) throw GeometryError("scale_circle: lambda must be positive");
    return {lambda * c.center, lambda * c.radius};
}

GeneralizedRadius GeneralizedRadius::finite(double rho) {
    if (!(rho > 0.0 && rho < 1.0))
        throw GeometryError("GeneralizedRadius::finite: rho must lie in (0,1)");
    GeneralizedRadius g;
    g.infinite_ = false;
    g.v_ = rho;
    return g;
}

GeneralizedRadius GeneralizedRadius::infinite(double alpha) {
    if (!(alpha >= 0.0))
        throw GeometryError("GeneralizedRadius::infinite: exponent must be non-negative");
    GeneralizedRadius g;
    g.infinite_ = true;
    g.v_ = alpha;
    return g;
}

double GeneralizedRadius::value() const {
    if (infinite_) throw GeometryError("GeneralizedRadius: no finite value");
    return v_;
}

double GeneralizedRadius::exponent() const {
    if (!infinite_) throw GeometryError("GeneralizedRadius: no exponent");
    return v_;
}

bool operator<(const GeneralizedRadius& a, const GeneralizedRadius& b) {
    if (a.infinite_ != b.infinite_) return !a.infinite_;
    return a.v_ < b.v_;
}

bool operator==(const GeneralizedRadius& a, const GeneralizedRadius& b) {
    return a.infinite_ == b.infinite_ && a.v_ == b.v_;
}

bool strictly_inside_disk(const EuclideanCircle& c) {
    return std::abs(c.center) + c.radius < 1.0 - kContainmentCollar;
}

GeneralizedRadius generalized_radius(const EuclideanCircle& c) {
    if (!(c.radius > 0.0)) throw GeometryError("generalized_radius: radius must be positive");
    if (strictly_inside_disk(c)) {
        double L = std::abs(c.center);
        double x = L - c.radius;
        double y = L + c.radius;
        double th = (y - x) / (1.0 - x * y + std::sqrt((1.0 - x * x) * (1.0 - y * y)));
        return GeneralizedRadius::finite(th);
    }
    double eta = inversive_distance_to_unit_circle(c);
    // eta >= -1 for non-contained circles; clamp float noise at tangency.
    return GeneralizedRadius::infinite(std::max(eta + 1.0, 0.0));
}

GenRadiusRatio gen_radius_ratio(const GeneralizedRadius& num, const GeneralizedRadius& den) {
    if (num.is_finite() && den.is_finite())
        return {RatioKind::Value, num.value() / den.value()};
    if (num.is_finite()) return {RatioKind::Value, 0.0};
    if (den.is_finite()) return {RatioKind::PlusInfinity, 0.0};
    if (num.exponent() > den.exponent()) return {RatioKind::PlusInfinity, 0.0};
    if (num.exponent() < den.exponent()) return {RatioKind::Value, 0.0};
    return {RatioKind::IndeterminateEqualExponent, 0.0};
}

bool GenRadiusRatio::strictly_less_than(const GenRadiusRatio& other) const {
    if (kind == RatioKind::IndeterminateEqualExponent ||
        other.kind == RatioKind::IndeterminateEqualExponent)
        return false;  // order undefined at equal exponents: not strictly less
    if (kind == RatioKind::PlusInfinity) return false;
    if (other.kind == RatioKind::PlusInfinity) return true;
    return value < other.value;
}

}  // namespace idcp
