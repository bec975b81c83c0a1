#pragma once

#include <complex>
#include <stdexcept>

namespace idcp {

using Complex = std::complex<double>;

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EuclideanCircle {
    Complex center;
    double radius = 0.0;  // > 0
};

struct HyperbolicCircle {
    Complex center;       // |center| < 1
    double radius = 0.0;  // hyperbolic length, > 0
};

/// Disk automorphism z -> e^{i theta} (z - a) / (1 - conj(a) z), |a| < 1.
struct DiskMobius {
    Complex a;
    double theta = 0.0;
};

/// Hyperbolic distance in the Poincare disk:
/// sinh(d/2) = |p - q| / sqrt((1-|p|^2)(1-|q|^2)).
double hyp_distance(Complex p, Complex q);

DiskMobius mobius_to_origin(Complex a);
Complex apply_mobius(const DiskMobius& m, Complex z);
Complex apply_mobius_inverse(const DiskMobius& m, Complex w);
EuclideanCircle apply_mobius_circle(const DiskMobius& m, const EuclideanCircle& c);

/// Same point set viewed in the other model. A hyperbolic circle about a disk
/// point is always inside D; the Euclidean direction conversion requires
/// |center| + R < 1.
EuclideanCircle hyp_to_euc_circle(const HyperbolicCircle& c);
HyperbolicCircle euc_to_hyp_circle(const EuclideanCircle& c);

double inversive_distance_euc(const EuclideanCircle& c1, const EuclideanCircle& c2);
double inversive_distance_hyp(const HyperbolicCircle& c1, const HyperbolicCircle& c2);

/// Inversive distance between a Euclidean circle and the unit circle.
double inversive_distance_to_unit_circle(const EuclideanCircle& c);

EuclideanCircle scale_circle(double lambda, const EuclideanCircle& c);

/// tanh(r/2) for circles inside D, symbolic infinity^alpha otherwise,
/// totally ordered: Finite < Finite by value, Finite < Infinite always,
/// Infinite by exponent.
class GeneralizedRadius {
public:
    static GeneralizedRadius finite(double rho);
    static GeneralizedRadius infinite(double alpha);

    bool is_finite() const { return !infinite_; }
    double value() const;     // rho, finite case only
    double exponent() const;  // alpha, infinite case only

    friend bool operator<(const GeneralizedRadius& a, const GeneralizedRadius& b);
    friend bool operator==(const GeneralizedRadius& a, const GeneralizedRadius& b);

private:
    bool infinite_ = false;
    double v_ = 0.0;
};

/// Collar width inside which a circle counts as touching the unit circle.
inline constexpr double kContainmentCollar = 1e-12;

bool strictly_inside_disk(const EuclideanCircle& c);

GeneralizedRadius generalized_radius(const EuclideanCircle& c);

enum class RatioKind { Value, PlusInfinity, IndeterminateEqualExponent };

struct GenRadiusRatio {
    RatioKind kind = RatioKind::Value;
    double value = 0.0;  // meaningful only when kind == Value

    bool strictly_less_than(const GenRadiusRatio& other) const;
};

GenRadiusRatio gen_radius_ratio(const GeneralizedRadius& num, const GeneralizedRadius& den);

}  // namespace idcp
