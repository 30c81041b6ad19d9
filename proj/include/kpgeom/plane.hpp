#pragma once

// Ambient planes of constant curvature and their linear models.
//
// Points live in a 3-dimensional linear model:
//   hyperbolic  upper sheet of x^2 + y^2 - z^2 = -1/k^2
//   euclidean   affine chart z = 1
//   spherical   sphere x^2 + y^2 + z^2 = 1/k^2
// Internally every computation runs in the unit model (coordinates scaled by
// k, lengths measured in units of 1/k), where the three cases differ only by
// the curvature sign kappa in {-1, 0, +1}.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kpgeom/linalg.hpp"

namespace kpg {

enum class Model { hyperbolic, euclidean, spherical };

std::string_view to_string(Model m);
Model parse_model(std::string_view name);

enum class ErrorCode {
    domain,
    degenerate_geodesic,
    no_tangent,
    infinite_family,
    infinite_curvature,
    pole_proximity,
    hemisphere,
    chain_integrity,
    tree_structure,
    spindle_undefined,
    unsupported_generator,
    sampling,
    parse,
};

class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct Plane {
    Model model = Model::hyperbolic;
    /// Curvature magnitude; sectional curvature is -k^2, 0 or +k^2. Ignored for euclidean.
    double k = 1.0;
    /// Absolute length tolerance used by every predicate.
    double eps = 1e-9;

    static Plane hyperbolic(double k = 1.0) { return checked({Model::hyperbolic, k}); }
    static Plane euclidean() { return {Model::euclidean, 1.0}; }
    static Plane spherical(double k = 1.0) { return checked({Model::spherical, k}); }
    static Plane checked(Plane p);

    /// Curvature sign of the unit model.
    int kappa() const
    {
        switch (model) {
        case Model::hyperbolic: return -1;
        case Model::spherical: return 1;
        default: return 0;
        }
    }
    /// Factor converting intrinsic lengths into unit-model lengths.
    double scale() const { return model == Model::euclidean ? 1.0 : k; }
    /// Gaussian curvature.
    double curvature() const { return kappa() * k * k; }
    double unit_len(double len) const { return len * scale(); }
    double len(double unit_length) const { return unit_length / scale(); }

    bool operator==(const Plane&) const = default;
};

struct Point {
    Vec3 coords;
    bool operator==(const Point&) const = default;
};

struct Disk {
    Point center;
    double radius = 0.0;
};

/// Generalized trigonometric functions of the unit model with curvature sign kappa:
/// sn is sinh / identity / sin, cs is cosh / 1 / cos.
inline double sn(int kappa, double x)
{
    return kappa < 0 ? std::sinh(x) : (kappa > 0 ? std::sin(x) : x);
}
inline double cs(int kappa, double x)
{
    return kappa < 0 ? std::cosh(x) : (kappa > 0 ? std::cos(x) : 1.0);
}
inline double asn(int kappa, double y)
{
    if (kappa < 0) return std::asinh(y);
    if (kappa > 0) return std::asin(std::clamp(y, -1.0, 1.0));
    return y;
}

/// Quadratic form diag(1, 1, kappa) of the unit model.
inline double form(int kappa, const Vec3& a, const Vec3& b)
{
    return a.x * b.x + a.y * b.y + kappa * a.z * b.z;
}

inline double wrap_angle(double a)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    a = std::fmod(a, two_pi);
    if (a < 0.0) a += two_pi;
    return a;
}

/// Reduces an angle to (-pi, pi].
inline double signed_angle(double a)
{
    a = wrap_angle(a);
    return a > std::numbers::pi ? a - 2.0 * std::numbers::pi : a;
}

} // namespace kpg
