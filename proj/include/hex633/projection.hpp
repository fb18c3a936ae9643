#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "hex633/hermitian.hpp"

namespace hex633 {

enum class BallModel { Klein, Poincare };

inline std::string to_string(BallModel m) {
    return m == BallModel::Klein ? "klein" : "poincare";
}

struct BallPoint {
    double x = 0, y = 0, z = 0;
    BallModel model = BallModel::Klein;

    double radius() const { return std::sqrt(x * x + y * y + z * z); }
};

inline void require_on_hyperboloid(const Vec4& p, const char* op) {
    double q = p.t * p.t - p.x * p.x - p.y * p.y - p.z * p.z;
    if (!(p.t > 0) || std::abs(q - 1.0) > 1e-9)
        throw std::domain_error(std::string(op) + ": point not on the future unit hyperboloid");
}

// Central projection (x/t, y/t, z/t); geodesics map to straight chords.
inline BallPoint to_klein(const Vec4& p) {
    require_on_hyperboloid(p, "to_klein");
    return {p.x / p.t, p.y / p.t, p.z / p.t, BallModel::Klein};
}

// (x, y, z)/(1 + t); conformal ball model.
inline BallPoint to_poincare(const Vec4& p) {
    require_on_hyperboloid(p, "to_poincare");
    double d = 1.0 + p.t;
    return {p.x / d, p.y / d, p.z / d, BallModel::Poincare};
}

inline BallPoint to_ball(const Vec4& p, BallModel m) {
    return m == BallModel::Klein ? to_klein(p) : to_poincare(p);
}

// acosh of the Minkowski dot; zero iff the points coincide.
inline double hyperbolic_distance(const Vec4& p, const Vec4& q) {
    require_on_hyperboloid(p, "hyperbolic_distance");
    require_on_hyperboloid(q, "hyperbolic_distance");
    double d = minkowski_dot(p, q);
    if (d < 1.0 - 1e-9)
        throw std::domain_error("hyperbolic_distance: dot below 1");
    return std::acosh(std::max(d, 1.0));
}

// Inverse of to_klein: t = 1/sqrt(1 - r^2), x = t*kx, ...
inline Vec4 from_klein(const BallPoint& k) {
    double r2 = k.x * k.x + k.y * k.y + k.z * k.z;
    if (k.model != BallModel::Klein || r2 >= 1.0)
        throw std::domain_error("from_klein: not an interior Klein point");
    double t = 1.0 / std::sqrt(1.0 - r2);
    return {t, t * k.x, t * k.y, t * k.z};
}

}  // namespace hex633
