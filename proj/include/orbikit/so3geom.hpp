#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "isograph.hpp"

namespace orbikit {

// Angles between the rotation axes of a finite subgroup of SO(3) with cone orders (a, b, c).
struct AxisAngles {
    double alpha, beta, gamma;
};

namespace detail {

inline double checked_acos(double x)
{
    if (!(x >= -1.0 && x <= 1.0)) throw std::logic_error("arccos argument " + std::to_string(x) + " outside [-1, 1]");
    return std::acos(x);
}

}  // namespace detail

inline AxisAngles axis_angles(int a, int b, int c)
{
    if (a < 2 || b < 2 || c < 2) throw NotSpherical("orders must be at least 2");
    if (b * c + a * c + a * b <= a * b * c)
        throw NotSpherical("(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ") is not a spherical triple");
    const double pi = std::numbers::pi;
    const std::array<int, 3> n{a, b, c};
    std::array<double, 3> out{};
    int twos = (a == 2) + (b == 2) + (c == 2);
    if (twos >= 2) {
        for (int i = 0; i < 3; ++i) out[i] = n[i] == 2 ? pi / 2 : pi / n[i];
        return {out[0], out[1], out[2]};
    }
    for (int i = 0; i < 3; ++i) {
        double x = pi / n[i], y = pi / n[(i + 1) % 3], z = pi / n[(i + 2) % 3];
        out[i] = detail::checked_acos((std::cos(x) + std::cos(y) * std::cos(z)) / (std::sin(y) * std::sin(z)));
    }
    return {out[0], out[1], out[2]};
}

inline bool has_perpendicular_axis(const Isotropy& iso)
{
    return iso.kind == Isotropy::Kind::Dihedral;
}

}  // namespace orbikit
