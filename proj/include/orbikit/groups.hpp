#pragma once

#include <string>
#include <vector>

#include "cuspgeom.hpp"
#include "moebius.hpp"

namespace orbikit {

template <unsigned Bits = default_bits>
struct NamedGenerator {
    std::string name;
    Moebius<Complex<Bits>> g;
};

template <unsigned Bits = default_bits>
struct NamedPoint {
    std::string name;
    Complex<Bits> z;
};

template <unsigned Bits = default_bits>
struct NamedGroup {
    std::string name;
    std::vector<NamedGenerator<Bits>> generators;
    PeripheralLattice<Bits> lattice;
    std::vector<NamedPoint<Bits>> points;
};

namespace detail {

template <unsigned Bits>
Complex<Bits> cplx(const Real<Bits>& re, const Real<Bits>& im = Real<Bits>(0))
{
    return Complex<Bits>(re, im);
}

template <unsigned Bits>
Complex<Bits> expi(const Real<Bits>& theta)
{
    return Complex<Bits>(cos(theta), sin(theta));
}

template <unsigned Bits>
Complex<Bits> omega()
{
    return Complex<Bits>(Real<Bits>(-1) / 2, sqrt(Real<Bits>(3)) / 2);
}

}  // namespace detail

// Parameter b of the order-2 generator exchanging 0 and infinity in the sqrt(21)/24 group.
template <unsigned Bits = default_bits>
Complex<Bits> sqrt21_b()
{
    using R = Real<Bits>;
    const R s3 = sqrt(R(3)), s7 = sqrt(R(7));
    return sqrt(detail::cplx<Bits>(R(5), s3)) / sqrt(R(2) * s7);
}

template <unsigned Bits = default_bits>
NamedGroup<Bits> sqrt21_group(const Complex<Bits>& b = sqrt21_b<Bits>())
{
    using R = Real<Bits>;
    using C = Complex<Bits>;
    using M = Moebius<C>;
    const R s3 = sqrt(R(3)), s7 = sqrt(R(7)), q7 = sqrt(s7);
    const C i(R(0), R(1));
    const C ell(s3 / 2, R(1) / 2);
    auto t = M(C(1), C(q7), C(0), C(1));
    auto r = M(ell, C(0), C(0), C(1) / ell);
    auto gamma = M(C(0), i * b, i / b, C(0));
    auto lat = PeripheralLattice<Bits>(C(q7), C(q7) * detail::expi<Bits>(pi<Bits>() / 3), 6, R(1));
    return {"sqrt21",
            {{"t", t}, {"r", r}, {"gamma", gamma}},
            lat,
            {{"O", C(0)},
             {"D", C(q7)},
             {"X", detail::cplx<Bits>(R(5), s3) / (R(2) * s7)},
             {"Y", detail::cplx<Bits>(q7 / 2, q7 / (2 * s3))}}};
}

template <unsigned Bits = default_bits>
std::vector<NamedPoint<Bits>> tetrahedral_points()
{
    using R = Real<Bits>;
    using C = Complex<Bits>;
    const R s3 = sqrt(R(3));
    return {{"O", C(0)}, {"X", detail::cplx<Bits>(s3 / 2, R(-1) / 2)}, {"D", C(s3)}, {"Y", detail::cplx<Bits>(s3 / 2, R(1) / 2)}};
}

// Case with D3 point stabilizer above 0 for the S2(3,3,3) cusp of volume sqrt(3)/4.
template <unsigned Bits = default_bits>
NamedGroup<Bits> tetrahedral_case1_group(const Real<Bits>& theta = Real<Bits>(0))
{
    using R = Real<Bits>;
    using C = Complex<Bits>;
    using M = Moebius<C>;
    const R s3 = sqrt(R(3));
    const C i(R(0), R(1)), w = detail::omega<Bits>();
    auto gamma = M(C(0), i * detail::expi<Bits>(theta), i * detail::expi<Bits>(-theta), C(0));
    auto r = M(w, detail::cplx<Bits>(s3 / 2, R(1) / 2), C(0), C(1) / w);
    auto t = M(C(1), C(s3), C(0), C(1));
    auto lat = PeripheralLattice<Bits>(C(s3), w * s3, 3, R(1));
    return {"tetrahedral_case1", {{"gamma", gamma}, {"r", r}, {"t", t}}, lat, tetrahedral_points<Bits>()};
}

// Case with C3 point stabilizer above 0.
template <unsigned Bits = default_bits>
NamedGroup<Bits> tetrahedral_case2_group()
{
    using R = Real<Bits>;
    using C = Complex<Bits>;
    using M = Moebius<C>;
    const R s3 = sqrt(R(3));
    const C w = detail::omega<Bits>();
    auto gamma = M(C(0), detail::cplx<Bits>(s3 / 2, R(1) / 2), detail::cplx<Bits>(-s3 / 2, R(1) / 2), C(1));
    auto r = M(w, detail::cplx<Bits>(-s3 / 2, R(-3) / 2), C(0), C(1) / w);
    auto t = M(C(1), C(s3), C(0), C(1));
    auto lat = PeripheralLattice<Bits>(C(s3), w * s3, 3, R(1));
    return {"tetrahedral_case2", {{"gamma'", gamma}, {"r'", r}, {"t", t}}, lat, tetrahedral_points<Bits>()};
}

}  // namespace orbikit
