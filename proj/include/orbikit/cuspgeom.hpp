#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "isograph.hpp"
#include "numeric.hpp"

namespace orbikit {

// Volume of the regular ideal tetrahedron.
template <unsigned Bits = default_bits>
Real<Bits> v0()
{
    return Real<Bits>("1.01494160640965362502120255427452028594168930753029979201748910677659747625824402213647035");
}

// Volume of the ideal tetrahedron with dihedral angles pi/2, pi/4, pi/4 (Catalan's constant).
template <unsigned Bits = default_bits>
Real<Bits> v1()
{
    return Real<Bits>("0.915965594177219015054603514932384110774149374281672134266498119621763019776254769479356513");
}

// Translation lattice of the peripheral subgroup, with 1/c the height of the maximal horoball at infinity.
template <unsigned Bits = default_bits>
struct PeripheralLattice {
    Complex<Bits> gen1, gen2;
    int rotation_order = 1;
    Real<Bits> c = 1;

    PeripheralLattice(Complex<Bits> g1, Complex<Bits> g2, int rotation = 1, Real<Bits> c_ = 1)
        : gen1(std::move(g1)), gen2(std::move(g2)), rotation_order(rotation), c(std::move(c_))
    {
        if (rotation_order != 1 && rotation_order != 2 && rotation_order != 3 && rotation_order != 4 && rotation_order != 6)
            throw Error("rotation order must be 1, 2, 3, 4 or 6");
        if (c < 1) throw Error("c must be at least 1");
        if (area() <= tolerance<Bits>() * (abs(gen1) * abs(gen2))) throw DegenerateLattice();
    }

    // Area of the translation parallelogram.
    Real<Bits> area() const { return abs(gen1.real() * gen2.imag() - gen1.imag() * gen2.real()); }

    // Area of the rigid-cusp cross-section: the translation area divided by the rotation order.
    Real<Bits> orbifold_area() const { return area() / rotation_order; }

    Complex<Bits> point(long m, long n) const { return gen1 * Real<Bits>(m) + gen2 * Real<Bits>(n); }
};

template <unsigned Bits>
Real<Bits> translation_length(const Complex<Bits>& x, const Real<Bits>& c)
{
    return c * abs(x);
}

template <unsigned Bits = default_bits>
struct Slope {
    long m, n;
    Real<Bits> length;
};

// Primitive lattice elements m gen1 + n gen2 of translation length at most bound, one per +/- pair.
template <unsigned Bits>
std::vector<Slope<Bits>> exceptional_slope_candidates(const PeripheralLattice<Bits>& lat, const Real<Bits>& bound = Real<Bits>(6))
{
    const Real<Bits> euclid = bound / lat.c;
    const Real<Bits> a = lat.area();
    const long mmax = static_cast<long>(floor(euclid * abs(lat.gen2) / a)) + 1;
    const long nmax = static_cast<long>(floor(euclid * abs(lat.gen1) / a)) + 1;
    const Real<Bits> limit = bound * (1 + ldexp(Real<Bits>(1), -static_cast<int>(Bits) / 2));
    std::vector<Slope<Bits>> out;
    for (long n = 0; n <= nmax; ++n)
        for (long m = -mmax; m <= mmax; ++m) {
            if (n == 0 && m <= 0) continue;
            if (std::gcd(m, n) != 1) continue;
            Real<Bits> len = translation_length(lat.point(m, n), lat.c);
            if (len <= limit) out.push_back({m, n, len});
        }
    std::sort(out.begin(), out.end(), [&](const Slope<Bits>& x, const Slope<Bits>& y) {
        if (!near(x.length, y.length, ldexp(Real<Bits>(1), -static_cast<int>(Bits) / 2))) return x.length < y.length;
        return std::pair(x.m, x.n) < std::pair(y.m, y.n);
    });
    return out;
}

// Volume of the cusp above the maximal horosphere, A the lattice area at height 1.
template <unsigned Bits>
Real<Bits> cusp_volume(const Real<Bits>& area, const Real<Bits>& c)
{
    if (area <= 0) throw Error("area must be positive");
    if (c < 1) throw Error("c must be at least 1");
    return c * c * area / 2;
}

// Lower bound on total volume from the maximal cusp density sqrt(3) / (2 v0).
template <unsigned Bits>
Real<Bits> volume_lower_bound_from_cusp(const Real<Bits>& cusp_vol)
{
    if (cusp_vol <= 0) throw Error("cusp volume must be positive");
    return cusp_vol * 2 * v0<Bits>() / sqrt(Real<Bits>(3));
}

struct CuspVolumeClass {
    enum class Kind { ArithmeticSmall, Tetrahedral_5_2_2, Sqrt21Family, AtThreshold, AboveThreshold };
    CuspType cusp_type;
    double volume;
    Kind kind;
    std::string entry;            // the listed cusp volume, symbolic
    std::string orbifold_volume;  // symbolic orbifold volume when known
};

inline std::string to_string(CuspVolumeClass::Kind k)
{
    switch (k) {
    case CuspVolumeClass::Kind::ArithmeticSmall: return "ArithmeticSmall";
    case CuspVolumeClass::Kind::Tetrahedral_5_2_2: return "Tetrahedral_5_2_2";
    case CuspVolumeClass::Kind::Sqrt21Family: return "Sqrt21Family";
    case CuspVolumeClass::Kind::AtThreshold: return "AtThreshold";
    case CuspVolumeClass::Kind::AboveThreshold: return "AboveThreshold";
    }
    return "?";
}

struct CuspVolumeEntry {
    std::string symbol;
    double value;
    CuspVolumeClass::Kind kind;
    std::string orbifold_volume;
};

struct CuspVolumeTable {
    std::vector<CuspVolumeEntry> entries;
    std::string threshold_symbol;
    double threshold;
};

inline const CuspVolumeTable& cusp_volume_table(CuspType t)
{
    using K = CuspVolumeClass::Kind;
    static const double s3 = std::sqrt(3.0), s5 = std::sqrt(5.0), s21 = std::sqrt(21.0), s2 = std::sqrt(2.0);
    static const CuspVolumeTable t236{{{"sqrt(3)/24", s3 / 24, K::ArithmeticSmall, "v0/12"},
                                       {"sqrt(3)/12", s3 / 12, K::ArithmeticSmall, "v0/6"},
                                       {"1/8", 0.125, K::ArithmeticSmall, "5v0/24"},
                                       {"sqrt(3)(3+sqrt(5))/48", s3 * (3 + s5) / 48, K::Tetrahedral_5_2_2, "0.343003"},
                                       {"sqrt(21)/24", s21 / 24, K::Sqrt21Family, ""}},
                                      "sqrt(3)/8",
                                      s3 / 8};
    static const CuspVolumeTable t333{{{"sqrt(3)/12", s3 / 12, K::ArithmeticSmall, "v0/6"},
                                       {"sqrt(3)/6", s3 / 6, K::ArithmeticSmall, "v0/3"},
                                       {"1/4", 0.25, K::ArithmeticSmall, "5v0/12"},
                                       {"sqrt(3)(3+sqrt(5))/24", s3 * (3 + s5) / 24, K::Tetrahedral_5_2_2, "0.686006"},
                                       {"sqrt(21)/12", s21 / 12, K::Sqrt21Family, ""}},
                                      "sqrt(3)/4",
                                      s3 / 4};
    static const CuspVolumeTable t244{{{"1/8", 0.125, K::ArithmeticSmall, "v1/6"},
                                       {"sqrt(2)/8", s2 / 8, K::ArithmeticSmall, "v1/4"}},
                                      "1/4",
                                      0.25};
    switch (t) {
    case CuspType::S2_236: return t236;
    case CuspType::S2_333: return t333;
    case CuspType::S2_244: return t244;
    default: throw Error("cusp type " + to_string(t) + " is not rigid");
    }
}

inline CuspVolumeClass classify_rigid_cusp_volume(CuspType t, double volume, double tol = 1e-9)
{
    const auto& table = cusp_volume_table(t);
    for (const auto& e : table.entries)
        if (std::abs(volume - e.value) <= tol) return {t, volume, e.kind, e.symbol, e.orbifold_volume};
    if (std::abs(volume - table.threshold) <= tol) return {t, volume, CuspVolumeClass::Kind::AtThreshold, table.threshold_symbol, ""};
    if (volume > table.threshold) return {t, volume, CuspVolumeClass::Kind::AboveThreshold, "", ""};
    throw UnknownVolume("cusp volume " + std::to_string(volume) + " is below " + table.threshold_symbol + " and matches no listed value for " +
                        to_string(t));
}

enum class CoverScenario { orbilens_cover, manifold_cover };

struct CoverFlags {
    bool has_4_loop = false;
    bool dihedral_6 = true;  // the 6-torsion lies in a dihedral group of order 12
};

struct DegreeConstraint {
    enum class Kind { GreaterThan, AtLeast, MultipleOf };
    Kind kind;
    long value;
    bool orbilens_escape = false;  // an alternative outcome exists where the bound need not hold
    std::string rationale;

    bool admits(long d) const
    {
        if (d < 1) return false;
        switch (kind) {
        case Kind::GreaterThan: return d > value;
        case Kind::AtLeast: return d >= value;
        case Kind::MultipleOf: return d % value == 0;
        }
        return false;
    }

    std::string to_string() const
    {
        std::string s;
        switch (kind) {
        case Kind::GreaterThan: s = "d > " + std::to_string(value); break;
        case Kind::AtLeast: s = "d >= " + std::to_string(value); break;
        case Kind::MultipleOf: s = "d = " + std::to_string(value) + "n, n >= 1"; break;
        }
        if (orbilens_escape) s += ", or Q_T = L(p,q;n,m) - K' with n, m != 1";
        return s;
    }
};

inline DegreeConstraint min_cover_degree(CuspType t, CoverScenario scenario, CoverFlags flags = {})
{
    using K = DegreeConstraint::Kind;
    if (scenario == CoverScenario::orbilens_cover) {
        switch (t) {
        case CuspType::S2_333: return {K::GreaterThan, 3, false, "a 3-torsion circle of the orbilens must be unwrapped"};
        case CuspType::S2_236: return {K::GreaterThan, 6, false, "cone points of orders 2 and 3 force a cover of degree above 6"};
        case CuspType::S2_244:
            return {K::GreaterThan, 4, true,
                    flags.has_4_loop ? "4-loop present: the torsion circles may survive in an orbilens with two singular circles"
                                     : "4-torsion on the cusp forces degree above 4 unless the orbilens carries two torsion circles"};
        default: return {K::AtLeast, 1, false, "flexible cusp: no constraint"};
        }
    }
    switch (t) {
    case CuspType::S2_333: return {K::MultipleOf, 12, false, "manifold cover of an S2(3,3,3)-cusped orbifold"};
    case CuspType::S2_244: return {K::AtLeast, 24, false, "manifold cover of an S2(2,4,4)-cusped orbifold"};
    case CuspType::S2_236:
        if (flags.dihedral_6) return {K::MultipleOf, 12, false, "the 6-torsion lies in a dihedral group of order 12"};
        return {K::MultipleOf, 6, false, "the 6-torsion must be unwrapped"};
    default: return {K::AtLeast, 1, false, "flexible cusp: no constraint"};
    }
}

}  // namespace orbikit
