#pragma once

#include <orbikit/algnum.hpp>

namespace fixtures {

using namespace orbikit;

inline RationalPoly poly(std::initializer_list<long> c)
{
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return RationalPoly(std::move(v));
}

// Q(omega), omega = exp(2 pi i / 3)
inline FieldPtr eisenstein_field()
{
    static FieldPtr f = NumberField::create(poly({1, 1, 1}), -0.5, 0.8660254037844386);
    return f;
}

// Q(s), s = i sqrt(3)
inline FieldPtr sqrt_minus3_field()
{
    static FieldPtr f = NumberField::create(poly({3, 0, 1}), 0.0, 1.7320508075688772);
    return f;
}

inline FieldPtr gaussian_field()
{
    static FieldPtr f = NumberField::create(poly({1, 0, 1}), 0.0, 1.0);
    return f;
}

// Q(alpha) with alpha^2 = (5 - i sqrt(3)) / 2, the principal square root
inline FieldPtr alpha_field()
{
    static FieldPtr f = NumberField::create(poly({7, 0, -5, 0, 1}), 1.6040186, -0.2699549);
    return f;
}

inline AlgNum elem(const FieldPtr& f, std::initializer_list<Rational> c)
{
    return AlgNum(f, std::vector<Rational>(c));
}

}  // namespace fixtures
